#include <random>

#include <benchmark/benchmark.h>

#include "crystal/groups.hpp"
#include "crystal/pairing.hpp"

using namespace crystal;

namespace {

SparseVector random_vec(Field f, std::int64_t dim, std::mt19937_64& rng) {
    SparseVector v(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        Scalar c(f, (std::int64_t)(rng() % 5) - 2);
        if (!c.is_zero()) v.push(i, c);
    }
    return v;
}

void BM_rref_gf2(benchmark::State& state) {
    Field f(2);
    std::int64_t dim = state.range(0);
    std::mt19937_64 rng(5);
    std::vector<SparseVector> rows;
    for (std::int64_t i = 0; i < dim; ++i)
        rows.push_back(random_vec(f, dim, rng));
    for (auto _ : state) benchmark::DoNotOptimize(rref(f, dim, rows));
}
BENCHMARK(BM_rref_gf2)->Arg(16)->Arg(64)->Arg(256);

void BM_rref_rational(benchmark::State& state) {
    Field f(0);
    std::int64_t dim = state.range(0);
    std::mt19937_64 rng(5);
    std::vector<SparseVector> rows;
    for (std::int64_t i = 0; i < dim; ++i)
        rows.push_back(random_vec(f, dim, rng));
    for (auto _ : state) benchmark::DoNotOptimize(rref(f, dim, rows));
}
BENCHMARK(BM_rref_rational)->Arg(16)->Arg(32);

void BM_validate_group_algebra(benchmark::State& state) {
    HopfAlgebra H = build_group_algebra(quaternion_group(), Field(2));
    for (auto _ : state) benchmark::DoNotOptimize(validate(H));
}
BENCHMARK(BM_validate_group_algebra);

void BM_jadic_filtration(benchmark::State& state) {
    HopfAlgebra H = build_group_algebra(dihedral_group((int)state.range(0)),
                                        Field(2));
    for (auto _ : state) benchmark::DoNotOptimize(jadic_filtration(H));
}
BENCHMARK(BM_jadic_filtration)->Arg(4)->Arg(8);

void BM_dee_filtration(benchmark::State& state) {
    HopfAlgebra H = build_function_algebra(semidirect_p(2), Field(2));
    for (auto _ : state) benchmark::DoNotOptimize(dee_filtration(H));
}
BENCHMARK(BM_dee_filtration);

void BM_iterated_coproduct(benchmark::State& state) {
    HopfAlgebra H = build_group_algebra(semidirect_p(2), Field(2));
    std::mt19937_64 rng(5);
    SparseVector x = random_vec(H.field, H.dim, rng);
    int n = (int)state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(delta_n(H, x, n));
}
BENCHMARK(BM_iterated_coproduct)->Arg(2)->Arg(3)->Arg(4);

void BM_drinfeld_prime(benchmark::State& state) {
    HopfAlgebra H = build_group_algebra(semidirect_p(2), Field(2));
    ReesBialgebra R = rees_of_filtration(H, jadic_filtration(H));
    for (auto _ : state) benchmark::DoNotOptimize(drinfeld_prime(R));
}
BENCHMARK(BM_drinfeld_prime);

void BM_orthogonality_identity(benchmark::State& state) {
    Field f(2);
    FiniteGroup G = semidirect_p(2);
    PairingData P = delta_pairing(build_group_algebra(G, f),
                                  build_function_algebra(G, f));
    for (auto _ : state) benchmark::DoNotOptimize(orthogonality_identity(P));
}
BENCHMARK(BM_orthogonality_identity);

void BM_jennings_hall(benchmark::State& state) {
    FiniteGroup G = dihedral_group(8);
    for (auto _ : state) benchmark::DoNotOptimize(jennings_hall_check(G, 2));
}
BENCHMARK(BM_jennings_hall);

} // namespace
