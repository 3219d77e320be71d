#include <doctest.h>

#include "test_helpers.hpp"

using namespace crystal;
using th::vec;

TEST_CASE("scalar arithmetic over GF(p) and Q") {
    Field q(0), f5(5);
    CHECK(Scalar::parse(q, "2/7") * Scalar::parse(q, "7/2") == Scalar::one(q));
    CHECK(Scalar(q, 1, 3) + Scalar(q, 1, 6) == Scalar(q, 1, 2));
    CHECK(Scalar::parse(q, "-4").to_string() == "-4");
    CHECK(Scalar(q, 4, -6).to_string() == "-2/3");
    CHECK(Scalar(f5, 7) == Scalar(f5, 2));
    CHECK((Scalar(f5, 3) * Scalar(f5, 4)).to_string() == "2");
    CHECK_THROWS_AS(Field(6), format_error);
    CHECK_THROWS_AS(Scalar(f5, 1) / Scalar::zero(f5), error);

    // No overflow: 100! / 99! == 100 exactly.
    Scalar fact100 = Scalar::one(q), fact99 = Scalar::one(q);
    for (int i = 1; i <= 100; ++i) fact100 = fact100 * Scalar(q, i);
    for (int i = 1; i <= 99; ++i) fact99 = fact99 * Scalar(q, i);
    CHECK(fact100 / fact99 == Scalar(q, 100));
}

TEST_CASE("GF(p) inverses satisfy a*a^-1 = 1 for p in {2,3,5,7}") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        Field f(p);
        for (std::uint64_t a = 1; a < p; ++a)
            CHECK(Scalar(f, (long long)a) * Scalar(f, (long long)a).inverse() ==
                  Scalar::one(f));
    }
}

TEST_CASE("rref canonical form") {
    Field f2(2);
    auto s = rref(f2, 3,
                  {vec(f2, {1, 0, 1}), vec(f2, {0, 1, 1}), vec(f2, {1, 1, 0})});
    CHECK(s.dim() == 2);
    CHECK(s.pivots == std::vector<std::int64_t>{0, 1});

    // Idempotent and insertion-order independent.
    CHECK(rref(f2, 3, s.basis) == s);
    auto t = rref(f2, 3,
                  {vec(f2, {1, 1, 0}), vec(f2, {1, 0, 1}), vec(f2, {0, 1, 1})});
    CHECK(t == s);

    CHECK(rref(f2, 5, {}).dim() == 0);
    Field q(0);
    auto full = rref(q, 3, Subspace::full(3, q).basis);
    CHECK(full == Subspace::full(3, q));
    CHECK_THROWS_AS(rref(f2, 3, {vec(f2, {1, 0})}), dimension_error);
}

TEST_CASE("kernel") {
    Field f3(3), q(0);
    LinearMap zero(4, 4, q);
    CHECK(kernel(zero) == Subspace::full(4, q));
    CHECK(kernel(LinearMap::identity(4, q)).dim() == 0);

    // (x, y) -> x + y over GF(3); kernel is spanned by (1, 2).
    LinearMap sum(2, 1, f3);
    sum.columns[0] = SparseVector::unit(1, 0, f3);
    sum.columns[1] = SparseVector::unit(1, 0, f3);
    auto k = kernel(sum);
    CHECK(k.dim() == 1);
    CHECK(k.basis[0] == vec(f3, {1, 2}));
    // Oracle: enumerate GF(3)^2.
    int count = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if ((x + y) % 3 == 0 && k.contains(vec(f3, {x, y}))) ++count;
    CHECK(count == 3);
}

TEST_CASE("sum and intersection") {
    Field f2(2);
    auto U = rref(f2, 3, {vec(f2, {1, 0, 0}), vec(f2, {0, 1, 0})});
    auto W = rref(f2, 3, {vec(f2, {0, 1, 0}), vec(f2, {0, 0, 1})});
    auto [s, i] = sum_and_intersect(U, W);
    CHECK(s.dim() == 3);
    CHECK(i.dim() == 1);
    CHECK(i.basis[0] == vec(f2, {0, 1, 0}));

    auto [s2, i2] = sum_and_intersect(U, U);
    CHECK(s2 == U);
    CHECK(i2 == U);

    Field q(0);
    auto L1 = rref(q, 2, {vec(q, {1, 1})});
    auto L2 = rref(q, 2, {vec(q, {1, -1})});
    auto [s3, i3] = sum_and_intersect(L1, L2);
    CHECK(s3 == Subspace::full(2, q));
    CHECK(i3.dim() == 0);
}

TEST_CASE("modular law on seeded random subspaces") {
    std::mt19937_64 rng(20240817);
    for (std::uint64_t ch : {0ull, 2ull, 3ull}) {
        Field f(ch);
        for (int trial = 0; trial < 25; ++trial) {
            auto U = th::random_subspace(f, 6, 3, rng);
            auto W = th::random_subspace(f, 6, 3, rng);
            auto [s, i] = sum_and_intersect(U, W);
            CHECK(s.dim() + i.dim() == U.dim() + W.dim());
            CHECK(s.contains(U));
            CHECK(s.contains(W));
            CHECK(U.contains(i));
            CHECK(W.contains(i));
        }
    }
}

TEST_CASE("preimage") {
    Field f3(3);
    // Projection k^3 -> k^2 dropping the last coordinate.
    LinearMap proj(3, 2, f3);
    proj.columns[0] = SparseVector::unit(2, 0, f3);
    proj.columns[1] = SparseVector::unit(2, 1, f3);
    auto diag = rref(f3, 2, {vec(f3, {1, 1})});
    auto pre = preimage(proj, diag);
    CHECK(pre.dim() == 2);
    // Oracle: enumerate GF(3)^3.
    int members = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                bool in = (x == y);
                CHECK(pre.contains(vec(f3, {x, y, z})) == in);
                if (in) ++members;
            }
    CHECK(members == 9);

    CHECK(preimage(proj, Subspace::full(2, f3)) == Subspace::full(3, f3));
    CHECK(preimage(proj, Subspace::zero(2, f3)) == kernel(proj));
    CHECK(pre.contains(kernel(proj)));
    for (const auto& row : pre.basis) CHECK(diag.contains(proj.apply(row)));
}

TEST_CASE("quotient data") {
    Field f2(2);
    auto V = Subspace::full(3, f2);
    auto W = rref(f2, 3, {vec(f2, {1, 1, 0})});
    auto q = quotient_data(V, W);
    CHECK(q.section.size() == 2);
    CHECK(q.projection.codomain == 2);
    // Projection kernel equals W: enumerate GF(2)^3.
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                auto v = vec(f2, {x, y, z});
                CHECK(q.projection.apply(v).is_zero() == W.contains(v));
            }
    // projection ∘ section = identity on quotient coordinates.
    for (std::size_t t = 0; t < q.section.size(); ++t) {
        auto img = q.projection.apply(q.section[t]);
        CHECK(img == SparseVector::unit(2, (std::int64_t)t, f2));
    }

    CHECK(quotient_data(W, W).section.empty());
    Field qf(0);
    auto idq = quotient_data(Subspace::full(3, qf), Subspace::zero(3, qf));
    CHECK(idq.section.size() == 3);
    CHECK_THROWS_AS(quotient_data(W, V), containment_error);
}

TEST_CASE("matrix inverse") {
    Field f5(5);
    std::mt19937_64 rng(7);
    LinearMap m(3, 3, f5);
    // A fixed invertible matrix.
    m.columns[0] = vec(f5, {1, 2, 0});
    m.columns[1] = vec(f5, {0, 1, 4});
    m.columns[2] = vec(f5, {3, 0, 2});
    auto inv = inverse(m);
    auto prod = inv.compose(m);
    for (int i = 0; i < 3; ++i)
        CHECK(prod.columns[i] == SparseVector::unit(3, i, f5));
    LinearMap sing(2, 2, f5);
    sing.columns[0] = vec(f5, {1, 2});
    sing.columns[1] = vec(f5, {2, 4});
    CHECK_THROWS_AS(inverse(sing), axiom_error);
}
