#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "crystal/errors.hpp"
#include "crystal/groups.hpp"
#include "crystal/pairing.hpp"
#include "test_helpers.hpp"

using namespace crystal;

namespace {

// <gamma, phi_g> = delta_{gamma,g} between k[G] and A_k(G). The group
// algebra sits on the left so that its J-adic chain meets the coradical
// chain of the function algebra.
PairingData canonical_pairing(const FiniteGroup& G, Field f) {
    return delta_pairing(build_group_algebra(G, f),
                         build_function_algebra(G, f));
}

std::vector<std::vector<Scalar>> constant_matrix(std::int64_t rows,
                                                 std::int64_t cols,
                                                 const Scalar& c) {
    return std::vector<std::vector<Scalar>>(
        (std::size_t)rows, std::vector<Scalar>((std::size_t)cols, c));
}

} // namespace

TEST_CASE("canonical group pairings reach hopf level and are perfect") {
    Field f(2);
    for (const FiniteGroup& G :
         {trivial_group(), cyclic_group(2), cyclic_group(4),
          product_of_cyclic_p_powers(2, {1, 2}), semidirect_p(2)}) {
        PairingData P = canonical_pairing(G, f);
        PairingReport rep = validate_pairing(P);
        CHECK(rep.level == PairingLevel::hopf);
        CHECK(rep.failures.empty());
        CHECK(rep.perfect());
    }
    PairingData Q = canonical_pairing(cyclic_group(4), Field(0));
    CHECK(validate_pairing(Q).level == PairingLevel::hopf);

    // The zero form already violates the left unit law.
    PairingData Z = canonical_pairing(cyclic_group(2), f);
    Z.matrix = constant_matrix(2, 2, Scalar::zero(f));
    PairingReport zr = validate_pairing(Z);
    CHECK(zr.level == PairingLevel::none);
    REQUIRE(!zr.failures.empty());
    CHECK(zr.failures.front().find("left unit law") != std::string::npos);
    CHECK(!zr.perfect_left);
    CHECK(!zr.perfect_right);
}

TEST_CASE("pairing level hierarchy separates augmented from bialgebra") {
    // k[Z4] paired with its function algebra over Q through the convolution
    // powers of u = (-1 + g + g^2 + g^3)/2, a square root of 1 in Q[Z4] that
    // is not a group element: row k holds the coefficients of u^k.
    Field q(0);
    PairingData P = delta_pairing(build_group_algebra(cyclic_group(4), q),
                                  build_function_algebra(cyclic_group(4), q));
    auto s = [&](int num, int den) { return Scalar(q, num, den); };
    std::vector<Scalar> one_row = {s(1, 1), s(0, 1), s(0, 1), s(0, 1)};
    std::vector<Scalar> u_row = {s(-1, 2), s(1, 2), s(1, 2), s(1, 2)};
    P.matrix = {one_row, u_row, one_row, u_row};

    PairingReport rep = validate_pairing(P);
    CHECK(rep.level == PairingLevel::augmented);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures.front().find("coproduct law") != std::string::npos);
    CHECK(rep.left_kernel.dim() == 2);
    CHECK(rep.right_kernel.dim() == 2);

    // Bialgebra pairings between antipode-free bialgebras cap at that level.
    FiniteMonoid M = monoid_from_table({{0, 1}, {1, 1}});
    HopfAlgebra b = build_monoid_bialgebra(M, Field(2));
    PairingData E{b, b, constant_matrix(2, 2, Scalar::one(Field(2)))};
    CHECK(validate_pairing(E).level == PairingLevel::bialgebra);

    // Shape errors are rejected before any law is evaluated.
    CHECK_THROWS_AS(delta_pairing(b, build_group_algebra(cyclic_group(4),
                                                         Field(2))),
                    dimension_error);
    PairingData bad = canonical_pairing(cyclic_group(2), Field(2));
    bad.matrix.pop_back();
    CHECK_THROWS_AS(validate_pairing(bad), dimension_error);
}

TEST_CASE("orthogonal complements under the canonical pairing") {
    Field f(2);
    FiniteGroup G = semidirect_p(2);
    PairingData P = canonical_pairing(G, f);

    CHECK(orthogonal(P, Subspace::zero(8, f), PairingSide::left) ==
          Subspace::full(8, f));
    CHECK(orthogonal(P, Subspace::full(8, f), PairingSide::left).is_zero());

    // The annihilator of the right unit line is the augmentation ideal of
    // the function algebra.
    Subspace unit_line = rref(f, 8, {P.right.unit});
    Subspace perp = orthogonal(P, unit_line, PairingSide::right);
    CHECK(perp.dim() == 7);
    CHECK(perp == augmentation_ideal(P.left));

    // Perfect pairing: complementary dimensions, both ways around.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        Subspace S = th::random_subspace(f, 8, trial % 5, rng);
        Subspace T = orthogonal(P, S, PairingSide::left);
        CHECK(S.dim() + T.dim() == 8);
        CHECK(orthogonal(P, T, PairingSide::right) == S);
    }
    CHECK_THROWS_AS(orthogonal(P, Subspace::zero(5, f), PairingSide::left),
                    dimension_error);
}

TEST_CASE("coradical layers annihilate augmentation powers") {
    Field f(2);
    for (const FiniteGroup& G :
         {trivial_group(), cyclic_group(4), semidirect_p(2)}) {
        PairingData P = canonical_pairing(G, f);
        OrthogonalityReport rep = orthogonality_identity(P);
        CHECK(rep.perfect);
        CHECK(rep.polar_equality);
        for (std::size_t n = 0; n < rep.d_dims.size(); ++n)
            CHECK(rep.d_dims[n] + rep.j_power_dims[n] == G.order);
    }

    PairingData S = canonical_pairing(semidirect_p(2), f);
    OrthogonalityReport sr = orthogonality_identity(S);
    REQUIRE(sr.d_dims.size() >= 5);
    CHECK(std::vector<std::int64_t>(sr.d_dims.begin(), sr.d_dims.begin() + 5)
          == std::vector<std::int64_t>{1, 3, 5, 7, 8});
    CHECK(std::vector<std::int64_t>(sr.j_power_dims.begin(),
                                    sr.j_power_dims.begin() + 5) ==
          std::vector<std::int64_t>{7, 5, 3, 1, 0});

    // Over Q the augmentation ideal of k[Z4] is idempotent, so every
    // coradical layer of the dual stays one-dimensional.
    PairingData Q = delta_pairing(build_group_algebra(cyclic_group(4),
                                                      Field(0)),
                                  build_function_algebra(cyclic_group(4),
                                                         Field(0)));
    OrthogonalityReport qr = orthogonality_identity(Q);
    for (std::size_t n = 0; n < qr.d_dims.size(); ++n) {
        CHECK(qr.d_dims[n] == 1);
        CHECK(qr.j_power_dims[n] == 3);
    }

    // A degenerate pairing breaks the exact identity: <x,y> = eps(x)eps(y)
    // satisfies every law, but its annihilators see only the unit line.
    Field g2(2);
    HopfAlgebra h2 = build_group_algebra(cyclic_group(2), g2);
    PairingData D{h2, h2, constant_matrix(2, 2, Scalar::one(g2))};
    CHECK(validate_pairing(D).level == PairingLevel::hopf);
    CHECK_THROWS_AS(orthogonality_identity(D), theorem_error);
}

TEST_CASE("graded pairing ranks and the layer-wise Rees identity") {
    Field f(2);
    PairingData P = canonical_pairing(semidirect_p(2), f);
    GradedPairingReport rep = induced_graded_pairing(P);
    CHECK(rep.ranks == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    CHECK(rep.left_dims == rep.right_dims);
    CHECK(rep.perfect_all);
    CHECK(rep.right_perfect_all);
    CHECK(rep.rees_identity);

    PairingData T = canonical_pairing(trivial_group(), f);
    GradedPairingReport tr = induced_graded_pairing(T);
    CHECK(tr.ranks == std::vector<std::int64_t>{1});
    CHECK(tr.perfect_all);
}

TEST_CASE("left-degenerate pairing stays perfect on the right") {
    // k[Z2 x Z2] pairs with A(Z2) through a surjection onto Z2: the left
    // kernel is the kernel of the induced algebra map, the right side stays
    // perfect degree by degree.
    Field f(2);
    FiniteGroup G = product_of_cyclic_p_powers(2, {1, 1});
    FiniteGroup Z2 = cyclic_group(2);
    int a = G.identity == 0 ? 1 : 0;
    std::vector<int> H = subgroup_generated(G, {a});
    REQUIRE(H.size() == 2);

    PairingData P{build_group_algebra(G, f), build_function_algebra(Z2, f),
                  constant_matrix(4, 2, Scalar::zero(f))};
    for (int g = 0; g < 4; ++g) {
        bool in_H = std::find(H.begin(), H.end(), g) != H.end();
        P.matrix[(std::size_t)g][in_H ? 0 : 1] = Scalar::one(f);
    }

    PairingReport rep = validate_pairing(P);
    CHECK(rep.level == PairingLevel::hopf);
    CHECK(rep.left_kernel.dim() == 2);
    CHECK(rep.perfect_right);

    OrthogonalityReport orep = orthogonality_identity(P);
    CHECK(orep.d_dims.front() == 1);
    for (std::size_t n = 1; n < orep.d_dims.size(); ++n)
        CHECK(orep.d_dims[n] == 2);
    CHECK(!orep.perfect);

    GradedPairingReport grep = induced_graded_pairing(P);
    CHECK(grep.left_dims == std::vector<std::int64_t>{1, 2, 1});
    CHECK(grep.right_dims == std::vector<std::int64_t>{1, 1, 0});
    CHECK(grep.ranks == std::vector<std::int64_t>{1, 1, 0});
    CHECK(grep.right_perfect_all);
    CHECK(!grep.perfect_all);
    CHECK(!grep.rees_identity);
}
