#include <doctest.h>

#include "crystal/groups.hpp"
#include "test_helpers.hpp"

using namespace crystal;

namespace {

RestrictedLieInput two_dim_nonabelian_gf2() {
    // [x, y] = y, x^[2] = x, y^[2] = 0.
    RestrictedLieInput g;
    g.field = Field(2);
    g.dim = 2;
    g.labels = {"x", "y"};
    g.bracket.assign(2, std::vector<SparseVector>(2, SparseVector(2)));
    g.bracket[0][1] = SparseVector::unit(2, 1, g.field);
    g.bracket[1][0] = SparseVector::unit(2, 1, g.field).scaled(-Scalar::one(g.field));
    g.p_operation.assign(2, SparseVector(2));
    g.p_operation[0] = SparseVector::unit(2, 0, g.field);
    return g;
}

RestrictedLieInput heisenberg_gf3() {
    // [x, y] = z, z central, trivial p-map.
    RestrictedLieInput g;
    g.field = Field(3);
    g.dim = 3;
    g.labels = {"x", "y", "z"};
    g.bracket.assign(3, std::vector<SparseVector>(3, SparseVector(3)));
    g.bracket[0][1] = SparseVector::unit(3, 2, g.field);
    g.bracket[1][0] = SparseVector::unit(3, 2, g.field).scaled(-Scalar::one(g.field));
    g.p_operation.assign(3, SparseVector(3));
    return g;
}

} // namespace

TEST_CASE("group constructions and validation") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(c4.order == 4);
    CHECK(c4.identity == 0);
    CHECK(c4.op(3, 2) == 1);
    CHECK(c4.inv(1) == 3);
    CHECK(c4.power(1, 6) == 2);
    CHECK(c4.power(1, -1) == 3);

    FiniteGroup d4 = dihedral_group(4);
    CHECK(d4.order == 8);
    // s r s⁻¹ = r⁻¹ with r = index 1, s = index 4.
    CHECK(d4.op(d4.op(4, 1), d4.inv(4)) == d4.inv(1));

    FiniteGroup q8 = quaternion_group();
    CHECK(q8.order == 8);
    // i² = j² = k² = -1 and ij = k.
    CHECK(q8.op(2, 2) == 1);
    CHECK(q8.op(4, 4) == 1);
    CHECK(q8.op(6, 6) == 1);
    CHECK(q8.op(2, 4) == 6);
    CHECK(q8.op(4, 2) == 7);

    FiniteGroup s3 = symmetric_group(3);
    CHECK(s3.order == 6);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && s3.op(a, b) == s3.op(b, a);
    CHECK_FALSE(abelian);
    CHECK(symmetric_group(4).order == 24);

    CHECK(direct_product(cyclic_group(2), cyclic_group(4)).order == 8);
    CHECK(product_of_cyclic_p_powers(2, {1, 2}).order == 8);
    CHECK(trivial_group().order == 1);

    // Non-associative table is rejected.
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), format_error);
    // Table without inverses is rejected.
    CHECK_THROWS_AS(group_from_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}),
                    format_error);
}

TEST_CASE("permutation closure") {
    FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
    CHECK(s3.order == 6);
    CHECK(s3.labels[s3.identity] == "(0 1 2)");
    CHECK_THROWS_AS(group_from_permutations({{1, 2, 3, 4, 0}}, 5, 3),
                    resource_error);
    CHECK_THROWS_AS(group_from_permutations({{0, 0, 1}}, 3), format_error);
}

TEST_CASE("semidirect product of Z_p acting on Z_p^2") {
    FiniteGroup g = semidirect_p(2);
    CHECK(g.order == 8);
    // Encoding: index(a, b) = 4a + b for ν^a τ^b, so ν = 4 and τ = 1.
    // The defining relation ν τ ν⁻¹ = τ^(1+p) reads ν τ ν = τ³ at p = 2.
    CHECK(g.op(g.op(4, 1), 4) == 3);
    CHECK(g.power(1, 4) == 0);
    CHECK(g.power(4, 2) == 0);
    CHECK(g.labels[5] == "vt");

    FiniteGroup g3 = semidirect_p(3);
    CHECK(g3.order == 27);
    CHECK(g3.op(g3.op(9, 1), g3.inv(9)) == 4); // ν τ ν⁻¹ = τ⁴
}

TEST_CASE("monoid tables") {
    FiniteMonoid m = monoid_from_table({{0, 1}, {1, 1}});
    CHECK(m.identity == 0);
    CHECK_THROWS_AS(monoid_from_table({{1, 1}, {1, 1}}), format_error);
}

TEST_CASE("lower central and p-central series") {
    FiniteGroup s3 = symmetric_group(3);
    SubgroupSeries lcs = lower_central_series(s3);
    CHECK(lcs.at(1).size() == 6);
    CHECK(lcs.at(2).size() == 3);
    CHECK(lcs.at(3) == lcs.at(2));

    FiniteGroup g = semidirect_p(2);
    SubgroupSeries s = p_lower_central_series(g, 2);
    CHECK(s.at(1).size() == 8);
    CHECK(s.at(2) == std::vector<int>{0, 2});
    CHECK(s.at(3) == std::vector<int>{0});
    CHECK(s.at(7) == std::vector<int>{0});

    // Abelian case: the terms are the p-power subgroups.
    FiniteGroup a = product_of_cyclic_p_powers(2, {1, 2});
    SubgroupSeries sa = p_lower_central_series(a, 2);
    CHECK(sa.at(1).size() == 8);
    CHECK(sa.at(2).size() == 2);
    CHECK(sa.at(3).size() == 1);

    // S3 at p = 2 stabilizes at A3 instead of reaching 1.
    SubgroupSeries s2 = p_lower_central_series(s3, 2);
    CHECK(s2.at(2).size() == 3);
    CHECK(s2.at(3) == s2.at(2));
}

TEST_CASE("dimension subgroups match the p-central series") {
    for (auto [G, p] : {std::make_pair(semidirect_p(2), (std::uint64_t)2),
                        std::make_pair(quaternion_group(), (std::uint64_t)2),
                        std::make_pair(symmetric_group(3), (std::uint64_t)3)}) {
        SubgroupSeries s = p_lower_central_series(G, p);
        SubgroupSeries d = dimension_subgroups(G, Field(p));
        for (std::int64_t n = 1; n <= (std::int64_t)s.terms.size() + 1; ++n)
            CHECK(d.at(n) == s.at(n));
    }
}

TEST_CASE("weighted coset representatives") {
    FiniteGroup g = semidirect_p(2);
    JenningsNet net = jennings_net_and_weights(g, 2);
    REQUIRE(net.reps_by_weight.size() == 2);
    CHECK(net.reps_by_weight[0] == std::vector<int>{1, 4}); // τ, ν
    CHECK(net.reps_by_weight[1] == std::vector<int>{2});    // τ²
    CHECK(net.stable_term == std::vector<int>{0});

    JenningsNet ns3 = jennings_net_and_weights(symmetric_group(3), 2);
    REQUIRE(ns3.reps_by_weight.size() == 1);
    CHECK(ns3.reps_by_weight[0].size() == 1);
    CHECK(ns3.stable_term.size() == 3);
}

TEST_CASE("graded Lie ring of the p-central series") {
    FiniteGroup g = semidirect_p(2);
    GradedLieRing L = p_graded_lie_ring(g, 2);
    REQUIRE(L.basis_elements == std::vector<int>{1, 4, 2}); // τ, ν, τ²
    CHECK(L.weights == std::vector<int>{1, 1, 2});
    Field f(2);
    // [ν̄, τ̄] = τ̄² and τ̄^[2] = τ̄², ν̄^[2] = 0, (τ̄²)^[2] = 0.
    CHECK(L.bracket[1][0] == SparseVector::unit(3, 2, f));
    CHECK(L.bracket[0][1] == SparseVector::unit(3, 2, f));
    CHECK(L.p_operation[0] == SparseVector::unit(3, 2, f));
    CHECK(L.p_operation[1].is_zero());
    CHECK(L.p_operation[2].is_zero());

    // Abelian: brackets vanish and the p-map shifts to the next power.
    FiniteGroup a = product_of_cyclic_p_powers(2, {1, 2});
    GradedLieRing La = p_graded_lie_ring(a, 2);
    REQUIRE(La.weights == std::vector<int>{1, 1, 2});
    for (const auto& row : La.bracket)
        for (const auto& b : row) CHECK(b.is_zero());
    int order2 = 0, order4 = -1;
    for (std::size_t i = 0; i < 2; ++i)
        (a.power(La.basis_elements[i], 2) == a.identity ? order2 : order4) = (int)i;
    REQUIRE(order4 >= 0);
    CHECK(La.p_operation[(std::size_t)order2].is_zero());
    CHECK(La.p_operation[(std::size_t)order4] == SparseVector::unit(3, 2, Field(2)));
    CHECK(La.p_operation[2].is_zero());
}

TEST_CASE("group and function algebras") {
    FiniteGroup g = semidirect_p(2);
    HopfAlgebra kg = build_group_algebra(g, Field(2));
    ValidationReport r = validate(kg);
    CHECK(r.all_pass());
    CHECK(r.has_antipode);
    CHECK_FALSE(r.commutative);
    CHECK(r.cocommutative);
    CHECK(is_group_like(kg, SparseVector::unit(8, 5, Field(2))));

    HopfAlgebra ak = build_function_algebra(symmetric_group(3), Field(2));
    ValidationReport ra = validate(ak);
    CHECK(ra.all_pass());
    CHECK(ra.commutative);
    CHECK_FALSE(ra.cocommutative);

    HopfAlgebra kq = build_group_algebra(symmetric_group(3), Field(0));
    CHECK(validate(kq).all_pass());

    FiniteMonoid m = monoid_from_table({{0, 1}, {1, 1}});
    HopfAlgebra bm = build_monoid_bialgebra(m, Field(2));
    ValidationReport rm = validate(bm);
    CHECK(rm.bialgebra_ok);
    CHECK_FALSE(rm.has_antipode);
}

TEST_CASE("restricted Lie validation") {
    CHECK_NOTHROW(validate_restricted_lie(two_dim_nonabelian_gf2()));
    CHECK_NOTHROW(validate_restricted_lie(heisenberg_gf3()));

    RestrictedLieInput bad = two_dim_nonabelian_gf2();
    bad.bracket[1][0] = SparseVector::unit(2, 0, bad.field); // breaks antisymmetry
    CHECK_THROWS_AS(validate_restricted_lie(bad), axiom_error);

    RestrictedLieInput badp = two_dim_nonabelian_gf2();
    badp.p_operation[1] = SparseVector::unit(2, 0, badp.field);
    CHECK_THROWS_AS(validate_restricted_lie(badp), axiom_error);
}

TEST_CASE("restricted enveloping algebra") {
    // One-dimensional abelian with trivial p-map: the dual numbers pattern.
    RestrictedLieInput ab;
    ab.field = Field(2);
    ab.dim = 1;
    ab.labels = {"x"};
    ab.bracket.assign(1, std::vector<SparseVector>(1, SparseVector(1)));
    ab.p_operation.assign(1, SparseVector(1));
    HopfAlgebra u1 = build_restricted_enveloping(ab);
    CHECK(u1.dim == 2);
    CHECK(validate(u1).all_pass());
    CHECK(primitives(u1).contains(SparseVector::unit(2, 1, ab.field)));
    CHECK(u1.multiply(SparseVector::unit(2, 1, ab.field),
                      SparseVector::unit(2, 1, ab.field))
              .is_zero());

    RestrictedLieInput g = two_dim_nonabelian_gf2();
    HopfAlgebra u = build_restricted_enveloping(g);
    CHECK(u.dim == 4);
    CHECK(validate(u).all_pass());
    Field f = g.field;
    // Basis indices: 1 = 0, y = 1, x = 2, xy = 3.
    SparseVector x = SparseVector::unit(4, 2, f), y = SparseVector::unit(4, 1, f);
    // y x = x y - y (equal to x y + y over GF(2)).
    SparseVector yx = u.multiply(y, x);
    SparseVector expect = add(SparseVector::unit(4, 3, f), y);
    CHECK(yx == expect);
    // x² = x^[2] = x.
    CHECK(u.multiply(x, x) == x);
    CHECK(primitives(u).contains(x));
    CHECK(primitives(u).contains(y));
    CHECK(u.labels[3] == "x y");

    RestrictedLieInput h = heisenberg_gf3();
    HopfAlgebra uh = build_restricted_enveloping(h);
    CHECK(uh.dim == 27);
    CHECK(validate(uh).all_pass());
    // y x = x y - z. Indices are base-3 digits (e_x, e_y, e_z).
    SparseVector hx = SparseVector::unit(27, 9, h.field);
    SparseVector hy = SparseVector::unit(27, 3, h.field);
    SparseVector hz = SparseVector::unit(27, 1, h.field);
    SparseVector lhs = uh.multiply(hy, hx);
    SparseVector rhs = add(SparseVector::unit(27, 12, h.field),
                           hz.scaled(-Scalar::one(h.field)));
    CHECK(lhs == rhs);

    RestrictedLieInput big;
    big.field = Field(2);
    big.dim = 4;
    big.bracket.assign(4, std::vector<SparseVector>(4, SparseVector(4)));
    big.p_operation.assign(4, SparseVector(4));
    CHECK_THROWS_AS(build_restricted_enveloping(big), resource_error);
    CHECK(build_restricted_enveloping(big, 4).dim == 16);
}

TEST_CASE("series, net monomials and graded classes agree") {
    JenningsHallReport r = jennings_hall_check(semidirect_p(2), 2);
    CHECK(r.series_match);
    CHECK(r.monomial_bases_match);
    CHECK(r.lie_isomorphism);
    CHECK(r.separated_quotient_match);
    CHECK(r.graded_dims == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    CHECK(r.monomial_counts == r.graded_dims);

    JenningsHallReport ra =
        jennings_hall_check(product_of_cyclic_p_powers(2, {1, 2}), 2);
    CHECK(ra.graded_dims == std::vector<std::int64_t>{1, 2, 2, 2, 1});

    // S3 at p = 2: the stable subgroup is A3 and the separated quotient is
    // the order-2 group algebra.
    JenningsHallReport rs = jennings_hall_check(symmetric_group(3), 2);
    CHECK(rs.separated_quotient_match);
    CHECK(rs.graded_dims == std::vector<std::int64_t>{1, 1});

    // S3 at p = 3: transpositions are cubes, so the p-series freezes at S3
    // itself and everything collapses to the scalars.
    JenningsHallReport r3 = jennings_hall_check(symmetric_group(3), 3);
    CHECK(r3.graded_dims == std::vector<std::int64_t>{1});

    CHECK(jennings_hall_check(quaternion_group(), 2).lie_isomorphism);
}
