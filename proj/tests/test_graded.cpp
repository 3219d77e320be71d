#include <doctest.h>

#include <algorithm>

#include "crystal/graded.hpp"
#include "crystal/groups.hpp"
#include "test_helpers.hpp"

using namespace crystal;

namespace {

RestrictedLieInput two_dim_lie(std::uint64_t p) {
    // [x, y] = y, x^[p] = x, y^[p] = 0.
    RestrictedLieInput g;
    g.field = Field(p);
    g.dim = 2;
    g.labels = {"x", "y"};
    g.bracket.assign(2, std::vector<SparseVector>(2, SparseVector(2)));
    g.bracket[0][1] = SparseVector::unit(2, 1, g.field);
    g.bracket[1][0] =
        SparseVector::unit(2, 1, g.field).scaled(-Scalar::one(g.field));
    g.p_operation.assign(2, SparseVector(2));
    g.p_operation[0] = SparseVector::unit(2, 0, g.field);
    return g;
}

std::vector<std::int64_t> component_dims(const GradedBialgebraData& G) {
    std::vector<std::int64_t> out;
    for (const auto& c : G.components) out.push_back(c.dim);
    return out;
}

std::int64_t find_label(const HopfAlgebra& H, const std::string& want) {
    for (std::int64_t i = 0; i < H.dim; ++i)
        if (H.labels[(std::size_t)i] == want) return i;
    return -1;
}

} // namespace

TEST_CASE("associated graded of the augmentation-power chain") {
    HopfAlgebra h =
        build_group_algebra(product_of_cyclic_p_powers(2, {1, 2}), Field(2));
    GradedBialgebraData g = graded_from_filtration(h, jadic_filtration(h));
    CHECK(g.provenance == GradedProvenance::from_J);
    CHECK(component_dims(g) == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    CHECK(g.total.dim == 8);
    ValidationReport r = validate(g.total);
    CHECK(r.all_pass());
    CHECK(r.cocommutative);
    // Degree bookkeeping survives in the structure constants.
    for (std::int64_t i = 0; i < 8; ++i)
        for (std::int64_t j = 0; j < 8; ++j)
            for (const auto& [k, c] : g.total.mult[(std::size_t)i][(std::size_t)j].entries)
                CHECK(g.degree_of[(std::size_t)k] ==
                      g.degree_of[(std::size_t)i] + g.degree_of[(std::size_t)j]);

    // Square-zero case: trivial products on positive degrees.
    RestrictedLieInput ab;
    ab.field = Field(2);
    ab.dim = 1;
    ab.labels = {"x"};
    ab.bracket.assign(1, std::vector<SparseVector>(1, SparseVector(1)));
    ab.p_operation.assign(1, SparseVector(1));
    HopfAlgebra dual = build_restricted_enveloping(ab);
    GradedBialgebraData gd = graded_from_filtration(dual, jadic_filtration(dual));
    CHECK(component_dims(gd) == std::vector<std::int64_t>{1, 1});
    CHECK(gd.total.mult[1][1].is_zero());

    // Rational group algebra: the graded collapses to the scalars (dim H-vee).
    HopfAlgebra hq = build_group_algebra(symmetric_group(3), Field(0));
    GradedBialgebraData gq = graded_from_filtration(hq, jadic_filtration(hq));
    CHECK(gq.total.dim == 1);
}

TEST_CASE("associated graded of the coproduct-recursion chain") {
    HopfAlgebra ak = build_function_algebra(semidirect_p(2), Field(2));
    GradedBialgebraData g = graded_from_filtration(ak, dee_filtration(ak));
    CHECK(g.provenance == GradedProvenance::from_D);
    CHECK(component_dims(g) == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    ValidationReport r = validate(g.total);
    CHECK(r.all_pass());
    CHECK(r.commutative);
}

TEST_CASE("cobracket on a from_J graded") {
    // Group algebras are cocommutative, so the cobracket vanishes.
    HopfAlgebra h = build_group_algebra(semidirect_p(2), Field(2));
    GradedBialgebraData g = graded_from_filtration(h, jadic_filtration(h));
    CoPoissonStructure co = copoisson_on_graded_J(g);
    for (const auto& col : co.cobracket.columns) CHECK(col.is_zero());

    // Idempotents freeze the chain of a function algebra at once, so its
    // from_J graded is the scalars and the cobracket is trivially zero.
    HopfAlgebra ak = build_function_algebra(semidirect_p(2), Field(2));
    GradedBialgebraData gk = graded_from_filtration(ak, jadic_filtration(ak));
    CHECK(gk.total.dim == 1);
    CHECK(copoisson_on_graded_J(gk).cobracket.columns[0].is_zero());

    // Wrong provenance is rejected.
    GradedBialgebraData gd = graded_from_filtration(ak, dee_filtration(ak));
    CHECK_THROWS_AS(copoisson_on_graded_J(gd), format_error);
}

TEST_CASE("bracket on a from_D graded") {
    // Nonabelian enveloping algebra over GF(3): { x~, y~ } = y~.
    HopfAlgebra u = build_restricted_enveloping(two_dim_lie(3));
    REQUIRE(u.dim == 9);
    GradedBialgebraData g = graded_from_filtration(u, dee_filtration(u));
    CHECK(component_dims(g) == std::vector<std::int64_t>{1, 2, 3, 2, 1});
    PoissonStructure P = poisson_on_graded_D(g);
    std::int64_t xi = find_label(g.total, "x~");
    std::int64_t yi = find_label(g.total, "y~");
    REQUIRE(xi >= 0);
    REQUIRE(yi >= 0);
    CHECK(P.bracket[(std::size_t)xi][(std::size_t)yi] ==
          SparseVector::unit(9, yi, u.field));

    // Commutative parents have identically zero brackets.
    HopfAlgebra ak =
        build_function_algebra(product_of_cyclic_p_powers(2, {1, 2}), Field(2));
    GradedBialgebraData ga = graded_from_filtration(ak, dee_filtration(ak));
    PoissonStructure Pa = poisson_on_graded_D(ga);
    for (const auto& row : Pa.bracket)
        for (const auto& b : row) CHECK(b.is_zero());

    GradedBialgebraData gj = graded_from_filtration(u, jadic_filtration(u));
    CHECK_THROWS_AS(poisson_on_graded_D(gj), format_error);
}

TEST_CASE("restricted Lie bialgebra of a group algebra") {
    HopfAlgebra h = build_group_algebra(semidirect_p(2), Field(2));
    GradedBialgebraData g = graded_from_filtration(h, jadic_filtration(h));
    RestrictedLieBialgebra L = extract_lie(g);
    REQUIRE(L.dim == 3);
    std::vector<std::int64_t> degs = L.degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<std::int64_t>{1, 1, 2});
    REQUIRE(L.p_operation.has_value());
    // Identify basis positions by degree.
    std::vector<std::int64_t> deg1, deg2;
    for (std::int64_t k = 0; k < 3; ++k)
        (L.degrees[(std::size_t)k] == 1 ? deg1 : deg2).push_back(k);
    REQUIRE(deg1.size() == 2);
    SparseVector c = SparseVector::unit(3, deg2[0], L.field);
    // The two degree-1 classes bracket onto the degree-2 class.
    CHECK(L.bracket[(std::size_t)deg1[0]][(std::size_t)deg1[1]] == c);
    // p-map: exactly one nonzero value (= the degree-2 class) across the
    // three nonzero degree-1 vectors, and the degree-2 class is nilpotent.
    auto pval = [&](const SparseVector& v) {
        SparseVector r(3);
        // (a+b)^[p] = a^[p] + b^[p] + [a,b] in char 2 for degree reasons.
        for (const auto& [i, s] : v.entries)
            axpy(r, s * s, (*L.p_operation)[(std::size_t)i]);
        if (v.entries.size() == 2)
            axpy(r, Scalar::one(L.field),
                 L.bracket[(std::size_t)deg1[0]][(std::size_t)deg1[1]]);
        return r;
    };
    SparseVector a = SparseVector::unit(3, deg1[0], L.field);
    SparseVector b = SparseVector::unit(3, deg1[1], L.field);
    int nonzero = 0;
    for (const auto& v : {pval(a), pval(b), pval(add(a, b))})
        if (!v.is_zero()) {
            ++nonzero;
            CHECK(v == c);
        }
    CHECK(nonzero == 1);
    CHECK((*L.p_operation)[(std::size_t)deg2[0]].is_zero());
    for (const auto& col : L.cobracket) CHECK(col.is_zero());

    // Abelian group: all brackets vanish, p-map shifts the order-4 line.
    HopfAlgebra ha =
        build_group_algebra(product_of_cyclic_p_powers(2, {1, 2}), Field(2));
    RestrictedLieBialgebra La =
        extract_lie(graded_from_filtration(ha, jadic_filtration(ha)));
    REQUIRE(La.dim == 3);
    for (const auto& row : La.bracket)
        for (const auto& v : row) CHECK(v.is_zero());
    std::vector<std::int64_t> adeg1, adeg2;
    for (std::int64_t k = 0; k < 3; ++k)
        (La.degrees[(std::size_t)k] == 1 ? adeg1 : adeg2).push_back(k);
    bool hit = false;
    for (std::int64_t k : adeg1)
        if (!(*La.p_operation)[(std::size_t)k].is_zero()) {
            hit = true;
            CHECK((*La.p_operation)[(std::size_t)k] ==
                  SparseVector::unit(3, adeg2[0], La.field));
        }
    CHECK(hit);
    CHECK((*La.p_operation)[(std::size_t)adeg2[0]].is_zero());

    // Trivial graded gives the zero Lie algebra.
    HopfAlgebra hq = build_group_algebra(symmetric_group(3), Field(0));
    RestrictedLieBialgebra Lq =
        extract_lie(graded_from_filtration(hq, jadic_filtration(hq)));
    CHECK(Lq.dim == 0);
    CHECK_FALSE(Lq.p_operation.has_value());
}

TEST_CASE("truncated polynomial presentation") {
    HopfAlgebra u2 = build_restricted_enveloping(two_dim_lie(2));
    GradedBialgebraData g2 = graded_from_filtration(u2, dee_filtration(u2));
    PresentationReport r2 = truncated_presentation(g2);
    CHECK(r2.total_dim == 4);
    CHECK(r2.generator_degrees == std::vector<std::int64_t>{1, 1});
    CHECK(r2.relations_verified);

    HopfAlgebra u3 = build_restricted_enveloping(two_dim_lie(3));
    PresentationReport r3 =
        truncated_presentation(graded_from_filtration(u3, dee_filtration(u3)));
    CHECK(r3.total_dim == 9);
    CHECK(r3.generator_degrees == std::vector<std::int64_t>{1, 1});

    HopfAlgebra ak = build_function_algebra(semidirect_p(2), Field(2));
    PresentationReport ra =
        truncated_presentation(graded_from_filtration(ak, dee_filtration(ak)));
    CHECK(ra.total_dim == 8);
    CHECK(ra.generator_degrees == std::vector<std::int64_t>{1, 1, 2});

    HopfAlgebra hq = build_group_algebra(symmetric_group(3), Field(0));
    PresentationReport rq =
        truncated_presentation(graded_from_filtration(hq, dee_filtration(hq)));
    CHECK(rq.total_dim == 1);
    CHECK(rq.generator_indices.empty());
}
