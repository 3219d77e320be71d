#include <doctest.h>

#include <random>

#include "crystal/hopf.hpp"
#include "test_helpers.hpp"

using namespace crystal;
using th::vec;

namespace {

// Group algebra of Z2 with basis {1, g}.
HopfAlgebra make_kz2(Field f) {
    HopfAlgebra H;
    H.field = f;
    H.dim = 2;
    H.labels = {"1", "g"};
    H.mult = {{vec(f, {1, 0}), vec(f, {0, 1})},
              {vec(f, {0, 1}), vec(f, {1, 0})}};
    H.unit = vec(f, {1, 0});
    H.comult.resize(2, SparseVector(4));
    H.comult[0].push(0, Scalar::one(f)); // 1⊗1
    H.comult[1].push(3, Scalar::one(f)); // g⊗g
    H.counit = vec(f, {1, 1});
    H.antipode = LinearMap::identity(2, f);
    return H;
}

// Monoid algebra of {1, e} with e² = e (no antipode exists).
HopfAlgebra make_idempotent_monoid(Field f) {
    HopfAlgebra H;
    H.field = f;
    H.dim = 2;
    H.labels = {"1", "e"};
    H.mult = {{vec(f, {1, 0}), vec(f, {0, 1})},
              {vec(f, {0, 1}), vec(f, {0, 1})}};
    H.unit = vec(f, {1, 0});
    H.comult.resize(2, SparseVector(4));
    H.comult[0].push(0, Scalar::one(f));
    H.comult[1].push(3, Scalar::one(f));
    H.counit = vec(f, {1, 1});
    return H;
}

// k[x]/(x²) with x primitive: the enveloping algebra of the 1-dim abelian
// restricted Lie algebra with trivial p-map, p = 2.
HopfAlgebra make_dual_numbers_gf2() {
    Field f(2);
    HopfAlgebra H;
    H.field = f;
    H.dim = 2;
    H.labels = {"1", "x"};
    H.mult = {{vec(f, {1, 0}), vec(f, {0, 1})},
              {vec(f, {0, 1}), vec(f, {0, 0})}};
    H.unit = vec(f, {1, 0});
    H.comult.resize(2, SparseVector(4));
    H.comult[0].push(0, Scalar::one(f));
    H.comult[1].push(1, Scalar::one(f)); // x⊗1 is index 1*2+0 = 2... built below
    H.comult[1] = SparseVector(4);
    H.comult[1].push(1, Scalar::one(f)); // 1⊗x
    H.comult[1].push(2, Scalar::one(f)); // x⊗1
    H.counit = vec(f, {1, 0});
    LinearMap s = LinearMap::identity(2, f);
    H.antipode = s; // -x = x in char 2
    return H;
}

} // namespace

TEST_CASE("validate accepts group and monoid fixtures") {
    auto H = make_kz2(Field(2));
    auto rep = validate(H);
    CHECK(rep.all_pass());
    CHECK(rep.has_antipode);
    CHECK(rep.bialgebra_ok);
    CHECK(rep.commutative);
    CHECK(rep.cocommutative);

    auto M = make_idempotent_monoid(Field(2));
    auto mrep = validate(M);
    CHECK(mrep.all_pass());
    CHECK(mrep.bialgebra_ok);
    CHECK_FALSE(mrep.has_antipode);
}

TEST_CASE("no antipode exists for the idempotent monoid bialgebra") {
    Field f(2);
    auto M = make_idempotent_monoid(f);
    // Exhaustive search over all 16 candidate 2x2 matrices over GF(2).
    int found = 0;
    for (int bits = 0; bits < 16; ++bits) {
        LinearMap s(2, 2, f);
        s.columns[0] = vec(f, {bits & 1, (bits >> 1) & 1});
        s.columns[1] = vec(f, {(bits >> 2) & 1, (bits >> 3) & 1});
        M.antipode = s;
        if (validate(M).antipode_ok) ++found;
    }
    CHECK(found == 0);
}

TEST_CASE("validate reports a witness for broken associativity") {
    auto H = make_kz2(Field(2));
    H.mult[1][1] = vec(Field(2), {0, 0}); // g*g = 0 breaks unit/assoc laws
    auto rep = validate(H);
    CHECK_FALSE(rep.all_pass());
    bool found_witness = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) found_witness = true;
    CHECK(found_witness);
}

TEST_CASE("validate rejects malformed shapes before axioms") {
    auto H = make_kz2(Field(2));
    H.comult.pop_back();
    CHECK_THROWS_AS(validate(H), format_error);
}

TEST_CASE("iterated coproduct") {
    auto H = make_kz2(Field(2));
    auto g = vec(Field(2), {0, 1});
    CHECK(iterated_coproduct(H, g, 1) == TensorElement::from_vector(g));
    auto ggg = iterated_coproduct(H, g, 3);
    CHECK(ggg.arity == 3);
    CHECK(ggg.coeffs.entries.size() == 1);
    CHECK(ggg.coeffs.entries[0].first == tensor_index(2, {1, 1, 1}));
    // Δ⁰ = ε.
    CHECK(iterated_coproduct(H, g, 0) ==
          TensorElement::scalar(2, Scalar::one(Field(2))));

    auto P = make_dual_numbers_gf2();
    auto x = vec(Field(2), {0, 1});
    auto dx = iterated_coproduct(P, x, 2);
    CHECK(dx.coeffs == th::vec(Field(2), {0, 1, 1, 0}));
    CHECK_THROWS_AS(iterated_coproduct(H, g, -1), format_error);
}

TEST_CASE("delta_n basics") {
    Field f2(2);
    auto H = make_kz2(f2);
    auto g = vec(f2, {0, 1});
    auto one = vec(f2, {1, 0});

    // Group-like: δ_n(g) = (g-1)^{⊗n}.
    for (int n = 1; n <= 4; ++n) {
        auto gm1 = TensorElement::from_vector(vec(f2, {1, 1})); // g-1 char 2
        TensorElement expect = TensorElement::scalar(2, Scalar::one(f2));
        for (int k = 0; k < n; ++k) expect = outer(expect, gm1);
        CHECK(delta_n(H, g, n) == expect);
    }
    // δ_n(1) = 0 for n >= 1.
    for (int n = 1; n <= 3; ++n) CHECK(delta_n(H, one, n).coeffs.is_zero());

    // Primitive x: δ₂(x) = 0.
    auto P = make_dual_numbers_gf2();
    auto x = vec(f2, {0, 1});
    CHECK(delta_n(P, x, 2).coeffs.is_zero());
    CHECK(delta_n(P, x, 1) == TensorElement::from_vector(x));

    // Every slot of δ_n is annihilated by ε.
    for (int n = 1; n <= 3; ++n) {
        auto t = delta_n(H, add(g, one), n);
        for (int slot = 0; slot < n; ++slot)
            CHECK(contract_counit_slot(H, t, slot).coeffs.is_zero());
    }
}

TEST_CASE("delta_phi") {
    Field f2(2);
    auto H = make_kz2(f2);
    auto g = vec(f2, {0, 1});

    // Φ = {1..n} is δ_n.
    CHECK(delta_phi(H, g, {1, 2, 3}, 3) == delta_n(H, g, 3));
    // Φ = ∅ embeds ε(x)·1^{⊗n}.
    auto empty = delta_phi(H, g, {}, 2);
    CHECK(empty == unit_tensor(H, 2));
    // Group-like, Φ = {1,3}: (g-1)⊗1⊗(g-1).
    auto got = delta_phi(H, g, {1, 3}, 3);
    auto gm1 = TensorElement::from_vector(vec(f2, {1, 1}));
    auto expect = outer(outer(gm1, TensorElement::from_vector(H.unit)), gm1);
    CHECK(got == expect);
    CHECK_THROWS_AS(delta_phi(H, g, {0, 2}, 3), format_error);
    CHECK_THROWS_AS(delta_phi(H, g, {2, 1}, 3), format_error);
}

TEST_CASE("delta coassociativity law") {
    // (id^{⊗s} ⊗ δ_ℓ ⊗ id^{⊗(n-1-s)}) ∘ δ_n = δ_{n+ℓ-1} on basis elements.
    for (auto* make : {+[] { return make_kz2(Field(2)); },
                       +[] { return make_dual_numbers_gf2(); }}) {
        auto H = make();
        LinearMap pi = LinearMap::identity(H.dim, H.field);
        for (std::int64_t i = 0; i < H.dim; ++i)
            axpy(pi.columns[i], -H.counit.coeff(i, H.field), H.unit);
        for (std::int64_t i = 0; i < H.dim; ++i) {
            auto x = SparseVector::unit(H.dim, i, H.field);
            for (int n = 1; n <= 3; ++n)
                for (int l = 1; l <= 3; ++l)
                    for (int s = 0; s + 1 <= n; ++s) {
                        auto t = delta_n(H, x, n);
                        // Split slot s into l slots then project each new
                        // slot: δ_ℓ applied inside slot s equals
                        // (π^{⊗l}∘Δ^l) there because outer slots are
                        // already ε-free.
                        for (int k = 1; k < l; ++k)
                            t = apply_comult_to_slot(H, t, s);
                        for (int k = 0; k < l; ++k)
                            t = apply_linear_to_slot(t, s + k, pi);
                        CHECK(t == delta_n(H, x, n + l - 1));
                    }
        }
    }
}

TEST_CASE("delta multiplicativity law") {
    // δ_n(ab) = Σ_{Λ∪Y={1..n}} δ_Λ(a)·δ_Y(b).
    std::mt19937_64 rng(424242);
    for (auto* make : {+[] { return make_kz2(Field(3)); },
                       +[] { return make_dual_numbers_gf2(); }}) {
        auto H = make();
        for (int trial = 0; trial < 20; ++trial) {
            auto a = th::random_vec(H.field, H.dim, rng);
            auto b = th::random_vec(H.field, H.dim, rng);
            for (int n = 1; n <= 3; ++n) {
                TensorElement sum(H.dim, n);
                for (int lam = 0; lam < (1 << n); ++lam)
                    for (int y = 0; y < (1 << n); ++y) {
                        if ((lam | y) != (1 << n) - 1) continue;
                        std::vector<int> L, Y;
                        for (int s = 0; s < n; ++s) {
                            if (lam & (1 << s)) L.push_back(s + 1);
                            if (y & (1 << s)) Y.push_back(s + 1);
                        }
                        auto term = multiply_tensor(H, delta_phi(H, a, L, n),
                                                    delta_phi(H, b, Y, n));
                        axpy(sum.coeffs, Scalar::one(H.field), term.coeffs);
                    }
                CHECK(delta_n(H, H.multiply(a, b), n) == sum);
            }
        }
    }
}

TEST_CASE("primitives") {
    // Δ(g-1) = (g-1)⊗1 + 1⊗(g-1) + (g-1)⊗(g-1), so k[Z2] has no nonzero
    // primitives even in characteristic 2. Oracle: enumerate GF(2)².
    auto H2 = make_kz2(Field(2));
    auto P2 = primitives(H2);
    int prim_count = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto x = vec(Field(2), {a, b});
            auto defect = H2.primitive_defect_map().apply(x);
            if (defect.is_zero() && !x.is_zero()) ++prim_count;
            CHECK(P2.contains(x) == defect.is_zero());
        }
    CHECK(prim_count == 0);
    CHECK(P2.dim() == 0);
    CHECK(primitives(make_kz2(Field(0))).dim() == 0);
    auto P = make_dual_numbers_gf2();
    auto p = primitives(P);
    CHECK(p.dim() == 1);
    CHECK(p.basis[0] == vec(Field(2), {0, 1}));
}

TEST_CASE("group-like membership") {
    auto H = make_kz2(Field(2));
    CHECK(is_group_like(H, vec(Field(2), {1, 0})));
    CHECK(is_group_like(H, vec(Field(2), {0, 1})));
    CHECK_FALSE(is_group_like(H, vec(Field(2), {1, 1}))); // g-1, ε = 0
}

TEST_CASE("multiply_tensor") {
    Field f2(2);
    auto H = make_kz2(f2);
    auto g = TensorElement::from_vector(vec(f2, {0, 1}));
    auto gg = outer(g, g);
    CHECK(multiply_tensor(H, gg, unit_tensor(H, 2)) == gg);
    CHECK(multiply_tensor(H, gg, gg) == unit_tensor(H, 2)); // g² = 1

    // Random pair vs schoolbook expansion in the dual-number algebra.
    auto P = make_dual_numbers_gf2();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        SparseVector a4(4), b4(4);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int i = 0; i < 4; ++i) {
            if (bit(rng)) a4.entries.emplace_back(i, Scalar::one(f2));
            if (bit(rng)) b4.entries.emplace_back(i, Scalar::one(f2));
        }
        TensorElement a(2, 2), b(2, 2);
        a.coeffs = a4;
        b.coeffs = b4;
        auto fast = multiply_tensor(P, a, b);
        SparseVector slow(4);
        for (const auto& [ia, ca] : a4.entries)
            for (const auto& [ib, cb] : b4.entries) {
                auto u = P.multiply(
                    SparseVector::unit(2, ia / 2, f2),
                    SparseVector::unit(2, ib / 2, f2));
                auto v = P.multiply(
                    SparseVector::unit(2, ia % 2, f2),
                    SparseVector::unit(2, ib % 2, f2));
                for (const auto& [iu, cu] : u.entries)
                    for (const auto& [iv, cv] : v.entries)
                        axpy(slow, ca * cb * cu * cv,
                             SparseVector::unit(4, iu * 2 + iv, f2));
            }
        CHECK(fast.coeffs == slow);
    }
}

TEST_CASE("delta identity helpers agree with the inline checks") {
    std::mt19937_64 rng(7);
    for (auto* make : {+[] { return make_kz2(Field(0)); },
                       +[] { return make_dual_numbers_gf2(); }}) {
        auto H = make();
        for (int trial = 0; trial < 10; ++trial) {
            auto a = th::random_vec(H.field, H.dim, rng);
            auto b = th::random_vec(H.field, H.dim, rng);
            for (int n = 1; n <= 3; ++n) {
                CHECK(delta_product_expansion(H, a, b, n));
                for (int l = 1; l <= 3; ++l)
                    for (int s = 0; s + 1 <= n; ++s)
                        CHECK(delta_coassociativity(H, a, n, l, s));
            }
        }
    }
    auto H = make_dual_numbers_gf2();
    CHECK_THROWS_AS(delta_coassociativity(
                        H, SparseVector::unit(2, 0, Field(2)), 2, 1, 2),
                    format_error);
}

TEST_CASE("tensor index codec round-trips") {
    for (std::int64_t d : {2, 3, 5}) {
        for (std::int64_t idx = 0; idx < d * d * d; ++idx) {
            auto digits = tensor_digits(d, 3, idx);
            CHECK(tensor_index(d, digits) == idx);
        }
    }
    CHECK_THROWS_AS(tensor_pow(64, 99), resource_error);
}
