#include "crystal/filtration.hpp"

#include "crystal/errors.hpp"

namespace crystal {

const Subspace& Filtration::at(std::int64_t n) const {
    if (n < 0) throw format_error("filtration index must be non-negative");
    if (n >= (std::int64_t)chain.size()) return chain.back();
    return chain[(std::size_t)n];
}

std::vector<std::int64_t> Filtration::dims() const {
    std::vector<std::int64_t> d;
    d.reserve(chain.size());
    for (const auto& s : chain) d.push_back(s.dim());
    return d;
}

Subspace augmentation_ideal(const HopfAlgebra& H) {
    LinearMap eps(H.dim, 1, H.field);
    for (std::int64_t i = 0; i < H.dim; ++i) {
        Scalar c = H.counit.coeff(i, H.field);
        if (!c.is_zero()) eps.columns[i].push(0, c);
    }
    return kernel(eps);
}

Subspace span_products(const HopfAlgebra& H, const Subspace& U,
                       const Subspace& W) {
    Echelon e(H.field, H.dim);
    for (const auto& u : U.basis)
        for (const auto& w : W.basis) e.add(H.multiply(u, w));
    return e.to_subspace();
}

Subspace tensor_subspace(const Subspace& U, const Subspace& W) {
    std::int64_t d2 = U.ambient * W.ambient;
    Echelon e(U.field, d2);
    for (const auto& u : U.basis)
        for (const auto& w : W.basis) {
            SparseVector row(d2);
            for (const auto& [i, a] : u.entries)
                for (const auto& [j, b] : w.entries)
                    row.entries.emplace_back(i * W.ambient + j, a * b);
            e.add(std::move(row));
        }
    return e.to_subspace();
}

namespace {

// Verifies Δ(F_n) ⊆ Σ_{r+s=n} F_r ⊗ F_s for a decreasing chain (terms past
// the end read as the stable term).
void verify_coproduct_compat(const HopfAlgebra& H, const Filtration& f) {
    for (std::int64_t n = 1; n < (std::int64_t)f.chain.size(); ++n) {
        Echelon target(H.field, H.dim * H.dim);
        for (std::int64_t r = 0; r <= n; ++r) {
            auto t = tensor_subspace(f.at(r), f.at(n - r));
            for (const auto& row : t.basis) target.add(row);
        }
        for (const auto& x : f.chain[(std::size_t)n].basis)
            if (!target.contains(H.comult_of(x)))
                throw theorem_error(
                    "coproduct incompatible with the power filtration at "
                    "level " +
                    std::to_string(n));
    }
}

} // namespace

Filtration jadic_filtration(const HopfAlgebra& H) {
    Filtration f;
    f.direction = Direction::decreasing;
    f.kind = FiltrationKind::epsilon_adic;
    Subspace J = augmentation_ideal(H);
    f.chain.push_back(Subspace::full(H.dim, H.field));
    f.chain.push_back(J);
    while (true) {
        const Subspace& prev = f.chain.back();
        Subspace next = span_products(H, prev, J);
        if (!prev.contains(next))
            throw theorem_error("power chain failed to decrease");
        bool stable = next == prev;
        f.chain.push_back(std::move(next));
        if (stable) break;
        if ((std::int64_t)f.chain.size() > H.dim + 2)
            throw theorem_error("power chain failed to stabilize in d steps");
    }
    f.stable_index = (std::int64_t)f.chain.size() - 2;
    // Certify stabilization with one extra recomputation.
    if (!(span_products(H, f.chain.back(), J) == f.chain.back()))
        throw theorem_error("power chain stabilization certificate failed");
    verify_coproduct_compat(H, f);
    return f;
}

Filtration dee_filtration(const HopfAlgebra& H) {
    Filtration f;
    f.direction = Direction::increasing;
    f.kind = FiltrationKind::delta_bullet;
    Subspace full = Subspace::full(H.dim, H.field);
    Subspace d0 = rref(H.field, H.dim, {H.unit});
    LinearMap dmap = H.comult_map();
    Subspace one_right = tensor_subspace(d0, full); // D₀ ⊗ H
    f.chain.push_back(d0);
    while (true) {
        const Subspace& prev = f.chain.back();
        auto [target, ignore] =
            sum_and_intersect(tensor_subspace(full, prev), one_right);
        (void)ignore;
        Subspace next = preimage(dmap, target);
        if (!next.contains(prev))
            throw theorem_error("wedge chain failed to increase");
        bool stable = next == prev;
        f.chain.push_back(std::move(next));
        if (stable) break;
        if ((std::int64_t)f.chain.size() > H.dim + 2)
            throw theorem_error("wedge chain failed to stabilize in d steps");
    }
    f.stable_index = (std::int64_t)f.chain.size() - 2;
    auto [tgt, ig] = sum_and_intersect(tensor_subspace(full, f.chain.back()),
                                       one_right);
    (void)ig;
    if (!(preimage(dmap, tgt) == f.chain.back()))
        throw theorem_error("wedge chain stabilization certificate failed");
    return f;
}

SparseVector coords_in(const Subspace& U, const SparseVector& x) {
    // RREF basis: the coordinate along row k is the coefficient of x at the
    // row's pivot column.
    SparseVector c(U.dim());
    for (std::int64_t k = 0; k < U.dim(); ++k) {
        Scalar v = x.coeff(U.pivots[(std::size_t)k], U.field);
        if (!v.is_zero()) c.entries.emplace_back(k, v);
    }
    if (!U.contains(x))
        throw containment_error("element outside the spanning subspace");
    return c;
}

QuotientHopf quotient_hopf(const HopfAlgebra& H, const Subspace& ideal) {
    // Closure checks: two-sided ideal, coideal, ε-annihilated, S-stable.
    Subspace full = Subspace::full(H.dim, H.field);
    for (const auto& w : ideal.basis) {
        for (std::int64_t i = 0; i < H.dim; ++i) {
            auto e = SparseVector::unit(H.dim, i, H.field);
            if (!ideal.contains(H.multiply(e, w)) ||
                !ideal.contains(H.multiply(w, e)))
                throw theorem_error("quotient kernel is not a two-sided ideal");
        }
        if (!H.counit_of(w).is_zero())
            throw theorem_error("quotient kernel not annihilated by counit");
        if (H.antipode && !ideal.contains(H.apply_antipode(w)))
            throw theorem_error("quotient kernel not antipode-stable");
    }
    auto [coideal_target, ig] = sum_and_intersect(
        tensor_subspace(full, ideal), tensor_subspace(ideal, full));
    (void)ig;
    for (const auto& w : ideal.basis)
        if (!coideal_target.contains(H.comult_of(w)))
            throw theorem_error("quotient kernel is not a coideal");

    QuotientHopf qh;
    qh.parent = H;
    qh.ideal = ideal;
    QuotientData qd = quotient_data(full, ideal);
    std::int64_t q = (std::int64_t)qd.section.size();
    qh.projection = qd.projection;
    qh.section = LinearMap(q, H.dim, H.field);
    for (std::int64_t t = 0; t < q; ++t) qh.section.columns[t] = qd.section[t];

    HopfAlgebra& Q = qh.quotient;
    Q.field = H.field;
    Q.dim = q;
    for (std::int64_t t = 0; t < q; ++t)
        Q.labels.push_back("[" + std::to_string(t) + "]");
    Q.mult.assign(q, std::vector<SparseVector>(q, SparseVector(q)));
    for (std::int64_t i = 0; i < q; ++i)
        for (std::int64_t j = 0; j < q; ++j)
            Q.mult[i][j] = qh.projection.apply(
                H.multiply(qd.section[i], qd.section[j]));
    Q.unit = qh.projection.apply(H.unit);
    Q.comult.assign(q, SparseVector(q * q));
    for (std::int64_t i = 0; i < q; ++i) {
        SparseVector img(q * q);
        for (const auto& [idx, c] : H.comult_of(qd.section[i]).entries) {
            auto pa = qh.projection.apply(
                SparseVector::unit(H.dim, idx / H.dim, H.field));
            auto pb = qh.projection.apply(
                SparseVector::unit(H.dim, idx % H.dim, H.field));
            for (const auto& [a, ca] : pa.entries)
                for (const auto& [b, cb] : pb.entries)
                    axpy(img, c * ca * cb,
                         SparseVector::unit(q * q, a * q + b, H.field));
        }
        Q.comult[i] = std::move(img);
    }
    Q.counit = SparseVector(q);
    for (std::int64_t i = 0; i < q; ++i) {
        Scalar c = H.counit_of(qd.section[i]);
        if (!c.is_zero()) Q.counit.entries.emplace_back(i, c);
    }
    if (H.antipode) {
        LinearMap s(q, q, H.field);
        for (std::int64_t i = 0; i < q; ++i)
            s.columns[i] =
                qh.projection.apply(H.apply_antipode(qd.section[i]));
        Q.antipode = std::move(s);
    }
    Q.is_bialgebra = H.is_bialgebra;
    return qh;
}

QuotientHopf h_vee(const HopfAlgebra& H) {
    Filtration j = jadic_filtration(H);
    QuotientHopf qh = quotient_hopf(H, j.chain.back());
    // ε-separation certificate: the J-chain of the quotient reaches 0.
    Filtration jq = jadic_filtration(qh.quotient);
    if (!jq.chain.back().is_zero())
        throw theorem_error("separated quotient kept a stable ideal");
    return qh;
}

SubHopf sub_hopf(const HopfAlgebra& H, const Subspace& carrier) {
    SubHopf sh;
    sh.parent = H;
    sh.carrier = carrier;
    std::int64_t q = carrier.dim();
    if (!carrier.contains(H.unit))
        throw theorem_error("carrier does not contain the unit");
    sh.inclusion = LinearMap(q, H.dim, H.field);
    for (std::int64_t t = 0; t < q; ++t)
        sh.inclusion.columns[t] = carrier.basis[(std::size_t)t];

    Subspace cc = tensor_subspace(carrier, carrier);
    auto tensor_coords = [&](const SparseVector& t2) {
        // Valid only after membership in carrier ⊗ carrier is checked.
        SparseVector out(q * q);
        for (std::int64_t a = 0; a < q; ++a)
            for (std::int64_t b = 0; b < q; ++b) {
                Scalar c = t2.coeff(
                    carrier.pivots[(std::size_t)a] * H.dim +
                        carrier.pivots[(std::size_t)b],
                    H.field);
                if (!c.is_zero()) out.entries.emplace_back(a * q + b, c);
            }
        return out;
    };

    HopfAlgebra& S = sh.sub;
    S.field = H.field;
    S.dim = q;
    for (std::int64_t t = 0; t < q; ++t)
        S.labels.push_back("c" + std::to_string(t));
    S.mult.assign(q, std::vector<SparseVector>(q, SparseVector(q)));
    for (std::int64_t i = 0; i < q; ++i)
        for (std::int64_t j = 0; j < q; ++j) {
            auto prod = H.multiply(carrier.basis[(std::size_t)i],
                                   carrier.basis[(std::size_t)j]);
            if (!carrier.contains(prod))
                throw theorem_error("carrier not closed under multiplication");
            S.mult[i][j] = coords_in(carrier, prod);
        }
    S.unit = coords_in(carrier, H.unit);
    S.comult.assign(q, SparseVector(q * q));
    for (std::int64_t i = 0; i < q; ++i) {
        auto d2 = H.comult_of(carrier.basis[(std::size_t)i]);
        if (!cc.contains(d2))
            throw theorem_error("carrier not closed under comultiplication");
        S.comult[i] = tensor_coords(d2);
    }
    S.counit = SparseVector(q);
    for (std::int64_t i = 0; i < q; ++i) {
        Scalar c = H.counit_of(carrier.basis[(std::size_t)i]);
        if (!c.is_zero()) S.counit.entries.emplace_back(i, c);
    }
    if (H.antipode) {
        LinearMap s(q, q, H.field);
        bool stable = true;
        for (std::int64_t i = 0; i < q; ++i) {
            auto img = H.apply_antipode(carrier.basis[(std::size_t)i]);
            if (!carrier.contains(img)) {
                stable = false;
                break;
            }
            s.columns[i] = coords_in(carrier, img);
        }
        if (stable) S.antipode = std::move(s);
    }
    S.is_bialgebra = H.is_bialgebra;
    return sh;
}

SubHopf h_prime(const HopfAlgebra& H) {
    Filtration d = dee_filtration(H);
    SubHopf sh = sub_hopf(H, d.chain.back());
    // Connectedness certificate: the D-chain of the sub exhausts it.
    Filtration ds = dee_filtration(sh.sub);
    if (ds.chain.back().dim() != sh.sub.dim)
        throw theorem_error("connected component certificate failed");
    return sh;
}

CrosscheckReport delta_kernel_crosscheck(const HopfAlgebra& H, int n_max,
                                         std::int64_t budget) {
    if (n_max < 0) throw format_error("n_max must be non-negative");
    Filtration d = dee_filtration(H);
    CrosscheckReport rep;
    for (int n = 0; n <= n_max; ++n) {
        std::int64_t ambient = tensor_pow(H.dim, n + 1);
        if (ambient > budget)
            throw resource_error("delta kernel crosscheck budget exceeded at " +
                                 std::to_string(H.dim) + "^" +
                                 std::to_string(n + 1));
        LinearMap dn(H.dim, ambient, H.field);
        for (std::int64_t i = 0; i < H.dim; ++i)
            dn.columns[i] =
                delta_n(H, SparseVector::unit(H.dim, i, H.field), n + 1,
                        budget)
                    .coeffs;
        Subspace ker = kernel(dn);
        rep.dims.push_back(ker.dim());
        if (!(ker == d.at(n))) {
            rep.all_match = false;
            throw theorem_error(
                "direct delta kernel disagrees with wedge recursion at n = " +
                std::to_string(n));
        }
    }
    return rep;
}

} // namespace crystal
