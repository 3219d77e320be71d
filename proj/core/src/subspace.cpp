#include "crystal/subspace.hpp"

#include <algorithm>

#include "crystal/errors.hpp"

namespace crystal {

Subspace Subspace::zero(std::int64_t ambient, Field f) {
    Subspace s;
    s.ambient = ambient;
    s.field = f;
    return s;
}

Subspace Subspace::full(std::int64_t ambient, Field f) {
    Subspace s = zero(ambient, f);
    for (std::int64_t i = 0; i < ambient; ++i) {
        s.basis.push_back(SparseVector::unit(ambient, i, f));
        s.pivots.push_back(i);
    }
    return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    if (v.ambient != ambient) throw dimension_error("reduce ambient mismatch");
    SparseVector r = v;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Scalar c = r.coeff(pivots[k], field);
        if (!c.is_zero()) axpy(r, -c, basis[k]);
    }
    return r;
}

bool Subspace::contains(const SparseVector& v) const {
    return reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient != ambient) return false;
    for (const auto& row : other.basis)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient == o.ambient && pivots == o.pivots && basis == o.basis;
}

bool Echelon::add(SparseVector row) {
    if (row.ambient != ambient_)
        throw dimension_error("echelon ambient mismatch");
    // Forward-reduce against stored rows (sorted by pivot).
    for (std::size_t k = 0; k < rows_.size() && !row.is_zero(); ++k) {
        if (row.leading_index() > pivots_[k]) continue;
        Scalar c = row.coeff(pivots_[k], field_);
        if (!c.is_zero()) axpy(row, -c, rows_[k]);
    }
    if (row.is_zero()) return false;
    std::int64_t piv = row.leading_index();
    Scalar lead = row.entries.front().second;
    if (!lead.is_one()) row = row.scaled(lead.inverse());
    // Back-reduce earlier rows so the basis stays fully reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = rows_[k].coeff(piv, field_);
        if (!c.is_zero()) axpy(rows_[k], -c, row);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t at = (std::size_t)(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
}

SparseVector Echelon::reduce(SparseVector row) const {
    for (std::size_t k = 0; k < rows_.size() && !row.is_zero(); ++k) {
        Scalar c = row.coeff(pivots_[k], field_);
        if (!c.is_zero()) axpy(row, -c, rows_[k]);
    }
    return row;
}

Subspace Echelon::to_subspace() const {
    Subspace s = Subspace::zero(ambient_, field_);
    s.basis = rows_;
    s.pivots = pivots_;
    return s;
}

Subspace rref(Field f, std::int64_t ambient,
              const std::vector<SparseVector>& rows) {
    Echelon e(f, ambient);
    for (const auto& r : rows) {
        if (r.ambient != ambient)
            throw dimension_error("rref rows disagree on ambient dimension");
        e.add(r);
    }
    return e.to_subspace();
}

Subspace image(const LinearMap& f) {
    return rref(f.field, f.codomain, f.columns);
}

namespace {

// Concatenate [left | right] into one wide row.
SparseVector widen(const SparseVector& left, const SparseVector& right,
                   std::int64_t left_dim, std::int64_t right_dim) {
    SparseVector w(left_dim + right_dim);
    for (const auto& [i, c] : left.entries) w.entries.emplace_back(i, c);
    for (const auto& [i, c] : right.entries)
        w.entries.emplace_back(left_dim + i, c);
    return w;
}

std::pair<SparseVector, SparseVector> split(const SparseVector& wide,
                                            std::int64_t left_dim,
                                            std::int64_t right_dim) {
    SparseVector l(left_dim), r(right_dim);
    for (const auto& [i, c] : wide.entries) {
        if (i < left_dim)
            l.entries.emplace_back(i, c);
        else
            r.entries.emplace_back(i - left_dim, c);
    }
    return {std::move(l), std::move(r)};
}

// Wide elimination with rows [f(e_i) | e_i] on top of [w | 0]: rows whose
// left block vanished have right blocks spanning {v : f(v) ∈ W}.
Subspace solve_into(const LinearMap& f, const Subspace& W) {
    Echelon e(f.field, f.codomain + f.domain);
    for (const auto& w : W.basis)
        e.add(widen(w, SparseVector(f.domain), f.codomain, f.domain));
    for (std::int64_t i = 0; i < f.domain; ++i)
        e.add(widen(f.columns[i], SparseVector::unit(f.domain, i, f.field),
                    f.codomain, f.domain));
    Echelon result(f.field, f.domain);
    for (const auto& row : e.rows()) {
        auto [l, r] = split(row, f.codomain, f.domain);
        if (l.is_zero()) result.add(std::move(r));
    }
    return result.to_subspace();
}

} // namespace

Subspace kernel(const LinearMap& f) {
    return solve_into(f, Subspace::zero(f.codomain, f.field));
}

Subspace preimage(const LinearMap& f, const Subspace& W) {
    if (W.ambient != f.codomain)
        throw dimension_error("preimage target lives in the wrong space");
    return solve_into(f, W);
}

std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& U,
                                                const Subspace& W) {
    if (U.ambient != W.ambient)
        throw dimension_error("sum/intersect ambient mismatch");
    std::int64_t n = U.ambient;
    Echelon e(U.field, 2 * n);
    for (const auto& u : U.basis) e.add(widen(u, u, n, n));
    for (const auto& w : W.basis) e.add(widen(w, SparseVector(n), n, n));
    Echelon sum(U.field, n), inter(U.field, n);
    for (const auto& row : e.rows()) {
        auto [l, r] = split(row, n, n);
        if (l.is_zero())
            inter.add(std::move(r));
        else
            sum.add(std::move(l));
    }
    return {sum.to_subspace(), inter.to_subspace()};
}

QuotientData quotient_data(const Subspace& V, const Subspace& W) {
    if (!V.contains(W))
        throw containment_error("quotient: denominator not inside numerator");
    QuotientData q;
    q.space = V;
    q.sub = W;
    for (std::size_t k = 0; k < V.basis.size(); ++k)
        if (!std::binary_search(W.pivots.begin(), W.pivots.end(), V.pivots[k]))
            q.section.push_back(V.basis[k]);
    std::int64_t qdim = (std::int64_t)q.section.size();
    // Eliminate [W | 0] and [s_t | e_t]; reducing [e_i | 0] then leaves
    // -coords(e_i) in the right block.
    Echelon e(V.field, V.ambient + qdim);
    for (const auto& w : W.basis)
        e.add(widen(w, SparseVector(qdim), V.ambient, qdim));
    for (std::int64_t t = 0; t < qdim; ++t)
        e.add(widen(q.section[t], SparseVector::unit(qdim, t, V.field),
                    V.ambient, qdim));
    q.projection = LinearMap(V.ambient, qdim, V.field);
    for (std::int64_t i = 0; i < V.ambient; ++i) {
        SparseVector probe = widen(SparseVector::unit(V.ambient, i, V.field),
                                   SparseVector(qdim), V.ambient, qdim);
        auto [l, r] = split(e.reduce(std::move(probe)), V.ambient, qdim);
        q.projection.columns[i] =
            r.scaled(-Scalar::one(V.field));
    }
    return q;
}

LinearMap inverse(const LinearMap& f) {
    if (f.domain != f.codomain)
        throw dimension_error("inverse of a non-square map");
    std::int64_t n = f.domain;
    // Row i of [A | I]; after canonical RREF the right block holds A^{-1}.
    std::vector<SparseVector> arows(n, SparseVector(n));
    for (std::int64_t j = 0; j < n; ++j)
        for (const auto& [i, c] : f.columns[j].entries)
            arows[i].entries.emplace_back(j, c);
    Echelon e(f.field, 2 * n);
    for (std::int64_t i = 0; i < n; ++i)
        e.add(widen(arows[i], SparseVector::unit(n, i, f.field), n, n));
    // Singular input shows up as a pivot escaping into the identity block.
    for (std::int64_t k = 0; k < n; ++k)
        if (e.pivots()[k] != k) throw axiom_error("matrix is singular");
    LinearMap inv(n, n, f.field);
    for (std::int64_t k = 0; k < n; ++k) {
        auto [l, r] = split(e.rows()[k], n, n);
        // Canonical RREF of an invertible block is the identity, so row k of
        // the right block is row k of the inverse.
        for (const auto& [j, c] : r.entries)
            inv.columns[j].entries.emplace_back(k, c);
    }
    for (auto& col : inv.columns)
        std::sort(col.entries.begin(), col.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return inv;
}

} // namespace crystal
