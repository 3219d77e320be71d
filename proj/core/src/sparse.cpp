#include "crystal/sparse.hpp"

#include "crystal/errors.hpp"

namespace crystal {

SparseVector SparseVector::unit(std::int64_t dim, std::int64_t index, Field f) {
    SparseVector v(dim);
    v.push(index, Scalar::one(f));
    return v;
}

Scalar SparseVector::coeff(std::int64_t index, Field f) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), index,
        [](const auto& e, std::int64_t i) { return e.first < i; });
    if (it != entries.end() && it->first == index) return it->second;
    return Scalar::zero(f);
}

void SparseVector::push(std::int64_t index, Scalar c) {
    if (index < 0 || index >= ambient)
        throw dimension_error("sparse index out of range");
    if (!entries.empty() && entries.back().first >= index)
        throw format_error("sparse indices must strictly increase");
    if (!c.is_zero()) entries.emplace_back(index, std::move(c));
}

SparseVector SparseVector::scaled(const Scalar& c) const {
    SparseVector r(ambient);
    if (c.is_zero()) return r;
    r.entries.reserve(entries.size());
    for (const auto& [i, v] : entries) r.entries.emplace_back(i, v * c);
    return r;
}

bool SparseVector::operator==(const SparseVector& o) const {
    return ambient == o.ambient && entries == o.entries;
}

void axpy(SparseVector& r, const Scalar& c, const SparseVector& v) {
    if (c.is_zero() || v.entries.empty()) return;
    if (r.ambient != v.ambient) throw dimension_error("axpy ambient mismatch");
    std::vector<std::pair<std::int64_t, Scalar>> merged;
    merged.reserve(r.entries.size() + v.entries.size());
    std::size_t i = 0, j = 0;
    while (i < r.entries.size() || j < v.entries.size()) {
        if (j == v.entries.size() ||
            (i < r.entries.size() && r.entries[i].first < v.entries[j].first)) {
            merged.push_back(r.entries[i++]);
        } else if (i == r.entries.size() ||
                   r.entries[i].first > v.entries[j].first) {
            merged.emplace_back(v.entries[j].first, c * v.entries[j].second);
            ++j;
        } else {
            Scalar s = r.entries[i].second + c * v.entries[j].second;
            if (!s.is_zero()) merged.emplace_back(r.entries[i].first, s);
            ++i;
            ++j;
        }
    }
    // Drop zeros that may have been introduced by the scaled branch.
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    r.entries = std::move(merged);
}

SparseVector add(const SparseVector& a, const SparseVector& b) {
    SparseVector r = a;
    if (!b.entries.empty())
        axpy(r, Scalar::one(b.entries.front().second.field()), b);
    return r;
}

LinearMap LinearMap::identity(std::int64_t dim, Field f) {
    LinearMap m(dim, dim, f);
    for (std::int64_t i = 0; i < dim; ++i)
        m.columns[i] = SparseVector::unit(dim, i, f);
    return m;
}

SparseVector LinearMap::apply(const SparseVector& v) const {
    if (v.ambient != domain) throw dimension_error("linear map domain mismatch");
    SparseVector r(codomain);
    for (const auto& [i, c] : v.entries) axpy(r, c, columns[i]);
    return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.codomain != domain)
        throw dimension_error("linear map composition mismatch");
    LinearMap r(inner.domain, codomain, field);
    for (std::int64_t j = 0; j < inner.domain; ++j)
        r.columns[j] = apply(inner.columns[j]);
    return r;
}

} // namespace crystal
