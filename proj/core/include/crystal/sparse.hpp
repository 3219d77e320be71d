#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "crystal/scalar.hpp"

namespace crystal {

// Sparse vector in k^n: strictly increasing indices, no stored zeros.
// Dense fallback is handled by callers through the fill-in heuristic in
// subspace.cpp; the storage format itself is always the sorted pair list.
struct SparseVector {
    std::int64_t ambient = 0;
    std::vector<std::pair<std::int64_t, Scalar>> entries;

    SparseVector() = default;
    explicit SparseVector(std::int64_t dim) : ambient(dim) {}
    static SparseVector unit(std::int64_t dim, std::int64_t index, Field f);

    bool is_zero() const { return entries.empty(); }
    std::int64_t leading_index() const { return entries.front().first; }
    Scalar coeff(std::int64_t index, Field f) const;

    void push(std::int64_t index, Scalar c); // append, index must increase
    SparseVector scaled(const Scalar& c) const;

    bool operator==(const SparseVector& o) const;
};

// r += c * v (sorted merge).
void axpy(SparseVector& r, const Scalar& c, const SparseVector& v);
SparseVector add(const SparseVector& a, const SparseVector& b);

// Sparse column-major linear map k^domain -> k^codomain.
struct LinearMap {
    std::int64_t domain = 0;
    std::int64_t codomain = 0;
    Field field;
    std::vector<SparseVector> columns; // size == domain, ambient == codomain

    LinearMap() = default;
    LinearMap(std::int64_t dom, std::int64_t cod, Field f)
        : domain(dom), codomain(cod), field(f),
          columns(dom, SparseVector(cod)) {}

    static LinearMap identity(std::int64_t dim, Field f);

    SparseVector apply(const SparseVector& v) const;
    LinearMap compose(const LinearMap& inner) const; // this o inner
};

} // namespace crystal
