#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crystal/subspace.hpp"

namespace th {

using namespace crystal;

inline SparseVector vec(Field f, const std::vector<long long>& dense) {
    SparseVector v((std::int64_t)dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i)
        v.push((std::int64_t)i, Scalar(f, dense[i]));
    return v;
}

inline Scalar sc(Field f, long long n, long long d = 1) {
    return Scalar(f, n, d);
}

// Deterministic random vector with small integer entries.
inline SparseVector random_vec(Field f, std::int64_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(-4, 4);
    SparseVector v(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        Scalar c(f, d(rng));
        if (!c.is_zero()) v.entries.emplace_back(i, c);
    }
    return v;
}

inline Subspace random_subspace(Field f, std::int64_t dim, int rows,
                                std::mt19937_64& rng) {
    std::vector<SparseVector> rs;
    for (int i = 0; i < rows; ++i) rs.push_back(random_vec(f, dim, rng));
    return rref(f, dim, rs);
}

} // namespace th
