#pragma once

#include <utility>
#include <vector>

#include "crystal/sparse.hpp"

namespace crystal {

// Subspace of k^ambient in canonical reduced row-echelon form. Canonicity
// makes subspace equality a syntactic basis comparison, which is what every
// filtration stabilization test reduces to.
struct Subspace {
    std::int64_t ambient = 0;
    Field field;
    std::vector<SparseVector> basis;  // RREF rows, pivots strictly increasing
    std::vector<std::int64_t> pivots; // pivot column of each row

    static Subspace zero(std::int64_t ambient, Field f);
    static Subspace full(std::int64_t ambient, Field f);

    std::int64_t dim() const { return (std::int64_t)basis.size(); }
    bool is_zero() const { return basis.empty(); }

    // Residual of v after eliminating all pivot columns.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
};

// Incremental canonical RREF accumulator. Rows stay fully back-reduced and
// sorted by pivot at all times, so the output never depends on insertion
// order. Wide rows (concatenated blocks) implement Zassenhaus-style
// simultaneous computations.
class Echelon {
  public:
    Echelon(Field f, std::int64_t ambient) : field_(f), ambient_(ambient) {}

    // Returns true if the row increased the rank.
    bool add(SparseVector row);
    SparseVector reduce(SparseVector row) const;
    bool contains(const SparseVector& row) const {
        return reduce(row).is_zero();
    }

    std::int64_t rank() const { return (std::int64_t)rows_.size(); }
    const std::vector<SparseVector>& rows() const { return rows_; }
    const std::vector<std::int64_t>& pivots() const { return pivots_; }
    Subspace to_subspace() const;

  private:
    Field field_;
    std::int64_t ambient_;
    std::vector<SparseVector> rows_;
    std::vector<std::int64_t> pivots_;
};

Subspace rref(Field f, std::int64_t ambient,
              const std::vector<SparseVector>& rows);

Subspace image(const LinearMap& f);
Subspace kernel(const LinearMap& f);

// (U + W, U ∩ W) from a single wide elimination.
std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& U,
                                                const Subspace& W);

// {v : f(v) ∈ W}.
Subspace preimage(const LinearMap& f, const Subspace& W);

// Coset representatives of V/W together with the projection onto quotient
// coordinates; projection ∘ section = id and the projection kills W.
struct QuotientData {
    Subspace space; // V
    Subspace sub;   // W
    std::vector<SparseVector> section; // dim(V) - dim(W) representatives
    LinearMap projection;              // ambient -> quotient dim
};

QuotientData quotient_data(const Subspace& V, const Subspace& W);

// Inverse of a square invertible map; throws axiom_error if singular.
LinearMap inverse(const LinearMap& f);

} // namespace crystal
