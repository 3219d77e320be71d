#pragma once

#include <string>
#include <vector>

#include "crystal/filtration.hpp"
#include "crystal/hopf.hpp"

namespace crystal {

// Finite group as a validated multiplication table.
struct FiniteGroup {
    std::int64_t order = 0;
    std::vector<std::vector<int>> table; // table[a][b] = index of a*b
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;

    int op(int a, int b) const { return table[(std::size_t)a][(std::size_t)b]; }
    int inv(int a) const { return inverse[(std::size_t)a]; }
    int power(int a, std::int64_t e) const;
    int commutator(int a, int b) const; // a b a⁻¹ b⁻¹
};

FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels = {});

// Closure of permutation generators acting on {0..degree-1}; elements are
// sorted lexicographically for deterministic indexing.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int degree, std::int64_t order_cap = 1024);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::int64_t n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
// Π_i Z_{p^{e_i}}.
FiniteGroup product_of_cyclic_p_powers(std::uint64_t p,
                                       const std::vector<int>& exponents);
// Z_p ⋉ Z_{p²} with ν^p = 1, τ^{p²} = 1, ν τ ν⁻¹ = τ^{1+p}.
FiniteGroup semidirect_p(std::uint64_t p);
FiniteGroup dihedral_group(int n);   // order 2n
FiniteGroup symmetric_group(int n);  // n ≤ 4
FiniteGroup quaternion_group();      // Q8

// Associative monoid table with identity (inverses not required).
struct FiniteMonoid {
    std::int64_t order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<std::string> labels;
};
FiniteMonoid monoid_from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {});

enum class SeriesKind { lower_central, p_lower_central, dimension_subgroups };

// Descending chain of normal subgroups, stored from term 1 (= G) on; each
// term is a sorted element-index list. Chain is stored through the first
// repeat; stable_index points at it.
struct SubgroupSeries {
    SeriesKind kind = SeriesKind::lower_central;
    std::vector<std::vector<int>> terms;
    std::int64_t stable_index = 0;

    const std::vector<int>& at(std::int64_t n) const; // 1-based, clamped
};

std::vector<int> subgroup_generated(const FiniteGroup& G,
                                    std::vector<int> generators);
bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup);

SubgroupSeries lower_central_series(const FiniteGroup& G);
SubgroupSeries p_lower_central_series(const FiniteGroup& G, std::uint64_t p);
// {g : g - 1 ∈ Jⁿ} from the J-chain of k[G] over the given field.
SubgroupSeries dimension_subgroups(const FiniteGroup& G, Field field);

// Weighted coset representatives: reps_by_weight[k-1] lists the chosen
// representatives b with d(b) = k, smallest element index first.
struct JenningsNet {
    std::uint64_t p = 2;
    std::vector<std::vector<int>> reps_by_weight;
    std::vector<int> stable_term; // G_∞ as an element list

    std::vector<std::pair<int, int>> flat() const; // (element, weight)
};

JenningsNet jennings_net_and_weights(const FiniteGroup& G, std::uint64_t p);

// Graded restricted Lie ring of the p-series over GF(p): basis indexed by
// the flattened net, bracket from group commutators, p-map from p-th powers.
struct GradedLieRing {
    Field field;
    std::vector<int> basis_elements; // group element index per basis vector
    std::vector<int> weights;
    std::vector<std::vector<SparseVector>> bracket;
    std::vector<SparseVector> p_operation;
};

GradedLieRing p_graded_lie_ring(const FiniteGroup& G, std::uint64_t p);

// Cross-validation of the p-series against the J-chain of k[G] over GF(p).
// Checked claims: the dimension subgroups {g : η_g ∈ Jⁿ} equal the p-lower
// central series; ordered net monomials of weight n span Jⁿ mod Jⁿ⁺¹ with
// the predicted count; the classes η̄_b are primitive in the associated
// graded and realize the bracket/p-power constants of the graded Lie ring;
// J^∞ is the ideal generated by {η_γ : γ ∈ G_∞} and k[G]/J^∞ is the group
// algebra of G/G_∞. Any mismatch throws theorem_error.
struct JenningsHallReport {
    bool series_match = false;
    bool monomial_bases_match = false;
    bool lie_isomorphism = false;
    bool separated_quotient_match = false;
    std::vector<std::int64_t> graded_dims;     // dim Jⁿ/Jⁿ⁺¹, n = 0..
    std::vector<std::int64_t> monomial_counts; // weighted net monomials
};

JenningsHallReport jennings_hall_check(const FiniteGroup& G, std::uint64_t p);

HopfAlgebra build_group_algebra(const FiniteGroup& G, Field field);
HopfAlgebra build_function_algebra(const FiniteGroup& G, Field field);
HopfAlgebra build_monoid_bialgebra(const FiniteMonoid& M, Field field);

// Restricted Lie algebra input data over GF(p); validated at construction.
struct RestrictedLieInput {
    Field field; // char p > 0
    std::int64_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVector>> bracket; // [e_i, e_j] in k^dim
    std::vector<SparseVector> p_operation;          // e_i^{[p]} in k^dim
};

void validate_restricted_lie(const RestrictedLieInput& g);

// u(g) on the ordered-monomial basis with exponents < p (dimension p^dim);
// monomial index is the base-p encoding of the exponent vector.
HopfAlgebra build_restricted_enveloping(const RestrictedLieInput& g,
                                        std::int64_t dim_cap = 3);

} // namespace crystal
