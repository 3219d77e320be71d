#pragma once

#include <optional>

#include "crystal/filtration.hpp"

namespace crystal {

enum class GradedProvenance { from_J, from_D };

struct GradedComponent {
    std::int64_t degree = 0;
    std::int64_t dim = 0;
    LinearMap section; // component coordinates -> parent
};

// Associated graded bialgebra of a stabilizing filtration. Basis vectors are
// the per-degree section representatives, concatenated degree by degree;
// degree_of records the block of each basis vector.
struct GradedBialgebraData {
    std::vector<GradedComponent> components;
    HopfAlgebra total;
    std::vector<std::int64_t> degree_of;
    GradedProvenance provenance = GradedProvenance::from_J;
    HopfAlgebra parent;
    Filtration parent_filtration;

    std::int64_t dim() const { return total.dim; }
};

// Degree -1 bracket on a graded commutative algebra.
struct PoissonStructure {
    std::vector<std::vector<SparseVector>> bracket; // bracket[i][j] in k^dim
};

// Degree +1 cobracket on a graded cocommutative coalgebra.
struct CoPoissonStructure {
    LinearMap cobracket; // dim -> dim²
};

struct RestrictedLieBialgebra {
    Field field;
    std::int64_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<SparseVector>> bracket;
    std::optional<std::vector<SparseVector>> p_operation; // absent in char 0
    std::vector<SparseVector> cobracket; // values in k^{dim²}
};

struct PresentationReport {
    std::vector<std::int64_t> generator_indices; // graded basis indices
    std::vector<std::string> generator_labels;
    std::vector<std::int64_t> generator_degrees;
    std::int64_t total_dim = 0;
    bool relations_verified = false;
};

// Associated graded of a bialgebra filtration (multiplicativity and coproduct
// compatibility are re-verified; axiom_error with a witness on violation).
// Decreasing chains grade by F_n/F_{n+1} up to the stable term, increasing
// chains by F_n/F_{n-1} through it.
GradedBialgebraData graded_from_filtration(const HopfAlgebra& H,
                                           const Filtration& F);

// Bracket from the parent commutator pushed one level deeper into the
// filtration (degree -1 on increasing chains, +1 on decreasing ones).
// Requires a commutative graded; the top-degree part must vanish and the
// Poisson axioms are verified on the graded basis.
PoissonStructure induced_poisson(const GradedBialgebraData& G);

// Cobracket from ∇ = Δ - Δop pushed one level deeper (degree +1 on
// decreasing chains, -1 on increasing ones). Requires a cocommutative
// graded; co-Poisson axioms are verified.
CoPoissonStructure induced_copoisson(const GradedBialgebraData& G);

// Cobracket δ(x̄) = (Δ(x) - Δop(x)) mod lower terms on a from_J graded;
// requires the graded to be cocommutative (theorem_error otherwise).
CoPoissonStructure copoisson_on_graded_J(const GradedBialgebraData& G);

// Bracket {x̄, ȳ} = (xy - yx) mod lower terms on a from_D graded; requires
// the graded to be commutative (theorem_error otherwise).
PoissonStructure poisson_on_graded_D(const GradedBialgebraData& G);

// Primitives of a from_J graded with the commutator bracket, p-th power map
// (char p) and the restricted co-Poisson cobracket; certifies that the
// primitives generate the whole graded algebra.
RestrictedLieBialgebra extract_lie(const GradedBialgebraData& G);

// Presents a commutative from_D graded as a truncated polynomial algebra
// k[x_i]/(x_i^p) on homogeneous generators (char p); char 0 admits only the
// trivial presentation at finite dimension.
PresentationReport truncated_presentation(const GradedBialgebraData& G);

} // namespace crystal
