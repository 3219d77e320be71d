#pragma once

#include <vector>

#include "crystal/hopf.hpp"

namespace crystal {

enum class Direction { increasing, decreasing };
enum class FiltrationKind { epsilon_adic, delta_bullet, standard, custom };

// Stabilizing chain of subspaces of k^d, indexed from 0. stable_index is the
// first N with chain[N] == chain[N+1]; stabilization is re-verified by one
// extra recomputation at construction time by the producing operations.
struct Filtration {
    Direction direction = Direction::decreasing;
    FiltrationKind kind = FiltrationKind::custom;
    std::vector<Subspace> chain;
    std::int64_t stable_index = 0;

    // Clamped access: indices past the stored chain return the stable term.
    const Subspace& at(std::int64_t n) const;
    std::vector<std::int64_t> dims() const;
};

// Ker(ε) as a subspace of k^d.
Subspace augmentation_ideal(const HopfAlgebra& H);

// span{ m(u ⊗ w) : u ∈ U, w ∈ W } from basis products.
Subspace span_products(const HopfAlgebra& H, const Subspace& U,
                       const Subspace& W);

// U ⊗ k^d and k^d ⊗ U inside k^{d²}, and U ⊗ W.
Subspace tensor_subspace(const Subspace& U, const Subspace& W);

// Decreasing chain J⁰ ⊇ J¹ ⊇ ..., Jⁿ⁺¹ = span m(Jⁿ ⊗ J); the coproduct
// compatibility Δ(Jⁿ) ⊆ Σ_{r+s=n} J^r ⊗ J^s is verified for every term.
Filtration jadic_filtration(const HopfAlgebra& H);

// Increasing chain D₀ = k·1 ⊆ D₁ ⊆ ..., D_n = Δ⁻¹(H ⊗ D_{n-1} + D₀ ⊗ H),
// computed entirely in dimension d².
Filtration dee_filtration(const HopfAlgebra& H);

struct QuotientHopf {
    HopfAlgebra parent;
    Subspace ideal;
    HopfAlgebra quotient;
    LinearMap projection; // d -> q
    LinearMap section;    // q -> d
};

// Quotient by a (bi/Hopf) ideal; closure conditions are verified and a
// theorem_error is thrown when they fail.
QuotientHopf quotient_hopf(const HopfAlgebra& H, const Subspace& ideal);

// H / J^∞: the separated quotient. Recomputing the J-chain on the quotient
// reaches 0.
QuotientHopf h_vee(const HopfAlgebra& H);

struct SubHopf {
    HopfAlgebra parent;
    Subspace carrier;
    HopfAlgebra sub;
    LinearMap inclusion; // q -> d
};

// Sub-bialgebra on a multiplicatively and comultiplicatively closed carrier.
SubHopf sub_hopf(const HopfAlgebra& H, const Subspace& carrier);

// The connected component of 1: sub-bialgebra on the stable D-term, with a
// connectedness certificate (its own D-chain exhausts it).
SubHopf h_prime(const HopfAlgebra& H);

struct CrosscheckReport {
    std::vector<std::int64_t> dims; // dim D_n for n = 0..n_max
    bool all_match = true;
};

// Recomputes each D_n directly as Ker(δ_{n+1}) and asserts equality with the
// wedge recursion; throws theorem_error on mismatch and resource_error when
// d^{n+1} exceeds the budget.
CrosscheckReport delta_kernel_crosscheck(
    const HopfAlgebra& H, int n_max,
    std::int64_t budget = default_tensor_budget);

// Coordinates of x in the RREF basis of U (x must lie in U).
SparseVector coords_in(const Subspace& U, const SparseVector& x);

} // namespace crystal
