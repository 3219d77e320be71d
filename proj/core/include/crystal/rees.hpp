#pragma once

#include <optional>

#include "crystal/graded.hpp"

namespace crystal {

// k[t]-submodule of base[t, t⁻¹] described by its Laurent layers: an element
// Σ t^z x_z belongs to the module iff x_z ∈ V_z for every z. Layers increase
// with z (t-multiplication stability) and are constant outside the stored
// window, equal to the declared stable subspaces.
struct LaurentModule {
    HopfAlgebra base;
    std::int64_t zmin = 0, zmax = 0;
    std::vector<Subspace> layers; // V_z for z = zmin..zmax
    Subspace low_stable;          // V_z for z < zmin
    Subspace high_stable;         // V_z for z > zmax

    const Subspace& at(std::int64_t z) const;
    std::vector<std::int64_t> layer_dims() const;
};

// Degree-wise equality of two Laurent modules over the same base dimension.
bool layers_equal(const LaurentModule& A, const LaurentModule& B);

// j_type: layers reach the full base at high degrees (Rees module of a
// decreasing chain). d_type: layers vanish below degree 0 (increasing chain).
enum class ReesShape { j_type, d_type };
enum class ReesOrigin { filtration, prime_functor, vee_functor };

// Laurent module closed under the structure maps of the base, layer-wise:
// m(V_u ⊗ V_v) ⊆ V_{u+v} and Δ(V_z) ⊆ Σ_{u+v=z} V_u ⊗ V_v.
struct ReesBialgebra {
    LaurentModule module;
    ReesShape shape = ReesShape::j_type;
    ReesOrigin origin = ReesOrigin::filtration;
    bool closed_under_product = false;
    bool closed_under_coproduct = false;
    bool stabilized = true; // prime functor: n_max and n_max - 1 agree
};

// Rees module of a stabilizing filtration. Decreasing chains sit at degrees
// z ≤ 0 (V_{-n} = F_n, V_z = F_0 above), increasing chains at z ≥ 0
// (V_n = F_n, V_z = 0 below). Closure is certified; axiom_error on failure.
ReesBialgebra rees_of_filtration(const HopfAlgebra& H, const Filtration& F);

// Fiber at t = 1: the union of all layers as a sub-bialgebra of the base.
HopfAlgebra fiber_t1(const ReesBialgebra& M);

// Fiber at t = 0: the associated graded ⊕_z V_z/V_{z-1} of the layer chain,
// stored with degree n = -z for j_type and n = z for d_type modules.
GradedBialgebraData fiber_t0(const ReesBialgebra& M);

// Σ_{n≥0} t^{-n} (J')ⁿ where J' = Ker(ε) cut layer-wise out of M. Powers
// accumulate degree-wise until both the window and the layers stabilize.
// window_cap bounds the window width (0 = 4x the input window); exceeding it
// raises resource_error. Output closure is re-certified.
ReesBialgebra drinfeld_vee(const ReesBialgebra& M, std::int64_t window_cap = 0);

// { x ∈ V_z : δ_n(x) ∈ Σ_{z₁+..+z_n = z-n} V_{z₁} ⊗ .. ⊗ V_{z_n} for all
// 2 ≤ n ≤ n_max }, evaluated per Laurent degree through weight-budgeted
// convolution functionals. Requires a j_type module whose degree-0 layer is
// the whole base and whose degree -1 layer contains Ker(ε). n_max = 0 picks
// the default 2·(chain depth)+2; the stabilized flag records whether n_max
// and n_max - 1 give the same layers. window_cap bounds the layer search
// depth (0 = 4x the chain depth).
ReesBialgebra drinfeld_prime(const ReesBialgebra& M, int n_max = 0,
                             std::int64_t window_cap = 0);

struct SemiclassicalLimit {
    GradedBialgebraData graded;
    std::optional<PoissonStructure> poisson;     // prime outputs
    std::optional<CoPoissonStructure> copoisson; // vee outputs
};

// t = 0 fiber of a Drinfeld functor image together with its induced
// structure. Prime outputs get the degree-wise commutator bracket, with
// nilpotency order p of augmentation-ideal elements verified in char p; vee
// outputs are checked cocommutative and generated by their primitives, and
// carry the induced cobracket.
SemiclassicalLimit semiclassical_limit(const ReesBialgebra& M);

} // namespace crystal
