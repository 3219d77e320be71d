#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/subspace.hpp"

namespace crystal {

// d^n with an overflow guard; throws resource_error if the index range of a
// tensor power cannot be addressed.
std::int64_t tensor_pow(std::int64_t d, int n);

// Mixed-radix codec for tensor indices: (i_1, ..., i_n) -> sum i_k d^{n-k}.
std::int64_t tensor_index(std::int64_t d, const std::vector<std::int64_t>& digits);
std::vector<std::int64_t> tensor_digits(std::int64_t d, int arity,
                                        std::int64_t index);

// Element of H^{⊗arity} for dim(H) = base_dim; arity 0 is a scalar.
struct TensorElement {
    std::int64_t base_dim = 0;
    int arity = 0;
    SparseVector coeffs;

    TensorElement() = default;
    TensorElement(std::int64_t d, int n)
        : base_dim(d), arity(n), coeffs(tensor_pow(d, n)) {}

    static TensorElement scalar(std::int64_t d, const Scalar& c);
    static TensorElement from_vector(const SparseVector& v);

    bool operator==(const TensorElement& o) const {
        return base_dim == o.base_dim && arity == o.arity && coeffs == o.coeffs;
    }
};

TensorElement outer(const TensorElement& a, const TensorElement& b);
TensorElement permute_slots(const TensorElement& t,
                            const std::vector<int>& perm);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness; // offending basis tuple on failure
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool algebra_ok = false;
    bool coalgebra_ok = false;
    bool bialgebra_ok = false;
    bool antipode_ok = false;   // law holds for the supplied antipode
    bool has_antipode = false;  // recomputed: present and valid
    bool commutative = false;
    bool cocommutative = false;
    bool all_pass() const;
};

// Finite-dimensional (bi/Hopf) algebra as sparse structure constants.
struct HopfAlgebra {
    Field field;
    std::int64_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVector>> mult; // mult[i][j] in k^d
    SparseVector unit;                           // coordinates of 1
    std::vector<SparseVector> comult;            // Δ(e_i) in k^{d²}
    SparseVector counit;                         // ε as a covector
    std::optional<LinearMap> antipode;
    bool is_bialgebra = true;

    bool has_antipode() const { return antipode.has_value(); }
    std::string label(std::int64_t i) const;

    SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
    SparseVector comult_of(const SparseVector& x) const; // ambient d²
    Scalar counit_of(const SparseVector& x) const;
    SparseVector apply_antipode(const SparseVector& x) const;
    SparseVector power(const SparseVector& x, std::uint64_t e) const;

    LinearMap comult_map() const;            // d -> d²
    LinearMap primitive_defect_map() const;  // x -> Δx - x⊗1 - 1⊗x
};

// Structural well-formedness (index ranges, tensor sizes); throws
// format_error on violation. Called by validate() before any axiom check.
void check_shape(const HopfAlgebra& H);

ValidationReport validate(const HopfAlgebra& H);

inline constexpr std::int64_t default_tensor_budget = 1'000'000;

// Δ^n with Δ⁰ = ε and Δ¹ = id.
TensorElement iterated_coproduct(const HopfAlgebra& H, const SparseVector& x,
                                 int n,
                                 std::int64_t budget = default_tensor_budget);

// δ_n = (id - u∘ε)^{⊗n} ∘ Δ^n; δ₀ = ε.
TensorElement delta_n(const HopfAlgebra& H, const SparseVector& x, int n,
                      std::int64_t budget = default_tensor_budget);

// δ_Φ for Φ ⊆ {1..n}: δ_{|Φ|} embedded with 1's in the slots outside Φ.
TensorElement delta_phi(const HopfAlgebra& H, const SparseVector& x,
                        const std::vector<int>& phi, int n,
                        std::int64_t budget = default_tensor_budget);

// Slot-wise product in H^{⊗n}.
TensorElement multiply_tensor(const HopfAlgebra& H, const TensorElement& a,
                              const TensorElement& b);

TensorElement apply_linear_to_slot(const TensorElement& t, int slot,
                                   const LinearMap& f);
TensorElement apply_comult_to_slot(const HopfAlgebra& H,
                                   const TensorElement& t, int slot,
                                   std::int64_t budget = default_tensor_budget);
TensorElement contract_counit_slot(const HopfAlgebra& H,
                                   const TensorElement& t, int slot);

// {x : Δ(x) = x⊗1 + 1⊗x}.
Subspace primitives(const HopfAlgebra& H);

// Δ(x) = x⊗x and ε(x) = 1.
bool is_group_like(const HopfAlgebra& H, const SparseVector& x);

// The unit of H^{⊗n}.
TensorElement unit_tensor(const HopfAlgebra& H, int n);

// (id^{⊗s} ⊗ δ_ℓ ⊗ id^{⊗(n-1-s)}) ∘ δ_n(x) == δ_{n+ℓ-1}(x) for 0 ≤ s ≤ n-1.
bool delta_coassociativity(const HopfAlgebra& H, const SparseVector& x, int n,
                           int l, int s,
                           std::int64_t budget = default_tensor_budget);

// δ_n(ab) == Σ_{Λ∪Y={1..n}} δ_Λ(a)·δ_Y(b) over slot subsets.
bool delta_product_expansion(const HopfAlgebra& H, const SparseVector& a,
                             const SparseVector& b, int n,
                             std::int64_t budget = default_tensor_budget);

} // namespace crystal
