#pragma once

#include "crystal/rees.hpp"

namespace crystal {

// Bilinear form between two bialgebras, stored as a dense matrix of values
// on basis pairs: matrix[i][j] = <e_i, e_j> with rows indexed by the left
// basis and columns by the right basis.
struct PairingData {
    HopfAlgebra left;
    HopfAlgebra right;
    std::vector<std::vector<Scalar>> matrix;
};

// Pairing with <e_i, e_j> = delta_ij; both sides must have equal dimension.
PairingData delta_pairing(const HopfAlgebra& left, const HopfAlgebra& right);

// Value of the form on a pair of coordinate vectors.
Scalar pair_values(const PairingData& P, const SparseVector& x,
                   const SparseVector& y);

// Compatibility ladder. augmented: <x1 x2, y> = <x1 (x) x2, Delta y>,
// <1, y> = eps(y) and <x, 1> = eps(x). bialgebra: additionally the symmetric
// law <x, y1 y2> = <Delta x, y1 (x) y2>. hopf: additionally
// <S(x), y> = <x, S(y)> (both antipodes must be present).
enum class PairingLevel { none, augmented, bialgebra, hopf };
enum class PairingSide { left, right };

struct PairingReport {
    PairingLevel level = PairingLevel::none;
    std::vector<std::string> failures; // one witness per violated law
    Subspace left_kernel;
    Subspace right_kernel;
    bool perfect_left = false;
    bool perfect_right = false;
    bool perfect() const { return perfect_left && perfect_right; }
};

// Checks every law of Definition-style compatibility on basis tuples and
// reports the highest level satisfied, with kernels and perfectness flags.
// Throws dimension_error if the matrix shape does not match the two bases.
PairingReport validate_pairing(const PairingData& P);

// Annihilator of S on the opposite side. side names where S lives.
Subspace orthogonal(const PairingData& P, const Subspace& S, PairingSide side);

struct OrthogonalityReport {
    std::vector<std::int64_t> j_power_dims; // dim J^{n+1} of the left side
    std::vector<std::int64_t> d_dims;       // dim D_n of the right side
    std::int64_t depth = 0;                 // largest n checked
    bool perfect = false;
    bool polar_equality = false; // J^{n+1} = (D_n)^perp, perfect case only
};

// Asserts D_n = (J^{n+1})^perp and J^{n+1} <= (D_n)^perp for every n up to
// stabilization of both chains, with the reverse equality when the pairing
// is perfect. Throws theorem_error naming the offending n on failure and
// axiom_error if the pairing is not at least augmented.
OrthogonalityReport orthogonality_identity(const PairingData& P);

struct GradedPairingReport {
    // One matrix per degree between the J-graded left component and the
    // D-graded right component; absent components give empty matrices.
    std::vector<std::vector<std::vector<Scalar>>> matrices;
    std::vector<std::int64_t> left_dims;
    std::vector<std::int64_t> right_dims;
    std::vector<std::int64_t> ranks;
    bool right_perfect_all = false;
    bool perfect_all = false;
    bool rees_identity = false; // layer-wise mutual annihilators, perfect case
};

// Degree-wise pairing induced on the associated graded objects of the
// J-filtration (left) and D-filtration (right), with ranks per degree. When
// the pairing is perfect, asserts perfectness in every degree and the
// layer-wise mutual-annihilator identity between the two Rees modules:
// V_u = (W_{-u-1})^perp and W_v = (V_{-v-1})^perp.
GradedPairingReport induced_graded_pairing(const PairingData& P);

} // namespace crystal
