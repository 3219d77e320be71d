#include "crystal/pairing.hpp"

#include <string>

#include "crystal/errors.hpp"
#include "crystal/filtration.hpp"

namespace crystal {

namespace {

void check_matrix(const PairingData& P) {
    if (P.left.field != P.right.field)
        throw format_error("pairing sides live over different fields");
    if ((std::int64_t)P.matrix.size() != P.left.dim)
        throw dimension_error("pairing matrix has " +
                              std::to_string(P.matrix.size()) +
                              " rows for a left basis of size " +
                              std::to_string(P.left.dim));
    for (const auto& row : P.matrix)
        if ((std::int64_t)row.size() != P.right.dim)
            throw dimension_error("pairing matrix row has " +
                                  std::to_string(row.size()) +
                                  " entries for a right basis of size " +
                                  std::to_string(P.right.dim));
}

// <e_i, y> as a function of the right coordinate vector.
Scalar pair_basis_left(const PairingData& P, std::int64_t i,
                       const SparseVector& y) {
    Scalar s = Scalar::zero(P.left.field);
    for (const auto& [j, c] : y.entries) s = s + P.matrix[i][j] * c;
    return s;
}

// <x1 (x) x2, w> for w in the right tensor square.
Scalar pair_tensor(const PairingData& P, const SparseVector& x1,
                   const SparseVector& x2, const SparseVector& w) {
    Field f = P.left.field;
    std::int64_t d = P.right.dim;
    Scalar s = Scalar::zero(f);
    for (const auto& [idx, c] : w.entries) {
        std::int64_t a = idx / d, b = idx % d;
        Scalar t = Scalar::zero(f);
        for (const auto& [i, xi] : x1.entries)
            t = t + xi * P.matrix[i][a];
        Scalar u = Scalar::zero(f);
        for (const auto& [i, xi] : x2.entries)
            u = u + xi * P.matrix[i][b];
        s = s + c * t * u;
    }
    return s;
}

// <w, y1 (x) y2> for w in the left tensor square.
Scalar pair_tensor_left(const PairingData& P, const SparseVector& w,
                        const SparseVector& y1, const SparseVector& y2) {
    Field f = P.left.field;
    std::int64_t d = P.left.dim;
    Scalar s = Scalar::zero(f);
    for (const auto& [idx, c] : w.entries) {
        std::int64_t a = idx / d, b = idx % d;
        s = s + c * pair_basis_left(P, a, y1) * pair_basis_left(P, b, y2);
    }
    return s;
}

Subspace kernel_of_rows(const PairingData& P, bool transpose) {
    Field f = P.left.field;
    std::int64_t dom = transpose ? P.right.dim : P.left.dim;
    std::int64_t cod = transpose ? P.left.dim : P.right.dim;
    LinearMap m(dom, cod, f);
    for (std::int64_t i = 0; i < dom; ++i) {
        SparseVector col(cod);
        for (std::int64_t j = 0; j < cod; ++j) {
            const Scalar& c = transpose ? P.matrix[j][i] : P.matrix[i][j];
            if (!c.is_zero()) col.push(j, c);
        }
        m.columns[(std::size_t)i] = std::move(col);
    }
    return kernel(m);
}

} // namespace

PairingData delta_pairing(const HopfAlgebra& left, const HopfAlgebra& right) {
    if (left.dim != right.dim)
        throw dimension_error("delta pairing needs equal dimensions, got " +
                              std::to_string(left.dim) + " and " +
                              std::to_string(right.dim));
    PairingData P{left, right, {}};
    P.matrix.assign((std::size_t)left.dim,
                    std::vector<Scalar>((std::size_t)right.dim,
                                        Scalar::zero(left.field)));
    for (std::int64_t i = 0; i < left.dim; ++i)
        P.matrix[(std::size_t)i][(std::size_t)i] = Scalar::one(left.field);
    return P;
}

Scalar pair_values(const PairingData& P, const SparseVector& x,
                   const SparseVector& y) {
    Scalar s = Scalar::zero(P.left.field);
    for (const auto& [i, xi] : x.entries)
        s = s + xi * pair_basis_left(P, i, y);
    return s;
}

PairingReport validate_pairing(const PairingData& P) {
    check_matrix(P);
    const HopfAlgebra& A = P.left;
    const HopfAlgebra& C = P.right;
    Field f = A.field;
    PairingReport rep;

    bool augmented = true;
    for (std::int64_t j = 0; j < C.dim && augmented; ++j) {
        SparseVector ej = SparseVector::unit(C.dim, j, f);
        if (pair_values(P, A.unit, ej) != C.counit_of(ej)) {
            rep.failures.push_back("left unit law fails against " +
                                   C.label(j));
            augmented = false;
        }
    }
    for (std::int64_t i = 0; i < A.dim && augmented; ++i) {
        SparseVector ei = SparseVector::unit(A.dim, i, f);
        if (pair_values(P, ei, C.unit) != A.counit_of(ei)) {
            rep.failures.push_back("right unit law fails against " +
                                   A.label(i));
            augmented = false;
        }
    }
    for (std::int64_t i1 = 0; i1 < A.dim && augmented; ++i1)
        for (std::int64_t i2 = 0; i2 < A.dim && augmented; ++i2)
            for (std::int64_t j = 0; j < C.dim && augmented; ++j) {
                SparseVector e1 = SparseVector::unit(A.dim, i1, f);
                SparseVector e2 = SparseVector::unit(A.dim, i2, f);
                Scalar lhs = pair_values(P, A.multiply(e1, e2),
                                         SparseVector::unit(C.dim, j, f));
                Scalar rhs = pair_tensor(P, e1, e2, C.comult[(std::size_t)j]);
                if (lhs != rhs) {
                    rep.failures.push_back(
                        "product law fails at " + A.label(i1) + "," +
                        A.label(i2) + " against " + C.label(j));
                    augmented = false;
                }
            }

    bool bialgebra = augmented;
    for (std::int64_t i = 0; i < A.dim && bialgebra; ++i)
        for (std::int64_t j1 = 0; j1 < C.dim && bialgebra; ++j1)
            for (std::int64_t j2 = 0; j2 < C.dim && bialgebra; ++j2) {
                SparseVector e1 = SparseVector::unit(C.dim, j1, f);
                SparseVector e2 = SparseVector::unit(C.dim, j2, f);
                Scalar lhs = pair_values(P, SparseVector::unit(A.dim, i, f),
                                         C.multiply(e1, e2));
                Scalar rhs = pair_tensor_left(P, A.comult[(std::size_t)i],
                                              e1, e2);
                if (lhs != rhs) {
                    rep.failures.push_back(
                        "coproduct law fails at " + A.label(i) + " against " +
                        C.label(j1) + "," + C.label(j2));
                    bialgebra = false;
                }
            }

    bool hopf = bialgebra && A.has_antipode() && C.has_antipode();
    for (std::int64_t i = 0; i < A.dim && hopf; ++i)
        for (std::int64_t j = 0; j < C.dim && hopf; ++j) {
            SparseVector ei = SparseVector::unit(A.dim, i, f);
            SparseVector ej = SparseVector::unit(C.dim, j, f);
            if (pair_values(P, A.apply_antipode(ei), ej) !=
                pair_values(P, ei, C.apply_antipode(ej))) {
                rep.failures.push_back("antipode law fails at " + A.label(i) +
                                       " against " + C.label(j));
                hopf = false;
            }
        }

    rep.level = hopf        ? PairingLevel::hopf
                : bialgebra ? PairingLevel::bialgebra
                : augmented ? PairingLevel::augmented
                            : PairingLevel::none;
    rep.left_kernel = kernel_of_rows(P, false);
    rep.right_kernel = kernel_of_rows(P, true);
    rep.perfect_left = rep.left_kernel.is_zero();
    rep.perfect_right = rep.right_kernel.is_zero();
    return rep;
}

Subspace orthogonal(const PairingData& P, const Subspace& S,
                    PairingSide side) {
    check_matrix(P);
    Field f = P.left.field;
    std::int64_t here = side == PairingSide::left ? P.left.dim : P.right.dim;
    std::int64_t there = side == PairingSide::left ? P.right.dim : P.left.dim;
    if (S.ambient != here)
        throw dimension_error("orthogonal of an ambient-" +
                              std::to_string(S.ambient) +
                              " subspace on a side of dimension " +
                              std::to_string(here));
    std::int64_t rows = (std::int64_t)S.basis.size();
    LinearMap constraints(there, rows, f);
    for (std::int64_t j = 0; j < there; ++j) {
        SparseVector col(rows);
        for (std::int64_t r = 0; r < rows; ++r) {
            Scalar c = Scalar::zero(f);
            for (const auto& [i, si] : S.basis[(std::size_t)r].entries)
                c = c + si * (side == PairingSide::left ? P.matrix[i][j]
                                                        : P.matrix[j][i]);
            if (!c.is_zero()) col.push(r, c);
        }
        constraints.columns[(std::size_t)j] = std::move(col);
    }
    return kernel(constraints);
}

OrthogonalityReport orthogonality_identity(const PairingData& P) {
    PairingReport rep = validate_pairing(P);
    if (rep.level == PairingLevel::none)
        throw axiom_error("orthogonality needs at least an augmented pairing" +
                          (rep.failures.empty() ? std::string()
                                                : ": " + rep.failures.front()));

    Filtration J = jadic_filtration(P.left);
    Filtration D = dee_filtration(P.right);
    OrthogonalityReport out;
    out.depth = std::max(J.stable_index, D.stable_index) + 1;
    out.perfect = rep.perfect();
    for (std::int64_t n = 0; n <= out.depth; ++n) {
        const Subspace& dn = D.at(n);
        const Subspace& jn1 = J.at(n + 1);
        out.d_dims.push_back(dn.dim());
        out.j_power_dims.push_back(jn1.dim());
        if (!(orthogonal(P, jn1, PairingSide::left) == dn))
            throw theorem_error(
                "coradical layer " + std::to_string(n) +
                " differs from the annihilator of the augmentation power");
        Subspace dperp = orthogonal(P, dn, PairingSide::right);
        if (!dperp.contains(jn1))
            throw theorem_error("augmentation power " + std::to_string(n + 1) +
                                " escapes the annihilator of its coradical "
                                "layer");
        if (out.perfect && !(dperp == jn1))
            throw theorem_error(
                "annihilator of coradical layer " + std::to_string(n) +
                " exceeds the matching augmentation power");
    }
    out.polar_equality = out.perfect;
    return out;
}

GradedPairingReport induced_graded_pairing(const PairingData& P) {
    PairingReport rep = validate_pairing(P);
    if (rep.level == PairingLevel::none)
        throw axiom_error("graded pairing needs at least an augmented pairing" +
                          (rep.failures.empty() ? std::string()
                                                : ": " + rep.failures.front()));
    Field f = P.left.field;
    Filtration J = jadic_filtration(P.left);
    Filtration D = dee_filtration(P.right);
    GradedBialgebraData GJ = graded_from_filtration(P.left, J);
    GradedBialgebraData GD = graded_from_filtration(P.right, D);

    GradedPairingReport out;
    std::size_t degs = std::max(GJ.components.size(), GD.components.size());
    out.right_perfect_all = true;
    out.perfect_all = true;
    for (std::size_t n = 0; n < degs; ++n) {
        const std::vector<SparseVector>* lsec =
            n < GJ.components.size() ? &GJ.components[n].section.columns
                                     : nullptr;
        const std::vector<SparseVector>* rsec =
            n < GD.components.size() ? &GD.components[n].section.columns
                                     : nullptr;
        std::int64_t ld = lsec ? (std::int64_t)lsec->size() : 0;
        std::int64_t rd = rsec ? (std::int64_t)rsec->size() : 0;
        std::vector<std::vector<Scalar>> m(
            (std::size_t)ld, std::vector<Scalar>((std::size_t)rd,
                                                 Scalar::zero(f)));
        Echelon rows(f, rd);
        for (std::int64_t r = 0; r < ld; ++r) {
            SparseVector row(rd);
            for (std::int64_t c = 0; c < rd; ++c) {
                Scalar v = pair_values(P, (*lsec)[(std::size_t)r],
                                       (*rsec)[(std::size_t)c]);
                m[(std::size_t)r][(std::size_t)c] = v;
                if (!v.is_zero()) row.push(c, v);
            }
            rows.add(row);
        }
        std::int64_t rank = rows.rank();
        out.left_dims.push_back(ld);
        out.right_dims.push_back(rd);
        out.ranks.push_back(rank);
        out.matrices.push_back(std::move(m));
        if (rank != rd) out.right_perfect_all = false;
        if (rank != rd || rank != ld) out.perfect_all = false;
    }

    if (rep.perfect()) {
        if (!out.perfect_all)
            throw theorem_error(
                "graded pairing of a perfect pairing degenerates in some "
                "degree");
        ReesBialgebra RJ = rees_of_filtration(P.left, J);
        ReesBialgebra RD = rees_of_filtration(P.right, D);
        const LaurentModule& V = RJ.module;
        const LaurentModule& W = RD.module;
        std::int64_t lo = std::min(V.zmin, -W.zmax - 1) - 1;
        std::int64_t hi = std::max(V.zmax, -W.zmin - 1) + 1;
        for (std::int64_t u = lo; u <= hi; ++u) {
            if (!(V.at(u) ==
                  orthogonal(P, W.at(-u - 1), PairingSide::right)))
                throw theorem_error(
                    "Rees layer at degree " + std::to_string(u) +
                    " is not the annihilator of the complementary layer");
            if (!(W.at(u) ==
                  orthogonal(P, V.at(-u - 1), PairingSide::left)))
                throw theorem_error(
                    "dual Rees layer at degree " + std::to_string(u) +
                    " is not the annihilator of the complementary layer");
        }
        out.rees_identity = true;
    }
    return out;
}

} // namespace crystal
