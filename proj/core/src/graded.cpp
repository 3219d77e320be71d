#include "crystal/graded.hpp"

#include <algorithm>

#include "crystal/errors.hpp"
#include "crystal/groups.hpp"

namespace crystal {

namespace {

// Adapted coordinates: a parent basis made of per-degree section vectors
// (plus a complement outside the graded range), with the change-of-basis map.
struct Adapted {
    LinearMap to_adapted; // parent -> adapted coordinates
    std::vector<SparseVector> lifts;
    std::vector<std::int64_t> degree; // -1 marks the out-of-range block
    std::vector<std::int64_t> graded_index;
    std::int64_t graded_dim = 0;
};

void verify_bialgebra_filtration(const HopfAlgebra& H, const Filtration& F) {
    std::int64_t N = F.stable_index;
    for (std::int64_t a = 0; a <= N; ++a)
        for (std::int64_t b = 0; b <= N; ++b)
            if (!F.at(a + b).contains(span_products(H, F.at(a), F.at(b))))
                throw axiom_error(
                    "filtration is not multiplicative at levels " +
                    std::to_string(a) + "," + std::to_string(b));
    for (std::int64_t n = 0; n <= N + 1; ++n) {
        Subspace target = Subspace::zero(H.dim * H.dim, H.field);
        for (std::int64_t r = 0; r <= n; ++r)
            target = sum_and_intersect(
                         target, tensor_subspace(F.at(r), F.at(n - r)))
                         .first;
        for (const auto& row : F.at(n).basis)
            if (!target.contains(H.comult_of(row)))
                throw axiom_error(
                    "filtration is not compatible with the coproduct at "
                    "level " +
                    std::to_string(n));
    }
}

Adapted build_adapted(const HopfAlgebra& H, const Filtration& F,
                      std::vector<GradedComponent>& comps) {
    Adapted A;
    std::vector<SparseVector> cols;
    std::vector<std::int64_t> degs;
    std::int64_t N = F.stable_index;
    if (F.direction == Direction::decreasing) {
        for (std::int64_t n = 0; n < N; ++n) {
            QuotientData q = quotient_data(F.at(n), F.at(n + 1));
            GradedComponent c;
            c.degree = n;
            c.dim = (std::int64_t)q.section.size();
            c.section = LinearMap(c.dim, H.dim, H.field);
            for (std::size_t t = 0; t < q.section.size(); ++t) {
                c.section.columns[t] = q.section[t];
                cols.push_back(q.section[t]);
                degs.push_back(n);
            }
            comps.push_back(std::move(c));
        }
        for (const auto& row : F.at(N).basis) {
            cols.push_back(row);
            degs.push_back(-1);
        }
    } else {
        for (std::int64_t n = 0; n <= N; ++n) {
            Subspace below = n == 0 ? Subspace::zero(H.dim, H.field)
                                    : F.at(n - 1);
            QuotientData q = quotient_data(F.at(n), below);
            GradedComponent c;
            c.degree = n;
            c.dim = (std::int64_t)q.section.size();
            c.section = LinearMap(c.dim, H.dim, H.field);
            for (std::size_t t = 0; t < q.section.size(); ++t) {
                c.section.columns[t] = q.section[t];
                cols.push_back(q.section[t]);
                degs.push_back(n);
            }
            comps.push_back(std::move(c));
        }
        QuotientData rest = quotient_data(Subspace::full(H.dim, H.field),
                                          F.at(N));
        for (const auto& row : rest.section) {
            cols.push_back(row);
            degs.push_back(-1);
        }
    }
    LinearMap T(H.dim, H.dim, H.field);
    for (std::size_t t = 0; t < cols.size(); ++t) T.columns[t] = cols[t];
    A.to_adapted = inverse(T);
    A.lifts = std::move(cols);
    A.degree = std::move(degs);
    A.graded_index.assign(A.degree.size(), -1);
    for (std::size_t t = 0; t < A.degree.size(); ++t)
        if (A.degree[t] >= 0) A.graded_index[t] = A.graded_dim++;
    return A;
}

// Push a 2-tensor over the parent into graded coordinates, keeping exactly
// the entries of total degree want; entries that undershoot (decreasing) or
// overshoot / leave the range (increasing) violate the grading.
SparseVector project_pair(const Adapted& A, Direction dir, std::int64_t d,
                          std::int64_t m, const SparseVector& adapted_pair,
                          std::int64_t want, const char* what) {
    SparseVector out(m * m);
    std::vector<std::pair<std::int64_t, Scalar>> entries;
    for (const auto& [idx, c] : adapted_pair.entries) {
        std::int64_t a = idx / d, b = idx % d;
        std::int64_t da = A.degree[(std::size_t)a], db = A.degree[(std::size_t)b];
        bool inside = da >= 0 && db >= 0;
        if (dir == Direction::decreasing) {
            if (inside && da + db < want)
                throw axiom_error(std::string(what) +
                                  " drops below its degree");
            if (!inside || da + db != want) continue;
        } else {
            if (!inside || da + db > want)
                throw axiom_error(std::string(what) +
                                  " exceeds its degree");
            if (da + db != want) continue;
        }
        entries.emplace_back(A.graded_index[(std::size_t)a] * m +
                                 A.graded_index[(std::size_t)b],
                             c);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.entries = std::move(entries);
    return out;
}

SparseVector project_single(const Adapted& A, Direction dir, std::int64_t m,
                            const SparseVector& adapted, std::int64_t want,
                            const char* what) {
    SparseVector out(m);
    for (const auto& [a, c] : adapted.entries) {
        std::int64_t da = A.degree[(std::size_t)a];
        if (dir == Direction::decreasing) {
            if (da >= 0 && da < want)
                throw axiom_error(std::string(what) +
                                  " drops below its degree");
            if (da != want) continue;
        } else {
            if (da < 0 || da > want)
                throw axiom_error(std::string(what) +
                                  " exceeds its degree");
            if (da != want) continue;
        }
        out.entries.emplace_back(A.graded_index[(std::size_t)a], c);
    }
    return out;
}

std::int64_t block_offset(const GradedBialgebraData& G, std::int64_t degree) {
    std::int64_t off = 0;
    for (const auto& c : G.components) {
        if (c.degree == degree) return off;
        off += c.dim;
    }
    return -1;
}

} // namespace

GradedBialgebraData graded_from_filtration(const HopfAlgebra& H,
                                           const Filtration& F) {
    verify_bialgebra_filtration(H, F);
    GradedBialgebraData G;
    G.provenance = F.direction == Direction::decreasing
                       ? GradedProvenance::from_J
                       : GradedProvenance::from_D;
    G.parent = H;
    G.parent_filtration = F;
    Adapted A = build_adapted(H, F, G.components);
    std::int64_t d = H.dim, m = A.graded_dim;
    Direction dir = F.direction;
    const char* tag = dir == Direction::decreasing ? "^" : "~";

    HopfAlgebra& T = G.total;
    T.field = H.field;
    T.dim = m;
    G.degree_of.assign((std::size_t)m, 0);
    T.labels.assign((std::size_t)m, "");
    for (std::size_t t = 0; t < A.degree.size(); ++t) {
        if (A.degree[t] < 0) continue;
        std::int64_t g = A.graded_index[t];
        G.degree_of[(std::size_t)g] = A.degree[t];
        T.labels[(std::size_t)g] =
            H.label(A.lifts[t].leading_index()) + tag;
    }

    T.mult.assign((std::size_t)m, std::vector<SparseVector>((std::size_t)m, SparseVector(m)));
    T.comult.assign((std::size_t)m, SparseVector(m * m));
    T.counit = SparseVector(m);
    std::vector<std::int64_t> lift_of((std::size_t)m, -1);
    for (std::size_t t = 0; t < A.degree.size(); ++t)
        if (A.degree[t] >= 0) lift_of[(std::size_t)A.graded_index[t]] = (std::int64_t)t;

    for (std::int64_t i = 0; i < m; ++i) {
        const SparseVector& vi = A.lifts[(std::size_t)lift_of[(std::size_t)i]];
        std::int64_t ni = G.degree_of[(std::size_t)i];
        for (std::int64_t j = 0; j < m; ++j) {
            const SparseVector& vj = A.lifts[(std::size_t)lift_of[(std::size_t)j]];
            SparseVector prod = A.to_adapted.apply(H.multiply(vi, vj));
            T.mult[(std::size_t)i][(std::size_t)j] = project_single(
                A, dir, m, prod, ni + G.degree_of[(std::size_t)j],
                "graded product");
        }
        TensorElement c(d, 2);
        c.coeffs = H.comult_of(vi);
        c = apply_linear_to_slot(c, 0, A.to_adapted);
        c = apply_linear_to_slot(c, 1, A.to_adapted);
        T.comult[(std::size_t)i] =
            project_pair(A, dir, d, m, c.coeffs, ni, "graded coproduct");
        if (ni == 0) {
            Scalar e = H.counit_of(vi);
            if (!e.is_zero()) T.counit.entries.emplace_back(i, e);
        }
    }
    T.unit = project_single(A, dir, m, A.to_adapted.apply(H.unit), 0,
                            "graded unit");
    if (H.has_antipode()) {
        LinearMap S(m, m, H.field);
        for (std::int64_t i = 0; i < m; ++i) {
            SparseVector img = A.to_adapted.apply(H.apply_antipode(
                A.lifts[(std::size_t)lift_of[(std::size_t)i]]));
            S.columns[(std::size_t)i] = project_single(
                A, dir, m, img, G.degree_of[(std::size_t)i],
                "graded antipode");
        }
        T.antipode = std::move(S);
    }
    check_shape(T);
    return G;
}

namespace {

SparseVector swap_pair(std::int64_t m, const SparseVector& v) {
    SparseVector out(m * m);
    std::vector<std::pair<std::int64_t, Scalar>> e;
    for (const auto& [idx, c] : v.entries)
        e.emplace_back((idx % m) * m + idx / m, c);
    std::sort(e.begin(), e.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.entries = std::move(e);
    return out;
}

} // namespace

namespace {

// (u, v) slot digits of a 2-tensor index over base dim.
std::pair<std::int64_t, std::int64_t> split2(std::int64_t dim,
                                             std::int64_t idx) {
    return {idx / dim, idx % dim};
}

SparseVector sorted_entries(std::int64_t ambient,
                            std::vector<std::pair<std::int64_t, Scalar>> e) {
    std::sort(e.begin(), e.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector v(ambient);
    v.entries = std::move(e);
    return v;
}

void require_commutative(const HopfAlgebra& T) {
    for (std::int64_t i = 0; i < T.dim; ++i)
        for (std::int64_t j = 0; j < i; ++j)
            if (!(T.mult[(std::size_t)i][(std::size_t)j] ==
                  T.mult[(std::size_t)j][(std::size_t)i]))
                throw theorem_error("graded is not commutative at " +
                                    T.label(i) + "," + T.label(j));
}

} // namespace

CoPoissonStructure induced_copoisson(const GradedBialgebraData& G) {
    Direction dir = G.parent_filtration.direction;
    const HopfAlgebra& T = G.total;
    const HopfAlgebra& H = G.parent;
    std::int64_t m = T.dim, d = H.dim;
    for (std::int64_t i = 0; i < m; ++i)
        if (!(T.comult[(std::size_t)i] ==
              swap_pair(m, T.comult[(std::size_t)i])))
            throw theorem_error("graded is not cocommutative at " +
                                T.label(i));

    std::vector<GradedComponent> dummy;
    Adapted A = build_adapted(H, G.parent_filtration, dummy);

    CoPoissonStructure P;
    P.cobracket = LinearMap(m, m * m, T.field);
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t lift = -1;
        for (std::size_t t = 0; t < A.graded_index.size(); ++t)
            if (A.graded_index[t] == i) lift = (std::int64_t)t;
        const SparseVector& v = A.lifts[(std::size_t)lift];
        std::int64_t n = G.degree_of[(std::size_t)i];
        SparseVector nabla = H.comult_of(v);
        axpy(nabla, -Scalar::one(H.field), swap_pair(d, nabla));
        TensorElement t2(d, 2);
        t2.coeffs = nabla;
        t2 = apply_linear_to_slot(t2, 0, A.to_adapted);
        t2 = apply_linear_to_slot(t2, 1, A.to_adapted);
        std::int64_t want = dir == Direction::decreasing ? n + 1 : n - 1;
        std::vector<std::pair<std::int64_t, Scalar>> kept;
        for (const auto& [idx, c] : t2.coeffs.entries) {
            auto [a, b] = split2(d, idx);
            std::int64_t da = A.degree[(std::size_t)a];
            std::int64_t db = A.degree[(std::size_t)b];
            if (dir == Direction::decreasing) {
                if (da < 0 || db < 0) continue; // deeper than any degree
                if (da + db <= n)
                    throw theorem_error(
                        "antisymmetrized coproduct survives in degree " +
                        std::to_string(n) + " at " + T.label(i));
            } else {
                if (da < 0 || db < 0 || da + db > n)
                    throw theorem_error(
                        "antisymmetrized coproduct escapes the filtration "
                        "at " + T.label(i));
                if (da + db == n)
                    throw theorem_error(
                        "antisymmetrized coproduct survives in degree " +
                        std::to_string(n) + " at " + T.label(i));
            }
            if (da + db != want) continue;
            kept.emplace_back(A.graded_index[(std::size_t)a] * m +
                                  A.graded_index[(std::size_t)b],
                              c);
        }
        P.cobracket.columns[(std::size_t)i] = sorted_entries(m * m, kept);
    }

    // Coantisymmetry.
    for (std::int64_t i = 0; i < m; ++i) {
        SparseVector s = P.cobracket.columns[(std::size_t)i];
        axpy(s, Scalar::one(T.field),
             swap_pair(m, P.cobracket.columns[(std::size_t)i]));
        if (!s.is_zero())
            throw theorem_error("cobracket is not antisymmetric at " +
                                T.label(i));
    }
    // Co-Jacobi: the cyclic sum of (δ ⊗ id) ∘ δ vanishes.
    auto delta_of = [&](const SparseVector& x) {
        return P.cobracket.apply(x);
    };
    for (std::int64_t i = 0; i < m; ++i) {
        SparseVector acc(m * m * m);
        SparseVector di = P.cobracket.columns[(std::size_t)i];
        std::vector<std::pair<std::int64_t, Scalar>> trip;
        for (const auto& [idx, c] : di.entries) {
            auto [a, b] = split2(m, idx);
            for (const auto& [uv, c2] :
                 P.cobracket.columns[(std::size_t)a].entries)
                trip.emplace_back(uv * m + b, c * c2);
        }
        SparseVector base = sorted_entries(m * m * m, std::move(trip));
        for (int rot = 0; rot < 3; ++rot) {
            SparseVector r(m * m * m);
            std::vector<std::pair<std::int64_t, Scalar>> e;
            for (const auto& [idx, c] : base.entries) {
                std::int64_t x = idx / (m * m), y = (idx / m) % m, z = idx % m;
                std::int64_t digs[3] = {x, y, z};
                std::int64_t rotated[3] = {digs[rot % 3], digs[(rot + 1) % 3],
                                           digs[(rot + 2) % 3]};
                e.emplace_back((rotated[0] * m + rotated[1]) * m + rotated[2],
                               c);
            }
            axpy(acc, Scalar::one(T.field),
                 sorted_entries(m * m * m, std::move(e)));
        }
        if (!acc.is_zero())
            throw theorem_error("cobracket fails co-Jacobi at " + T.label(i));
    }
    // Co-Leibniz: δ(xy) = δ(x)Δ(y) + Δ(x)δ(y).
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            SparseVector lhs =
                delta_of(T.mult[(std::size_t)i][(std::size_t)j]);
            TensorElement dx(m, 2), dy(m, 2), cx(m, 2), cy(m, 2);
            dx.coeffs = P.cobracket.columns[(std::size_t)i];
            dy.coeffs = P.cobracket.columns[(std::size_t)j];
            cx.coeffs = T.comult[(std::size_t)i];
            cy.coeffs = T.comult[(std::size_t)j];
            SparseVector rhs = multiply_tensor(T, dx, cy).coeffs;
            axpy(rhs, Scalar::one(T.field), multiply_tensor(T, cx, dy).coeffs);
            axpy(lhs, -Scalar::one(T.field), rhs);
            if (!lhs.is_zero())
                throw theorem_error("cobracket fails co-Leibniz at " +
                                    T.label(i) + "," + T.label(j));
        }
    return P;
}

PoissonStructure induced_poisson(const GradedBialgebraData& G) {
    Direction dir = G.parent_filtration.direction;
    const HopfAlgebra& T = G.total;
    const HopfAlgebra& H = G.parent;
    std::int64_t m = T.dim;
    require_commutative(T);

    std::vector<GradedComponent> dummy;
    Adapted A = build_adapted(H, G.parent_filtration, dummy);
    std::vector<std::int64_t> lift_of((std::size_t)m, -1);
    for (std::size_t t = 0; t < A.graded_index.size(); ++t)
        if (A.graded_index[t] >= 0)
            lift_of[(std::size_t)A.graded_index[t]] = (std::int64_t)t;

    PoissonStructure P;
    P.bracket.assign((std::size_t)m,
                     std::vector<SparseVector>((std::size_t)m, SparseVector(m)));
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            const SparseVector& vi = A.lifts[(std::size_t)lift_of[(std::size_t)i]];
            const SparseVector& vj = A.lifts[(std::size_t)lift_of[(std::size_t)j]];
            SparseVector comm = H.multiply(vi, vj);
            axpy(comm, -Scalar::one(H.field), H.multiply(vj, vi));
            SparseVector ad = A.to_adapted.apply(comm);
            std::int64_t n =
                G.degree_of[(std::size_t)i] + G.degree_of[(std::size_t)j];
            std::int64_t want = dir == Direction::increasing ? n - 1 : n + 1;
            std::vector<std::pair<std::int64_t, Scalar>> kept;
            for (const auto& [a, c] : ad.entries) {
                std::int64_t da = A.degree[(std::size_t)a];
                if (dir == Direction::increasing) {
                    if (da < 0 || da > n)
                        throw theorem_error(
                            "commutator escapes the filtration at " +
                            T.label(i) + "," + T.label(j));
                    if (da == n)
                        throw theorem_error(
                            "graded commutator survives in top degree at " +
                            T.label(i) + "," + T.label(j));
                } else {
                    if (da < 0) continue; // deeper than any finite degree
                    if (da < n)
                        throw theorem_error(
                            "commutator escapes the filtration at " +
                            T.label(i) + "," + T.label(j));
                    if (da == n)
                        throw theorem_error(
                            "graded commutator survives in top degree at " +
                            T.label(i) + "," + T.label(j));
                }
                if (da != want) continue;
                kept.emplace_back(A.graded_index[(std::size_t)a], c);
            }
            P.bracket[(std::size_t)i][(std::size_t)j] =
                sorted_entries(m, kept);
        }

    auto br = [&](const SparseVector& x, const SparseVector& y) {
        SparseVector r(m);
        for (const auto& [i, a] : x.entries)
            for (const auto& [j, b] : y.entries)
                axpy(r, a * b, P.bracket[(std::size_t)i][(std::size_t)j]);
        return r;
    };
    auto e = [&](std::int64_t i) {
        return SparseVector::unit(m, i, T.field);
    };
    for (std::int64_t i = 0; i < m; ++i) {
        if (!br(e(i), e(i)).is_zero())
            throw theorem_error("bracket is not alternating at " + T.label(i));
        for (std::int64_t j = 0; j < m; ++j) {
            SparseVector anti = add(br(e(i), e(j)), br(e(j), e(i)));
            if (!anti.is_zero())
                throw theorem_error("bracket is not antisymmetric at " +
                                    T.label(i) + "," + T.label(j));
            for (std::int64_t k = 0; k < m; ++k) {
                SparseVector jac(m);
                axpy(jac, Scalar::one(T.field), br(e(i), br(e(j), e(k))));
                axpy(jac, Scalar::one(T.field), br(e(j), br(e(k), e(i))));
                axpy(jac, Scalar::one(T.field), br(e(k), br(e(i), e(j))));
                if (!jac.is_zero())
                    throw theorem_error("bracket fails Jacobi");
                // Leibniz: {ab, c} = {a, c}b + a{b, c}.
                SparseVector lhs =
                    br(T.mult[(std::size_t)i][(std::size_t)j], e(k));
                SparseVector rhs =
                    T.multiply(br(e(i), e(k)), e(j));
                axpy(rhs, Scalar::one(T.field),
                     T.multiply(e(i), br(e(j), e(k))));
                axpy(lhs, -Scalar::one(T.field), rhs);
                if (!lhs.is_zero()) throw theorem_error("bracket fails Leibniz");
            }
        }
    }
    return P;
}

CoPoissonStructure copoisson_on_graded_J(const GradedBialgebraData& G) {
    if (G.provenance != GradedProvenance::from_J)
        throw format_error("cobracket requires a from_J graded");
    return induced_copoisson(G);
}

PoissonStructure poisson_on_graded_D(const GradedBialgebraData& G) {
    if (G.provenance != GradedProvenance::from_D)
        throw format_error("bracket requires a from_D graded");
    return induced_poisson(G);
}

RestrictedLieBialgebra extract_lie(const GradedBialgebraData& G) {
    if (G.provenance != GradedProvenance::from_J)
        throw format_error("Lie extraction requires a from_J graded");
    const HopfAlgebra& T = G.total;
    std::int64_t m = T.dim;
    CoPoissonStructure co = copoisson_on_graded_J(G);
    Subspace P = primitives(T);
    std::int64_t n = P.dim();

    RestrictedLieBialgebra L;
    L.field = T.field;
    L.dim = n;
    for (std::int64_t k = 0; k < n; ++k) {
        L.labels.push_back(T.label(P.pivots[(std::size_t)k]));
        L.degrees.push_back(G.degree_of[(std::size_t)P.pivots[(std::size_t)k]]);
    }

    auto coords = [&](const SparseVector& x, const char* what) {
        try {
            return coords_in(P, x);
        } catch (const containment_error&) {
            throw theorem_error(std::string(what) +
                                " leaves the primitive subspace");
        }
    };
    L.bracket.assign((std::size_t)n,
                     std::vector<SparseVector>((std::size_t)n, SparseVector(n)));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            SparseVector comm = T.multiply(P.basis[(std::size_t)i],
                                           P.basis[(std::size_t)j]);
            axpy(comm, -Scalar::one(T.field),
                 T.multiply(P.basis[(std::size_t)j], P.basis[(std::size_t)i]));
            L.bracket[(std::size_t)i][(std::size_t)j] =
                coords(comm, "commutator of primitives");
        }
    if (!T.field.is_rational()) {
        std::uint64_t p = T.field.characteristic;
        std::vector<SparseVector> pop;
        for (std::int64_t i = 0; i < n; ++i)
            pop.push_back(coords(T.power(P.basis[(std::size_t)i], p),
                                 "p-th power of a primitive"));
        // Semilinearity of the p-map over every scalar of GF(p).
        for (std::int64_t i = 0; i < n; ++i)
            for (std::uint64_t lam = 0; lam < p; ++lam) {
                Scalar s(T.field, (std::int64_t)lam);
                SparseVector lhs = coords(
                    T.power(P.basis[(std::size_t)i].scaled(s), p),
                    "p-th power of a primitive");
                SparseVector rhs = pop[(std::size_t)i].scaled(s.pow(p));
                axpy(lhs, -Scalar::one(T.field), rhs);
                if (!lhs.is_zero())
                    throw theorem_error("p-operation is not p-semilinear");
            }
        L.p_operation = std::move(pop);

        RestrictedLieInput check;
        check.field = T.field;
        check.dim = n;
        check.labels = L.labels;
        check.bracket = L.bracket;
        check.p_operation = *L.p_operation;
        validate_restricted_lie(check);
    }

    // Cobracket restricted to the primitives.
    Subspace pp = tensor_subspace(P, P);
    L.cobracket.assign((std::size_t)n, SparseVector(n * n));
    for (std::int64_t i = 0; i < n; ++i) {
        SparseVector dv = co.cobracket.apply(P.basis[(std::size_t)i]);
        if (!pp.contains(dv))
            throw theorem_error("cobracket of a primitive leaves the "
                                "primitive tensor square");
        std::vector<std::pair<std::int64_t, Scalar>> e;
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                Scalar c = dv.coeff(P.pivots[(std::size_t)a] * m +
                                        P.pivots[(std::size_t)b],
                                    T.field);
                if (!c.is_zero()) e.emplace_back(a * n + b, c);
            }
        L.cobracket[(std::size_t)i] = sorted_entries(n * n, std::move(e));
    }
    // 1-cocycle compatibility: δ[x,y] = x·δ(y) - y·δ(x) with the adjoint
    // action on each tensor slot.
    auto act = [&](std::int64_t x, const SparseVector& t2) {
        std::vector<std::pair<std::int64_t, Scalar>> e;
        SparseVector r(n * n);
        for (const auto& [idx, c] : t2.entries) {
            std::int64_t u = idx / n, v = idx % n;
            for (const auto& [w, c2] :
                 L.bracket[(std::size_t)x][(std::size_t)u].entries)
                e.emplace_back(w * n + v, c * c2);
            for (const auto& [w, c2] :
                 L.bracket[(std::size_t)x][(std::size_t)v].entries)
                e.emplace_back(u * n + w, c * c2);
        }
        for (const auto& [idx, c] : e) {
            SparseVector one(n * n);
            one.entries.emplace_back(idx, c);
            axpy(r, Scalar::one(T.field), one);
        }
        return r;
    };
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            SparseVector lhs(n * n);
            for (const auto& [w, c] :
                 L.bracket[(std::size_t)i][(std::size_t)j].entries)
                axpy(lhs, c, L.cobracket[(std::size_t)w]);
            SparseVector rhs = act(i, L.cobracket[(std::size_t)j]);
            axpy(rhs, -Scalar::one(T.field),
                 act(j, L.cobracket[(std::size_t)i]));
            axpy(lhs, -Scalar::one(T.field), rhs);
            if (!lhs.is_zero())
                throw theorem_error("cobracket is not a bracket 1-cocycle");
        }

    // Generation certificate: the primitives generate the whole graded.
    Echelon gen(T.field, m);
    gen.add(T.unit);
    for (const auto& row : P.basis) gen.add(row);
    while (true) {
        std::vector<SparseVector> snapshot = gen.rows();
        std::int64_t before = gen.rank();
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) gen.add(T.multiply(a, b));
        if (gen.rank() == before) break;
    }
    if (gen.rank() != m)
        throw theorem_error("primitives fail to generate the graded algebra");
    return L;
}

PresentationReport truncated_presentation(const GradedBialgebraData& G) {
    if (G.provenance != GradedProvenance::from_D)
        throw format_error("presentation requires a from_D graded");
    const HopfAlgebra& T = G.total;
    std::int64_t m = T.dim;
    require_commutative(T);

    // Coordinate blocks per degree.
    auto block = [&](std::int64_t degree) {
        std::vector<SparseVector> rows;
        std::int64_t off = block_offset(G, degree);
        if (off < 0) return Subspace::zero(m, T.field);
        for (const auto& c : G.components)
            if (c.degree == degree)
                for (std::int64_t t = 0; t < c.dim; ++t)
                    rows.push_back(SparseVector::unit(m, off + t, T.field));
        return rref(T.field, m, rows);
    };
    std::int64_t max_deg = 0;
    for (const auto& c : G.components) max_deg = std::max(max_deg, c.degree);

    PresentationReport R;
    R.total_dim = m;
    for (std::int64_t nn = 1; nn <= max_deg; ++nn) {
        Subspace dec = Subspace::zero(m, T.field);
        for (std::int64_t a = 1; a < nn; ++a)
            dec = sum_and_intersect(
                      dec, span_products(T, block(a), block(nn - a)))
                      .first;
        QuotientData q = quotient_data(block(nn), dec);
        for (const auto& g : q.section) {
            std::int64_t pivot = g.leading_index();
            R.generator_indices.push_back(pivot);
            R.generator_labels.push_back(T.label(pivot));
            R.generator_degrees.push_back(nn);
        }
    }

    if (T.field.is_rational()) {
        if (!R.generator_indices.empty())
            throw theorem_error("finite-dimensional commutative graded over "
                                "the rationals admits no free generators");
        R.relations_verified = true;
        return R;
    }
    std::uint64_t p = T.field.characteristic;
    // Every positive-degree element is nilpotent of exponent p.
    for (std::int64_t i = 0; i < m; ++i) {
        if (G.degree_of[(std::size_t)i] == 0) continue;
        if (!T.power(SparseVector::unit(m, i, T.field), p).is_zero())
            throw theorem_error("positive-degree element has nonzero p-th "
                                "power: " +
                                T.label(i));
    }
    std::int64_t expected = 1;
    for (std::size_t k = 0; k < R.generator_indices.size(); ++k) {
        if (expected > m) break;
        expected *= (std::int64_t)p;
    }
    if (expected != m)
        throw theorem_error("dimension does not match a truncated polynomial "
                            "algebra on the selected generators");
    R.relations_verified = true;
    return R;
}

} // namespace crystal
