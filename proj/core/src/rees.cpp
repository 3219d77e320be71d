#include "crystal/rees.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace crystal {

namespace {

Subspace join(const Subspace& U, const Subspace& W) {
    return sum_and_intersect(U, W).first;
}

Subspace meet(const Subspace& U, const Subspace& W) {
    return sum_and_intersect(U, W).second;
}

// Laurent layer family without a base algebra; working state of the functor
// accumulators.
struct Window {
    std::int64_t zmin = 0, zmax = 0;
    std::vector<Subspace> layers;
    Subspace low, high;

    const Subspace& at(std::int64_t z) const {
        if (z < zmin) return low;
        if (z > zmax) return high;
        return layers[(std::size_t)(z - zmin)];
    }
};

void trim(Window& W) {
    while (W.layers.size() > 1 && W.layers.front() == W.low) {
        W.layers.erase(W.layers.begin());
        ++W.zmin;
    }
    while (W.layers.size() > 1 && W.layers.back() == W.high) {
        W.layers.pop_back();
        --W.zmax;
    }
}

Window window_of(const LaurentModule& M) {
    return Window{M.zmin, M.zmax, M.layers, M.low_stable, M.high_stable};
}

// Degree-wise span of products A(u)·B(z-u).
Window convolve(const HopfAlgebra& H, const Window& A, const Window& B) {
    Window R;
    R.zmin = A.zmin + B.zmin;
    // The high stable A.high·B.high needs both factors past their windows,
    // so it is only reached two degrees above A.zmax + B.zmax.
    R.zmax = A.zmax + B.zmax + 1;
    R.low = join(span_products(H, A.low, B.high),
                 span_products(H, A.high, B.low));
    R.high = span_products(H, A.high, B.high);
    for (std::int64_t z = R.zmin; z <= R.zmax; ++z) {
        Echelon acc(H.field, H.dim);
        std::int64_t u0 = std::min(A.zmin, z - B.zmax) - 1;
        std::int64_t u1 = std::max(A.zmax, z - B.zmin) + 1;
        for (std::int64_t u = u0; u <= u1; ++u) {
            Subspace term = span_products(H, A.at(u), B.at(z - u));
            for (const auto& row : term.basis) acc.add(row);
        }
        R.layers.push_back(acc.to_subspace());
    }
    trim(R);
    return R;
}

Window unite(const Window& A, const Window& B) {
    Window R;
    R.zmin = std::min(A.zmin, B.zmin);
    R.zmax = std::max(A.zmax, B.zmax);
    R.low = join(A.low, B.low);
    R.high = join(A.high, B.high);
    for (std::int64_t z = R.zmin; z <= R.zmax; ++z)
        R.layers.push_back(join(A.at(z), B.at(z)));
    trim(R);
    return R;
}

bool window_inside(const Window& A, const Window& B) {
    if (!B.low.contains(A.low) || !B.high.contains(A.high)) return false;
    std::int64_t z0 = std::min(A.zmin, B.zmin) - 1;
    std::int64_t z1 = std::max(A.zmax, B.zmax) + 1;
    for (std::int64_t z = z0; z <= z1; ++z)
        if (!B.at(z).contains(A.at(z))) return false;
    return true;
}

// Drop window edges that already equal the stable subspaces.
void normalize(LaurentModule& M) {
    while (M.layers.size() > 1 && M.layers.front() == M.low_stable) {
        M.layers.erase(M.layers.begin());
        ++M.zmin;
    }
    while (M.layers.size() > 1 && M.layers.back() == M.high_stable) {
        M.layers.pop_back();
        --M.zmax;
    }
}

LaurentModule module_from_window(const HopfAlgebra& base, Window W) {
    LaurentModule M;
    M.base = base;
    M.zmin = W.zmin;
    M.zmax = W.zmax;
    M.layers = std::move(W.layers);
    M.low_stable = std::move(W.low);
    M.high_stable = std::move(W.high);
    normalize(M);
    return M;
}

ReesShape classify(const LaurentModule& M) {
    return (M.low_stable.is_zero() && M.zmin >= 0) ? ReesShape::d_type
                                                   : ReesShape::j_type;
}

// Monotonicity, unit membership and the two layer-wise closure conditions.
void certify(ReesBialgebra& R, bool as_theorem) {
    const LaurentModule& M = R.module;
    const HopfAlgebra& H = M.base;
    auto fail = [&](const std::string& msg) {
        if (as_theorem) throw theorem_error(msg);
        throw axiom_error(msg);
    };
    for (std::int64_t z = M.zmin - 1; z <= M.zmax; ++z)
        if (!M.at(z + 1).contains(M.at(z)))
            fail("layer at degree " + std::to_string(z) +
                 " is not contained in the next one");
    if (!M.at(0).contains(H.unit))
        fail("unit is missing from the degree-zero layer");
    for (std::int64_t u = M.zmin - 1; u <= M.zmax + 1; ++u)
        for (std::int64_t v = M.zmin - 1; v <= M.zmax + 1; ++v)
            if (!M.at(u + v).contains(span_products(H, M.at(u), M.at(v))))
                fail("product closure fails at degrees " + std::to_string(u) +
                     "," + std::to_string(v));
    for (std::int64_t z = M.zmin - 1; z <= M.zmax + 1; ++z) {
        Echelon target(H.field, H.dim * H.dim);
        std::int64_t u0 = std::min(M.zmin - 1, z - M.zmax - 1);
        std::int64_t u1 = std::max(M.zmax + 1, z - M.zmin + 1);
        for (std::int64_t u = u0; u <= u1; ++u) {
            Subspace term = tensor_subspace(M.at(u), M.at(z - u));
            for (const auto& row : term.basis) target.add(row);
        }
        for (const auto& x : M.at(z).basis)
            if (!target.contains(H.comult_of(x)))
                fail("coproduct closure fails at degree " + std::to_string(z));
    }
    R.closed_under_product = true;
    R.closed_under_coproduct = true;
}

std::vector<Scalar> dense_of(const SparseVector& v, Field f, std::int64_t d) {
    std::vector<Scalar> out((std::size_t)d, Scalar::zero(f));
    for (const auto& [i, c] : v.entries) out[(std::size_t)i] = c;
    return out;
}

// Convolution product of two covectors: (f·g)(x) = (f ⊗ g)(Δx).
SparseVector convolve_covectors(const HopfAlgebra& H, const SparseVector& a,
                                const SparseVector& b) {
    std::int64_t d = H.dim;
    auto da = dense_of(a, H.field, d);
    auto db = dense_of(b, H.field, d);
    SparseVector r(d);
    for (std::int64_t i = 0; i < d; ++i) {
        Scalar acc = Scalar::zero(H.field);
        for (const auto& [idx, c] : H.comult[(std::size_t)i].entries)
            acc = acc +
                  c * da[(std::size_t)(idx / d)] * db[(std::size_t)(idx % d)];
        if (!acc.is_zero()) r.push(i, acc);
    }
    return r;
}

Scalar pair_covector(Field f, const SparseVector& cov, const SparseVector& v) {
    Scalar acc = Scalar::zero(f);
    for (const auto& [j, c] : cov.entries) acc = acc + c * v.coeff(j, f);
    return acc;
}

} // namespace

const Subspace& LaurentModule::at(std::int64_t z) const {
    if (z < zmin) return low_stable;
    if (z > zmax) return high_stable;
    return layers[(std::size_t)(z - zmin)];
}

std::vector<std::int64_t> LaurentModule::layer_dims() const {
    std::vector<std::int64_t> dims;
    for (const auto& V : layers) dims.push_back(V.dim());
    return dims;
}

bool layers_equal(const LaurentModule& A, const LaurentModule& B) {
    if (A.base.dim != B.base.dim) return false;
    if (!(A.low_stable == B.low_stable)) return false;
    if (!(A.high_stable == B.high_stable)) return false;
    std::int64_t z0 = std::min(A.zmin, B.zmin) - 1;
    std::int64_t z1 = std::max(A.zmax, B.zmax) + 1;
    for (std::int64_t z = z0; z <= z1; ++z)
        if (!(A.at(z) == B.at(z))) return false;
    return true;
}

ReesBialgebra rees_of_filtration(const HopfAlgebra& H, const Filtration& F) {
    ReesBialgebra R;
    LaurentModule& M = R.module;
    M.base = H;
    std::int64_t stab = F.stable_index;
    if (F.direction == Direction::decreasing) {
        M.zmin = -stab;
        M.zmax = 0;
        for (std::int64_t z = M.zmin; z <= 0; ++z) M.layers.push_back(F.at(-z));
        M.low_stable = F.at(stab);
        M.high_stable = F.at(0);
    } else {
        M.zmin = 0;
        M.zmax = stab;
        for (std::int64_t z = 0; z <= stab; ++z) M.layers.push_back(F.at(z));
        M.low_stable = Subspace::zero(H.dim, H.field);
        M.high_stable = F.at(stab);
    }
    normalize(M);
    // A degenerate module (single full layer at z >= 0) is shape-ambiguous,
    // so the orientation comes from the filtration, not from the layers.
    R.shape = F.direction == Direction::decreasing ? ReesShape::j_type
                                                   : ReesShape::d_type;
    R.origin = ReesOrigin::filtration;
    certify(R, false);
    return R;
}

HopfAlgebra fiber_t1(const ReesBialgebra& M) {
    const Subspace& top = M.module.high_stable;
    if (top.dim() == M.module.base.dim) return M.module.base;
    return sub_hopf(M.module.base, top).sub;
}

GradedBialgebraData fiber_t0(const ReesBialgebra& R) {
    const LaurentModule& M = R.module;
    const HopfAlgebra& H = M.base;
    Filtration F;
    F.kind = FiltrationKind::custom;
    if (R.shape == ReesShape::j_type) {
        if (M.at(0).dim() != H.dim)
            throw format_error("t=0 fiber needs the degree-zero layer to be "
                               "the whole algebra");
        F.direction = Direction::decreasing;
        for (std::int64_t u = 0;; ++u) {
            F.chain.push_back(M.at(-u));
            if (u > 0 &&
                F.chain[(std::size_t)u] == F.chain[(std::size_t)u - 1])
                break;
        }
    } else {
        F.direction = Direction::increasing;
        for (std::int64_t u = 0;; ++u) {
            F.chain.push_back(M.at(u));
            if (u > 0 &&
                F.chain[(std::size_t)u] == F.chain[(std::size_t)u - 1])
                break;
        }
    }
    F.stable_index = (std::int64_t)F.chain.size() - 2;
    return graded_from_filtration(H, F);
}

ReesBialgebra drinfeld_vee(const ReesBialgebra& R, std::int64_t window_cap) {
    const LaurentModule& M = R.module;
    const HopfAlgebra& H = M.base;
    Subspace J = augmentation_ideal(H);

    // L(z) is the degree-z layer of t⁻¹·(Ker(ε) ∩ M).
    Window L;
    L.zmin = M.zmin - 1;
    L.zmax = M.zmax - 1;
    for (std::int64_t z = L.zmin; z <= L.zmax; ++z)
        L.layers.push_back(meet(M.at(z + 1), J));
    L.low = meet(M.low_stable, J);
    L.high = meet(M.high_stable, J);
    trim(L);

    std::int64_t cap =
        window_cap > 0 ? window_cap : 4 * (M.zmax - M.zmin + 1);
    Window acc = window_of(M);
    for (;;) {
        Window next = convolve(H, acc, L);
        if (window_inside(next, acc)) break;
        acc = unite(acc, next);
        if (acc.zmax - acc.zmin + 1 > cap)
            throw resource_error("window growth exceeded the cap while "
                                 "accumulating augmentation-ideal powers");
    }

    ReesBialgebra out;
    out.module = module_from_window(H, std::move(acc));
    out.shape = classify(out.module);
    out.origin = ReesOrigin::vee_functor;
    certify(out, true);
    return out;
}

ReesBialgebra drinfeld_prime(const ReesBialgebra& R, int n_max,
                             std::int64_t window_cap) {
    const LaurentModule& M = R.module;
    const HopfAlgebra& H = M.base;
    std::int64_t d = H.dim;
    Field f = H.field;
    if (M.at(0).dim() != d)
        throw format_error("prime functor needs the degree-zero layer to be "
                           "the whole algebra");
    Subspace J = augmentation_ideal(H);
    if (!M.at(-1).contains(J))
        throw format_error("prime functor needs Ker(ε) inside the degree -1 "
                           "layer");

    // Layer chain C[u] = V_{-u} through its first repeat.
    std::vector<Subspace> C;
    for (std::int64_t u = 0;; ++u) {
        C.push_back(M.at(-u));
        if (u > 0 && C[(std::size_t)u] == C[(std::size_t)u - 1]) break;
    }
    std::int64_t U = (std::int64_t)C.size() - 2;

    // Basis adapted to the chain; column weights record the level.
    LinearMap T(d, d, f);
    T.columns.clear();
    std::vector<std::int64_t> weight;
    for (std::int64_t u = 0; u < U; ++u) {
        QuotientData q =
            quotient_data(C[(std::size_t)u], C[(std::size_t)u + 1]);
        for (const auto& s : q.section) {
            T.columns.push_back(s);
            weight.push_back(u);
        }
    }
    for (const auto& b : C[(std::size_t)U].basis) {
        T.columns.push_back(b);
        weight.push_back(-1); // deeper than every finite level
    }
    LinearMap Tinv = inverse(T);

    std::vector<SparseVector> phi((std::size_t)d, SparseVector(d));
    for (std::int64_t j = 0; j < d; ++j)
        for (const auto& [b, c] : Tinv.columns[(std::size_t)j].entries)
            phi[(std::size_t)b].push(j, c);

    // ψ_b = φ_b - φ_b(1)·ε, bucketed by chain level.
    std::int64_t maxw = U > 0 ? U - 1 : 0;
    std::vector<std::vector<SparseVector>> Psi((std::size_t)maxw + 1);
    for (std::int64_t b = 0; b < d; ++b) {
        std::int64_t w = weight[(std::size_t)b];
        if (w < 0) continue;
        SparseVector psi = phi[(std::size_t)b];
        axpy(psi, -pair_covector(f, phi[(std::size_t)b], H.unit), H.counit);
        if (w == 0) {
            if (!psi.is_zero())
                throw theorem_error("level-zero coordinate functional does "
                                    "not reduce to the counit");
            continue;
        }
        Psi[(std::size_t)w].push_back(std::move(psi));
    }

    std::int64_t cap =
        window_cap > 0 ? window_cap : 4 * std::max<std::int64_t>(U, 1);
    int nm = n_max > 0 ? n_max : (int)(2 * U + 2);
    if (nm < 2) throw format_error("n_max must be at least 2");

    // S[n][e]: span of n-fold convolution products of ψ's whose level excess
    // Σ (w_i - 1) stays within the budget e.
    std::int64_t emax = cap - 1;
    std::vector<std::vector<Subspace>> S(
        (std::size_t)nm + 1,
        std::vector<Subspace>((std::size_t)emax + 1, Subspace::zero(d, f)));
    for (std::int64_t e = 0; e <= emax; ++e) {
        Echelon span1(f, d);
        for (std::int64_t w = 1; w <= std::min(maxw, e + 1); ++w)
            for (const auto& p : Psi[(std::size_t)w]) span1.add(p);
        S[1][(std::size_t)e] = span1.to_subspace();
    }
    for (int n = 2; n <= nm; ++n)
        for (std::int64_t e = 0; e <= emax; ++e) {
            Echelon spann(f, d);
            for (std::int64_t w = 1; w <= std::min(maxw, e + 1); ++w) {
                const Subspace& prev =
                    S[(std::size_t)(n - 1)][(std::size_t)(e - (w - 1))];
                for (const auto& s : prev.basis)
                    for (const auto& p : Psi[(std::size_t)w])
                        spann.add(convolve_covectors(H, s, p));
            }
            S[(std::size_t)n][(std::size_t)e] = spann.to_subspace();
        }

    // Layers from the constraint functionals (depth 1 covers the condition
    // x - ε(x)·1 ∈ V_{z-1}); stop once both the constraint space and the
    // layer repeat past the chain depth.
    auto layers_for = [&](int top) {
        std::vector<Subspace> W;
        W.push_back(Subspace::full(d, f));
        Subspace prev_cons = Subspace::zero(d, f);
        bool have_prev = false;
        for (std::int64_t u = 1;; ++u) {
            if (u > cap)
                throw resource_error("prime functor layers did not stabilize "
                                     "within the window cap");
            Echelon ce(f, d);
            for (int n = 1; n <= top; ++n)
                for (const auto& row :
                     S[(std::size_t)n][(std::size_t)(u - 1)].basis)
                    ce.add(row);
            Subspace cons = ce.to_subspace();
            Subspace V = M.at(-u);
            if (cons.dim() > 0) {
                LinearMap K(d, cons.dim(), f);
                for (std::int64_t r = 0; r < cons.dim(); ++r)
                    for (const auto& [j, c] :
                         cons.basis[(std::size_t)r].entries)
                        K.columns[(std::size_t)j].push(r, c);
                V = meet(kernel(K), V);
            }
            W.push_back(std::move(V));
            if (u >= U + 1 && have_prev && cons == prev_cons &&
                W[(std::size_t)u] == W[(std::size_t)u - 1])
                break;
            prev_cons = std::move(cons);
            have_prev = true;
        }
        return W;
    };

    std::vector<Subspace> Wmain = layers_for(nm);
    std::vector<Subspace> Wprev = layers_for(nm - 1);
    auto chain_at = [](const std::vector<Subspace>& W,
                       std::int64_t u) -> const Subspace& {
        if (u >= (std::int64_t)W.size()) return W.back();
        return W[(std::size_t)u];
    };
    bool stable = true;
    std::int64_t top_u =
        (std::int64_t)std::max(Wmain.size(), Wprev.size());
    for (std::int64_t u = 0; u < top_u; ++u)
        if (!(chain_at(Wmain, u) == chain_at(Wprev, u))) {
            stable = false;
            break;
        }

    ReesBialgebra out;
    LaurentModule& N = out.module;
    N.base = H;
    N.zmin = -((std::int64_t)Wmain.size() - 1);
    N.zmax = 0;
    for (std::int64_t u = (std::int64_t)Wmain.size() - 1; u >= 0; --u)
        N.layers.push_back(Wmain[(std::size_t)u]);
    N.low_stable = Wmain.back();
    N.high_stable = Subspace::full(d, f);
    normalize(N);
    out.shape = classify(N);
    out.origin = ReesOrigin::prime_functor;
    out.stabilized = stable;
    certify(out, true);
    return out;
}

SemiclassicalLimit semiclassical_limit(const ReesBialgebra& M) {
    if (M.origin == ReesOrigin::filtration)
        throw format_error("semiclassical limit is defined on functor images");
    SemiclassicalLimit out;
    out.graded = fiber_t0(M);
    const HopfAlgebra& T = out.graded.total;
    std::int64_t m = T.dim;
    if (M.origin == ReesOrigin::prime_functor) {
        out.poisson = induced_poisson(out.graded);
        std::uint64_t p = T.field.characteristic;
        if (p > 0) {
            LinearMap E(m, 1, T.field);
            for (const auto& [j, c] : T.counit.entries)
                E.columns[(std::size_t)j].push(0, c);
            Subspace aug = kernel(E);
            for (const auto& v : aug.basis)
                if (!T.power(v, p).is_zero())
                    throw theorem_error("augmentation element is not "
                                        "nilpotent of order p");
        }
        return out;
    }
    for (std::int64_t i = 0; i < m; ++i) {
        const SparseVector& di = T.comult[(std::size_t)i];
        std::vector<std::pair<std::int64_t, Scalar>> sw;
        for (const auto& [idx, c] : di.entries)
            sw.emplace_back((idx % m) * m + idx / m, c);
        std::sort(sw.begin(), sw.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVector swapped(m * m);
        for (auto& [idx, c] : sw) swapped.push(idx, c);
        if (!(swapped == di))
            throw theorem_error("semiclassical limit is not cocommutative "
                                "at " + T.label(i));
    }
    Subspace P = primitives(T);
    Echelon gen(T.field, m);
    gen.add(T.unit);
    for (const auto& v : P.basis) gen.add(v);
    bool grew = true;
    while (grew && gen.rank() < m) {
        grew = false;
        std::vector<SparseVector> rows = gen.rows();
        for (const auto& a : rows)
            for (const auto& b : rows)
                if (gen.add(T.multiply(a, b))) grew = true;
    }
    if (gen.rank() != m)
        throw theorem_error("primitives do not generate the semiclassical "
                            "limit");
    out.copoisson = induced_copoisson(out.graded);
    return out;
}

} // namespace crystal
