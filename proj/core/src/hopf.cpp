#include "crystal/hopf.hpp"

#include <algorithm>
#include <map>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

using Acc = std::map<std::int64_t, Scalar>;

void acc_add(Acc& acc, std::int64_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(idx, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseVector acc_to_vector(std::int64_t ambient, const Acc& acc) {
    SparseVector v(ambient);
    v.entries.assign(acc.begin(), acc.end());
    return v;
}

void check_budget(std::int64_t size, std::int64_t budget, std::int64_t d,
                  int n) {
    if (size > budget)
        throw resource_error("tensor budget exceeded in dimension " +
                             std::to_string(d) + "^" + std::to_string(n));
}

} // namespace

std::int64_t tensor_pow(std::int64_t d, int n) {
    std::int64_t r = 1;
    for (int k = 0; k < n; ++k) {
        if (d != 0 && r > (std::int64_t(1) << 62) / d)
            throw resource_error("tensor power " + std::to_string(d) + "^" +
                                 std::to_string(n) + " exceeds index range");
        r *= d;
    }
    return r;
}

std::int64_t tensor_index(std::int64_t d,
                          const std::vector<std::int64_t>& digits) {
    std::int64_t idx = 0;
    for (std::int64_t g : digits) idx = idx * d + g;
    return idx;
}

std::vector<std::int64_t> tensor_digits(std::int64_t d, int arity,
                                        std::int64_t index) {
    std::vector<std::int64_t> digits(arity);
    for (int k = arity - 1; k >= 0; --k) {
        digits[k] = index % d;
        index /= d;
    }
    return digits;
}

TensorElement TensorElement::scalar(std::int64_t d, const Scalar& c) {
    TensorElement t(d, 0);
    if (!c.is_zero()) t.coeffs.entries.emplace_back(0, c);
    return t;
}

TensorElement TensorElement::from_vector(const SparseVector& v) {
    TensorElement t(v.ambient, 1);
    t.coeffs = v;
    return t;
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
    if (a.base_dim != b.base_dim)
        throw dimension_error("outer product base mismatch");
    TensorElement r(a.base_dim, a.arity + b.arity);
    std::int64_t shift = tensor_pow(a.base_dim, b.arity);
    Acc acc;
    for (const auto& [i, c] : a.coeffs.entries)
        for (const auto& [j, e] : b.coeffs.entries)
            acc_add(acc, i * shift + j, c * e);
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

TensorElement permute_slots(const TensorElement& t,
                            const std::vector<int>& perm) {
    if ((int)perm.size() != t.arity)
        throw dimension_error("permutation arity mismatch");
    TensorElement r(t.base_dim, t.arity);
    Acc acc;
    for (const auto& [idx, c] : t.coeffs.entries) {
        auto digits = tensor_digits(t.base_dim, t.arity, idx);
        std::vector<std::int64_t> moved(t.arity);
        for (int k = 0; k < t.arity; ++k) moved[k] = digits[perm[k]];
        acc_add(acc, tensor_index(t.base_dim, moved), c);
    }
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

std::string HopfAlgebra::label(std::int64_t i) const {
    if (i < (std::int64_t)labels.size()) return labels[i];
    return "e" + std::to_string(i);
}

SparseVector HopfAlgebra::multiply(const SparseVector& a,
                                   const SparseVector& b) const {
    if (a.ambient != dim || b.ambient != dim)
        throw dimension_error("multiply operand dimension mismatch");
    Acc acc;
    for (const auto& [i, ca] : a.entries)
        for (const auto& [j, cb] : b.entries) {
            Scalar c = ca * cb;
            for (const auto& [k, m] : mult[i][j].entries)
                acc_add(acc, k, c * m);
        }
    return acc_to_vector(dim, acc);
}

SparseVector HopfAlgebra::comult_of(const SparseVector& x) const {
    SparseVector r(dim * dim);
    for (const auto& [i, c] : x.entries) axpy(r, c, comult[i]);
    return r;
}

Scalar HopfAlgebra::counit_of(const SparseVector& x) const {
    Scalar s = Scalar::zero(field);
    for (const auto& [i, c] : x.entries)
        s = s + c * counit.coeff(i, field);
    return s;
}

SparseVector HopfAlgebra::apply_antipode(const SparseVector& x) const {
    if (!antipode) throw format_error("no antipode available");
    return antipode->apply(x);
}

SparseVector HopfAlgebra::power(const SparseVector& x, std::uint64_t e) const {
    SparseVector r = unit;
    for (std::uint64_t k = 0; k < e; ++k) r = multiply(r, x);
    return r;
}

LinearMap HopfAlgebra::comult_map() const {
    LinearMap f(dim, dim * dim, field);
    for (std::int64_t i = 0; i < dim; ++i) f.columns[i] = comult[i];
    return f;
}

LinearMap HopfAlgebra::primitive_defect_map() const {
    LinearMap f(dim, dim * dim, field);
    for (std::int64_t i = 0; i < dim; ++i) {
        SparseVector col = comult[i];
        for (const auto& [t, u] : unit.entries) {
            axpy(col, -u, SparseVector::unit(dim * dim, i * dim + t, field));
            axpy(col, -u, SparseVector::unit(dim * dim, t * dim + i, field));
        }
        f.columns[i] = std::move(col);
    }
    return f;
}

void check_shape(const HopfAlgebra& H) {
    auto bad = [](const std::string& what) {
        throw format_error("malformed algebra data: " + what);
    };
    if (H.dim <= 0) bad("dimension must be positive");
    if ((std::int64_t)H.mult.size() != H.dim) bad("mult tensor row count");
    for (const auto& row : H.mult) {
        if ((std::int64_t)row.size() != H.dim) bad("mult tensor column count");
        for (const auto& v : row)
            if (v.ambient != H.dim) bad("mult tensor value dimension");
    }
    if (H.unit.ambient != H.dim) bad("unit dimension");
    if ((std::int64_t)H.comult.size() != H.dim) bad("comult tensor size");
    for (const auto& v : H.comult)
        if (v.ambient != H.dim * H.dim) bad("comult value dimension");
    if (H.counit.ambient != H.dim) bad("counit dimension");
    if (H.antipode &&
        (H.antipode->domain != H.dim || H.antipode->codomain != H.dim))
        bad("antipode dimensions");
    if (!H.labels.empty() && (std::int64_t)H.labels.size() != H.dim)
        bad("label count");
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

namespace {

LinearMap pi_map(const HopfAlgebra& H) {
    // id - u∘ε, the projection onto the augmentation ideal.
    LinearMap f = LinearMap::identity(H.dim, H.field);
    for (std::int64_t i = 0; i < H.dim; ++i)
        axpy(f.columns[i], -H.counit.coeff(i, H.field), H.unit);
    return f;
}

} // namespace

ValidationReport validate(const HopfAlgebra& H) {
    check_shape(H);
    ValidationReport r;
    auto e = [&](std::int64_t i) {
        return SparseVector::unit(H.dim, i, H.field);
    };
    auto add_check = [&](const std::string& name, bool pass,
                         const std::string& witness) {
        r.checks.push_back({name, pass, pass ? "" : witness});
        return pass;
    };
    auto tuple3 = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
        return "(" + H.label(i) + "," + H.label(j) + "," + H.label(k) + ")";
    };
    auto tuple2 = [&](std::int64_t i, std::int64_t j) {
        return "(" + H.label(i) + "," + H.label(j) + ")";
    };

    bool assoc = true;
    std::string assoc_w;
    for (std::int64_t i = 0; i < H.dim && assoc; ++i)
        for (std::int64_t j = 0; j < H.dim && assoc; ++j)
            for (std::int64_t k = 0; k < H.dim && assoc; ++k)
                if (H.multiply(H.multiply(e(i), e(j)), e(k)) !=
                    H.multiply(e(i), H.multiply(e(j), e(k)))) {
                    assoc = false;
                    assoc_w = tuple3(i, j, k);
                }
    add_check("associativity", assoc, assoc_w);

    bool unit_law = true;
    std::string unit_w;
    for (std::int64_t i = 0; i < H.dim && unit_law; ++i)
        if (H.multiply(H.unit, e(i)) != e(i) ||
            H.multiply(e(i), H.unit) != e(i)) {
            unit_law = false;
            unit_w = H.label(i);
        }
    add_check("unit law", unit_law, unit_w);
    r.algebra_ok = assoc && unit_law;

    bool coassoc = true;
    std::string coassoc_w;
    for (std::int64_t i = 0; i < H.dim && coassoc; ++i) {
        auto d = TensorElement::from_vector(e(i));
        auto dd = apply_comult_to_slot(H, d, 0);
        if (apply_comult_to_slot(H, dd, 0) != apply_comult_to_slot(H, dd, 1)) {
            coassoc = false;
            coassoc_w = H.label(i);
        }
    }
    add_check("coassociativity", coassoc, coassoc_w);

    bool counit_law = true;
    std::string counit_w;
    for (std::int64_t i = 0; i < H.dim && counit_law; ++i) {
        auto d = apply_comult_to_slot(H, TensorElement::from_vector(e(i)), 0);
        auto left = contract_counit_slot(H, d, 0);
        auto right = contract_counit_slot(H, d, 1);
        auto self = TensorElement::from_vector(e(i));
        if (left != self || right != self) {
            counit_law = false;
            counit_w = H.label(i);
        }
    }
    add_check("counit law", counit_law, counit_w);
    r.coalgebra_ok = coassoc && counit_law;

    bool cm = true, em = true;
    std::string cm_w, em_w;
    for (std::int64_t i = 0; i < H.dim; ++i)
        for (std::int64_t j = 0; j < H.dim; ++j) {
            auto prod = H.multiply(e(i), e(j));
            if (cm) {
                auto lhs = TensorElement::from_vector(H.comult_of(prod));
                lhs.base_dim = H.dim;
                lhs.arity = 2;
                auto di = TensorElement::from_vector(H.comult_of(e(i)));
                di.base_dim = H.dim;
                di.arity = 2;
                auto dj = TensorElement::from_vector(H.comult_of(e(j)));
                dj.base_dim = H.dim;
                dj.arity = 2;
                if (!(lhs == multiply_tensor(H, di, dj))) {
                    cm = false;
                    cm_w = tuple2(i, j);
                }
            }
            if (em && H.counit_of(prod) !=
                          H.counit_of(e(i)) * H.counit_of(e(j))) {
                em = false;
                em_w = tuple2(i, j);
            }
        }
    add_check("coproduct multiplicative", cm, cm_w);
    add_check("counit multiplicative", em, em_w);
    bool du = H.comult_of(H.unit) ==
              outer(TensorElement::from_vector(H.unit),
                    TensorElement::from_vector(H.unit))
                  .coeffs;
    add_check("coproduct preserves unit", du, "1");
    bool eu = H.counit_of(H.unit) == Scalar::one(H.field);
    add_check("counit of unit", eu, "1");
    r.bialgebra_ok = r.algebra_ok && r.coalgebra_ok && cm && em && du && eu;

    if (H.antipode) {
        bool slaw = true;
        std::string s_w;
        for (std::int64_t i = 0; i < H.dim && slaw; ++i) {
            SparseVector lhs(H.dim), rhs(H.dim);
            for (const auto& [idx, c] : H.comult[i].entries) {
                std::int64_t a = idx / H.dim, b = idx % H.dim;
                axpy(lhs, c, H.multiply(H.apply_antipode(e(a)), e(b)));
                axpy(rhs, c, H.multiply(e(a), H.apply_antipode(e(b))));
            }
            auto target = H.unit.scaled(H.counit.coeff(i, H.field));
            if (lhs != target || rhs != target) {
                slaw = false;
                s_w = H.label(i);
            }
        }
        add_check("antipode law", slaw, s_w);
        r.antipode_ok = slaw;
        r.has_antipode = slaw;
    }

    r.commutative = true;
    r.cocommutative = true;
    std::vector<int> swap01{1, 0};
    for (std::int64_t i = 0; i < H.dim; ++i) {
        auto d = TensorElement::from_vector(H.comult_of(e(i)));
        d.base_dim = H.dim;
        d.arity = 2;
        if (!(permute_slots(d, swap01) == d)) r.cocommutative = false;
        for (std::int64_t j = 0; j < i; ++j)
            if (H.multiply(e(i), e(j)) != H.multiply(e(j), e(i)))
                r.commutative = false;
    }
    return r;
}

TensorElement apply_linear_to_slot(const TensorElement& t, int slot,
                                   const LinearMap& f) {
    if (slot < 0 || slot >= t.arity)
        throw dimension_error("slot out of range");
    if (f.domain != t.base_dim || f.codomain != t.base_dim)
        throw dimension_error("slot map must be square over the base");
    std::int64_t lo = tensor_pow(t.base_dim, t.arity - 1 - slot);
    std::int64_t d = t.base_dim;
    Acc acc;
    for (const auto& [idx, c] : t.coeffs.entries) {
        std::int64_t digit = (idx / lo) % d;
        std::int64_t rest = idx - digit * lo;
        for (const auto& [g, m] : f.columns[digit].entries)
            acc_add(acc, rest + g * lo, c * m);
    }
    TensorElement r(t.base_dim, t.arity);
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

TensorElement apply_comult_to_slot(const HopfAlgebra& H,
                                   const TensorElement& t, int slot,
                                   std::int64_t budget) {
    if (slot < 0 || slot >= t.arity)
        throw dimension_error("slot out of range");
    std::int64_t d = t.base_dim;
    std::int64_t lo = tensor_pow(d, t.arity - 1 - slot);
    TensorElement r(d, t.arity + 1);
    Acc acc;
    for (const auto& [idx, c] : t.coeffs.entries) {
        std::int64_t digit = (idx / lo) % d;
        std::int64_t hi = idx / (lo * d);
        std::int64_t rest = idx % lo;
        for (const auto& [pair_idx, m] : H.comult[digit].entries) {
            std::int64_t a = pair_idx / d, b = pair_idx % d;
            // hi | a b | rest
            std::int64_t out = ((hi * d + a) * d + b) * lo + rest;
            acc_add(acc, out, c * m);
        }
        check_budget((std::int64_t)acc.size(), budget, d, t.arity + 1);
    }
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

TensorElement contract_counit_slot(const HopfAlgebra& H,
                                   const TensorElement& t, int slot) {
    if (slot < 0 || slot >= t.arity)
        throw dimension_error("slot out of range");
    std::int64_t d = t.base_dim;
    std::int64_t lo = tensor_pow(d, t.arity - 1 - slot);
    TensorElement r(d, t.arity - 1);
    Acc acc;
    for (const auto& [idx, c] : t.coeffs.entries) {
        std::int64_t digit = (idx / lo) % d;
        std::int64_t hi = idx / (lo * d);
        std::int64_t rest = idx % lo;
        acc_add(acc, hi * lo + rest, c * H.counit.coeff(digit, H.field));
    }
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

TensorElement iterated_coproduct(const HopfAlgebra& H, const SparseVector& x,
                                 int n, std::int64_t budget) {
    if (n < 0) throw format_error("coproduct power must be non-negative");
    if (n == 0) return TensorElement::scalar(H.dim, H.counit_of(x));
    TensorElement t = TensorElement::from_vector(x);
    for (int k = 2; k <= n; ++k) t = apply_comult_to_slot(H, t, 0, budget);
    return t;
}

TensorElement delta_n(const HopfAlgebra& H, const SparseVector& x, int n,
                      std::int64_t budget) {
    if (n < 0) throw format_error("delta power must be non-negative");
    if (n == 0) return TensorElement::scalar(H.dim, H.counit_of(x));
    TensorElement t = iterated_coproduct(H, x, n, budget);
    LinearMap pi = pi_map(H);
    for (int k = 0; k < n; ++k) t = apply_linear_to_slot(t, k, pi);
    return t;
}

TensorElement unit_tensor(const HopfAlgebra& H, int n) {
    TensorElement t = TensorElement::scalar(H.dim, Scalar::one(H.field));
    for (int k = 0; k < n; ++k)
        t = outer(t, TensorElement::from_vector(H.unit));
    return t;
}

TensorElement delta_phi(const HopfAlgebra& H, const SparseVector& x,
                        const std::vector<int>& phi, int n,
                        std::int64_t budget) {
    for (std::size_t k = 0; k < phi.size(); ++k) {
        bool ordered = k == 0 || phi[k - 1] < phi[k];
        if (!ordered || phi[k] < 1 || phi[k] > n)
            throw format_error("phi must be a sorted subset of {1..n}");
    }
    TensorElement core = delta_n(H, x, (int)phi.size(), budget);
    // Interleave the |phi| computed slots with unit slots elsewhere.
    TensorElement r(H.dim, n);
    Acc acc;
    auto ones = unit_tensor(H, n - (int)phi.size());
    for (const auto& [idx, c] : core.coeffs.entries) {
        auto core_digits = tensor_digits(H.dim, (int)phi.size(), idx);
        for (const auto& [uidx, uc] : ones.coeffs.entries) {
            auto unit_digits =
                tensor_digits(H.dim, n - (int)phi.size(), uidx);
            std::vector<std::int64_t> digits(n);
            std::size_t pi = 0, ui = 0;
            for (int pos = 1; pos <= n; ++pos) {
                if (pi < phi.size() && phi[pi] == pos)
                    digits[pos - 1] = core_digits[pi++];
                else
                    digits[pos - 1] = unit_digits[ui++];
            }
            acc_add(acc, tensor_index(H.dim, digits), c * uc);
        }
    }
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

TensorElement multiply_tensor(const HopfAlgebra& H, const TensorElement& a,
                              const TensorElement& b) {
    if (a.arity != b.arity || a.base_dim != b.base_dim)
        throw dimension_error("tensor product arity mismatch");
    std::int64_t d = a.base_dim;
    TensorElement r(d, a.arity);
    Acc acc;
    for (const auto& [ia, ca] : a.coeffs.entries)
        for (const auto& [ib, cb] : b.coeffs.entries) {
            auto da = tensor_digits(d, a.arity, ia);
            auto db = tensor_digits(d, b.arity, ib);
            // Fold slot-wise products into a growing partial index set.
            std::vector<std::pair<std::int64_t, Scalar>> partial{
                {0, ca * cb}};
            for (int k = 0; k < a.arity; ++k) {
                std::vector<std::pair<std::int64_t, Scalar>> next;
                const auto& prod = H.mult[da[k]][db[k]];
                for (const auto& [pidx, pc] : partial)
                    for (const auto& [g, m] : prod.entries)
                        next.emplace_back(pidx * d + g, pc * m);
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (const auto& [pidx, pc] : partial) acc_add(acc, pidx, pc);
        }
    r.coeffs = acc_to_vector(r.coeffs.ambient, acc);
    return r;
}

Subspace primitives(const HopfAlgebra& H) {
    return kernel(H.primitive_defect_map());
}

bool is_group_like(const HopfAlgebra& H, const SparseVector& x) {
    if (!(H.counit_of(x) == Scalar::one(H.field))) return false;
    auto xx = outer(TensorElement::from_vector(x),
                    TensorElement::from_vector(x));
    return H.comult_of(x) == xx.coeffs;
}

bool delta_coassociativity(const HopfAlgebra& H, const SparseVector& x, int n,
                           int l, int s, std::int64_t budget) {
    if (n < 1 || l < 1 || s < 0 || s > n - 1)
        throw format_error("delta coassociativity needs n,l >= 1 and "
                           "0 <= s <= n-1");
    // id - u∘ε, applied slot-wise after expanding slot s by Δ^l.
    LinearMap pi(H.dim, H.dim, H.field);
    for (std::int64_t i = 0; i < H.dim; ++i) {
        Acc acc;
        acc_add(acc, i, Scalar::one(H.field));
        Scalar e = H.counit.coeff(i, H.field);
        if (!e.is_zero())
            for (const auto& [j, c] : H.unit.entries)
                acc_add(acc, j, -(e * c));
        pi.columns[(std::size_t)i] = acc_to_vector(H.dim, acc);
    }
    TensorElement lhs = delta_n(H, x, n, budget);
    for (int k = 1; k < l; ++k)
        lhs = apply_comult_to_slot(H, lhs, s, budget);
    for (int k = 0; k < l; ++k)
        lhs = apply_linear_to_slot(lhs, s + k, pi);
    return lhs == delta_n(H, x, n + l - 1, budget);
}

bool delta_product_expansion(const HopfAlgebra& H, const SparseVector& a,
                             const SparseVector& b, int n,
                             std::int64_t budget) {
    if (n < 1 || n > 20) throw format_error("subset expansion needs 1<=n<=20");
    TensorElement lhs = delta_n(H, H.multiply(a, b), n, budget);
    Acc acc;
    std::uint32_t full = (1u << n) - 1;
    auto slots = [&](std::uint32_t mask) {
        std::vector<int> phi;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) phi.push_back(k + 1);
        return phi;
    };
    for (std::uint32_t la = 0; la <= full; ++la) {
        TensorElement ta = delta_phi(H, a, slots(la), n, budget);
        // Y must cover the complement of Λ; the overlap ranges over Λ.
        std::uint32_t required = full & ~la;
        std::uint32_t sub = la;
        for (;;) {
            TensorElement tb = delta_phi(H, b, slots(required | sub), n,
                                         budget);
            TensorElement term = multiply_tensor(H, ta, tb);
            for (const auto& [idx, c] : term.coeffs.entries)
                acc_add(acc, idx, c);
            if (sub == 0) break;
            sub = (sub - 1) & la;
        }
    }
    return lhs.coeffs == acc_to_vector(lhs.coeffs.ambient, acc);
}

} // namespace crystal
