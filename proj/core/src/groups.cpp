#include "crystal/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crystal/errors.hpp"
#include "crystal/graded.hpp"

namespace crystal {

int FiniteGroup::power(int a, std::int64_t e) const {
    if (e < 0) return power(inv(a), -e);
    int r = identity;
    while (e--) r = op(r, a);
    return r;
}

int FiniteGroup::commutator(int a, int b) const {
    return op(op(a, b), op(inv(a), inv(b)));
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels) {
    FiniteGroup G;
    G.order = (std::int64_t)table.size();
    if (G.order == 0) throw format_error("empty group table");
    for (const auto& row : table) {
        if ((std::int64_t)row.size() != G.order)
            throw format_error("group table is not square");
        for (int v : row)
            if (v < 0 || v >= G.order)
                throw format_error("group table entry out of range");
    }
    G.table = std::move(table);
    // Identity.
    G.identity = -1;
    for (int e = 0; e < G.order; ++e) {
        bool ok = true;
        for (int a = 0; a < G.order && ok; ++a)
            ok = G.op(e, a) == a && G.op(a, e) == a;
        if (ok) {
            G.identity = e;
            break;
        }
    }
    if (G.identity < 0) throw format_error("group table has no identity");
    // Inverses.
    G.inverse.assign((std::size_t)G.order, -1);
    for (int a = 0; a < G.order; ++a) {
        for (int b = 0; b < G.order; ++b)
            if (G.op(a, b) == G.identity && G.op(b, a) == G.identity) {
                G.inverse[(std::size_t)a] = b;
                break;
            }
        if (G.inverse[(std::size_t)a] < 0)
            throw format_error("group table misses an inverse");
    }
    // Associativity.
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            for (int c = 0; c < G.order; ++c)
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    throw format_error("group table is not associative");
    if (labels.empty())
        for (int a = 0; a < G.order; ++a)
            G.labels.push_back(a == G.identity ? "1" : "g" + std::to_string(a));
    else {
        if ((std::int64_t)labels.size() != G.order)
            throw format_error("group label count mismatch");
        G.labels = std::move(labels);
    }
    return G;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int degree, std::int64_t order_cap) {
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    for (const auto& g : gens) {
        if ((int)g.size() != degree)
            throw format_error("permutation degree mismatch");
        std::vector<int> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v])
                throw format_error("not a permutation");
            seen[v] = 1;
        }
    }
    auto compose = [degree](const std::vector<int>& a,
                            const std::vector<int>& b) {
        std::vector<int> r(degree);
        for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
        return r;
    };
    std::set<std::vector<int>> closure{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = compose(x, g);
                if (closure.insert(y).second) {
                    if ((std::int64_t)closure.size() > order_cap)
                        throw resource_error(
                            "permutation closure exceeds the order cap " +
                            std::to_string(order_cap));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> elems(closure.begin(), closure.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    std::vector<std::vector<int>> table(elems.size(),
                                        std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            table[a][b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    for (const auto& e : elems) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i)
            s += (i ? " " : "") + std::to_string(e[i]);
        labels.push_back(s + ")");
    }
    return group_from_table(std::move(table), std::move(labels));
}

FiniteGroup trivial_group() { return group_from_table({{0}}, {"1"}); }

FiniteGroup cyclic_group(std::int64_t n) {
    std::vector<std::vector<int>> t((std::size_t)n, std::vector<int>((std::size_t)n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[(std::size_t)a][(std::size_t)b] = (int)((a + b) % n);
        labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    }
    return group_from_table(std::move(t), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    std::int64_t n = A.order * B.order;
    std::vector<std::vector<int>> t((std::size_t)n, std::vector<int>((std::size_t)n));
    std::vector<std::string> labels;
    auto idx = [&](int a, int b) { return a * (int)B.order + b; };
    for (int a1 = 0; a1 < A.order; ++a1)
        for (int b1 = 0; b1 < B.order; ++b1) {
            for (int a2 = 0; a2 < A.order; ++a2)
                for (int b2 = 0; b2 < B.order; ++b2)
                    t[(std::size_t)idx(a1, b1)][(std::size_t)idx(a2, b2)] =
                        idx(A.op(a1, a2), B.op(b1, b2));
            std::string la = A.labels[(std::size_t)a1], lb = B.labels[(std::size_t)b1];
            labels.push_back(la == "1" && lb == "1" ? "1"
                             : la == "1"            ? lb
                             : lb == "1"            ? la
                                                    : la + "," + lb);
        }
    return group_from_table(std::move(t), std::move(labels));
}

FiniteGroup product_of_cyclic_p_powers(std::uint64_t p,
                                       const std::vector<int>& exponents) {
    if (exponents.empty()) return trivial_group();
    std::int64_t pe = 1;
    for (int k = 0; k < exponents[0]; ++k) pe *= (std::int64_t)p;
    FiniteGroup G = cyclic_group(pe);
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        std::int64_t q = 1;
        for (int k = 0; k < exponents[i]; ++k) q *= (std::int64_t)p;
        G = direct_product(G, cyclic_group(q));
    }
    return G;
}

FiniteGroup semidirect_p(std::uint64_t p) {
    std::int64_t pp = (std::int64_t)(p * p);
    std::int64_t n = (std::int64_t)p * pp;
    auto idx = [&](std::int64_t a, std::int64_t b) { return (int)(a * pp + b); };
    // (1+p)^e mod p².
    auto act = [&](std::int64_t e) {
        std::int64_t r = 1;
        for (std::int64_t k = 0; k < e; ++k) r = (r * (1 + (std::int64_t)p)) % pp;
        return r;
    };
    std::vector<std::vector<int>> t((std::size_t)n, std::vector<int>((std::size_t)n));
    std::vector<std::string> labels;
    for (std::int64_t a1 = 0; a1 < (std::int64_t)p; ++a1)
        for (std::int64_t b1 = 0; b1 < pp; ++b1) {
            for (std::int64_t a2 = 0; a2 < (std::int64_t)p; ++a2)
                for (std::int64_t b2 = 0; b2 < pp; ++b2) {
                    // ν^{a1}τ^{b1} ν^{a2}τ^{b2} = ν^{a1+a2} τ^{b1(1+p)^{-a2}+b2}
                    std::int64_t conj = b1;
                    for (std::int64_t k = 0; k < a2; ++k) {
                        // apply ν⁻¹·τ^c·ν = τ^{c(1+p)^{p-1}} once per step
                        conj = (conj * act((std::int64_t)p - 1)) % pp;
                    }
                    t[(std::size_t)idx(a1, b1)][(std::size_t)idx(a2, b2)] =
                        idx((a1 + a2) % (std::int64_t)p, (conj + b2) % pp);
                }
            std::string l;
            if (a1 == 0 && b1 == 0) l = "1";
            else {
                if (a1 > 0) l += a1 == 1 ? "v" : "v^" + std::to_string(a1);
                if (b1 > 0) l += b1 == 1 ? "t" : "t^" + std::to_string(b1);
            }
            labels.push_back(l);
        }
    return group_from_table(std::move(t), std::move(labels));
}

FiniteGroup dihedral_group(int n) {
    std::int64_t order = 2 * n;
    auto idx = [&](int i, int j) { return j * n + i; };
    std::vector<std::vector<int>> t((std::size_t)order, std::vector<int>((std::size_t)order));
    std::vector<std::string> labels;
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    // r^{i1}s^{j1} r^{i2}s^{j2}; s r^i = r^{-i} s.
                    int i = j1 ? (i1 - i2 % n + n) % n : (i1 + i2) % n;
                    t[(std::size_t)idx(i1, j1)][(std::size_t)idx(i2, j2)] =
                        idx(i, j1 ^ j2);
                }
            std::string l;
            if (i1 == 0 && j1 == 0) l = "1";
            else {
                if (i1 > 0) l += i1 == 1 ? "r" : "r^" + std::to_string(i1);
                if (j1) l += "s";
            }
            labels.push_back(l);
        }
    return group_from_table(std::move(t), std::move(labels));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4)
        throw format_error("symmetric group supported only up to degree 4");
    if (n == 1) return trivial_group();
    std::vector<int> swap01(n), cycle(n);
    for (int i = 0; i < n; ++i) {
        swap01[i] = i;
        cycle[i] = (i + 1) % n;
    }
    std::swap(swap01[0], swap01[1]);
    return group_from_permutations({swap01, cycle}, n);
}

FiniteGroup quaternion_group() {
    // Elements ±1, ±i, ±j, ±k encoded as (axis, sign): index = 2*axis + (sign<0).
    auto mul = [](int x, int y) {
        int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
        static const int axis[4][4] = {{0, 1, 2, 3},
                                       {1, 0, 3, 2},
                                       {2, 3, 0, 1},
                                       {3, 2, 1, 0}};
        // Sign table of quaternion unit products.
        static const int neg[4][4] = {{0, 0, 0, 0},
                                      {0, 1, 0, 1},
                                      {0, 1, 1, 0},
                                      {0, 0, 1, 1}};
        int s = (sx + sy + neg[ax][ay]) % 2;
        return 2 * axis[ax][ay] + s;
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) t[(std::size_t)x][(std::size_t)y] = mul(x, y);
    return group_from_table(
        std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteMonoid monoid_from_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels) {
    FiniteMonoid M;
    M.order = (std::int64_t)table.size();
    if (M.order == 0) throw format_error("empty monoid table");
    for (const auto& row : table) {
        if ((std::int64_t)row.size() != M.order)
            throw format_error("monoid table is not square");
        for (int v : row)
            if (v < 0 || v >= M.order)
                throw format_error("monoid table entry out of range");
    }
    M.table = std::move(table);
    M.identity = -1;
    for (int e = 0; e < M.order; ++e) {
        bool ok = true;
        for (int a = 0; a < M.order && ok; ++a)
            ok = M.table[(std::size_t)e][(std::size_t)a] == a &&
                 M.table[(std::size_t)a][(std::size_t)e] == a;
        if (ok) {
            M.identity = e;
            break;
        }
    }
    if (M.identity < 0) throw format_error("monoid table has no identity");
    for (int a = 0; a < M.order; ++a)
        for (int b = 0; b < M.order; ++b)
            for (int c = 0; c < M.order; ++c)
                if (M.table[(std::size_t)M.table[(std::size_t)a][(std::size_t)b]][(std::size_t)c] !=
                    M.table[(std::size_t)a][(std::size_t)M.table[(std::size_t)b][(std::size_t)c]])
                    throw format_error("monoid table is not associative");
    if (labels.empty())
        for (int a = 0; a < M.order; ++a)
            M.labels.push_back(a == M.identity ? "1" : "m" + std::to_string(a));
    else
        M.labels = std::move(labels);
    return M;
}

const std::vector<int>& SubgroupSeries::at(std::int64_t n) const {
    if (n < 1) throw format_error("series index is 1-based");
    if (n > (std::int64_t)terms.size()) return terms.back();
    return terms[(std::size_t)(n - 1)];
}

std::vector<int> subgroup_generated(const FiniteGroup& G,
                                    std::vector<int> generators) {
    std::set<int> closure{G.identity};
    std::vector<int> frontier{G.identity};
    for (int g : generators)
        if (closure.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : closure) {
                for (int y : {G.op(x, g), G.op(g, x), G.inv(x)})
                    if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& subgroup) {
    std::set<int> s(subgroup.begin(), subgroup.end());
    for (int g = 0; g < G.order; ++g)
        for (int h : subgroup)
            if (!s.count(G.op(G.op(g, h), G.inv(g)))) return false;
    return true;
}

namespace {

void finish_series(const FiniteGroup& G, SubgroupSeries& s) {
    for (const auto& term : s.terms)
        if (!is_normal(G, term))
            throw theorem_error("series term is not normal");
    s.stable_index = (std::int64_t)s.terms.size() - 1;
}

} // namespace

SubgroupSeries lower_central_series(const FiniteGroup& G) {
    SubgroupSeries s;
    s.kind = SeriesKind::lower_central;
    std::vector<int> whole;
    for (int g = 0; g < G.order; ++g) whole.push_back(g);
    s.terms.push_back(whole);
    while (true) {
        const auto& prev = s.terms.back();
        std::vector<int> gens;
        for (int x = 0; x < G.order; ++x)
            for (int y : prev) gens.push_back(G.commutator(x, y));
        auto next = subgroup_generated(G, gens);
        bool stable = next == prev;
        s.terms.push_back(std::move(next));
        if (stable) break;
    }
    finish_series(G, s);
    return s;
}

SubgroupSeries p_lower_central_series(const FiniteGroup& G, std::uint64_t p) {
    Field check_prime(p); // validates primality
    (void)check_prime;
    SubgroupSeries lcs = lower_central_series(G);
    SubgroupSeries s;
    s.kind = SeriesKind::p_lower_central;
    auto term = [&](std::int64_t n) {
        std::vector<int> gens;
        for (std::int64_t k = 1; k <= n; ++k) {
            std::int64_t pl = 1;
            while (k * pl < n) pl *= (std::int64_t)p;
            for (int x : lcs.at(k)) gens.push_back(G.power(x, pl));
        }
        return subgroup_generated(G, gens);
    };
    // The series can plateau and then drop again (Z8 at p = 2 has orders
    // 8, 4, 2, 2, 1), so a first repeat is not a stabilization proof. Past
    // n = K * PL every factor G_(k)^{p^l} sits at its terminal value: the
    // lower central terms are stable beyond K and p-power subgroups are
    // constant once the exponent divides p^l.
    std::int64_t PL = 1;
    while (PL < G.order) PL *= (std::int64_t)p;
    std::int64_t horizon = (std::int64_t)lcs.terms.size() * PL + 1;
    std::vector<std::vector<int>> all;
    for (std::int64_t n = 1; n <= horizon; ++n) all.push_back(term(n));
    if (!(term(horizon + 1) == all.back()))
        throw theorem_error("p-central series stabilization certificate failed");
    std::size_t first_stable = all.size() - 1;
    while (first_stable > 0 && all[first_stable - 1] == all.back())
        --first_stable;
    all.resize(std::min(all.size(), first_stable + 2));
    s.terms = std::move(all);
    finish_series(G, s);
    // Strong centrality and elementary abelian quotients.
    for (std::size_t m = 1; m <= s.terms.size(); ++m)
        for (std::size_t k = 1; k <= s.terms.size(); ++k) {
            std::set<int> target(s.at((std::int64_t)(m + k)).begin(),
                                 s.at((std::int64_t)(m + k)).end());
            for (int x : s.at((std::int64_t)m))
                for (int y : s.at((std::int64_t)k))
                    if (!target.count(G.commutator(x, y)))
                        throw theorem_error("series is not strongly central");
        }
    for (std::size_t m = 1; m <= s.terms.size(); ++m) {
        std::set<int> next(s.at((std::int64_t)m + 1).begin(),
                           s.at((std::int64_t)m + 1).end());
        for (int x : s.at((std::int64_t)m))
            if (!next.count(G.power(x, (std::int64_t)p)))
                throw theorem_error("p-th powers escape the next series term");
    }
    return s;
}

SubgroupSeries dimension_subgroups(const FiniteGroup& G, Field field) {
    HopfAlgebra H = build_group_algebra(G, field);
    Filtration j = jadic_filtration(H);
    SubgroupSeries s;
    s.kind = SeriesKind::dimension_subgroups;
    auto eta = [&](int g) {
        SparseVector v(G.order);
        if (g != G.identity) {
            std::int64_t lo = std::min(g, G.identity), hi = std::max(g, G.identity);
            v.entries.emplace_back(lo, g < G.identity ? Scalar::one(field)
                                                      : -Scalar::one(field));
            v.entries.emplace_back(hi, g < G.identity ? -Scalar::one(field)
                                                      : Scalar::one(field));
        }
        return v;
    };
    // The terms can plateau and drop again while the J-chain keeps
    // shrinking, so run through the chain's own stabilization point.
    std::int64_t horizon = std::max<std::int64_t>(j.stable_index + 1, 2);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        std::vector<int> term;
        for (int g = 0; g < G.order; ++g)
            if (j.at(n).contains(eta(g))) term.push_back(g);
        std::set<int> tset(term.begin(), term.end());
        for (int a : term)
            for (int b : term)
                if (!tset.count(G.op(a, b)))
                    throw theorem_error("dimension subgroup is not a subgroup");
        s.terms.push_back(std::move(term));
    }
    std::size_t first_stable = s.terms.size() - 1;
    while (first_stable > 0 && s.terms[first_stable - 1] == s.terms.back())
        --first_stable;
    s.terms.resize(std::min(s.terms.size(), first_stable + 2));
    finish_series(G, s);
    return s;
}

namespace {

// Exponents of x over reps modulo `next`; brute force over GF(p) vectors.
std::vector<int> coset_dlog(const FiniteGroup& G, std::uint64_t p, int x,
                            const std::vector<int>& reps,
                            const std::set<int>& next) {
    std::vector<int> exps(reps.size(), 0);
    while (true) {
        int y = G.identity;
        for (std::size_t i = 0; i < reps.size(); ++i)
            y = G.op(y, G.power(reps[i], exps[i]));
        if (next.count(G.op(x, G.inv(y)))) return exps;
        // Increment the exponent vector in base p.
        std::size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < (int)p) break;
            exps[i] = 0;
        }
        if (i == exps.size())
            throw theorem_error("coset representatives fail to span");
    }
}

} // namespace

JenningsNet jennings_net_and_weights(const FiniteGroup& G, std::uint64_t p) {
    SubgroupSeries s = p_lower_central_series(G, p);
    JenningsNet net;
    net.p = p;
    net.stable_term = s.terms.back();
    for (std::int64_t k = 1;; ++k) {
        const auto& cur = s.at(k);
        const auto& nxt = s.at(k + 1);
        if (cur == net.stable_term) break;
        std::set<int> nxts(nxt.begin(), nxt.end());
        std::vector<int> reps;
        for (int g : cur) {
            if (nxts.count(g)) continue;
            // Is g independent of the chosen reps modulo nxt?
            bool dependent = true;
            try {
                coset_dlog(G, p, g, reps, nxts);
            } catch (const theorem_error&) {
                dependent = false;
            }
            if (!dependent) reps.push_back(g);
        }
        // Verify the reps give a GF(p)-basis of the quotient.
        std::size_t count = 1;
        for (std::size_t i = 0; i < reps.size(); ++i) count *= (std::size_t)p;
        if (count * nxt.size() != cur.size())
            throw theorem_error("series quotient is not elementary abelian");
        net.reps_by_weight.push_back(std::move(reps));
    }
    return net;
}

std::vector<std::pair<int, int>> JenningsNet::flat() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t w = 0; w < reps_by_weight.size(); ++w)
        for (int g : reps_by_weight[w]) out.emplace_back(g, (int)w + 1);
    return out;
}

GradedLieRing p_graded_lie_ring(const FiniteGroup& G, std::uint64_t p) {
    SubgroupSeries s = p_lower_central_series(G, p);
    JenningsNet net = jennings_net_and_weights(G, p);
    GradedLieRing L;
    L.field = Field(p);
    auto flat = net.flat();
    for (auto [g, w] : flat) {
        L.basis_elements.push_back(g);
        L.weights.push_back(w);
    }
    std::int64_t n = (std::int64_t)flat.size();
    int max_w = (int)net.reps_by_weight.size();
    auto class_of = [&](int x, int weight) {
        // Class of x in G_[weight]/G_[weight+1] in Lie coordinates.
        SparseVector v(n);
        if (weight > max_w) {
            if (!std::count(net.stable_term.begin(), net.stable_term.end(), x))
                throw theorem_error("graded Lie value escapes its weight");
            return v;
        }
        const auto& nxt = s.at(weight + 1);
        std::set<int> nxts(nxt.begin(), nxt.end());
        if (nxts.count(x)) return v;
        const auto& reps = net.reps_by_weight[(std::size_t)(weight - 1)];
        auto exps = coset_dlog(G, p, x, reps, nxts);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (exps[i] == 0) continue;
            std::int64_t pos = 0;
            while (flat[(std::size_t)pos] !=
                   std::make_pair(reps[i], weight))
                ++pos;
            v.entries.emplace_back(pos, Scalar(L.field, exps[i]));
        }
        std::sort(v.entries.begin(), v.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };
    L.bracket.assign((std::size_t)n, std::vector<SparseVector>((std::size_t)n, SparseVector(n)));
    L.p_operation.assign((std::size_t)n, SparseVector(n));
    for (std::int64_t i = 0; i < n; ++i) {
        auto [gi, wi] = flat[(std::size_t)i];
        for (std::int64_t j = 0; j < n; ++j) {
            auto [gj, wj] = flat[(std::size_t)j];
            L.bracket[(std::size_t)i][(std::size_t)j] =
                class_of(G.commutator(gi, gj), wi + wj);
        }
        L.p_operation[(std::size_t)i] =
            class_of(G.power(gi, (std::int64_t)p), (int)p * wi);
    }
    return L;
}

HopfAlgebra build_group_algebra(const FiniteGroup& G, Field field) {
    HopfAlgebra H;
    H.field = field;
    H.dim = G.order;
    H.labels = G.labels;
    H.mult.assign((std::size_t)G.order,
                  std::vector<SparseVector>((std::size_t)G.order, SparseVector(G.order)));
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            H.mult[(std::size_t)a][(std::size_t)b] =
                SparseVector::unit(G.order, G.op(a, b), field);
    H.unit = SparseVector::unit(G.order, G.identity, field);
    H.comult.assign((std::size_t)G.order, SparseVector(G.order * G.order));
    for (int a = 0; a < G.order; ++a)
        H.comult[(std::size_t)a] = SparseVector::unit(
            G.order * G.order, (std::int64_t)a * G.order + a, field);
    H.counit = SparseVector(G.order);
    for (int a = 0; a < G.order; ++a)
        H.counit.entries.emplace_back(a, Scalar::one(field));
    LinearMap S(G.order, G.order, field);
    for (int a = 0; a < G.order; ++a)
        S.columns[(std::size_t)a] = SparseVector::unit(G.order, G.inv(a), field);
    H.antipode = std::move(S);
    return H;
}

HopfAlgebra build_function_algebra(const FiniteGroup& G, Field field) {
    HopfAlgebra H;
    H.field = field;
    H.dim = G.order;
    for (int a = 0; a < G.order; ++a)
        H.labels.push_back("f(" + G.labels[(std::size_t)a] + ")");
    H.mult.assign((std::size_t)G.order,
                  std::vector<SparseVector>((std::size_t)G.order, SparseVector(G.order)));
    for (int a = 0; a < G.order; ++a)
        H.mult[(std::size_t)a][(std::size_t)a] =
            SparseVector::unit(G.order, a, field);
    H.unit = SparseVector(G.order);
    for (int a = 0; a < G.order; ++a)
        H.unit.entries.emplace_back(a, Scalar::one(field));
    H.comult.assign((std::size_t)G.order, SparseVector(G.order * G.order));
    for (int g = 0; g < G.order; ++g) {
        SparseVector d(G.order * G.order);
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b)
                if (G.op(a, b) == g)
                    d.entries.emplace_back((std::int64_t)a * G.order + b,
                                           Scalar::one(field));
        std::sort(d.entries.begin(), d.entries.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        H.comult[(std::size_t)g] = std::move(d);
    }
    H.counit = SparseVector::unit(G.order, G.identity, field);
    LinearMap S(G.order, G.order, field);
    for (int a = 0; a < G.order; ++a)
        S.columns[(std::size_t)a] = SparseVector::unit(G.order, G.inv(a), field);
    H.antipode = std::move(S);
    return H;
}

HopfAlgebra build_monoid_bialgebra(const FiniteMonoid& M, Field field) {
    HopfAlgebra H;
    H.field = field;
    H.dim = M.order;
    H.labels = M.labels;
    H.mult.assign((std::size_t)M.order,
                  std::vector<SparseVector>((std::size_t)M.order, SparseVector(M.order)));
    for (int a = 0; a < M.order; ++a)
        for (int b = 0; b < M.order; ++b)
            H.mult[(std::size_t)a][(std::size_t)b] = SparseVector::unit(
                M.order, M.table[(std::size_t)a][(std::size_t)b], field);
    H.unit = SparseVector::unit(M.order, M.identity, field);
    H.comult.assign((std::size_t)M.order, SparseVector(M.order * M.order));
    for (int a = 0; a < M.order; ++a)
        H.comult[(std::size_t)a] = SparseVector::unit(
            M.order * M.order, (std::int64_t)a * M.order + a, field);
    H.counit = SparseVector(M.order);
    for (int a = 0; a < M.order; ++a)
        H.counit.entries.emplace_back(a, Scalar::one(field));
    return H;
}

void validate_restricted_lie(const RestrictedLieInput& g) {
    if (g.field.characteristic == 0)
        throw format_error("restricted Lie data requires positive characteristic");
    std::int64_t n = g.dim;
    if ((std::int64_t)g.bracket.size() != n ||
        (std::int64_t)g.p_operation.size() != n)
        throw format_error("restricted Lie constant tables have wrong size");
    auto br = [&](const SparseVector& x, const SparseVector& y) {
        SparseVector r(n);
        for (const auto& [i, a] : x.entries)
            for (const auto& [j, b] : y.entries)
                axpy(r, a * b, g.bracket[(std::size_t)i][(std::size_t)j]);
        return r;
    };
    auto e = [&](std::int64_t i) { return SparseVector::unit(n, i, g.field); };
    for (std::int64_t i = 0; i < n; ++i) {
        if (!br(e(i), e(i)).is_zero())
            throw axiom_error("bracket is not alternating");
        for (std::int64_t j = 0; j < n; ++j) {
            auto anti = add(br(e(i), e(j)), br(e(j), e(i)));
            if (!anti.is_zero()) throw axiom_error("bracket is not antisymmetric");
            for (std::int64_t k = 0; k < n; ++k) {
                SparseVector jac(n);
                axpy(jac, Scalar::one(g.field), br(e(i), br(e(j), e(k))));
                axpy(jac, Scalar::one(g.field), br(e(j), br(e(k), e(i))));
                axpy(jac, Scalar::one(g.field), br(e(k), br(e(i), e(j))));
                if (!jac.is_zero()) throw axiom_error("Jacobi identity fails");
            }
        }
    }
    // ad(x^{[p]}) = ad(x)^p on basis pairs.
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            SparseVector lhs = br(g.p_operation[(std::size_t)i], e(j));
            SparseVector rhs = e(j);
            for (std::uint64_t k = 0; k < g.field.characteristic; ++k)
                rhs = br(e(i), rhs);
            axpy(lhs, -Scalar::one(g.field), rhs);
            if (!lhs.is_zero())
                throw axiom_error("p-operation incompatible with ad powers");
        }
}

namespace {

// PBW straightening engine for u(g): monomial index is the base-p encoding
// of the exponent vector, most significant digit first.
struct Rewriter {
    const RestrictedLieInput& g;
    std::int64_t k;
    std::int64_t p;
    std::int64_t dim;
    std::vector<std::int64_t> place; // place[i] = p^{k-1-i}
    std::map<std::pair<std::int64_t, int>, SparseVector> memo;
    std::int64_t steps = 0;

    explicit Rewriter(const RestrictedLieInput& lie)
        : g(lie), k(lie.dim), p((std::int64_t)lie.field.characteristic) {
        dim = 1;
        for (std::int64_t i = 0; i < k; ++i) dim *= p;
        place.resize((std::size_t)k);
        for (std::int64_t i = 0; i < k; ++i) {
            std::int64_t v = 1;
            for (std::int64_t j = i + 1; j < k; ++j) v *= p;
            place[(std::size_t)i] = v;
        }
    }

    int exponent(std::int64_t idx, int gen) const {
        return (int)((idx / place[(std::size_t)gen]) % p);
    }

    SparseVector elem_times_gen(const SparseVector& e, int gen) {
        SparseVector r(dim);
        for (const auto& [idx, c] : e.entries)
            axpy(r, c, mono_times_gen(idx, gen));
        return r;
    }

    const SparseVector& mono_times_gen(std::int64_t idx, int gen) {
        auto key = std::make_pair(idx, gen);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (++steps > 2'000'000)
            throw axiom_error(
                "monomial rewriting did not terminate; Lie constants invalid");
        // Largest generator present that must commute past x_gen.
        int j = -1;
        for (int t = k - 1; t > gen; --t)
            if (exponent(idx, t) > 0) {
                j = t;
                break;
            }
        SparseVector result(dim);
        if (j < 0) {
            if (exponent(idx, gen) + 1 < p) {
                result = SparseVector::unit(dim, idx + place[(std::size_t)gen],
                                            g.field);
            } else {
                // x_gen^p -> x_gen^{[p]} as a linear combination of generators.
                std::int64_t prefix =
                    idx - (p - 1) * place[(std::size_t)gen];
                for (const auto& [h, c] : g.p_operation[(std::size_t)gen].entries)
                    axpy(result, c, mono_times_gen(prefix, (int)h));
            }
        } else {
            std::int64_t stripped = idx - place[(std::size_t)j];
            // (C·x_gen)·x_j
            SparseVector t1 =
                elem_times_gen(mono_times_gen(stripped, gen), j);
            axpy(result, Scalar::one(g.field), t1);
            // C·[x_j, x_gen]
            for (const auto& [h, c] :
                 g.bracket[(std::size_t)j][(std::size_t)gen].entries)
                axpy(result, c, mono_times_gen(stripped, (int)h));
        }
        return memo.emplace(key, std::move(result)).first->second;
    }
};

std::string monomial_label(const RestrictedLieInput& g, const Rewriter& rw,
                           std::int64_t idx) {
    if (idx == 0) return "1";
    std::string s;
    for (int i = 0; i < g.dim; ++i) {
        int e = rw.exponent(idx, i);
        if (e == 0) continue;
        if (!s.empty()) s += " ";
        std::string name = i < (int)g.labels.size()
                               ? g.labels[(std::size_t)i]
                               : "x" + std::to_string(i + 1);
        s += e == 1 ? name : name + "^" + std::to_string(e);
    }
    return s;
}

} // namespace

HopfAlgebra build_restricted_enveloping(const RestrictedLieInput& g,
                                        std::int64_t dim_cap) {
    if (g.dim > dim_cap)
        throw resource_error("restricted Lie dimension exceeds the cap " +
                             std::to_string(dim_cap));
    validate_restricted_lie(g);
    Rewriter rw(g);
    std::int64_t d = rw.dim;
    HopfAlgebra H;
    H.field = g.field;
    H.dim = d;
    for (std::int64_t idx = 0; idx < d; ++idx)
        H.labels.push_back(monomial_label(g, rw, idx));
    H.mult.assign((std::size_t)d, std::vector<SparseVector>((std::size_t)d, SparseVector(d)));
    for (std::int64_t a = 0; a < d; ++a)
        for (std::int64_t b = 0; b < d; ++b) {
            SparseVector prod = SparseVector::unit(d, a, g.field);
            for (int i = 0; i < g.dim; ++i)
                for (int rep = 0; rep < rw.exponent(b, i); ++rep)
                    prod = rw.elem_times_gen(prod, i);
            H.mult[(std::size_t)a][(std::size_t)b] = std::move(prod);
        }
    H.unit = SparseVector::unit(d, 0, g.field);
    // Generators are primitive; Δ(monomial) = Π (x_i⊗1 + 1⊗x_i)^{e_i}.
    H.comult.assign((std::size_t)d, SparseVector(d * d));
    for (std::int64_t b = 0; b < d; ++b) {
        TensorElement t = unit_tensor(H, 2);
        for (int i = 0; i < g.dim; ++i) {
            std::int64_t xi = rw.place[(std::size_t)i];
            TensorElement prim(d, 2);
            prim.coeffs.entries.emplace_back(xi * d + 0, Scalar::one(g.field));
            prim.coeffs.entries.emplace_back(xi, Scalar::one(g.field));
            std::sort(prim.coeffs.entries.begin(), prim.coeffs.entries.end(),
                      [](const auto& x, const auto& y) {
                          return x.first < y.first;
                      });
            for (int rep = 0; rep < rw.exponent(b, i); ++rep)
                t = multiply_tensor(H, t, prim);
        }
        H.comult[(std::size_t)b] = t.coeffs;
    }
    H.counit = SparseVector::unit(d, 0, g.field);
    // S(x_i) = -x_i extended as an anti-homomorphism.
    LinearMap S(d, d, g.field);
    for (std::int64_t b = 0; b < d; ++b) {
        SparseVector img = SparseVector::unit(d, 0, g.field);
        int total = 0;
        for (int i = g.dim - 1; i >= 0; --i) {
            int e = rw.exponent(b, i);
            total += e;
            for (int rep = 0; rep < e; ++rep) img = rw.elem_times_gen(img, i);
        }
        if (total % 2 == 1) img = img.scaled(-Scalar::one(g.field));
        S.columns[(std::size_t)b] = std::move(img);
    }
    H.antipode = std::move(S);
    // Generators must land in the primitives.
    Subspace prim = primitives(H);
    for (int i = 0; i < g.dim; ++i)
        if (!prim.contains(SparseVector::unit(d, rw.place[(std::size_t)i], g.field)))
            throw theorem_error("enveloping generators are not primitive");
    return H;
}

JenningsHallReport jennings_hall_check(const FiniteGroup& G, std::uint64_t p) {
    Field f(p);
    JenningsHallReport rep;

    // (a) dimension subgroups against the p-lower central series.
    SubgroupSeries ds = dimension_subgroups(G, f);
    SubgroupSeries pls = p_lower_central_series(G, p);
    std::int64_t depth =
        (std::int64_t)std::max(ds.terms.size(), pls.terms.size()) + 1;
    for (std::int64_t n = 1; n <= depth; ++n)
        if (ds.at(n) != pls.at(n))
            throw theorem_error("dimension subgroups and p-series differ at " +
                                std::to_string(n));
    rep.series_match = true;

    HopfAlgebra H = build_group_algebra(G, f);
    Filtration j = jadic_filtration(H);
    JenningsNet net = jennings_net_and_weights(G, p);
    auto flat = net.flat();
    auto eta = [&](int g) {
        SparseVector v = SparseVector::unit(G.order, g, f);
        axpy(v, -Scalar::one(f), SparseVector::unit(G.order, G.identity, f));
        return v;
    };

    // (b) ordered net monomials of weight n span Jⁿ modulo Jⁿ⁺¹.
    std::int64_t maxw = 0;
    for (auto [b, w] : flat) maxw += (std::int64_t)(p - 1) * w;
    std::int64_t top = std::max(maxw, j.stable_index) + 1;
    std::vector<std::int64_t> counts((std::size_t)top + 1, 0);
    std::vector<Echelon> spans;
    for (std::int64_t n = 0; n <= top; ++n) {
        Echelon e(f, G.order);
        for (const auto& row : j.at(n + 1).basis) e.add(row);
        spans.push_back(std::move(e));
    }
    std::vector<int> exps(flat.size(), 0);
    while (true) {
        std::int64_t w = 0;
        for (std::size_t i = 0; i < flat.size(); ++i)
            w += (std::int64_t)exps[i] * flat[i].second;
        if (w <= top) {
            ++counts[(std::size_t)w];
            SparseVector m = H.unit;
            for (std::size_t i = 0; i < flat.size(); ++i)
                for (int r = 0; r < exps[i]; ++r)
                    m = H.multiply(m, eta(flat[i].first));
            spans[(std::size_t)w].add(std::move(m));
        }
        std::size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < (int)p) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
    for (std::int64_t n = 0; n <= top; ++n) {
        std::int64_t gdim = j.at(n).dim() - j.at(n + 1).dim();
        if (n < j.stable_index) rep.graded_dims.push_back(gdim);
        if (counts[(std::size_t)n] != gdim)
            throw theorem_error("net monomial count differs from graded "
                                "dimension at " + std::to_string(n));
        if (!(spans[(std::size_t)n].to_subspace() == j.at(n)))
            throw theorem_error("net monomials fail to span J^n at " +
                                std::to_string(n));
    }
    rep.monomial_counts.assign(counts.begin(),
                               counts.begin() + rep.graded_dims.size());
    rep.monomial_bases_match = true;

    // (e) classes η̄_b realize the graded Lie ring inside the primitives.
    GradedBialgebraData g = graded_from_filtration(H, j);
    std::vector<std::int64_t> offset(g.components.size() + 1, 0);
    for (std::size_t c = 0; c < g.components.size(); ++c)
        offset[c + 1] = offset[c] + g.components[c].dim;
    std::int64_t gdim = g.dim();
    LinearMap T(G.order, G.order, f);
    T.columns.clear();
    for (const auto& c : g.components)
        for (const auto& col : c.section.columns) T.columns.push_back(col);
    for (const auto& row : j.at(j.stable_index).basis) T.columns.push_back(row);
    LinearMap Tinv = inverse(T);
    auto class_of = [&](const SparseVector& x, std::int64_t w) {
        SparseVector full = Tinv.apply(x);
        SparseVector cls(gdim);
        for (const auto& [i, c] : full.entries) {
            if (i >= gdim) continue; // stable-term coordinates
            if (i < offset[(std::size_t)w])
                throw theorem_error("class has a component below its weight");
            if (i < offset[(std::size_t)w + 1]) cls.push(i, c);
        }
        return cls;
    };
    GradedLieRing L = p_graded_lie_ring(G, p);
    Subspace prim = primitives(g.total);
    if ((std::int64_t)flat.size() != prim.dim())
        throw theorem_error("net size differs from the primitive dimension");
    Echelon indep(f, gdim);
    std::vector<SparseVector> cls;
    for (auto [b, w] : flat) {
        cls.push_back(class_of(eta(b), w));
        if (!prim.contains(cls.back()))
            throw theorem_error("class of a net element is not primitive");
        if (!indep.add(cls.back()))
            throw theorem_error("classes of net elements are dependent");
    }
    auto combine = [&](const SparseVector& coeffs) {
        SparseVector out(gdim);
        for (const auto& [k, c] : coeffs.entries)
            axpy(out, c, cls[(std::size_t)k]);
        return out;
    };
    for (std::size_t a = 0; a < flat.size(); ++a)
        for (std::size_t b = 0; b < flat.size(); ++b) {
            SparseVector got = g.total.multiply(cls[a], cls[b]);
            axpy(got, -Scalar::one(f), g.total.multiply(cls[b], cls[a]));
            if (!(got == combine(L.bracket[a][b])))
                throw theorem_error("graded bracket differs from the group "
                                    "commutator constants");
        }
    for (std::size_t a = 0; a < flat.size(); ++a)
        if (!(g.total.power(cls[a], p) == combine(L.p_operation[a])))
            throw theorem_error("graded p-th power differs from the group "
                                "p-power constants");
    rep.lie_isomorphism = true;

    // (f) J^∞ is the ideal on G_∞ and k[G]/J^∞ is the quotient group algebra.
    Echelon ideal(f, G.order);
    for (int a = 0; a < G.order; ++a)
        for (int gamma : net.stable_term) {
            SparseVector v = SparseVector::unit(G.order, G.op(a, gamma), f);
            axpy(v, -Scalar::one(f), SparseVector::unit(G.order, a, f));
            ideal.add(std::move(v));
        }
    if (!(ideal.to_subspace() == j.at(j.stable_index)))
        throw theorem_error("stable augmentation power is not the ideal "
                            "generated by the stable subgroup");
    QuotientHopf v = h_vee(H);
    std::set<int> ginf(net.stable_term.begin(), net.stable_term.end());
    std::vector<SparseVector> q;
    for (int a = 0; a < G.order; ++a)
        q.push_back(v.projection.apply(SparseVector::unit(G.order, a, f)));
    std::int64_t distinct = 0;
    for (int a = 0; a < G.order; ++a) {
        if (!is_group_like(v.quotient, q[(std::size_t)a]))
            throw theorem_error("separated quotient image is not group-like");
        bool fresh = true;
        for (int b = 0; b < a; ++b)
            if (q[(std::size_t)a] == q[(std::size_t)b]) fresh = false;
        if (fresh) ++distinct;
        for (int b = 0; b < G.order; ++b) {
            bool same = ginf.count(G.op(G.inv(a), b)) != 0;
            if ((q[(std::size_t)a] == q[(std::size_t)b]) != same)
                throw theorem_error("separated quotient does not identify "
                                    "exactly the stable cosets");
            if (!(v.quotient.multiply(q[(std::size_t)a], q[(std::size_t)b]) ==
                  q[(std::size_t)G.op(a, b)]))
                throw theorem_error("separated quotient is not the quotient "
                                    "group algebra");
        }
    }
    if (distinct != v.quotient.dim)
        throw theorem_error("separated quotient dimension differs from the "
                            "coset count");
    rep.separated_quotient_match = true;
    return rep;
}

} // namespace crystal
