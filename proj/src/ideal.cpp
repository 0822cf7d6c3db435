#include "toric/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_map>

namespace toric {

int VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

void VariableSet::validate() const {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw validation_error("duplicate variable name: " + n);
    if (!group.empty() && group.size() != names.size())
        throw validation_error("variable group tags must cover all variables");
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
    MonomialOrder o;
    o.kind_ = Kind::Grevlex;
    o.n_ = n;
    return o;
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.n_ = n;
    return o;
}

MonomialOrder MonomialOrder::block_elimination(std::vector<char> elim) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.n_ = elim.size();
    o.elim_ = std::move(elim);
    return o;
}

MonomialOrder MonomialOrder::saturating(std::size_t cheap, std::vector<long long> weights) {
    MonomialOrder o;
    o.kind_ = Kind::SatCheapest;
    o.n_ = weights.size();
    o.cheap_ = cheap;
    o.weights_ = std::move(weights);
    for (long long w : o.weights_)
        if (w <= 0) throw validation_error("saturating order needs strictly positive weights");
    if (cheap >= o.n_) throw validation_error("saturating order: variable out of range");
    return o;
}

namespace {

inline int sign_of(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Reverse-lexicographic scan: last differing coordinate, smaller entry wins.
inline int revlex_scan(const Expo& a, const Expo& b, std::size_t n) {
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline int revlex_scan_masked(const Expo& a, const Expo& b, const std::vector<char>& mask, char want) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if ((mask[i] != 0) == (want != 0) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Expo& a, const Expo& b) const {
    switch (kind_) {
    case Kind::Grevlex: {
        int c = sign_of(degree(a) - degree(b));
        if (c != 0) return c;
        return revlex_scan(a, b, n_);
    }
    case Kind::Lex: {
        for (std::size_t i = 0; i < n_; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    case Kind::Block: {
        long long da = 0, db = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (elim_[i]) { da += a[i]; db += b[i]; }
        if (int c = sign_of(da - db)) return c;
        if (int c = revlex_scan_masked(a, b, elim_, 1)) return c;
        long long ka = 0, kb = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (!elim_[i]) { ka += a[i]; kb += b[i]; }
        if (int c = sign_of(ka - kb)) return c;
        return revlex_scan_masked(a, b, elim_, 0);
    }
    case Kind::SatCheapest: {
        long long wa = 0, wb = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            wa += weights_[i] * a[i];
            wb += weights_[i] * b[i];
        }
        if (int c = sign_of(wa - wb)) return c;
        // less of the cheap variable => larger monomial
        if (a[cheap_] != b[cheap_]) return a[cheap_] < b[cheap_] ? 1 : -1;
        long long da = 0, db = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (i != cheap_) { da += a[i]; db += b[i]; }
        if (int c = sign_of(da - db)) return c;
        for (std::size_t i = n_; i-- > 0;) {
            if (i == cheap_) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    }
    return 0;
}

Budget Budget::with_time_limit(double seconds) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::microseconds(static_cast<long long>(seconds * 1e6));
    b.has_deadline = true;
    return b;
}

void Budget::check(std::size_t basis_size) const {
    if (max_basis && basis_size > max_basis)
        throw resource_error("basis size limit exceeded");
    if (has_deadline && std::chrono::steady_clock::now() > deadline)
        throw resource_error("time limit exceeded");
}

std::optional<Binomial> canonical(Binomial b, const MonomialOrder& order) {
    int c = order.compare(b.plus, b.minus);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(b.plus, b.minus);
    return b;
}

std::optional<Binomial> reduce_binomial(Binomial b, const std::vector<Binomial>& basis,
                                        const MonomialOrder& order) {
    for (;;) {
        int c = order.compare(b.plus, b.minus);
        if (c == 0) return std::nullopt;
        if (c < 0) std::swap(b.plus, b.minus);

        bool hit = false;
        for (const Binomial& f : basis) {
            if (expo_divides(f.plus, b.plus)) {
                b.plus = expo_add(expo_sub(b.plus, f.plus), f.minus);
                hit = true;
                break;
            }
        }
        if (hit) continue;
        for (const Binomial& f : basis) {
            if (expo_divides(f.plus, b.minus)) {
                b.minus = expo_add(expo_sub(b.minus, f.plus), f.minus);
                hit = true;
                break;
            }
        }
        if (!hit) return b;
    }
}

Expo reduce_monomial(Expo m, const GroebnerBasis& gb) {
    bool hit = true;
    while (hit) {
        hit = false;
        for (const Binomial& f : gb.elements) {
            if (expo_divides(f.plus, m)) {
                m = expo_add(expo_sub(m, f.plus), f.minus);
                hit = true;
                break;
            }
        }
    }
    return m;
}

std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb) {
    Expo p = reduce_monomial(b.plus, gb);
    Expo m = reduce_monomial(b.minus, gb);
    if (p == m) return std::nullopt;
    return canonical(Binomial{std::move(p), std::move(m)}, gb.order);
}

namespace {

struct SPair {
    int i, j;
    Expo lcm;
    int deg;
};

struct SPairCmp {
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return a.lcm < b.lcm;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using PairSet = std::set<SPair, SPairCmp>;

// Gebauer-Moeller update: install pairs of the new element h = G[t],
// pruning by the coprime, M and F criteria, and filter old pairs by the
// chain criterion.
void update_pairs(const std::vector<Binomial>& G, PairSet& pairs, int t) {
    const Expo& ht = G[t].plus;
    int m = t;
    std::vector<Expo> lcm(m);
    for (int i = 0; i < m; ++i) lcm[i] = expo_max(G[i].plus, ht);

    // inC: not yet processed, inD: provisionally kept
    std::vector<char> inC(m, 1), inD(m, 0);
    for (int i = 0; i < m; ++i) {
        inC[i] = 0;
        bool keep = expo_coprime(G[i].plus, ht);
        if (!keep) {
            bool dominated = false;
            for (int j = 0; j < m && !dominated; ++j) {
                if (j == i || !(inC[j] || inD[j])) continue;
                if (expo_divides(lcm[j], lcm[i])) dominated = true;
            }
            keep = !dominated;
        }
        if (keep) inD[i] = 1;
    }

    // chain criterion on the old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
        const SPair& p = *it;
        if (expo_divides(ht, p.lcm) && expo_max(G[p.i].plus, ht) != p.lcm &&
            expo_max(G[p.j].plus, ht) != p.lcm)
            it = pairs.erase(it);
        else
            ++it;
    }

    // coprime pairs served only to dominate others
    for (int i = 0; i < m; ++i)
        if (inD[i] && !expo_coprime(G[i].plus, ht))
            pairs.insert(SPair{i, t, lcm[i], degree(lcm[i])});
}

Binomial spoly(const Binomial& f, const Binomial& g, const Expo& lcm) {
    return Binomial{expo_add(expo_sub(lcm, g.plus), g.minus),
                    expo_add(expo_sub(lcm, f.plus), f.minus)};
}

// Minimal then reduced basis; elements sorted by lead ascending.
std::vector<Binomial> reduce_basis(std::vector<Binomial> G, const MonomialOrder& order) {
    std::vector<Binomial> out;
    for (auto& g : G) {
        auto c = canonical(std::move(g), order);
        if (c) out.push_back(std::move(*c));
    }
    std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
        int c = order.compare(a.plus, b.plus);
        if (c != 0) return c < 0;
        return order.compare(a.minus, b.minus) < 0;
    });

    // a divisor is order-<= its multiples, so one ascending pass suffices
    std::vector<Binomial> min;
    for (auto& g : out) {
        bool redundant = false;
        for (const auto& h : min)
            if (expo_divides(h.plus, g.plus)) {
                redundant = true;
                break;
            }
        if (!redundant) min.push_back(std::move(g));
    }

    GroebnerBasis view{order, min};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < view.elements.size(); ++i) {
            Expo nf = reduce_monomial(view.elements[i].minus, view);
            if (nf != view.elements[i].minus) {
                view.elements[i].minus = std::move(nf);
                changed = true;
            }
        }
    }
    std::sort(view.elements.begin(), view.elements.end(),
              [&](const Binomial& a, const Binomial& b) {
                  int c = order.compare(a.plus, b.plus);
                  if (c != 0) return c < 0;
                  return order.compare(a.minus, b.minus) < 0;
              });
    return view.elements;
}

} // namespace

BuchbergerResult buchberger_full(std::vector<Binomial> gens, MonomialOrder order,
                                 const Budget* budget, int degree_limit) {
    BuchbergerResult res;
    std::vector<Binomial> G;
    PairSet pairs;

    for (auto& g : gens) {
        auto c = canonical(std::move(g), order);
        if (!c) continue;
        auto r = reduce_binomial(std::move(*c), G, order);
        if (!r) continue;
        G.push_back(std::move(*r));
        update_pairs(G, pairs, static_cast<int>(G.size()) - 1);
    }

    std::size_t iter = 0;
    while (!pairs.empty()) {
        if (budget && (++iter & 0xff) == 0) budget->check(G.size());
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (degree_limit > 0 && p.deg > degree_limit) {
            res.truncated = true;
            continue;
        }
        Binomial s = spoly(G[p.i], G[p.j], p.lcm);
        auto c = canonical(std::move(s), order);
        if (!c) continue;
        auto r = reduce_binomial(std::move(*c), G, order);
        ++res.pairs_reduced;
        if (!r) continue;
        G.push_back(std::move(*r));
        update_pairs(G, pairs, static_cast<int>(G.size()) - 1);
    }

    res.basis = GroebnerBasis{order, reduce_basis(std::move(G), order)};
    return res;
}

GroebnerBasis buchberger(std::vector<Binomial> gens, MonomialOrder order, const Budget* budget) {
    return buchberger_full(std::move(gens), std::move(order), budget, 0).basis;
}

namespace {

bool homogeneous_under(const std::vector<Binomial>& gens, const std::vector<long long>& w) {
    for (const auto& g : gens) {
        long long a = 0, b = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            a += w[i] * g.plus[i];
            b += w[i] * g.minus[i];
        }
        if (a != b) return false;
    }
    return true;
}

// (I : v^inf) by elimination: adjoin t, add t*v - 1, eliminate t.
std::vector<Binomial> saturate_by_elimination(const std::vector<Binomial>& gens, std::size_t var,
                                              std::size_t n, const Budget* budget) {
    std::vector<Binomial> ext;
    ext.reserve(gens.size() + 1);
    for (const auto& g : gens) {
        Binomial h;
        h.plus = g.plus;
        h.plus.push_back(0);
        h.minus = g.minus;
        h.minus.push_back(0);
        ext.push_back(std::move(h));
    }
    Binomial tv;
    tv.plus.assign(n + 1, 0);
    tv.plus[var] = 1;
    tv.plus[n] = 1;
    tv.minus.assign(n + 1, 0);
    ext.push_back(std::move(tv));

    std::vector<char> elim(n + 1, 0);
    elim[n] = 1;
    GroebnerBasis gb = buchberger(std::move(ext), MonomialOrder::block_elimination(elim), budget);

    std::vector<Binomial> out;
    for (const auto& g : gb.elements) {
        if (g.plus[n] == 0 && g.minus[n] == 0) {
            Binomial h;
            h.plus.assign(g.plus.begin(), g.plus.end() - 1);
            h.minus.assign(g.minus.begin(), g.minus.end() - 1);
            out.push_back(std::move(h));
        }
    }
    return out;
}

} // namespace

std::vector<Binomial> saturate(std::vector<Binomial> gens, std::size_t var, std::size_t n_vars,
                               std::vector<long long> weights, const Budget* budget) {
    if (var >= n_vars) throw validation_error("saturate: variable out of range");
    if (gens.empty()) return gens;
    if (weights.empty()) weights.assign(n_vars, 1);

    if (!homogeneous_under(gens, weights))
        return saturate_by_elimination(gens, var, n_vars, budget);

    GroebnerBasis gb = buchberger(std::move(gens), MonomialOrder::saturating(var, weights), budget);
    std::vector<Binomial> out;
    out.reserve(gb.elements.size());
    for (auto& g : gb.elements) {
        int k = std::min(g.plus[var], g.minus[var]);
        if (k > 0) {
            g.plus[var] -= k;
            g.minus[var] -= k;
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Binomial> saturate_all(std::vector<Binomial> gens, std::size_t n_vars,
                                   std::vector<long long> weights, const Budget* budget) {
    if (gens.empty()) return gens;
    MonomialOrder cmp = MonomialOrder::grevlex(n_vars);
    std::vector<Binomial> cur = std::move(gens);
    for (std::size_t sweep = 0; sweep <= n_vars + 1; ++sweep) {
        std::vector<Binomial> next = cur;
        for (std::size_t v = 0; v < n_vars; ++v)
            next = saturate(std::move(next), v, n_vars, weights, budget);
        if (ideal_equal(cur, next, cmp, budget)) return next;
        cur = std::move(next);
    }
    throw resource_error("saturation sweeps did not reach a fixed point");
}

bool ideal_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                 const MonomialOrder& order, const Budget* budget) {
    GroebnerBasis b1 = buchberger(g1, order, budget);
    GroebnerBasis b2 = buchberger(g2, order, budget);
    return b1.elements == b2.elements;
}

MinimalizeResult minimalize(const std::vector<Binomial>& gens, const MonomialOrder& order,
                            const Budget* budget) {
    MinimalizeResult res;

    std::vector<Binomial> cand;
    {
        std::set<std::pair<Expo, Expo>> seen;
        for (const auto& g : gens) {
            auto c = canonical(g, order);
            if (!c) continue;
            if (seen.insert({c->plus, c->minus}).second) cand.push_back(std::move(*c));
        }
    }
    std::sort(cand.begin(), cand.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = order.compare(a.plus, b.plus);
        if (c != 0) return c < 0;
        return order.compare(a.minus, b.minus) < 0;
    });

    std::vector<long long> ones(order.var_count(), 1);
    bool homogeneous = homogeneous_under(cand, ones);

    GroebnerBasis kept_gb{order, {}};
    for (auto& c : cand) {
        if (budget) budget->check();
        bool member = false;
        if (!kept_gb.elements.empty()) member = !normal_form(c, kept_gb).has_value();
        if (member) continue;
        res.degree_histogram[c.degree()] += 1;
        res.max_degree = std::max(res.max_degree, c.degree());
        res.generators.push_back(c);
        std::vector<Binomial> seed = kept_gb.elements;
        seed.push_back(std::move(c));
        // homogeneous ideals only need the basis truncated at the top
        // candidate degree for membership below that degree
        int limit = homogeneous ? cand.back().degree() : 0;
        kept_gb = buchberger_full(std::move(seed), order, budget, limit).basis;
    }
    return res;
}

void sort_binomials(std::vector<Binomial>& v, const MonomialOrder& order) {
    std::sort(v.begin(), v.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = order.compare(a.plus, b.plus);
        if (c != 0) return c < 0;
        return order.compare(a.minus, b.minus) < 0;
    });
}

} // namespace toric
