#ifndef TORIC_IDEAL_HPP
#define TORIC_IDEAL_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Dense exponent vector of a monomial.
using Expo = std::vector<int>;

inline int degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Expo expo_max(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

// d | m coordinate-wise
inline bool expo_divides(const Expo& d, const Expo& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool is_zero(const Expo& e) {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

// Ordered set of variable names. `group` is an optional per-variable tag
// used for elimination blocks; empty means ungrouped.
struct VariableSet {
    std::vector<std::string> names;
    std::vector<int> group;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    void validate() const;
};

// Difference of two monomials with coefficients +1/-1. Canonical elements
// of toric ideals have disjoint supports; intermediate binomials inside
// Buchberger runs and lattice-basis generators may share support.
struct Binomial {
    Expo plus;
    Expo minus;

    bool operator==(const Binomial& o) const = default;
    bool is_zero() const { return plus == minus; }
    int degree() const {
        int dp = toric::degree(plus), dm = toric::degree(minus);
        return dp > dm ? dp : dm;
    }
    bool disjoint_support() const { return expo_coprime(plus, minus); }
};

// Total multiplicative well-orders on monomials. Every comparison depends
// only on the difference vector, so u > v implies u+w > v+w.
class MonomialOrder {
public:
    enum class Kind {
        Grevlex,     // graded reverse lexicographic
        Lex,         // lexicographic, first variable dominant
        Block,       // elimination: eliminated block dominant, grevlex inside blocks
        SatCheapest, // weight-graded, one variable revlex-cheapest (saturation)
    };

    static MonomialOrder grevlex(std::size_t n);
    static MonomialOrder lex(std::size_t n);
    // elim[i] != 0 marks variables in the dominant (eliminated) block.
    static MonomialOrder block_elimination(std::vector<char> elim);
    // Positive weights; monomials of equal weighted degree with less of
    // variable `cheap` are larger.
    static MonomialOrder saturating(std::size_t cheap, std::vector<long long> weights);

    Kind kind() const { return kind_; }
    std::size_t var_count() const { return n_; }
    const std::vector<char>& elim_mask() const { return elim_; }

    // -1, 0, +1 as a < b, a == b, a > b
    int compare(const Expo& a, const Expo& b) const;
    bool greater(const Expo& a, const Expo& b) const { return compare(a, b) > 0; }
    bool less(const Expo& a, const Expo& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const = default;

private:
    Kind kind_ = Kind::Grevlex;
    std::size_t n_ = 0;
    std::size_t cheap_ = 0;
    std::vector<long long> weights_;
    std::vector<char> elim_;
};

// Reduced Groebner basis: leads are `plus`, no lead divides any term of
// another element, elements sorted by lead ascending.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements;

    std::size_t size() const { return elements.size(); }
};

// Wall-clock budget threaded through the long-running computations.
struct Budget {
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::size_t max_basis = 0;

    static Budget with_time_limit(double seconds);
    void check(std::size_t basis_size = 0) const;
};

// Sign canonicalization: plus > minus under `order`. Empty result means
// the binomial is zero.
std::optional<Binomial> canonical(Binomial b, const MonomialOrder& order);

// Full reduction (lead and tail) by the first dividing element in stored
// order. Empty result means reduction to zero.
std::optional<Binomial> reduce_binomial(Binomial b, const std::vector<Binomial>& basis,
                                        const MonomialOrder& order);

// Unique normal form of a monomial modulo a Groebner basis.
Expo reduce_monomial(Expo m, const GroebnerBasis& gb);

// Normal form of a binomial; empty means zero (membership).
std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb);

// Buchberger with Gebauer-Moeller pair elimination and normal selection.
// degree_limit > 0 truncates: S-pairs of higher lcm degree are dropped and
// the result is flagged.
struct BuchbergerResult {
    GroebnerBasis basis;
    bool truncated = false;
    std::size_t pairs_reduced = 0;
};

BuchbergerResult buchberger_full(std::vector<Binomial> gens, MonomialOrder order,
                                 const Budget* budget = nullptr, int degree_limit = 0);

GroebnerBasis buchberger(std::vector<Binomial> gens, MonomialOrder order,
                         const Budget* budget = nullptr);

// (I : x_var^infinity) for binomial ideals. Inputs homogeneous under
// `weights` (all-ones when empty) use the strip-after-cheapest-order rule;
// inhomogeneous inputs fall back to elimination with an auxiliary variable.
std::vector<Binomial> saturate(std::vector<Binomial> gens, std::size_t var, std::size_t n_vars,
                               std::vector<long long> weights = {},
                               const Budget* budget = nullptr);

// Saturation by every variable, swept to a fixed point.
std::vector<Binomial> saturate_all(std::vector<Binomial> gens, std::size_t n_vars,
                                   std::vector<long long> weights = {},
                                   const Budget* budget = nullptr);

bool ideal_equal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2,
                 const MonomialOrder& order, const Budget* budget = nullptr);

// Minimal generating subset plus degree histogram. Candidates are processed
// in increasing degree; an element is dropped iff it lies in the ideal of
// the kept ones.
struct MinimalizeResult {
    std::vector<Binomial> generators;
    std::map<int, std::size_t> degree_histogram;
    int max_degree = 0; // 0 when empty
};

MinimalizeResult minimalize(const std::vector<Binomial>& gens, const MonomialOrder& order,
                            const Budget* budget = nullptr);

// Deterministic ordering used for canonical output listings.
void sort_binomials(std::vector<Binomial>& v, const MonomialOrder& order);

} // namespace toric

#endif
