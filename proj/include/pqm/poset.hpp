#pragma once

#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pqm/numbers.hpp"

namespace pqm {

// Exponent value standing for infinity; compares above every finite exponent.
inline constexpr int kInfExp = INT_MAX;

enum class Tail { all_zero, all_infinity };

// Supernatural number prod p^{e_p} whose exponent function is eventually 0 or
// eventually infinite.
//
// With tail all_zero, finite_exp lists the primes with 0 < e_p < inf and
// inf_primes the primes with e_p = inf. With tail all_infinity every unlisted
// prime has exponent inf, finite_exp lists the exceptions (exponent 0 allowed)
// and inf_primes is empty. The number 1 is excluded.
class Supernatural {
public:
    Supernatural(std::map<u64, int> finite_exp, std::set<u64> inf_primes, Tail tail);

    static Supernatural from_integer(u64 n);
    static Supernatural prime_power_inf(u64 p);
    // Omega(Pi_1) for a finite set of primes.
    static Supernatural omega_of(const std::set<u64>& primes);
    // Omega(Pi - excluded), a cofinite product of p^inf.
    static Supernatural omega_except(const std::set<u64>& excluded);
    static Supernatural omega() { return omega_except({}); }

    int exponent(u64 p) const;
    Tail tail() const { return tail_; }
    const std::map<u64, int>& finite_exp() const { return finite_exp_; }
    const std::set<u64>& inf_primes() const { return inf_primes_; }

    bool is_natural() const { return tail_ == Tail::all_zero && inf_primes_.empty(); }
    // The integer value; std::domain_error unless is_natural().
    u64 value() const;

    friend bool operator==(const Supernatural& a, const Supernatural& b) = default;
    std::string str() const;

private:
    std::map<u64, int> finite_exp_;
    std::set<u64> inf_primes_;
    Tail tail_;
};

bool sn_divides(const Supernatural& m, const Supernatural& n);

// Pointwise maximum of two exponent functions.
Supernatural sn_lcm(const Supernatural& a, const Supernatural& b);

// {k, k^2, k^3, ...} for k >= 2.
struct PowersOf {
    u64 k;
};
// 2^inf < 2^inf 3^inf < 2^inf 3^inf 5^inf < ... over all primes.
struct AllPrimesExhausted {};

using ChainDescription = std::variant<std::vector<Supernatural>, PowersOf, AllPrimesExhausted>;

Supernatural sn_sup(const ChainDescription& chain);

// ---------------------------------------------------------------------------

// Finite set of supernatural numbers ordered by divisibility.
class FinitePoset {
public:
    explicit FinitePoset(std::vector<Supernatural> elements);

    std::size_t size() const { return elements_.size(); }
    const Supernatural& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Supernatural>& elements() const { return elements_; }
    // i precedes j (element i divides element j).
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
    std::optional<std::size_t> index_of(const Supernatural& x) const;

    // Reflexivity, antisymmetry and transitivity of the stored relation.
    bool check_axioms() const;

private:
    FinitePoset(std::vector<Supernatural> elements, std::vector<char> leq)
        : elements_(std::move(elements)), leq_(std::move(leq)) {}
    friend FinitePoset divisor_poset(u64 n);

    std::vector<Supernatural> elements_;
    std::vector<char> leq_;
};

// N(n): divisors of n other than 1, ascending.
FinitePoset divisor_poset(u64 n);

inline constexpr std::size_t kDefaultPosetBound = 10000;

struct WidthLength {
    std::size_t width = 0;
    std::size_t length = 0;
    std::vector<std::vector<std::size_t>> chain_partition;  // each chain ascending
    std::vector<std::size_t> max_antichain;
    std::vector<std::size_t> longest_chain;
};

// Exact width by Dilworth duality (minimum chain cover from a maximum matching,
// maximum antichain from the Koenig vertex cover) and the longest chain.
WidthLength poset_width_length(const FinitePoset& P, std::size_t bound = kDefaultPosetBound);

// ---------------------------------------------------------------------------

// Alexandrov topology of a finite poset: open sets are down-sets.
using Subset = std::vector<bool>;

Subset basis_open(const FinitePoset& P, std::size_t i);  // U(x_i)
bool is_open(const FinitePoset& P, const Subset& s);
bool is_closed(const FinitePoset& P, const Subset& s);

bool check_t0(const FinitePoset& P);

struct T1Result {
    bool holds;
    // (m, n) with m strictly below n: every open set containing n contains m.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};
T1Result check_t1(const FinitePoset& P);

// Indices of a subcover of an open cover of the whole universe; empty if the
// family does not cover.
std::optional<std::vector<std::size_t>> finite_subcover(const FinitePoset& P,
                                                        const std::vector<Subset>& cover);

}  // namespace pqm
