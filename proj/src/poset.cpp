#include "pqm/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pqm {

Supernatural::Supernatural(std::map<u64, int> finite_exp, std::set<u64> inf_primes, Tail tail)
    : finite_exp_(std::move(finite_exp)), inf_primes_(std::move(inf_primes)), tail_(tail) {
    for (auto p : inf_primes_) {
        if (!is_prime(p)) throw std::invalid_argument("pqm: " + std::to_string(p) + " is not prime");
    }
    for (auto it = finite_exp_.begin(); it != finite_exp_.end();) {
        if (!is_prime(it->first)) {
            throw std::invalid_argument("pqm: " + std::to_string(it->first) + " is not prime");
        }
        if (it->second < 0) throw std::invalid_argument("pqm: negative exponent");
        if (inf_primes_.count(it->first)) {
            throw std::invalid_argument("pqm: prime listed as both finite and infinite");
        }
        if (it->second == kInfExp) {
            inf_primes_.insert(it->first);
            it = finite_exp_.erase(it);
        } else if (it->second == 0 && tail_ == Tail::all_zero) {
            it = finite_exp_.erase(it);
        } else {
            ++it;
        }
    }
    if (tail_ == Tail::all_infinity) inf_primes_.clear();
    if (tail_ == Tail::all_zero && finite_exp_.empty() && inf_primes_.empty()) {
        throw std::invalid_argument("pqm: 1 is excluded from the supernatural numbers");
    }
}

Supernatural Supernatural::from_integer(u64 n) {
    if (n < 2) throw std::invalid_argument("pqm: 1 is excluded from the supernatural numbers");
    std::map<u64, int> e;
    for (auto [p, k] : factorize(n)) e[p] = k;
    return Supernatural(std::move(e), {}, Tail::all_zero);
}

Supernatural Supernatural::prime_power_inf(u64 p) { return Supernatural({}, {p}, Tail::all_zero); }

Supernatural Supernatural::omega_of(const std::set<u64>& primes) {
    return Supernatural({}, primes, Tail::all_zero);
}

Supernatural Supernatural::omega_except(const std::set<u64>& excluded) {
    std::map<u64, int> e;
    for (auto p : excluded) e[p] = 0;
    return Supernatural(std::move(e), {}, Tail::all_infinity);
}

int Supernatural::exponent(u64 p) const {
    if (auto it = finite_exp_.find(p); it != finite_exp_.end()) return it->second;
    if (inf_primes_.count(p)) return kInfExp;
    return tail_ == Tail::all_zero ? 0 : kInfExp;
}

u64 Supernatural::value() const {
    if (!is_natural()) throw std::domain_error("pqm: " + str() + " is not a natural number");
    u64 n = 1;
    for (auto [p, e] : finite_exp_) n *= ipow(p, e);
    return n;
}

std::string Supernatural::str() const {
    std::ostringstream os;
    if (tail_ == Tail::all_infinity) {
        // Exceptions to the infinite tail are listed with their exponents.
        os << "Omega";
        if (!finite_exp_.empty()) {
            os << "{";
            bool first = true;
            for (auto [p, e] : finite_exp_) {
                os << (first ? "" : ",") << p << "^" << e;
                first = false;
            }
            os << "}";
        }
        return os.str();
    }
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    std::set<u64> all(inf_primes_);
    for (auto [p, e] : finite_exp_) all.insert(p);
    for (auto p : all) {
        sep();
        int e = exponent(p);
        if (e == kInfExp) {
            os << p << "^inf";
        } else if (e == 1) {
            os << p;
        } else {
            os << p << "^" << e;
        }
    }
    return os.str();
}

namespace {
std::set<u64> listed_primes(const Supernatural& a) {
    std::set<u64> s(a.inf_primes());
    for (auto [p, e] : a.finite_exp()) s.insert(p);
    return s;
}
}  // namespace

bool sn_divides(const Supernatural& m, const Supernatural& n) {
    // Unlisted primes carry the tails; infinitely many of them exist.
    if (m.tail() == Tail::all_infinity && n.tail() == Tail::all_zero) return false;
    std::set<u64> primes = listed_primes(m);
    for (auto p : listed_primes(n)) primes.insert(p);
    return std::all_of(primes.begin(), primes.end(),
                       [&](u64 p) { return m.exponent(p) <= n.exponent(p); });
}

Supernatural sn_lcm(const Supernatural& a, const Supernatural& b) {
    const Tail tail =
        (a.tail() == Tail::all_infinity || b.tail() == Tail::all_infinity) ? Tail::all_infinity
                                                                           : Tail::all_zero;
    std::set<u64> primes = listed_primes(a);
    for (auto p : listed_primes(b)) primes.insert(p);
    std::map<u64, int> fin;
    std::set<u64> inf;
    for (auto p : primes) {
        int e = std::max(a.exponent(p), b.exponent(p));
        if (e == kInfExp) {
            if (tail == Tail::all_zero) inf.insert(p);
        } else {
            fin[p] = e;
        }
    }
    return Supernatural(std::move(fin), std::move(inf), tail);
}

Supernatural sn_sup(const ChainDescription& chain) {
    struct Visitor {
        Supernatural operator()(const std::vector<Supernatural>& xs) const {
            if (xs.empty()) throw std::invalid_argument("pqm: supremum of an empty family");
            Supernatural s = xs.front();
            for (std::size_t i = 1; i < xs.size(); ++i) s = sn_lcm(s, xs[i]);
            return s;
        }
        Supernatural operator()(const PowersOf& c) const {
            if (c.k < 2) throw std::invalid_argument("pqm: powers of k need k >= 2");
            std::set<u64> primes;
            for (auto [p, e] : factorize(c.k)) primes.insert(p);
            return Supernatural::omega_of(primes);
        }
        Supernatural operator()(const AllPrimesExhausted&) const { return Supernatural::omega(); }
    };
    return std::visit(Visitor{}, chain);
}

// ---------------------------------------------------------------------------

FinitePoset::FinitePoset(std::vector<Supernatural> elements) : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq_[i * n + j] = sn_divides(elements_[i], elements_[j]) ? 1 : 0;
        }
    }
}

std::optional<std::size_t> FinitePoset::index_of(const Supernatural& x) const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (elements_[i] == x) return i;
    }
    return std::nullopt;
}

bool FinitePoset::check_axioms() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq(i, i)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq(i, j) && leq(j, i)) return false;
            if (!leq(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (leq(j, k) && !leq(i, k)) return false;
            }
        }
    }
    return true;
}

FinitePoset divisor_poset(u64 n) {
    if (n < 2) throw std::invalid_argument("pqm: N(n) needs n >= 2");
    std::vector<u64> divs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    divs.push_back(n);
    std::sort(divs.begin(), divs.end());
    const std::size_t m = divs.size();
    std::vector<Supernatural> elems;
    elems.reserve(m);
    for (auto d : divs) elems.push_back(Supernatural::from_integer(d));
    std::vector<char> leq(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) leq[i * m + j] = divs[j] % divs[i] == 0 ? 1 : 0;
    }
    return FinitePoset(std::move(elems), std::move(leq));
}

// ---------------------------------------------------------------------------

namespace {

// Hopcroft-Karp on the bipartite graph left i -> right j for i strictly below j.
struct Matching {
    std::vector<long> match_left, match_right;
};

Matching max_matching(const FinitePoset& P) {
    const long n = static_cast<long>(P.size());
    std::vector<std::vector<long>> adj(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (i != j && P.leq(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
                adj[static_cast<std::size_t>(i)].push_back(j);
            }
        }
    }
    std::vector<long> ml(static_cast<std::size_t>(n), -1), mr(static_cast<std::size_t>(n), -1);
    std::vector<long> dist(static_cast<std::size_t>(n));
    constexpr long kInf = std::numeric_limits<long>::max();

    auto bfs = [&] {
        std::queue<long> q;
        bool found = false;
        for (long i = 0; i < n; ++i) {
            if (ml[static_cast<std::size_t>(i)] < 0) {
                dist[static_cast<std::size_t>(i)] = 0;
                q.push(i);
            } else {
                dist[static_cast<std::size_t>(i)] = kInf;
            }
        }
        while (!q.empty()) {
            long i = q.front();
            q.pop();
            for (long j : adj[static_cast<std::size_t>(i)]) {
                long k = mr[static_cast<std::size_t>(j)];
                if (k < 0) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(k)] == kInf) {
                    dist[static_cast<std::size_t>(k)] = dist[static_cast<std::size_t>(i)] + 1;
                    q.push(k);
                }
            }
        }
        return found;
    };
    std::function<bool(long)> dfs = [&](long i) {
        for (long j : adj[static_cast<std::size_t>(i)]) {
            long k = mr[static_cast<std::size_t>(j)];
            if (k < 0 || (dist[static_cast<std::size_t>(k)] == dist[static_cast<std::size_t>(i)] + 1 &&
                          dfs(k))) {
                ml[static_cast<std::size_t>(i)] = j;
                mr[static_cast<std::size_t>(j)] = i;
                return true;
            }
        }
        dist[static_cast<std::size_t>(i)] = kInf;
        return false;
    };
    while (bfs()) {
        for (long i = 0; i < n; ++i) {
            if (ml[static_cast<std::size_t>(i)] < 0) dfs(i);
        }
    }
    return {ml, mr};
}

}  // namespace

WidthLength poset_width_length(const FinitePoset& P, std::size_t bound) {
    const std::size_t n = P.size();
    if (n > bound) {
        throw std::length_error("pqm: poset of size " + std::to_string(n) + " exceeds bound " +
                                std::to_string(bound));
    }
    WidthLength out;
    if (n == 0) return out;

    const Matching m = max_matching(P);

    // Chains follow matched edges from their unmatched-on-the-right start.
    for (std::size_t i = 0; i < n; ++i) {
        if (m.match_right[i] >= 0) continue;
        std::vector<std::size_t> chain{i};
        for (long j = m.match_left[i]; j >= 0; j = m.match_left[static_cast<std::size_t>(j)]) {
            chain.push_back(static_cast<std::size_t>(j));
        }
        out.chain_partition.push_back(std::move(chain));
    }
    out.width = out.chain_partition.size();

    // Koenig: Z = vertices reachable by alternating paths from unmatched left vertices.
    // Elements with left copy in Z and right copy outside Z form a maximum antichain.
    std::vector<char> zl(n, 0), zr(n, 0);
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.match_left[i] < 0) {
            zl[i] = 1;
            q.push(i);
        }
    }
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !P.leq(i, j) || zr[j] || m.match_left[i] == static_cast<long>(j)) continue;
            zr[j] = 1;
            long k = m.match_right[j];
            if (k >= 0 && !zl[static_cast<std::size_t>(k)]) {
                zl[static_cast<std::size_t>(k)] = 1;
                q.push(static_cast<std::size_t>(k));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (zl[i] && !zr[i]) out.max_antichain.push_back(i);
    }

    // Longest chain by dynamic programming over a linear extension.
    std::vector<std::size_t> order(n), below(n, 0);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) below[i] += (j != i && P.leq(j, i)) ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    std::vector<std::size_t> best(n, 1);
    std::vector<long> prev(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t i = order[a];
        for (std::size_t b = 0; b < a; ++b) {
            const std::size_t j = order[b];
            if (P.leq(j, i) && best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                prev[i] = static_cast<long>(j);
            }
        }
    }
    std::size_t top = static_cast<std::size_t>(std::max_element(best.begin(), best.end()) - best.begin());
    out.length = best[top];
    for (long i = static_cast<long>(top); i >= 0; i = prev[static_cast<std::size_t>(i)]) {
        out.longest_chain.push_back(static_cast<std::size_t>(i));
    }
    std::reverse(out.longest_chain.begin(), out.longest_chain.end());
    return out;
}

// ---------------------------------------------------------------------------

Subset basis_open(const FinitePoset& P, std::size_t i) {
    Subset s(P.size(), false);
    for (std::size_t j = 0; j < P.size(); ++j) s[j] = P.leq(j, i);
    return s;
}

namespace {
void require_subset(const FinitePoset& P, const Subset& s) {
    if (s.size() != P.size()) throw std::invalid_argument("pqm: subset size does not match universe");
}
}  // namespace

bool is_open(const FinitePoset& P, const Subset& s) {
    require_subset(P, s);
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!s[i]) continue;
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (P.leq(j, i) && !s[j]) return false;
        }
    }
    return true;
}

bool is_closed(const FinitePoset& P, const Subset& s) {
    require_subset(P, s);
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!s[i]) continue;
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (P.leq(i, j) && !s[j]) return false;
        }
    }
    return true;
}

bool check_t0(const FinitePoset& P) {
    // U(x) is the smallest open set around x, so x and y are separated iff
    // y is not in U(x) or x is not in U(y).
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            if (P.leq(i, j) && P.leq(j, i)) return false;
        }
    }
    return true;
}

T1Result check_t1(const FinitePoset& P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (i != j && P.leq(i, j)) return {false, std::pair{i, j}};
        }
    }
    return {true, std::nullopt};
}

std::optional<std::vector<std::size_t>> finite_subcover(const FinitePoset& P,
                                                        const std::vector<Subset>& cover) {
    for (const auto& s : cover) {
        require_subset(P, s);
        if (!is_open(P, s)) throw std::invalid_argument("pqm: cover member is not open");
    }
    // Greedy set cover: take the member adding the most uncovered points.
    std::vector<bool> covered(P.size(), false);
    std::size_t remaining = P.size();
    std::vector<std::size_t> chosen;
    while (remaining > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t i = 0; i < cover.size(); ++i) {
            std::size_t gain = 0;
            for (std::size_t y = 0; y < P.size(); ++y) gain += cover[i][y] && !covered[y];
            if (gain > best_gain) {
                best = i;
                best_gain = gain;
            }
        }
        if (best_gain == 0) return std::nullopt;
        chosen.push_back(best);
        for (std::size_t y = 0; y < P.size(); ++y) covered[y] = covered[y] || cover[best][y];
        remaining -= best_gain;
    }
    return chosen;
}

}  // namespace pqm
