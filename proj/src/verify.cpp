#include "pqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pqm/embeddings.hpp"
#include "pqm/finite_qm.hpp"
#include "pqm/poset.hpp"
#include "pqm/schwartz_bruhat.hpp"
#include "pqm/state_io.hpp"

namespace pqm {

namespace {

class Checker {
public:
    explicit Checker(const VerifyConfig& cfg) : cfg_(cfg), gen_(cfg.seed) {}

    double tol(double pinned) const { return cfg_.tolerance.value_or(pinned); }
    i64 cap(i64 n) const { return std::min<i64>(n, cfg_.max_n); }
    int samples() const { return cfg_.samples; }
    bool exploratory() const { return cfg_.even_n_exploratory; }

    void floating(int criterion, const std::string& name, double residual, double pinned, std::string detail = {}) {
        const double t = tol(pinned);
        // NaN residuals fail.
        results_.push_back({criterion, name, residual <= t, residual, t, std::move(detail)});
    }
    void info(int criterion, const std::string& name, double residual, double pinned, std::string detail) {
        const double t = tol(pinned);
        results_.push_back({criterion, name, residual <= t, residual, t, std::move(detail), true});
    }
    void exact(int criterion, const std::string& name, std::size_t failures, std::string detail = {}) {
        results_.push_back({criterion, name, failures == 0, static_cast<double>(failures), 0.0, std::move(detail)});
    }

    cd random_cd() {
        std::normal_distribution<double> d(0.0, 1.0);
        return {d(gen_), d(gen_)};
    }
    i64 random_int(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(gen_); }
    std::uint64_t random_seed() { return gen_(); }

    FiniteState state(i64 n, Rep rep = Rep::position, bool normalized = false) {
        std::vector<cd> v(static_cast<std::size_t>(n));
        for (auto& z : v) z = random_cd();
        FiniteState f(n, rep, std::move(v));
        if (normalized) {
            const double s = std::sqrt(norm_sq(f));
            for (auto& z : f.amplitudes) z /= s;
        }
        return f;
    }
    OperatorMatrix op(i64 n) {
        OperatorMatrix m(n, n);
        for (i64 i = 0; i < n; ++i) {
            for (i64 j = 0; j < n; ++j) m(i, j) = random_cd();
        }
        return m;
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    const VerifyConfig& cfg_;
    std::mt19937_64 gen_;
    std::vector<CheckResult> results_;
};

std::string range_detail(const std::string& what, i64 lo, i64 hi) {
    std::ostringstream os;
    os << what << ", n in [" << lo << ", " << hi << "]";
    return os.str();
}

// Momentum-basis kernel of a position-basis operator.
OperatorMatrix momentum_form(const OperatorMatrix& a) {
    const i64 n = a.rows();
    return fourier_matrix(n, Rep::position) * a * fourier_matrix(n, Rep::momentum).conjugate();
}

void suite_fourier(Checker& c) {
    const i64 top = c.cap(30);
    double inv = 0.0, pars = 0.0;
    for (i64 n = 2; n <= top; ++n) {
        for (int s = 0; s < c.samples(); ++s) {
            const auto f = c.state(n), g = c.state(n);
            const auto f4 = fourier(fourier(fourier(fourier(f))));
            double d = 0.0;
            for (i64 x = 0; x < n; ++x) d += std::norm(f4[x] - f[x]);
            inv = std::max(inv, std::sqrt(d / static_cast<double>(n)));
            pars = std::max(pars, std::abs(inner(f, g) - inner(fourier(f), fourier(g))));
        }
    }
    c.floating(1, "fourier.involution", inv, 1e-10, range_detail("||F^4 f - f||", 2, top));
    c.floating(1, "fourier.parseval", pars, 1e-12, range_detail("|(f,g) - (Ff,Fg)|", 2, top));

    double good = 0.0;
    for (i64 n : {6, 10, 12, 15, 30, 36}) {
        if (n > c.cap(n)) continue;
        for (int s = 0; s < std::max(1, c.samples() / 2); ++s) {
            for (Rep rep : {Rep::position, Rep::momentum}) {
                const auto f = c.state(n, rep);
                good = std::max(good, max_abs_diff(fourier_good(f), fourier(f)));
            }
        }
    }
    c.floating(2, "fourier.good", good, 1e-10, "max |good - direct| over n in {6,10,12,15,30,36}");
}

void suite_hw(Checker& c) {
    const i64 top = c.cap(16);
    double law = 0.0, comm_matrix = 0.0;
    std::size_t comm_phase = 0;
    for (i64 n = 2; n <= top; ++n) {
        for (int s = 0; s < 200; ++s) {
            auto d1 = HWElement::canonical(n, c.random_int(0, n - 1), c.random_int(0, n - 1), c.random_int(0, n - 1));
            auto d2 = HWElement::canonical(n, c.random_int(0, n - 1), c.random_int(0, n - 1), c.random_int(0, n - 1));
            law = std::max(law, max_abs(to_matrix(hw_mul(d1, d2)) - to_matrix(d1) * to_matrix(d2)));
        }
        const auto z = HWElement::clock_z(n), x = HWElement::shift_x(n);
        const auto comm = hw_mul(hw_mul(z, x), hw_mul(hw_inverse(z), hw_inverse(x)));
        if (!(comm == hw_scalar(n, RatMod1(1, n)))) ++comm_phase;
        const OperatorMatrix zm = to_matrix(z), xm = to_matrix(x);
        const OperatorMatrix expect = omega(n, 1).value() * OperatorMatrix::Identity(n, n);
        comm_matrix = std::max(comm_matrix, max_abs(zm * xm * zm.adjoint() * xm.adjoint() - expect));
    }
    c.floating(3, "hw.group_law", law, 1e-12, range_detail("hw_mul vs matrix products", 2, top));
    c.exact(3, "hw.commutator_phase", comm_phase, "Z X Z^-1 X^-1 = w_n(1) as an exact phase");
    c.floating(3, "hw.commutator_matrix", comm_matrix, 1e-12);
}

void suite_identities(Checker& c) {
    const i64 top = c.cap(12);
    double res = 0.0, tomo = 0.0;
    for (i64 n = 2; n <= top; ++n) {
        for (int s = 0; s < 20; ++s) {
            const auto theta = c.op(n);
            res = std::max(res, resolution_identity_check(theta));
            tomo = std::max(tomo, operator_expand(theta).residual);
        }
    }
    c.floating(4, "identities.resolution", res, 1e-9, range_detail("20 random operators", 2, top));
    c.floating(4, "identities.tomography", tomo, 1e-9, range_detail("20 random operators", 2, top));
}

void suite_parity(Checker& c) {
    const i64 top = c.cap(12);
    double inv = 0.0, herm = 0.0;
    for (i64 n = 2; n <= top; ++n) {
        for (const auto& pt : phase_grid(n)) {
            const OperatorMatrix P = parity_matrix(pt);
            inv = std::max(inv, max_abs(P * P - OperatorMatrix::Identity(n, n)));
            herm = std::max(herm, max_abs(P - P.adjoint()));
        }
    }
    c.floating(5, "parity.involution", inv, 1e-12, range_detail("P^2 = 1", 2, top));
    c.floating(5, "parity.hermitian", herm, 1e-12, range_detail("P = P^dagger", 2, top));

    double chars = 0.0, sandwich = 0.0, tomo = 0.0;
    for (i64 n : {3, 5, 7, 9, 11}) {
        if (n > top) continue;
        for (int s = 0; s < 5; ++s) {
            const auto r = parity_expand_check(c.op(n));
            chars = std::max(chars, r.character_sum);
            sandwich = std::max(sandwich, r.sandwich);
            tomo = std::max(tomo, r.tomography);
        }
    }
    c.floating(5, "parity.character_sum", chars, 1e-9, "odd n in {3,5,7,9,11}");
    c.floating(5, "parity.sandwich", sandwich, 1e-9, "odd n in {3,5,7,9,11}");
    c.floating(5, "parity.tomography", tomo, 1e-9, "odd n in {3,5,7,9,11}");

    if (c.exploratory()) {
        for (ParityGrid grid : {ParityGrid::standard, ParityGrid::quadruple}) {
            const std::string g = grid == ParityGrid::standard ? "standard" : "quadruple";
            double even_sandwich = 0.0, even_tomo = 0.0;
            for (i64 n = 2; n <= top; n += 2) {
                const auto r = parity_expand_check(c.op(n), true, grid);
                even_sandwich = std::max(even_sandwich, r.sandwich);
                even_tomo = std::max(even_tomo, r.tomography);
            }
            c.info(5, "parity.even_" + g + "_sandwich", even_sandwich, 1e-9, "even n, " + g + " grid, exploratory");
            c.info(5, "parity.even_" + g + "_tomography", even_tomo, 1e-9, "even n, " + g + " grid, exploratory");
        }
    }
}

void suite_marginals(Checker& c) {
    const i64 top = c.cap(16);
    double pair_a = 0.0, pair_b = 0.0, hat = 0.0;
    for (i64 n = 2; n <= top; ++n) {
        const auto F = c.state(n, Rep::momentum), G = c.state(n, Rep::momentum);
        const i64 m = hw_grid(n) * n;
        for (i64 k = 0; k < m; ++k) {
            const RatMod1 a(k, m);
            const cd lhs = inner(G, apply(momentum_form(marginal_a(n, a)), F, Rep::momentum));
            cd rhs = 0.0;
            if ((a.num() * n) % a.den() == 0) {
                const i64 an = a.num() * n / a.den();
                rhs = std::conj(G[mod(an, n)]) * F[mod(-an, n)];
            }
            pair_a = std::max(pair_a, std::abs(lhs - rhs));
        }
        for (i64 b = 0; b < 2 * n; ++b) {
            const cd lhs = inner(G, apply(marginal_b_momentum(n, b), F, Rep::momentum));
            pair_b = std::max(pair_b, std::abs(lhs - std::conj(hat_pairing_value(G, b)) * hat_pairing_value(F, -b)));
        }
    }
    for (i64 n : {2, 4, 8, 16}) {
        if (n > top) continue;
        const auto F = c.state(n, Rep::momentum);
        const auto f = inverse_fourier(F);
        for (i64 y = 0; y < 2 * n; ++y) {
            cd direct = 0.0;
            for (i64 P = 0; P < n; ++P) direct += F[P] * omega(2 * n, y * P).value();
            hat = std::max(hat, std::abs(hat_pairing_value(F, y) - direct));
            if (y % 2 == 0) hat = std::max(hat, std::abs(hat_pairing_value(F, y) - f[mod(y / 2, n)]));
        }
    }
    c.floating(6, "marginals.a_pairing", pair_a, 1e-12, range_detail("(G, A(a) F) = G(an)^* F(-an)", 2, top));
    c.floating(6, "marginals.b_pairing", pair_b, 1e-12, range_detail("(G, B(b) F) through the halving map", 2, top));
    c.floating(6, "marginals.hat_2adic", hat, 1e-12, "n in {2,4,8,16}");

    const i64 ptop = c.cap(12);
    double pa = 0.0, pb = 0.0;
    for (i64 n = 2; n <= ptop; ++n) {
        const auto f = c.state(n), g = c.state(n);
        for (i64 b = 0; b < n; ++b) {
            const cd lhs = inner(g, apply(parity_marginal_b(n, b), f, Rep::position));
            pb = std::max(pb, std::abs(lhs - std::conj(g[mod(-b, n)]) * f[mod(-b, n)]));
        }
        if (n % 2 == 0) continue;
        const auto F = fourier(f), G = fourier(g);
        for (i64 alpha = 0; alpha < n; ++alpha) {
            const cd lhs = inner(G, apply(momentum_form(parity_marginal_a(n, RatMod1(alpha, n))), F, Rep::momentum));
            const i64 k = mod(-2 * alpha, n);
            pa = std::max(pa, std::abs(lhs - std::conj(G[k]) * F[k]));
        }
    }
    c.floating(6, "marginals.parity_a", pa, 1e-9, range_detail("odd n", 3, ptop));
    c.floating(6, "marginals.parity_b", pb, 1e-9, range_detail("all n", 2, ptop));
}

void suite_coherent(Checker& c) {
    const i64 top = c.cap(12);
    double worst = 0.0;
    for (i64 n = 2; n <= top; ++n) {
        for (int s = 0; s < 10; ++s) worst = std::max(worst, coherent_check(c.state(n, Rep::position, true)));
    }
    c.floating(7, "coherent.resolution", worst, 1e-9, range_detail("10 random fiducials", 2, top));
}

std::vector<i64> divisors_of(i64 n) {
    std::vector<i64> d;
    for (i64 i = 1; i <= n; ++i) {
        if (n % i == 0) d.push_back(i);
    }
    return d;
}

void suite_embeddings(Checker& c) {
    std::size_t composition = 0, character = 0, chains = 0;
    double fourier_res = 0.0, hw_res = 0.0;
    for (i64 m = 2; m <= 64; ++m) {
        for (i64 l : divisors_of(m)) {
            for (i64 k : divisors_of(l)) {
                if (k < 2) continue;
                const auto r = compat_suite(k, l, m, c.random_seed());
                composition += r.composition_exact ? 0 : 1;
                character += r.character_exact ? 0 : 1;
                fourier_res = std::max(fourier_res, r.fourier_residual);
                hw_res = std::max(hw_res, r.hw_residual);
                ++chains;
            }
        }
    }
    const std::string chain_detail = std::to_string(chains) + " chains k | l | m <= 64";
    c.exact(8, "embeddings.composition", composition, chain_detail);
    c.exact(8, "embeddings.character", character, chain_detail);
    c.floating(8, "embeddings.fourier_intertwining", fourier_res, 1e-10, chain_detail);
    c.floating(8, "embeddings.hw_intertwining", hw_res, 1e-10, chain_detail);

    double norm = 0.0, ww = 0.0, entropy = 0.0;
    std::size_t norm_fail = 0;
    for (auto [k, r] : {std::pair<i64, i64>{2, 8}, {3, 9}, {4, 12}, {3, 12}, {5, 25}, {6, 36}, {8, 64}}) {
        for (Rep rep : {Rep::position, Rep::momentum}) {
            const auto f = c.state(k, rep, true);
            const auto un = ubiquity_check(Quantity::norm, f, r);
            norm = std::max(norm, un.deviation);
            norm_fail += un.passed ? 0 : 1;
            ww = std::max({ww, ubiquity_check(Quantity::weyl, f, r).deviation, ubiquity_check(Quantity::wigner, f, r).deviation});
            entropy = std::max(entropy, ubiquity_check(Quantity::position_entropy, f, r).deviation);
        }
    }
    c.floating(8, "embeddings.ubiquity_norm", norm, 1e-15, "relative deviation of ||f||^2");
    c.floating(8, "embeddings.ubiquity_weyl_wigner", ww, 1e-12, "values at embedded grid points");
    c.floating(8, "embeddings.ubiquity_entropy", entropy, 1e-12, "measure-weighted position entropy");
}

void suite_numbers(Checker& c) {
    std::size_t digits = 0;
    for (u64 p : {2u, 3u, 5u, 7u}) {
        const auto m1 = PadicInt::from_integer(p, -1, 16);
        for (auto d : m1.digits()) digits += d == p - 1 ? 0 : 1;
        if (!(m1 + PadicInt::from_integer(p, 1, 16)).is_zero()) ++digits;
    }
    c.exact(9, "numbers.minus_one_digits", digits, "p in {2,3,5,7}, 16 digits");

    std::size_t ostrowski = 0;
    for (int s = 0; s < 1000; ++s) {
        i64 num = 0;
        while (num == 0) num = c.random_int(-1000000, 1000000);
        if (!(ostrowski_product(Rational(num, c.random_int(1, 1000000))) == Rational(1))) ++ostrowski;
    }
    c.exact(9, "numbers.ostrowski", ostrowski, "1000 random rationals");

    std::size_t crt_fail = 0;
    for (i64 n = 2; n <= 1000; ++n) {
        const auto crt = crt_idempotents(n);
        std::vector<char> seen_mu(static_cast<std::size_t>(n)), seen_nu(static_cast<std::size_t>(n));
        for (i64 x = 0; x < n; ++x) {
            const i64 jm = join_mu(crt, split_mu(crt, x));
            const i64 jn = join_nu_hat(crt, split_nu_hat(crt, x));
            if (jm != x || jn != x) ++crt_fail;
            seen_mu[static_cast<std::size_t>(mod(jm, n))] = 1;
            seen_nu[static_cast<std::size_t>(mod(jn, n))] = 1;
        }
        crt_fail += static_cast<std::size_t>(std::count(seen_mu.begin(), seen_mu.end(), 0));
        crt_fail += static_cast<std::size_t>(std::count(seen_nu.begin(), seen_nu.end(), 0));
    }
    c.exact(9, "numbers.crt_bijective", crt_fail, "n in [2, 1000], exhaustive");

    std::size_t factor_fail = 0;
    for (i64 n : {6, 12, 15}) {
        const auto crt = crt_idempotents(n);
        for (i64 mu = 0; mu < n; ++mu) {
            for (i64 nu = 0; nu < n; ++nu) {
                const auto m = split_mu(crt, mu);
                const auto v = split_nu_hat(crt, nu);
                UnitPhase prod;
                for (std::size_t i = 0; i < m.size(); ++i) prod = prod * omega(crt.factors[i].q, v[i] * m[i]);
                if (!(prod == omega(n, mu * nu))) ++factor_fail;
            }
        }
    }
    c.exact(9, "numbers.character_factorization", factor_fail, "n in {6,12,15}, exhaustive");
}

void suite_poset(Checker& c) {
    std::size_t topo = 0;
    for (u64 n = 2; n <= 10000; ++n) {
        const auto P = divisor_poset(n);
        if (!check_t0(P)) ++topo;
        const auto t1 = check_t1(P);
        if (is_prime(n)) {
            // N(p) is a single point.
            if (!t1.holds) ++topo;
        } else if (t1.holds || !t1.witness || !P.leq(t1.witness->first, t1.witness->second) ||
                   t1.witness->first == t1.witness->second) {
            ++topo;
        }
    }
    c.exact(10, "poset.t0_not_t1", topo, "n in [2, 10000]; witnesses checked, prime n is a single point");

    std::size_t wl = 0;
    wl += poset_width_length(divisor_poset(12)).width == 2 ? 0 : 1;
    const auto w36 = poset_width_length(divisor_poset(36));
    wl += w36.width == 3 ? 0 : 1;
    wl += w36.length == 4 ? 0 : 1;
    c.exact(10, "poset.width_length", wl, "width N(12) = 2, width N(36) = 3, length N(36) = 4");

    std::size_t sup = 0;
    for (u64 p : {2u, 3u, 5u, 7u}) sup += sn_sup(PowersOf{p}) == Supernatural::prime_power_inf(p) ? 0 : 1;
    c.exact(10, "poset.sup_powers", sup, "sup{p^k} = p^inf");
}

LocalSBFunction integer_local(Checker& c, u64 p, Side side, int degree) {
    std::vector<cd> v(ipow(p, degree));
    for (auto& z : v) z = cd(static_cast<double>(c.random_int(-50, 50)), static_cast<double>(c.random_int(-50, 50)));
    return LocalSBFunction(p, side, degree, std::move(v));
}

LocalSBFunction random_local(Checker& c, u64 p, Side side, int degree) {
    std::vector<cd> v(ipow(p, degree));
    for (auto& z : v) z = c.random_cd();
    return LocalSBFunction(p, side, degree, std::move(v));
}

void suite_schwartz_bruhat(Checker& c) {
    std::size_t refine_fail = 0;
    for (u64 p : {2u, 3u, 5u, 7u}) {
        for (Side side : {Side::position, Side::momentum}) {
            for (int s = 0; s < 25; ++s) {
                const int d = static_cast<int>(c.random_int(0, 2));
                const auto f = integer_local(c, p, side, d);
                for (int up = 1; up <= 2; ++up) {
                    if (!(integrate_local(refine(f, d + up)) == integrate_local(f))) ++refine_fail;
                }
            }
        }
    }
    c.exact(11, "schwartz_bruhat.refinement", refine_fail, "integer-valued local functions");

    std::size_t swap_fail = 0;
    int cases = 0;
    for (u64 p : {2u, 3u, 5u, 7u}) {
        for (int s = 0; s < 25; ++s, ++cases) {
            const int deg = static_cast<int>(c.random_int(0, 2));
            const int d = deg + static_cast<int>(c.random_int(0, 1));
            const auto f = refine(random_local(c, p, Side::position, deg), d);
            if (constancy_degree(f) != deg || support_degree(local_fourier(f)) != deg) ++swap_fail;
        }
    }
    c.exact(11, "schwartz_bruhat.degree_swap", swap_fail, std::to_string(cases) + " random local functions");

    double iso = 0.0;
    for (int s = 0; s < 20; ++s) {
        for (Side side : {Side::position, Side::momentum}) {
            std::vector<GlobalTerm> terms;
            for (int t = 0; t < 3; ++t) {
                GlobalTerm term{c.random_cd(), {}};
                term.factors.emplace(2, random_local(c, 2, side, static_cast<int>(c.random_int(0, 3))));
                term.factors.emplace(3, random_local(c, 3, side, static_cast<int>(c.random_int(1, 2))));
                if (t == 1) term.factors.emplace(5, random_local(c, 5, side, 1));
                terms.push_back(std::move(term));
            }
            const GlobalSBFunction f(side, terms);
            const GlobalSBFunction g(side, {terms[2], terms[0]});
            const i64 l = canonical_dimension(f);
            const cd exact = global_inner(f, g);
            const cd finite = inner(canonicalize_global(f, l), canonicalize_global(g, l));
            iso = std::max(iso, std::abs(exact - finite) / std::max(1.0, std::abs(exact)));
        }
    }
    c.floating(11, "schwartz_bruhat.isometry", iso, 1e-12, "canonicalization preserves inner products");
}

void suite_cli(Checker& c) {
    std::size_t fail = 0;
    for (i64 n : {2, 7, 12, 30}) {
        for (Rep rep : {Rep::position, Rep::momentum}) {
            auto f = c.state(n, rep);
            f[0] = cd(-0.0, 1e-300);
            const auto back = state_from_json(state_to_json(f, {{"seed", 1}})).state;
            bool same = back.n == f.n && back.rep == f.rep;
            for (i64 x = 0; same && x < n; ++x) {
                same = std::signbit(back[x].real()) == std::signbit(f[x].real()) && back[x] == f[x];
            }
            if (!same) ++fail;
        }
    }
    c.exact(12, "cli.state_round_trip", fail, "JSON write/read is bit-identical");
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& suite_table() {
    static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> table = {
        {"fourier", suite_fourier},       {"hw", suite_hw},
        {"identities", suite_identities}, {"parity", suite_parity},
        {"marginals", suite_marginals},   {"coherent", suite_coherent},
        {"embeddings", suite_embeddings}, {"numbers", suite_numbers},
        {"poset", suite_poset},           {"schwartz_bruhat", suite_schwartz_bruhat},
        {"cli", suite_cli},
    };
    return table;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw std::invalid_argument("pqm: not a boolean: " + s);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        return v;
    }();
    return names;
}

void validate(const VerifyConfig& cfg) {
    if (cfg.tolerance && !(*cfg.tolerance > 0.0)) throw std::invalid_argument("pqm: tolerance must be positive");
    if (cfg.max_n < 2) throw std::invalid_argument("pqm: max_n must be at least 2");
    if (cfg.samples < 1) throw std::invalid_argument("pqm: samples must be positive");
    for (const auto& s : cfg.suites) {
        const auto& names = verify_suites();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            throw std::invalid_argument("pqm: unknown suite '" + s + "'");
        }
    }
}

VerifyConfig load_verify_config(const std::string& path) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::Error& e) {
        throw std::invalid_argument("pqm: cannot read config " + path + ": " + e.what());
    }
    VerifyConfig cfg;
    for (const auto& item : items) {
        const std::string key = item.name;
        if (key == "++" || key == "--") continue;  // section markers
        if (item.inputs.size() != 1) throw std::invalid_argument("pqm: config key '" + key + "' needs one value");
        const std::string& v = item.inputs.front();
        auto number = [&](auto parse) {
            try {
                std::size_t used = 0;
                const auto x = parse(v, &used);
                if (used == v.size()) return x;
            } catch (const std::exception&) {
            }
            throw std::invalid_argument("pqm: bad value for config key '" + key + "': " + v);
        };
        if (key == "tolerance") {
            cfg.tolerance = number([](const std::string& t, std::size_t* u) { return std::stod(t, u); });
        } else if (key == "max_n") {
            cfg.max_n = number([](const std::string& t, std::size_t* u) { return std::stoi(t, u); });
        } else if (key == "samples") {
            cfg.samples = number([](const std::string& t, std::size_t* u) { return std::stoi(t, u); });
        } else if (key == "seed") {
            cfg.seed = number([](const std::string& t, std::size_t* u) { return std::stoull(t, u); });
        } else if (key == "even_n_exploratory") {
            cfg.even_n_exploratory = parse_bool(v);
        } else {
            throw std::invalid_argument("pqm: unknown config key '" + key + "'");
        }
    }
    validate(cfg);
    return cfg;
}

std::vector<CheckResult> run_verify(const VerifyConfig& cfg) {
    validate(cfg);
    std::vector<CheckResult> all;
    const auto& table = suite_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& [name, fn] = table[i];
        if (!cfg.suites.empty() && !cfg.suites.count(name)) continue;
        // Each suite draws from its own stream so that selecting suites does not shift the others.
        VerifyConfig local = cfg;
        local.seed = cfg.seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
        Checker c(local);
        fn(c);
        auto r = c.take();
        all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.criterion != b.criterion ? a.criterion < b.criterion : a.name < b.name;
    });
    return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.informational; });
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"criterion", r.criterion},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"residual", std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json("nan")},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail},
                          {"informational", r.informational}});
    }
    return {{"passed", all_passed(results)}, {"checks", checks}};
}

}  // namespace pqm
