#include "pqm/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace pqm {

namespace {
void require_label(i64 k) {
    if (k < 1) throw std::invalid_argument("pqm: embedding label must be positive, got " + std::to_string(k));
}

FiniteState random_state(i64 n, Rep rep, std::mt19937_64& gen) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<cd> v(static_cast<std::size_t>(n));
    for (auto& z : v) z = cd(d(gen), d(gen));
    return FiniteState(n, rep, std::move(v));
}

bool bit_equal(const FiniteState& f, const FiniteState& g) {
    return f.n == g.n && f.rep == g.rep && f.amplitudes == g.amplitudes;
}

std::optional<u64> prime_of_power(i64 k) {
    const auto fs = factorize(static_cast<u64>(k));
    if (fs.size() != 1) return std::nullopt;
    return fs.front().first;
}
}  // namespace

EmbeddingSpec::EmbeddingSpec(i64 k_, i64 l_) : k(k_), l(l_) {
    require_label(k);
    require_label(l);
    if (l % k != 0) {
        throw std::invalid_argument("pqm: no embedding of Z(" + std::to_string(k) + ") into Z(" + std::to_string(l) +
                                    "): labels do not divide");
    }
}

EmbeddingSpec compose(const EmbeddingSpec& outer, const EmbeddingSpec& inner) {
    if (outer.k != inner.l) throw std::invalid_argument("pqm: embeddings do not chain");
    return EmbeddingSpec(inner.k, outer.l);
}

bool embedding_exists(i64 k, i64 l) {
    require_label(k);
    require_label(l);
    return l % k == 0;
}

std::pair<i64, i64> phase_embed(const EmbeddingSpec& e, i64 alpha, i64 beta) {
    return {mod(alpha, e.k), mod(e.ratio() * mod(beta, e.k), e.l)};
}

std::pair<PadicInt, PadicFrac> phase_embed_profinite(u64 p, int k, i64 alpha, i64 beta, int precision) {
    if (!is_prime(p)) throw std::invalid_argument("pqm: " + std::to_string(p) + " is not prime");
    if (k < 0 || precision < k) throw std::invalid_argument("pqm: profinite embedding needs 0 <= k <= precision");
    const i64 q = static_cast<i64>(ipow(p, k));
    return {PadicInt::from_integer(p, mod(alpha, q), precision), lift_tilde_xi(p, k, mod(beta, q))};
}

FiniteState state_embed(const FiniteState& f, i64 l) {
    const EmbeddingSpec e(f.n, l);
    FiniteState out = FiniteState::zero(l, f.rep);
    if (f.rep == Rep::position) {
        for (i64 x = 0; x < l; ++x) out[x] = f[x % f.n];
    } else {
        for (i64 p = 0; p < f.n; ++p) out[e.ratio() * p] = f[p];
    }
    return out;
}

GlobalSBFunction state_embed_profinite(const FiniteState& f) {
    if (f.n < 2) throw std::invalid_argument("pqm: dimension 1 excluded");
    const Side side = f.rep == Rep::position ? Side::position : Side::momentum;
    const auto decomposition = tensor_factor(f);
    std::vector<GlobalTerm> terms;
    terms.reserve(decomposition.terms.size());
    for (const auto& t : decomposition.terms) {
        GlobalTerm g{t.coefficient, {}};
        for (const auto& [p, s] : t.factors) {
            g.factors.emplace(p, LocalSBFunction(p, side, valuation(s.n, p), s.amplitudes));
        }
        terms.push_back(std::move(g));
    }
    return GlobalSBFunction(side, std::move(terms));
}

HWElement hw_embed(const HWElement& d, i64 l) {
    const EmbeddingSpec e(d.n, l);
    // kappa(l) alpha' = (l/k) kappa(k) alpha mod l; kappa(l) = 2 only when k is odd too.
    const i64 scale = hw_kappa(l) == 2 ? e.ratio() : e.ratio() * hw_kappa(d.n);
    return HWElement{l, mul_mod(scale, d.alpha, l), mod(d.beta, d.n), d.phase};
}

CompatReport compat_suite(i64 k, i64 l, i64 m, std::uint64_t seed, int samples) {
    const EmbeddingSpec kl(k, l), lm(l, m), km(k, m);
    if (!(compose(lm, kl).k == km.k && compose(lm, kl).l == km.l)) throw std::logic_error("pqm: composition mismatch");
    std::mt19937_64 gen(seed);
    CompatReport r{k, l, m, true, true, 0.0, 0.0};

    for (Rep rep : {Rep::position, Rep::momentum}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = random_state(k, rep, gen);
            const auto fl = state_embed(f, l);
            if (!bit_equal(state_embed(fl, m), state_embed(f, m))) r.composition_exact = false;
            r.fourier_residual = std::max(r.fourier_residual, max_abs_diff(state_embed(fourier(f), l), fourier(fl)));
            r.fourier_residual =
                std::max(r.fourier_residual, max_abs_diff(state_embed(fourier(fl), m), fourier(state_embed(fl, m))));
        }
    }

    const auto prime = prime_of_power(k);
    for (i64 a = 0; a < k; ++a) {
        for (i64 b = 0; b < k; ++b) {
            const auto pl = phase_embed(kl, a, b);
            const auto pm = phase_embed(lm, pl.first, pl.second);
            if (pm != phase_embed(km, a, b)) r.composition_exact = false;
            const UnitPhase ref = omega(k, a * b);
            if (omega(l, pl.first * pl.second) != ref || omega(m, pm.first * pm.second) != ref) r.character_exact = false;
            if (prime) {
                const int e = valuation(k, *prime);
                const auto [x, xi] = phase_embed_profinite(*prime, e, a, b, e);
                if (chi_p(x, xi) != ref) r.character_exact = false;
            }
        }
    }

    std::vector<std::pair<i64, i64>> pairs;
    if (k * k <= 256) {
        for (i64 a = 0; a < k; ++a) {
            for (i64 b = 0; b < k; ++b) pairs.emplace_back(a, b);
        }
    } else {
        std::uniform_int_distribution<i64> u(0, k - 1);
        for (int i = 0; i < samples; ++i) pairs.emplace_back(u(gen), u(gen));
    }
    const FiniteState fx = random_state(k, Rep::position, gen);
    const FiniteState fp = random_state(k, Rep::momentum, gen);
    for (const auto& [a, b] : pairs) {
        const HWElement d = HWElement::canonical(k, a, b, 0);
        for (const FiniteState* f : {&fx, &fp}) {
            r.hw_residual = std::max(r.hw_residual,
                                     max_abs_diff(state_embed(displace(d, *f), l), displace(hw_embed(d, l), state_embed(*f, l))));
            r.hw_residual = std::max(r.hw_residual,
                                     max_abs_diff(state_embed(displace(d, *f), m), displace(hw_embed(d, m), state_embed(*f, m))));
        }
    }
    return r;
}

double position_entropy(const FiniteState& f) {
    const FiniteState x = f.rep == Rep::position ? f : fourier(f);
    const double n = static_cast<double>(x.n);
    double h = 0.0;
    for (const cd& z : x.amplitudes) {
        const double q = std::norm(z) / n;
        if (q > 0.0) h -= q * std::log(n * q);
    }
    return h;
}

UbiquityResult ubiquity_check(Quantity q, const FiniteState& f, i64 r, double tol) {
    const FiniteState x = f.rep == Rep::position ? f : fourier(f);
    const FiniteState y = state_embed(x, r);
    UbiquityResult out;
    switch (q) {
    case Quantity::norm: {
        const double a = norm_sq(x);
        out.deviation = std::abs(norm_sq(y) - a) / std::max(a, 1e-300);
        out.passed = out.deviation <= 1e-15;
        return out;
    }
    case Quantity::position_entropy: {
        const double a = position_entropy(x);
        out.deviation = std::abs(position_entropy(y) - a) / std::max(1.0, std::abs(a));
        break;
    }
    case Quantity::weyl:
    case Quantity::wigner: {
        const auto kind = q == Quantity::weyl ? PhaseFunction::weyl : PhaseFunction::wigner;
        for (const auto& pt : phase_grid(x.n)) {
            const cd a = weyl_wigner(x, pt, kind);
            const cd b = weyl_wigner(y, PhasePoint{r, pt.a, pt.b}, kind);
            out.deviation = std::max(out.deviation, std::abs(a - b));
        }
        break;
    }
    default:
        throw std::invalid_argument("pqm: unsupported ubiquity quantity");
    }
    out.passed = out.deviation <= tol;
    return out;
}

std::vector<i64> annihilator(i64 n, i64 m) {
    if (n < 1 || m < 1 || n % m != 0) throw std::invalid_argument("pqm: annihilator needs m | n");
    const i64 step = n / m;  // Z(m) sits in Z(n) as the multiples of n/m
    std::vector<i64> out;
    for (i64 y = 0; y < n; ++y) {
        bool trivial = true;
        for (i64 x = 0; x < n && trivial; x += step) trivial = omega(n, mul_mod(x, y, n)) == UnitPhase();
        if (trivial) out.push_back(y);
    }
    return out;
}

}  // namespace pqm
