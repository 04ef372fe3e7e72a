#include <stdexcept>

#include "pqm/finite_qm.hpp"

namespace pqm {

std::string to_string(Rep r) { return r == Rep::position ? "position" : "momentum"; }

Rep other(Rep r) { return r == Rep::position ? Rep::momentum : Rep::position; }

FiniteState::FiniteState(i64 n_, Rep rep_, std::vector<cd> amplitudes_)
    : n(n_), rep(rep_), amplitudes(std::move(amplitudes_)) {
    if (n < 1) throw std::invalid_argument("pqm: state dimension must be positive");
    if (static_cast<i64>(amplitudes.size()) != n) {
        throw std::invalid_argument("pqm: state has " + std::to_string(amplitudes.size()) +
                                    " amplitudes, expected " + std::to_string(n));
    }
}

FiniteState FiniteState::zero(i64 n, Rep rep) {
    return FiniteState(n, rep, std::vector<cd>(static_cast<std::size_t>(n)));
}

namespace {
void require_compatible(const FiniteState& f, const FiniteState& g) {
    if (f.n != g.n) throw std::invalid_argument("pqm: dimension mismatch");
    if (f.rep != g.rep) throw std::invalid_argument("pqm: representation mismatch");
}
}  // namespace

cd inner(const FiniteState& f, const FiniteState& g) {
    require_compatible(f, g);
    cd s = 0;
    for (std::size_t i = 0; i < f.amplitudes.size(); ++i) s += std::conj(f.amplitudes[i]) * g.amplitudes[i];
    return s * f.weight();
}

double norm_sq(const FiniteState& f) { return inner(f, f).real(); }

double max_abs_diff(const FiniteState& f, const FiniteState& g) {
    require_compatible(f, g);
    double m = 0;
    for (std::size_t i = 0; i < f.amplitudes.size(); ++i) {
        m = std::max(m, std::abs(f.amplitudes[i] - g.amplitudes[i]));
    }
    return m;
}

namespace {
// Transform with kernel w_n(sign * x k) and the measure of the source rep.
FiniteState dft(const FiniteState& f, int sign) {
    const i64 n = f.n;
    const auto tab = omega_table(n);
    FiniteState out = FiniteState::zero(n, other(f.rep));
    const double w = f.weight();
    for (i64 k = 0; k < n; ++k) {
        cd s = 0;
        for (i64 x = 0; x < n; ++x) s += f[x] * tab[static_cast<std::size_t>(mod(sign * mul_mod(x, k, n), n))];
        out[k] = s * w;
    }
    return out;
}
}  // namespace

FiniteState fourier(const FiniteState& f) { return dft(f, -1); }

FiniteState inverse_fourier(const FiniteState& f) { return dft(f, +1); }

std::vector<i64> crt_position_order(i64 n) {
    const CrtData crt = crt_idempotents(n);
    std::vector<i64> order(static_cast<std::size_t>(n));
    std::vector<i64> parts(crt.factors.size(), 0);
    for (i64 flat = 0; flat < n; ++flat) {
        i64 r = flat;
        for (std::size_t i = crt.factors.size(); i-- > 0;) {
            parts[i] = r % crt.factors[i].q;
            r /= crt.factors[i].q;
        }
        order[static_cast<std::size_t>(flat)] = join_mu(crt, parts);
    }
    return order;
}

std::vector<i64> crt_momentum_order(i64 n) {
    const CrtData crt = crt_idempotents(n);
    std::vector<i64> order(static_cast<std::size_t>(n));
    std::vector<i64> parts(crt.factors.size(), 0);
    for (i64 flat = 0; flat < n; ++flat) {
        i64 r = flat;
        for (std::size_t i = crt.factors.size(); i-- > 0;) {
            parts[i] = r % crt.factors[i].q;
            r /= crt.factors[i].q;
        }
        order[static_cast<std::size_t>(flat)] = join_nu_hat(crt, parts);
    }
    return order;
}

FiniteState fourier_good(const FiniteState& f) {
    const i64 n = f.n;
    if (n < 2) return fourier(f);
    const CrtData crt = crt_idempotents(n);
    if (crt.factors.size() == 1) return fourier(f);

    // Position indices split as X mod q_i and momentum indices through the hat
    // map, so w_n(-XP) = prod_i w_{q_i}(-X_i P-hat_i) and the transform is a
    // tensor product of prime-power transforms.
    const bool from_position = f.rep == Rep::position;
    const auto in_order = from_position ? crt_position_order(n) : crt_momentum_order(n);
    const auto out_order = from_position ? crt_momentum_order(n) : crt_position_order(n);

    std::vector<cd> t(static_cast<std::size_t>(n));
    for (i64 flat = 0; flat < n; ++flat) t[static_cast<std::size_t>(flat)] = f[in_order[static_cast<std::size_t>(flat)]];

    std::vector<cd> fiber;
    i64 stride = n;
    for (const auto& fac : crt.factors) {
        const i64 q = fac.q;
        stride /= q;
        const auto tab = omega_table(q);
        const double w = from_position ? 1.0 / static_cast<double>(q) : 1.0;
        fiber.resize(static_cast<std::size_t>(q));
        // Every fiber along this axis: outer index above, inner index below.
        for (i64 outer = 0; outer < n / (q * stride); ++outer) {
            for (i64 inner_i = 0; inner_i < stride; ++inner_i) {
                const i64 base = outer * q * stride + inner_i;
                for (i64 k = 0; k < q; ++k) {
                    cd s = 0;
                    for (i64 x = 0; x < q; ++x) {
                        s += t[static_cast<std::size_t>(base + x * stride)] *
                             tab[static_cast<std::size_t>(mod(-(x * k), q))];
                    }
                    fiber[static_cast<std::size_t>(k)] = s * w;
                }
                for (i64 k = 0; k < q; ++k) t[static_cast<std::size_t>(base + k * stride)] = fiber[static_cast<std::size_t>(k)];
            }
        }
    }

    FiniteState out = FiniteState::zero(n, other(f.rep));
    for (i64 flat = 0; flat < n; ++flat) out[out_order[static_cast<std::size_t>(flat)]] = t[static_cast<std::size_t>(flat)];
    return out;
}

}  // namespace pqm
