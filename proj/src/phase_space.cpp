#include <cmath>
#include <limits>
#include <stdexcept>

#include "pqm/finite_qm.hpp"

namespace pqm {

namespace {
void require_square(const OperatorMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) throw std::invalid_argument("pqm: operator must be square");
}
}  // namespace

double resolution_identity_check(const OperatorMatrix& theta) {
    require_square(theta);
    const i64 n = theta.rows();
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (i64 a = 0; a < n; ++a) {
        for (i64 b = 0; b < n; ++b) acc += conjugate_by(HWElement::canonical(n, a, b), theta);
    }
    acc /= static_cast<double>(n);
    return max_abs(acc - theta.trace() * OperatorMatrix::Identity(n, n));
}

Expansion operator_expand(const OperatorMatrix& theta) {
    require_square(theta);
    const i64 n = theta.rows();
    Expansion e;
    e.coefficients = OperatorMatrix::Zero(n, n);
    OperatorMatrix rebuilt = OperatorMatrix::Zero(n, n);
    for (i64 a = 0; a < n; ++a) {
        for (i64 b = 0; b < n; ++b) {
            const cd c = (to_matrix(HWElement::canonical(n, -a, -b)) * theta).trace();
            e.coefficients(a, b) = c;
            rebuilt += c * to_matrix(HWElement::canonical(n, a, b));
        }
    }
    rebuilt /= static_cast<double>(n);
    e.residual = max_abs(theta - rebuilt);
    return e;
}

ParityResiduals parity_expand_check(const OperatorMatrix& theta, bool exploratory, ParityGrid grid) {
    require_square(theta);
    const i64 n = theta.rows();
    const bool odd = n % 2 == 1;
    if (!odd && !exploratory) {
        throw std::domain_error("pqm: parity identities are established for odd n only (unsupported regime)");
    }
    const i64 g = grid_size(n, grid);
    // Each grid point carries measure 1/g: (1/n) for odd n, (1/n)(n/g) otherwise.
    const double w = 1.0 / static_cast<double>(g);
    const OperatorMatrix id = OperatorMatrix::Identity(n, n);

    ParityResiduals r;
    r.character_sum = std::numeric_limits<double>::quiet_NaN();
    OperatorMatrix sandwich = OperatorMatrix::Zero(n, n);
    OperatorMatrix tomo = OperatorMatrix::Zero(n, n);
    for (const auto& pt : phase_grid(n, grid)) {
        const OperatorMatrix P = parity_matrix(pt);
        sandwich += P * theta * P;
        tomo += P * (theta * P).trace();
    }
    r.sandwich = max_abs(sandwich * w - theta.trace() * id);
    r.tomography = max_abs(theta - tomo * w);

    if (odd) {
        // P(alpha/n, beta) = (1/n) sum w_n(2 alpha' beta - 2 alpha beta') D(alpha', beta', 0)
        double worst = 0.0;
        std::vector<OperatorMatrix> basis;
        basis.reserve(static_cast<std::size_t>(n * n));
        for (i64 a = 0; a < n; ++a) {
            for (i64 b = 0; b < n; ++b) basis.push_back(to_matrix(HWElement::canonical(n, a, b)));
        }
        for (const auto& pt : phase_grid(n, ParityGrid::standard)) {
            const i64 alpha = pt.a.num() * (n / pt.a.den());
            OperatorMatrix s = OperatorMatrix::Zero(n, n);
            for (i64 a = 0; a < n; ++a) {
                for (i64 b = 0; b < n; ++b) {
                    const i64 e = 2 * (mul_mod(a, pt.b, n) - mul_mod(alpha, b, n));
                    s += omega(n, e).value() * basis[static_cast<std::size_t>(a * n + b)];
                }
            }
            worst = std::max(worst, max_abs(parity_matrix(pt) - s / static_cast<double>(n)));
        }
        r.character_sum = worst;
    }
    return r;
}

// ---------------------------------------------------------------------------

OperatorMatrix marginal_a(i64 n, const RatMod1& a) {
    const i64 m = hw_grid(n) * n;
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (i64 b = 0; b < m; ++b) acc += to_matrix(HWElement::from_continuum(n, a, b));
    return acc / static_cast<double>(m);
}

RatMod1 crt_half(i64 n, i64 P) {
    if (n < 2) return RatMod1();
    const CrtData crt = crt_idempotents(n);
    const auto hat = split_nu_hat(crt, mod(P, n));
    RatMod1 h;
    for (std::size_t i = 0; i < crt.factors.size(); ++i) {
        const auto& f = crt.factors[i];
        if (f.p == 2) {
            h += RatMod1(hat[i], 2 * f.q);
        } else {
            h += RatMod1(mul_mod(mod_inverse(2, f.q), hat[i], f.q), f.q);
        }
    }
    return h;
}

OperatorMatrix marginal_b_momentum(i64 n, i64 b) {
    std::vector<RatMod1> h(static_cast<std::size_t>(n));
    for (i64 P = 0; P < n; ++P) h[static_cast<std::size_t>(P)] = crt_half(n, P);
    OperatorMatrix k(n, n);
    for (i64 P = 0; P < n; ++P) {
        for (i64 Q = 0; Q < n; ++Q) {
            k(P, Q) = UnitPhase(-(b * (h[static_cast<std::size_t>(P)] + h[static_cast<std::size_t>(Q)]))).value();
        }
    }
    return k;
}

cd hat_pairing_value(const FiniteState& F, i64 y) {
    if (F.rep != Rep::momentum) throw std::invalid_argument("pqm: hat pairing needs momentum amplitudes");
    cd s = 0;
    for (i64 P = 0; P < F.n; ++P) s += F[P] * UnitPhase(y * crt_half(F.n, P)).value();
    return s;
}

OperatorMatrix parity_marginal_a(i64 n, const RatMod1& a) {
    if (n % 2 == 0) throw std::domain_error("pqm: parity marginal A is defined for odd n only");
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (i64 b = 0; b < n; ++b) acc += parity_matrix(PhasePoint{n, a, b});
    return acc / static_cast<double>(n);
}

OperatorMatrix parity_marginal_b(i64 n, i64 b) {
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (i64 c = 0; c < n; ++c) acc += parity_matrix(PhasePoint{n, RatMod1(c, 4 * n), b});
    return acc;
}

double coherent_check(const FiniteState& g, double norm_tol) {
    const double nn = norm_sq(g);
    if (std::abs(nn - 1.0) > norm_tol) {
        throw std::invalid_argument("pqm: coherent fiducial must be normalized (norm^2 = " + std::to_string(nn) + ")");
    }
    const FiniteState pos = g.rep == Rep::position ? g : fourier(g);
    const OperatorMatrix proj = projector(pos);
    const i64 n = g.n;
    OperatorMatrix acc = OperatorMatrix::Zero(n, n);
    for (i64 a = 0; a < n; ++a) {
        for (i64 b = 0; b < n; ++b) acc += conjugate_by(HWElement::canonical(n, a, b), proj);
    }
    return max_abs(acc / static_cast<double>(n) - OperatorMatrix::Identity(n, n));
}

}  // namespace pqm
