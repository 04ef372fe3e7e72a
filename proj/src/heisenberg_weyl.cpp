#include <stdexcept>

#include "pqm/finite_qm.hpp"

namespace pqm {

i64 hw_kappa(i64 n) { return n % 2 == 0 ? 1 : 2; }

i64 hw_grid(i64 n) { return n % 2 == 0 ? 2 : 1; }

namespace {
void require_dim(i64 n) {
    if (n < 1) throw std::invalid_argument("pqm: dimension must be positive");
}

void require_same(i64 a, i64 b) {
    if (a != b) throw std::invalid_argument("pqm: dimension mismatch");
}

// Phase factor e^{2 pi i phase} w_n(kappa alpha X) of D at position X.
cd hw_diag(const HWElement& d, i64 X) {
    return (UnitPhase(d.phase) * omega(d.n, mul_mod(hw_kappa(d.n) * d.alpha, X, d.n))).value();
}
}  // namespace

HWElement HWElement::canonical(i64 n, i64 alpha, i64 beta, i64 gamma) {
    require_dim(n);
    const i64 g = hw_grid(n) * n;
    HWElement d;
    d.n = n;
    d.alpha = mod(alpha, n);
    d.beta = mod(beta, n);
    d.phase = RatMod1(mod(gamma, n), n) - RatMod1(mul_mod(alpha, beta, g), g);
    return d;
}

HWElement HWElement::from_continuum(i64 n, const RatMod1& a, i64 b, const RatMod1& c) {
    require_dim(n);
    const i64 g = hw_grid(n) * n;
    if (g % a.den() != 0) {
        throw std::invalid_argument("pqm: a = " + a.str() + " is not on the grid of Z(" + std::to_string(n) + ")");
    }
    HWElement d;
    d.n = n;
    d.alpha = mod(a.num() * (g / a.den()), n);
    d.beta = mod(b, n);
    d.phase = c - a * b;
    return d;
}

HWElement HWElement::clock_z(i64 n) {
    return n % 2 == 0 ? canonical(n, 1, 0, 0) : canonical(n, mod_inverse(2, n), 0, 0);
}

HWElement hw_mul(const HWElement& d1, const HWElement& d2) {
    require_same(d1.n, d2.n);
    const i64 n = d1.n;
    HWElement d;
    d.n = n;
    d.alpha = mod(d1.alpha + d2.alpha, n);
    d.beta = mod(d1.beta + d2.beta, n);
    d.phase = d1.phase + d2.phase - RatMod1(mul_mod(hw_kappa(n) * d2.alpha, d1.beta, n), n);
    return d;
}

HWElement hw_inverse(const HWElement& d) {
    HWElement r;
    r.n = d.n;
    r.alpha = mod(-d.alpha, d.n);
    r.beta = mod(-d.beta, d.n);
    r.phase = -d.phase - RatMod1(mul_mod(hw_kappa(d.n) * d.alpha, d.beta, d.n), d.n);
    return r;
}

HWElement hw_scalar(i64 n, const RatMod1& phase) {
    HWElement d = HWElement::identity(n);
    d.phase = phase;
    return d;
}

FiniteState displace(const HWElement& d, const FiniteState& f) {
    require_same(d.n, f.n);
    const i64 n = d.n;
    const i64 ka = mod(hw_kappa(n) * d.alpha, n);
    FiniteState out = FiniteState::zero(n, f.rep);
    if (f.rep == Rep::position) {
        for (i64 x = 0; x < n; ++x) out[x] = hw_diag(d, x) * f[mod(x - d.beta, n)];
    } else {
        // e^{phase} w_n(kappa alpha beta - beta P) F(P - kappa alpha)
        for (i64 P = 0; P < n; ++P) {
            const UnitPhase ph = UnitPhase(d.phase) * omega(n, mul_mod(d.beta, ka - P, n));
            out[P] = ph.value() * f[mod(P - ka, n)];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

i64 grid_size(i64 n, ParityGrid grid) {
    require_dim(n);
    if (n % 2 == 1) return n;
    return grid == ParityGrid::standard ? 2 * n : 4 * n;
}

PhasePoint grid_point(i64 n, i64 a_index, i64 b, ParityGrid grid) {
    const i64 g = grid_size(n, grid);
    return PhasePoint{n, RatMod1(a_index, g), mod(b, n)};
}

std::vector<PhasePoint> phase_grid(i64 n, ParityGrid grid) {
    const i64 g = grid_size(n, grid);
    std::vector<PhasePoint> pts;
    pts.reserve(static_cast<std::size_t>(g * n));
    for (i64 a = 0; a < g; ++a) {
        for (i64 b = 0; b < n; ++b) pts.push_back(grid_point(n, a, b, grid));
    }
    return pts;
}

ParityKey parity_key(const PhasePoint& pt) { return ParityKey{4 * pt.a, mod(pt.b, pt.n)}; }

PhasePoint quarter_shift(const PhasePoint& pt) { return PhasePoint{pt.n, pt.a + RatMod1(1, 4), pt.b}; }

namespace {
// c = 4 a n as an integer; requires den(4a) | n.
i64 parity_c(const PhasePoint& pt) {
    const RatMod1 q = 4 * pt.a;
    if (pt.n % q.den() != 0) {
        throw std::invalid_argument("pqm: 4a = " + q.str() + " is not a multiple of 1/" + std::to_string(pt.n));
    }
    return q.num() * (pt.n / q.den());
}
}  // namespace

FiniteState parity_apply(const PhasePoint& pt, const FiniteState& f) {
    require_same(pt.n, f.n);
    const i64 n = pt.n;
    const i64 c = parity_c(pt);
    const i64 b = mod(pt.b, n);
    FiniteState out = FiniteState::zero(n, f.rep);
    if (f.rep == Rep::position) {
        for (i64 x = 0; x < n; ++x) out[x] = omega(n, -mul_mod(c, b + x, n)).value() * f[mod(-x - 2 * b, n)];
    } else {
        for (i64 P = 0; P < n; ++P) {
            out[P] = omega(n, mul_mod(c, b, n) + mul_mod(2 * b, P, n)).value() * f[mod(-P - c, n)];
        }
    }
    return out;
}

cd weyl_wigner(const FiniteState& f, const PhasePoint& pt, PhaseFunction kind) {
    require_same(pt.n, f.n);
    if (kind == PhaseFunction::weyl) return inner(f, displace(HWElement::from_continuum(pt.n, pt.a, pt.b), f));
    return inner(f, parity_apply(pt, f));
}

// ---------------------------------------------------------------------------

OperatorMatrix to_matrix(const HWElement& d) {
    const i64 n = d.n;
    OperatorMatrix m = OperatorMatrix::Zero(n, n);
    for (i64 x = 0; x < n; ++x) m(x, mod(x - d.beta, n)) = hw_diag(d, x);
    return m;
}

OperatorMatrix parity_matrix(const PhasePoint& pt) {
    const i64 n = pt.n;
    const i64 c = parity_c(pt);
    OperatorMatrix m = OperatorMatrix::Zero(n, n);
    for (i64 x = 0; x < n; ++x) m(x, mod(-x - 2 * pt.b, n)) = omega(n, -mul_mod(c, pt.b + x, n)).value();
    return m;
}

OperatorMatrix fourier_matrix(i64 n, Rep from) {
    require_dim(n);
    const auto tab = omega_table(n);
    const double w = from == Rep::position ? 1.0 / static_cast<double>(n) : 1.0;
    OperatorMatrix m(n, n);
    for (i64 k = 0; k < n; ++k) {
        for (i64 x = 0; x < n; ++x) m(k, x) = tab[static_cast<std::size_t>(mod(-mul_mod(k, x, n), n))] * w;
    }
    return m;
}

OperatorMatrix projector(const FiniteState& g) {
    const i64 n = g.n;
    OperatorMatrix m(n, n);
    for (i64 x = 0; x < n; ++x) {
        for (i64 y = 0; y < n; ++y) m(x, y) = g[x] * std::conj(g[y]) * g.weight();
    }
    return m;
}

FiniteState apply(const OperatorMatrix& m, const FiniteState& f, Rep out_rep) {
    if (m.rows() != f.n || m.cols() != f.n) throw std::invalid_argument("pqm: operator dimension mismatch");
    const Eigen::Map<const Eigen::VectorXcd> v(f.amplitudes.data(), f.n);
    const Eigen::VectorXcd r = m * v;
    return FiniteState(f.n, out_rep, std::vector<cd>(r.data(), r.data() + r.size()));
}

OperatorMatrix conjugate_by(const HWElement& d, const OperatorMatrix& theta) {
    const i64 n = d.n;
    if (theta.rows() != n || theta.cols() != n) throw std::invalid_argument("pqm: operator dimension mismatch");
    std::vector<cd> diag(static_cast<std::size_t>(n));
    for (i64 x = 0; x < n; ++x) diag[static_cast<std::size_t>(x)] = hw_diag(d, x);
    OperatorMatrix out(n, n);
    for (i64 i = 0; i < n; ++i) {
        for (i64 j = 0; j < n; ++j) {
            out(i, j) = diag[static_cast<std::size_t>(i)] * theta(mod(i - d.beta, n), mod(j - d.beta, n)) *
                        std::conj(diag[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

double max_abs(const OperatorMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

FiniteState evolve(const OperatorMatrix& u, const FiniteState& f, Rep out_rep, double tol) {
    if (u.rows() != f.n || u.cols() != f.n) throw std::invalid_argument("pqm: operator dimension mismatch");
    const double w_in = f.weight();
    const double w_out = out_rep == Rep::position ? 1.0 / static_cast<double>(f.n) : 1.0;
    const OperatorMatrix gram = u.adjoint() * u * (w_out / w_in);
    const double dev = max_abs(gram - OperatorMatrix::Identity(f.n, f.n));
    if (dev > tol) {
        throw std::invalid_argument("pqm: operator is not unitary (deviation " + std::to_string(dev) + ")");
    }
    return apply(u, f, out_rep);
}

}  // namespace pqm
