#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pqm/numbers.hpp"

namespace pqm {

enum class Rep { position, momentum };

std::string to_string(Rep r);
Rep other(Rep r);

// Amplitudes on Z(n). Position amplitudes pair with weight 1/n, momentum
// amplitudes with weight 1.
struct FiniteState {
    i64 n = 0;
    Rep rep = Rep::position;
    std::vector<cd> amplitudes;

    FiniteState() = default;
    FiniteState(i64 n, Rep rep, std::vector<cd> amplitudes);
    static FiniteState zero(i64 n, Rep rep);

    cd& operator[](i64 x) { return amplitudes[static_cast<std::size_t>(x)]; }
    const cd& operator[](i64 x) const { return amplitudes[static_cast<std::size_t>(x)]; }
    double weight() const { return rep == Rep::position ? 1.0 / static_cast<double>(n) : 1.0; }
};

// Measure-weighted inner product, conjugate-linear in f.
cd inner(const FiniteState& f, const FiniteState& g);
double norm_sq(const FiniteState& f);
// Largest amplitude difference; states must share n and rep.
double max_abs_diff(const FiniteState& f, const FiniteState& g);

// ---------------------------------------------------------------------------
// Fourier transform. Position to momentum is F(P) = (1/n) sum_X f(X) w_n(-XP);
// momentum to position applies the same kernel with counting measure, so the
// transform squares to parity and has order four.

FiniteState fourier(const FiniteState& f);
FiniteState inverse_fourier(const FiniteState& f);
// Prime-factor evaluation through CRT index maps and per-factor transforms.
FiniteState fourier_good(const FiniteState& f);

// ---------------------------------------------------------------------------
// Heisenberg-Weyl group on Z(n).
//
// kappa(n) = 2 for odd n and 1 for even n. The element (alpha, beta, phase)
// acts on position amplitudes as
//   [D f](X) = e^{2 pi i phase} w_n(kappa alpha X) f(X - beta),
// which is the continuum displacement D(a, b, c) with 2a = kappa alpha / n.

i64 hw_kappa(i64 n);
// Denominator multiplier of the continuum a-grid: a = alpha / (grid(n) n).
i64 hw_grid(i64 n);

struct HWElement {
    i64 n = 0;
    i64 alpha = 0;
    i64 beta = 0;
    RatMod1 phase;

    // D(alpha, beta, gamma) with phase gamma/n - alpha beta / (grid(n) n), evaluated
    // on the integer lifts given before reduction.
    static HWElement canonical(i64 n, i64 alpha, i64 beta, i64 gamma = 0);
    // D(a, b, c) with c - a b as the phase; den(a) must divide grid(n) n.
    static HWElement from_continuum(i64 n, const RatMod1& a, i64 b, const RatMod1& c = {});
    static HWElement identity(i64 n) { return canonical(n, 0, 0, 0); }
    static HWElement shift_x(i64 n) { return canonical(n, 0, 1, 0); }
    static HWElement clock_z(i64 n);

    friend bool operator==(const HWElement& a, const HWElement& b) = default;
};

HWElement hw_mul(const HWElement& d1, const HWElement& d2);
HWElement hw_inverse(const HWElement& d);
HWElement hw_scalar(i64 n, const RatMod1& phase);

FiniteState displace(const HWElement& d, const FiniteState& f);

// ---------------------------------------------------------------------------
// Phase-space points and parity.

enum class ParityGrid {
    standard,   // a = alpha / n for odd n, a = alpha / (2n) for even n
    quadruple,  // a = alpha / (4n) for even n; same as standard for odd n
};

struct PhasePoint {
    i64 n = 0;
    RatMod1 a;  // element of Q/Z with den(4a) | n
    i64 b = 0;  // integer lift of the position coordinate

    friend bool operator==(const PhasePoint& x, const PhasePoint& y) = default;
};

i64 grid_size(i64 n, ParityGrid grid);
PhasePoint grid_point(i64 n, i64 a_index, i64 b, ParityGrid grid = ParityGrid::standard);
std::vector<PhasePoint> phase_grid(i64 n, ParityGrid grid = ParityGrid::standard);

// The parity operator depends on (4a mod 1, b mod n) only.
struct ParityKey {
    RatMod1 four_a;
    i64 b;
    friend bool operator==(const ParityKey& x, const ParityKey& y) = default;
};
ParityKey parity_key(const PhasePoint& pt);
// a + 1/4: the quarter period.
PhasePoint quarter_shift(const PhasePoint& pt);

// P(a, b) f(X) = chi(-4a(b + X)) f(-X - 2b).
FiniteState parity_apply(const PhasePoint& pt, const FiniteState& f);

enum class PhaseFunction { weyl, wigner };
// Weyl: (f, D(a, b, 0) f). Wigner: (f, P(a, b) f).
cd weyl_wigner(const FiniteState& f, const PhasePoint& pt, PhaseFunction kind);

// ---------------------------------------------------------------------------
// Operators as position-basis matrices acting on amplitude vectors.

using OperatorMatrix = Eigen::MatrixXcd;

OperatorMatrix to_matrix(const HWElement& d);
OperatorMatrix parity_matrix(const PhasePoint& pt);
// Matrix taking amplitudes in rep `from` to amplitudes of the transform.
OperatorMatrix fourier_matrix(i64 n, Rep from);
// |g><g| with the position weight: entries g(x) g(y)^* / n.
OperatorMatrix projector(const FiniteState& g);

FiniteState apply(const OperatorMatrix& m, const FiniteState& f, Rep out_rep);

// D theta D^dagger without forming D.
OperatorMatrix conjugate_by(const HWElement& d, const OperatorMatrix& theta);

double max_abs(const OperatorMatrix& m);

// Applies U after checking it is an isometry between the measures of f.rep and out_rep.
FiniteState evolve(const OperatorMatrix& u, const FiniteState& f, Rep out_rep, double tol = 1e-10);
inline FiniteState evolve(const OperatorMatrix& u, const FiniteState& f) { return evolve(u, f, f.rep); }

// ---------------------------------------------------------------------------
// Finite identities. Each returns the largest entrywise residual.

// (1/n) sum_{alpha,beta} D theta D^dagger - tr(theta) 1.
double resolution_identity_check(const OperatorMatrix& theta);

struct Expansion {
    OperatorMatrix coefficients;  // c(alpha, beta) = tr[D(-alpha, -beta, 0) theta]
    double residual = 0.0;        // theta - (1/n) sum D(alpha, beta, 0) c(alpha, beta)
};
Expansion operator_expand(const OperatorMatrix& theta);

struct ParityResiduals {
    double character_sum = 0.0;  // P as a character-weighted sum of displacements; NaN for even n
    double sandwich = 0.0;       // (1/n) sum P theta P - tr(theta) 1
    double tomography = 0.0;     // theta - (1/n) sum P tr(theta P)
};
// Odd n. Even n raises std::domain_error unless exploratory is set, in which
// case the chosen grid is averaged with its own measure.
ParityResiduals parity_expand_check(const OperatorMatrix& theta, bool exploratory = false,
                                    ParityGrid grid = ParityGrid::standard);

// Displacement marginal A(a): average of D(a, b, 0) over b in Z(grid(n) n).
OperatorMatrix marginal_a(i64 n, const RatMod1& a);
// Displacement marginal B(b). In momentum amplitudes its kernel is
// chi(-b (h(P) + h(P'))), with h(P) the half of P/n taken prime by prime and
// zero integer part on the 2-component.
OperatorMatrix marginal_b_momentum(i64 n, i64 b);
// Parity marginals: A-script averages P(a, b) over b in Z(n); B-script sums P(a, b)
// over the n distinct values of 4a.
OperatorMatrix parity_marginal_a(i64 n, const RatMod1& a);
OperatorMatrix parity_marginal_b(i64 n, i64 b);

// Half of P/n in Q/Z, prime by prime (see marginal_b_momentum).
RatMod1 crt_half(i64 n, i64 P);
// h-hat(y) = sum_P F(P) chi(y h(P)) for momentum amplitudes F.
cd hat_pairing_value(const FiniteState& F, i64 y);

// (1/n) sum over (alpha, beta) of D |g><g| D^dagger minus 1; g must be normalized.
double coherent_check(const FiniteState& g, double norm_tol = 1e-10);

// ---------------------------------------------------------------------------
// Tensor factorization over the prime-power factors of n.

struct ProductTerm {
    cd coefficient;
    std::map<u64, FiniteState> factors;  // one state on Z(p^e) per prime of n
};

struct TensorDecomposition {
    i64 n = 0;
    Rep rep = Rep::position;
    std::vector<ProductTerm> terms;
};

// Position amplitudes split by X mod p^e, momentum amplitudes by the hat map.
// Product states come back as a single term.
TensorDecomposition tensor_factor(const FiniteState& f);
FiniteState tensor_join(const TensorDecomposition& t);

// Position index permutation: X -> multi-index of residues, flattened with the
// first prime most significant.
std::vector<i64> crt_position_order(i64 n);
// Momentum counterpart through the hat map.
std::vector<i64> crt_momentum_order(i64 n);

struct HWFactorization {
    std::map<u64, HWElement> factors;
    RatMod1 scalar;  // phase from primes not dividing n
};
HWFactorization factor_hw(const HWElement& d);

// Kronecker product of component matrices in the CRT ordering, mapped back to
// the natural ordering of Z(n).
OperatorMatrix join_operator(i64 n, const std::map<u64, OperatorMatrix>& factors);

}  // namespace pqm
