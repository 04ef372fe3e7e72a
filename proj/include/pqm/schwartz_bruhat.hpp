#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pqm/finite_qm.hpp"
#include "pqm/numbers.hpp"

namespace pqm {

// Position functions live on Z_p, momentum functions on Q_p/Z_p.
enum class Side { position, momentum };

// A locally constant function on Z_p (position) or a compactly supported
// function on Q_p/Z_p (momentum), stored at a degree d:
//   position: values[X] on the class X + p^d Z_p, X in [0, p^d)
//   momentum: values[m] at m / p^d, m in [0, p^d)
struct LocalSBFunction {
    u64 p = 2;
    Side side = Side::position;
    int degree = 0;
    std::vector<cd> values;

    LocalSBFunction() = default;
    LocalSBFunction(u64 p, Side side, int degree, std::vector<cd> values);

    // 1 on Z_p (position) or the spike Delta_p at 0 (momentum).
    static LocalSBFunction trivial(u64 p, Side side);
};

// Haar measure of total mass 1 on Z_p; counting measure on Q_p/Z_p.
cd integrate_local(const LocalSBFunction& f);

// Same function re-expressed at a degree >= f.degree.
LocalSBFunction refine(const LocalSBFunction& f, int degree);

// Conjugate-linear in f; both sides refined to the larger degree.
cd local_inner(const LocalSBFunction& f, const LocalSBFunction& g);

// Kernel chi_p(-x p) with the source measure; the side flips and the degree is kept.
LocalSBFunction local_fourier(const LocalSBFunction& f);
LocalSBFunction local_inverse_fourier(const LocalSBFunction& f);

// Smallest degree at which a position function is still constant on classes.
int constancy_degree(const LocalSBFunction& f, double tol = 1e-12);
// Smallest k with the momentum support inside p^{-k} Z_p / Z_p.
int support_degree(const LocalSBFunction& f, double tol = 1e-12);

// Delta_p, exact, on the momentum side.
LocalSBFunction delta_exact(u64 p);
// p^N times the indicator of p^N Z_p: integrates degree <= N functions to f(0).
LocalSBFunction delta_approx(u64 p, int N);

// f(lambda .) for a positive integer lambda = p^r lambda_1. On the momentum side
// the degree grows by r. On the position side r > 0 leaves Z_p, so only units
// are accepted here; QpFunction covers the general case.
LocalSBFunction scale_variable(const LocalSBFunction& f, i64 lambda);

// Function on Q_p supported on p^{-k} Z_p and constant on cosets of p^n Z_p
// (n + k >= 0). values[y] is the value on p^{-k} y + p^n Z_p, y in [0, p^{n+k}).
struct QpFunction {
    u64 p = 2;
    int k = 0;
    int n = 0;
    std::vector<cd> values;

    QpFunction() = default;
    QpFunction(u64 p, int k, int n, std::vector<cd> values);
    static QpFunction from_position(const LocalSBFunction& f);
};

cd integrate_qp(const QpFunction& f);
// f(lambda .): support degree k + r, constancy degree n - r.
QpFunction scale_qp(const QpFunction& f, i64 lambda);

// h-hat(y/2) = sum_p chi_2(y p / 2) F(p) for y in [0, 2^{d+1}), F a momentum
// function on Q_2/Z_2 of degree d.
std::vector<cd> hat_transform_2adic(const LocalSBFunction& F);

// ---------------------------------------------------------------------------
// Restricted tensor products over the primes.

struct GlobalTerm {
    cd coefficient = 1.0;
    std::map<u64, LocalSBFunction> factors;  // absent primes carry the trivial factor
};

struct GlobalSBFunction {
    Side side = Side::position;
    std::vector<GlobalTerm> terms;

    GlobalSBFunction() = default;
    GlobalSBFunction(Side side, std::vector<GlobalTerm> terms);
};

cd global_inner(const GlobalSBFunction& f, const GlobalSBFunction& g);
GlobalSBFunction global_fourier(const GlobalSBFunction& f);

// p^e per nontrivial prime, e the largest degree among the terms.
i64 canonical_dimension(const GlobalSBFunction& f);

// State on Z(l) with l = canonical_dimension(f), or a multiple of it given as
// target. Position indices follow X mod p^e, momentum indices the hat map.
FiniteState canonicalize_global(const GlobalSBFunction& f, std::optional<i64> target = std::nullopt);

enum class GlobalOp { displace, parity };

// D(a, b, c) or P(a, b) acting prime by prime. c is ignored for parity.
// Throws std::domain_error when b is not known to the precision required by
// the support of a and of f.
GlobalSBFunction global_displace_parity(const GlobalSBFunction& f, const RatMod1& a, const ProfiniteInt& b,
                                        const RatMod1& c, GlobalOp kind);

}  // namespace pqm
