#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pqm/finite_qm.hpp"
#include "pqm/numbers.hpp"
#include "pqm/schwartz_bruhat.hpp"

namespace pqm {

// Embedding of the system on Z(k) into the one on Z(l); requires k | l.
struct EmbeddingSpec {
    i64 k = 1;
    i64 l = 1;

    EmbeddingSpec(i64 k, i64 l);
    i64 ratio() const { return l / k; }
};

// E_{lm} o E_{kl}; the labels must chain.
EmbeddingSpec compose(const EmbeddingSpec& outer, const EmbeddingSpec& inner);

// Whether Z(k) embeds into Z(l), i.e. k | l.
bool embedding_exists(i64 k, i64 l);

// (alpha, beta) -> (alpha, (l/k) beta) in Z(l)^2; preserves w(alpha beta) exactly.
std::pair<i64, i64> phase_embed(const EmbeddingSpec& e, i64 alpha, i64 beta);

// Z(p^k)^2 -> Z_p x Q_p/Z_p: alpha as a p-adic integer, beta as p^{-k} beta.
std::pair<PadicInt, PadicFrac> phase_embed_profinite(u64 p, int k, i64 alpha, i64 beta, int precision);

// Position: f'(X) = f(X mod k). Momentum: F'((l/k) P) = F(P), zero elsewhere.
FiniteState state_embed(const FiniteState& f, i64 l);

// Restricted tensor product with one local factor of degree e per p^e || n.
GlobalSBFunction state_embed_profinite(const FiniteState& f);

// Image of D(alpha, beta, phase) on Z(k) that intertwines state_embed: the shift
// and the phase are kept, the clock index is rescaled so that the character of
// X is unchanged.
HWElement hw_embed(const HWElement& d, i64 l);

struct CompatReport {
    i64 k = 0, l = 0, m = 0;
    bool composition_exact = false;
    bool character_exact = false;
    double fourier_residual = 0.0;
    double hw_residual = 0.0;

    bool passed(double tol) const {
        return composition_exact && character_exact && fourier_residual <= tol && hw_residual <= tol;
    }
};

// Compatibility checks along k | l | m. HW intertwining covers every
// (alpha, beta) when k^2 <= 256 and `samples` random pairs otherwise.
CompatReport compat_suite(i64 k, i64 l, i64 m, std::uint64_t seed = 1, int samples = 64);

enum class Quantity { norm, weyl, wigner, position_entropy };

// -sum_X q_X log(n q_X) with q_X = |f(X)|^2 / n over position amplitudes.
double position_entropy(const FiniteState& f);

struct UbiquityResult {
    bool passed = false;
    double deviation = 0.0;
};

// Compares a quantity of f with that of its embedding into Z(r). Weyl and
// Wigner values are compared on every standard grid point of Z(k).
UbiquityResult ubiquity_check(Quantity q, const FiniteState& f, i64 r, double tol = 1e-12);

// Annihilator in the dual Z(n) of the copy of Z(m), m | n, found by testing characters.
std::vector<i64> annihilator(i64 n, i64 m);

}  // namespace pqm
