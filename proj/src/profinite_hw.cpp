#include "pqm/profinite_hw.hpp"

#include <stdexcept>
#include <string>

namespace pqm {

namespace {
void require_match(const LocalHW& g, const LocalHW& h) {
    if (g.prime() != h.prime() || g.precision() != h.precision()) {
        throw std::invalid_argument("pqm: profinite HW elements differ in prime or precision");
    }
}

i64 checked_modulus(i64 m) {
    if (m < 1) throw std::invalid_argument("pqm: modulus must be positive, got " + std::to_string(m));
    return m;
}
}  // namespace

LocalHW::LocalHW(PadicInt a_, PadicInt b_, PadicInt c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.prime() != b.prime() || a.prime() != c.prime() || a.precision() != b.precision() ||
        a.precision() != c.precision()) {
        throw std::invalid_argument("pqm: profinite HW components must share prime and precision");
    }
}

LocalHW LocalHW::identity(u64 p, int precision) { return from_integers(p, precision, 0, 0, 0); }

LocalHW LocalHW::from_integers(u64 p, int precision, i64 a, i64 b, i64 c) {
    return LocalHW(PadicInt::from_integer(p, a, precision), PadicInt::from_integer(p, b, precision),
                   PadicInt::from_integer(p, c, precision));
}

LocalHW phw_mul(const LocalHW& g, const LocalHW& h) {
    require_match(g, h);
    return LocalHW(g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b - h.a * g.b);
}

LocalHW phw_inverse(const LocalHW& g) { return LocalHW(-g.a, -g.b, -g.c); }

LocalHW phw_commutator(const LocalHW& g, const LocalHW& h) {
    return phw_mul(phw_mul(g, h), phw_mul(phw_inverse(g), phw_inverse(h)));
}

FiniteHWTriple finite_mul(const FiniteHWTriple& g, const FiniteHWTriple& h) {
    if (g.modulus != h.modulus) throw std::invalid_argument("pqm: finite HW triples differ in modulus");
    const i64 n = checked_modulus(g.modulus);
    const i64 twist = mod(mul_mod(g.a, h.b, n) - mul_mod(h.a, g.b, n), n);
    return {n, mod(g.a + h.a, n), mod(g.b + h.b, n), mod(mod(g.c + h.c, n) + twist, n)};
}

FiniteHWTriple phw_project(const LocalHW& g, int k) {
    if (k < 0 || k > g.precision()) {
        throw std::domain_error("pqm: projection to level " + std::to_string(k) + " exceeds precision " +
                                std::to_string(g.precision()));
    }
    return {static_cast<i64>(ipow(g.prime(), k)), project_xi(g.a, k), project_xi(g.b, k), project_xi(g.c, k)};
}

FiniteHWTriple psi_reduce(const FiniteHWTriple& g, i64 target) {
    checked_modulus(target);
    if (g.modulus % target != 0) throw std::invalid_argument("pqm: reduction target must divide the modulus");
    return {target, mod(g.a, target), mod(g.b, target), mod(g.c, target)};
}

GlobalHW phw_global(const std::map<u64, LocalHW>& parts, i64 tail_a, i64 tail_b, i64 tail_c) {
    std::map<u64, PadicInt> a, b, c;
    for (const auto& [p, g] : parts) {
        if (g.prime() != p) throw std::invalid_argument("pqm: profinite HW component keyed by the wrong prime");
        a.emplace(p, g.a);
        b.emplace(p, g.b);
        c.emplace(p, g.c);
    }
    return {ProfiniteInt(tail_a, std::move(a)), ProfiniteInt(tail_b, std::move(b)), ProfiniteInt(tail_c, std::move(c))};
}

GlobalHW phw_mul(const GlobalHW& g, const GlobalHW& h) {
    return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b - h.a * g.b};
}

FiniteHWTriple phw_project(const GlobalHW& g, i64 n) {
    checked_modulus(n);
    return {n, g.a.residue(n), g.b.residue(n), g.c.residue(n)};
}

}  // namespace pqm
