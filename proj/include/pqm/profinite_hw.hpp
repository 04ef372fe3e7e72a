#pragma once

#include <map>

#include "pqm/numbers.hpp"

namespace pqm {

// Elements (a, b, c) of the profinite Heisenberg-Weyl group over Z_p at a
// common prime and precision. Pure group arithmetic: there is no action on
// states, which keeps it apart from HWElement.
struct LocalHW {
    PadicInt a, b, c;

    LocalHW(PadicInt a, PadicInt b, PadicInt c);
    static LocalHW identity(u64 p, int precision);
    static LocalHW from_integers(u64 p, int precision, i64 a, i64 b, i64 c);

    u64 prime() const { return a.prime(); }
    int precision() const { return a.precision(); }
    friend bool operator==(const LocalHW& x, const LocalHW& y) = default;
};

// (a + a', b + b', c + c' + a b' - a' b).
LocalHW phw_mul(const LocalHW& g, const LocalHW& h);
LocalHW phw_inverse(const LocalHW& g);
// g h g^{-1} h^{-1} = (0, 0, 2 (a b' - a' b)).
LocalHW phw_commutator(const LocalHW& g, const LocalHW& h);

// Triple in Z(modulus)^3 with the same composition law reduced mod modulus.
struct FiniteHWTriple {
    i64 modulus = 1;
    i64 a = 0, b = 0, c = 0;
    friend bool operator==(const FiniteHWTriple& x, const FiniteHWTriple& y) = default;
};

FiniteHWTriple finite_mul(const FiniteHWTriple& g, const FiniteHWTriple& h);

// Reduction mod p^k; k must not exceed the precision.
FiniteHWTriple phw_project(const LocalHW& g, int k);
// Reduction between finite levels; modulus must be a multiple of target.
FiniteHWTriple psi_reduce(const FiniteHWTriple& g, i64 target);

// The same group over Z-hat, acting prime by prime.
struct GlobalHW {
    ProfiniteInt a, b, c;
};

// Assembles an element from per-prime components; unspecified primes take the
// integer tails.
GlobalHW phw_global(const std::map<u64, LocalHW>& parts, i64 tail_a = 0, i64 tail_b = 0, i64 tail_c = 0);
GlobalHW phw_mul(const GlobalHW& g, const GlobalHW& h);
// Image in Z(n)^3.
FiniteHWTriple phw_project(const GlobalHW& g, i64 n);

}  // namespace pqm
