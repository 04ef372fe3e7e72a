#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "pqm/finite_qm.hpp"

namespace pqm::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed);
    return gen;
}

inline cd random_cd() {
    std::normal_distribution<double> d(0.0, 1.0);
    return {d(rng()), d(rng())};
}

inline i64 random_int(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

inline FiniteState random_state(i64 n, Rep rep = Rep::position, bool normalized = true) {
    std::vector<cd> v(static_cast<std::size_t>(n));
    for (auto& z : v) z = random_cd();
    FiniteState f(n, rep, v);
    if (normalized) {
        const double s = std::sqrt(norm_sq(f));
        for (auto& z : f.amplitudes) z /= s;
    }
    return f;
}

inline OperatorMatrix random_operator(i64 n) {
    OperatorMatrix m(n, n);
    for (i64 i = 0; i < n; ++i) {
        for (i64 j = 0; j < n; ++j) m(i, j) = random_cd();
    }
    return m;
}

// exp(2 pi i num / den) evaluated without the library's phase tables.
inline cd cis(double num, double den) {
    const double t = 2.0 * std::numbers::pi * num / den;
    return {std::cos(t), std::sin(t)};
}

}  // namespace pqm::test
