#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "pqm/numbers.hpp"
#include "support.hpp"

using namespace pqm;
using pqm::test::random_int;

namespace {

// Base-p digits of v mod p^N by repeated division.
std::vector<std::uint32_t> digits_oracle(u64 p, i64 v, int N) {
    i64 m = 1;
    for (int i = 0; i < N; ++i) m *= static_cast<i64>(p);
    i64 r = ((v % m) + m) % m;
    std::vector<std::uint32_t> d;
    for (int i = 0; i < N; ++i) {
        d.push_back(static_cast<std::uint32_t>(r % static_cast<i64>(p)));
        r /= static_cast<i64>(p);
    }
    return d;
}

i64 inverse_by_search(i64 a, i64 m) {
    for (i64 t = 0; t < m; ++t) {
        if ((a * t) % m == 1 % m) return t;
    }
    return -1;
}

}  // namespace

TEST_CASE("p-adic digits and arithmetic", "[padic]") {
    CHECK(PadicInt::from_integer(3, -1, 4).digits() == std::vector<std::uint32_t>{2, 2, 2, 2});
    for (u64 p : {2u, 3u, 5u, 7u}) {
        const auto m1 = PadicInt::from_integer(p, -1, 6);
        for (int i = 0; i < 6; ++i) CHECK(m1.digit(i) == p - 1);
    }
    const auto three = PadicInt::from_integer(2, 3, 4);
    CHECK((three * three).digits() == std::vector<std::uint32_t>{1, 0, 0, 1});

    for (u64 p : {2u, 3u, 5u, 7u, 11u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const i64 x = random_int(-5000, 5000);
            const i64 y = random_int(-5000, 5000);
            const int nx = static_cast<int>(random_int(1, 8));
            const int ny = static_cast<int>(random_int(1, 8));
            const auto a = PadicInt::from_integer(p, x, nx);
            const auto b = PadicInt::from_integer(p, y, ny);
            const int N = std::min(nx, ny);
            CHECK((a + b).digits() == digits_oracle(p, x + y, N));
            CHECK((a - b).digits() == digits_oracle(p, x - y, N));
            CHECK((a * b).digits() == digits_oracle(p, x * y, N));
            CHECK(padic_arith(a, b, PadicOp::mul) == a * b);
            CHECK((a + (-a)).is_zero());
            CHECK((-a).digits() == digits_oracle(p, -x, nx));
        }
    }
    CHECK_THROWS_AS(PadicInt::from_integer(2, 1, 3) + PadicInt::from_integer(3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(PadicInt(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PadicInt(3, {3}), std::invalid_argument);
}

TEST_CASE("valuations, absolute values and the product formula", "[padic]") {
    CHECK(padic_ord(Rational(12), 2) == 2);
    CHECK(padic_abs(Rational(12), 2) == Rational(1, 4));
    CHECK(padic_ord(Rational(1, 3), 3) == -1);
    CHECK(padic_abs(Rational(1, 3), 3) == Rational(3));
    CHECK(padic_ord(Rational(7), 5) == 0);
    CHECK(padic_abs(Rational(7), 5) == Rational(1));
    CHECK(ostrowski_product(Rational(12)) == Rational(1));
    CHECK(ostrowski_product(Rational(3, 4)) == Rational(1));
    CHECK(ostrowski_product(Rational(-1)) == Rational(1));
    CHECK_THROWS_AS(ostrowski_product(Rational(0)), std::domain_error);
    for (int trial = 0; trial < 1000; ++trial) {
        i64 num = random_int(-1000000, 1000000);
        if (num == 0) num = 1;
        CHECK(ostrowski_product(Rational(num, random_int(1, 1000000))) == Rational(1));
    }

    const auto a = PadicInt::from_integer(3, 18, 5);
    CHECK(a.ord() == 2);
    CHECK(a.abs() == Rational(1, 9));
    CHECK_THROWS_AS(PadicInt::from_integer(3, 81, 4).ord(), std::domain_error);
    for (int trial = 0; trial < 300; ++trial) {
        const i64 x = random_int(1, 3000);
        const i64 y = random_int(1, 3000);
        const auto px = PadicInt::from_integer(2, x, 30);
        const auto py = PadicInt::from_integer(2, y, 30);
        CHECK((px * py).ord() == px.ord() + py.ord());
        if (!(px + py).is_zero()) CHECK((px + py).ord() >= std::min(px.ord(), py.ord()));
    }
}

TEST_CASE("projections to Z(p^k)", "[padic]") {
    const PadicInt a(3, {1, 2, 1, 0});
    CHECK(project_xi(a, 2) == 7);
    CHECK(project_xi(a, 4) == 16);
    CHECK_THROWS_AS(project_xi(a, 5), std::domain_error);
    for (u64 p : {2u, 3u, 5u}) {
        const i64 p3 = static_cast<i64>(p * p * p);
        for (i64 v = 0; v < p3; ++v) {
            const auto x = PadicInt::from_integer(p, v, 3);
            CHECK(project_xi(x, 2) == project_xi(x, 3) % static_cast<i64>(p * p));
            CHECK(project_xi(x, 1) == project_xi(x, 2) % static_cast<i64>(p));
        }
    }
}

TEST_CASE("cosets of Q_p / Z_p", "[padic]") {
    CHECK(lift_tilde_xi(2, 1, 1).to_ratmod1() == RatMod1(1, 2));
    const auto third = lift_tilde_xi(3, 2, 3);
    CHECK(third.degree() == 1);
    CHECK(third.to_ratmod1() == RatMod1(1, 3));
    CHECK(lift_tilde_xi(5, 3, 0).is_zero());
    CHECK_THROWS_AS(lift_tilde_xi(2, 2, 4), std::invalid_argument);

    CHECK(frac_mul(PadicInt::from_integer(2, 3, 2), PadicFrac::from_fraction(2, 1, 1)).to_ratmod1() == RatMod1(1, 2));
    CHECK(frac_mul(PadicInt::from_integer(3, 27, 3), PadicFrac::from_fraction(3, 5, 3)).is_zero());
    CHECK_THROWS_AS(frac_mul(PadicInt::from_integer(2, 3, 1), PadicFrac::from_fraction(2, 1, 3)), std::domain_error);

    for (u64 p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const int k = static_cast<int>(random_int(0, 4));
            const i64 pk = static_cast<i64>(ipow(p, k));
            const i64 m = random_int(-500, 500);
            const i64 x = random_int(-500, 500);
            const auto b = PadicFrac::from_fraction(p, m, k);
            CHECK(b.to_ratmod1() == RatMod1(m, pk));
            const auto prod = frac_mul(PadicInt::from_integer(p, x, 5), b);
            CHECK(prod.to_ratmod1() == RatMod1(x * m, pk));
            CHECK(chi_p(PadicInt::from_integer(p, x, 5), b).exponent() == RatMod1(x * m, pk));
            const auto c = PadicFrac::from_fraction(p, random_int(-500, 500), static_cast<int>(random_int(0, 4)));
            CHECK((b + c).to_ratmod1() == b.to_ratmod1() + c.to_ratmod1());
            CHECK((b - c).to_ratmod1() == b.to_ratmod1() - c.to_ratmod1());
        }
    }
}

TEST_CASE("characters", "[characters]") {
    CHECK(omega(4, 2).exponent() == RatMod1(1, 2));
    CHECK(std::abs(omega(4, 2).value() - cd(-1.0, 0.0)) == 0.0);
    CHECK(chi_p(PadicInt::from_integer(2, 3, 3), PadicFrac::from_fraction(2, 1, 1)).exponent() == RatMod1(1, 2));
    for (i64 n = 1; n <= 40; ++n) {
        for (i64 b = 0; b < n; ++b) {
            cd s = 0;
            for (i64 a = 0; a < n; ++a) s += omega(n, a * b).value();
            CHECK(std::abs(s / static_cast<double>(n) - (b == 0 ? 1.0 : 0.0)) < 1e-12);
        }
    }
    for (int trial = 0; trial < 500; ++trial) {
        const RatMod1 q(random_int(0, 100000), random_int(1, 100000));
        const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(q.num()) /
                              static_cast<long double>(q.den());
        const cd ref(static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t)));
        CHECK(std::abs(UnitPhase(q).value() - ref) <= 1e-15);
    }
    // chi(a b) for a in Z-hat factors over the primes of b.
    const ProfiniteInt a(7, {{2, PadicInt::from_integer(2, 5, 6)}});
    const auto parts = rat_decompose(RatMod1(5, 12));
    CHECK(chi_global(a, parts).exponent() == RatMod1(5 * 3, 4) + RatMod1(7 * 2, 3));
}

TEST_CASE("CRT idempotents and index maps", "[crt]") {
    const auto c12 = crt_idempotents(12);
    REQUIRE(c12.factors.size() == 2);
    CHECK(c12.factors[0].u == 3);
    CHECK(c12.factors[1].u == 4);
    CHECK(c12.factors[0].t == 3);
    CHECK(c12.factors[1].t == 1);
    CHECK(c12.factors[0].w == 9);
    CHECK(c12.factors[1].w == 4);
    CHECK(crt_idempotents(6).factors[0].w == 3);
    CHECK(crt_idempotents(6).factors[1].w == 4);
    CHECK(crt_idempotents(27).factors[0].w == 1);
    CHECK(split_mu(c12, 7) == std::vector<i64>{3, 1});
    CHECK(join_mu(c12, {3, 1}) == 7);
    CHECK(split_nu_hat(crt_idempotents(6), 5) == std::vector<i64>{1, 1});

    for (i64 n = 2; n <= 1000; ++n) {
        const auto crt = crt_idempotents(n);
        for (const auto& f : crt.factors) {
            CHECK(f.t == inverse_by_search(f.u % f.q, f.q));
            for (const auto& g : crt.factors) {
                CHECK(mul_mod(f.w, g.w, n) == (f.p == g.p ? g.w % n : 0));
                CHECK(mul_mod(f.w, g.u, n) == (f.p == g.p ? g.u % n : 0));
            }
        }
        std::vector<char> seen_mu(static_cast<std::size_t>(n)), seen_nu(static_cast<std::size_t>(n));
        for (i64 x = 0; x < n; ++x) {
            const auto mu = split_mu(crt, x);
            const auto nu = split_nu_hat(crt, x);
            const i64 jm = join_mu(crt, mu);
            const i64 jn = join_nu_hat(crt, nu);
            CHECK(jm == x);
            CHECK(jn == x);
            RatMod1 sum;
            for (std::size_t i = 0; i < nu.size(); ++i) sum += RatMod1(nu[i], crt.factors[i].q);
            CHECK(sum == RatMod1(x, n));
            seen_mu[static_cast<std::size_t>(jm)] = 1;
            seen_nu[static_cast<std::size_t>(jn)] = 1;
        }
        CHECK(std::all_of(seen_mu.begin(), seen_mu.end(), [](char c) { return c != 0; }));
        CHECK(std::all_of(seen_nu.begin(), seen_nu.end(), [](char c) { return c != 0; }));
    }
    CHECK_THROWS_AS(split_mu(c12, 12), std::invalid_argument);
}

TEST_CASE("character factorization through the CRT", "[crt]") {
    for (i64 n : {6, 12, 15}) {
        const auto crt = crt_idempotents(n);
        for (i64 mu = 0; mu < n; ++mu) {
            for (i64 nu = 0; nu < n; ++nu) {
                const auto m = split_mu(crt, mu);
                const auto v = split_nu_hat(crt, nu);
                UnitPhase prod;
                for (std::size_t i = 0; i < m.size(); ++i) prod = prod * omega(crt.factors[i].q, v[i] * m[i]);
                CHECK(prod == omega(n, mu * nu));
            }
        }
    }
}

TEST_CASE("partial fractions in Q/Z", "[crt]") {
    const auto d = rat_decompose(RatMod1(5, 6));
    REQUIRE(d.size() == 2);
    CHECK(d.at(2).to_ratmod1() == RatMod1(1, 2));
    CHECK(d.at(3).to_ratmod1() == RatMod1(1, 3));
    CHECK(rat_decompose(RatMod1()).empty());
    const auto t = rat_decompose(RatMod1(3, 4));
    REQUIRE(t.size() == 1);
    CHECK(t.at(2).to_ratmod1() == RatMod1(3, 4));
    for (i64 den = 1; den <= 200; ++den) {
        for (i64 num = 0; num < den; ++num) {
            if (std::gcd(num, den) != 1) continue;
            const RatMod1 q(num, den);
            const auto parts = rat_decompose(q);
            for (const auto& [p, f] : parts) CHECK(den % static_cast<i64>(p) == 0);
            CHECK(rat_recombine(parts) == q);
        }
    }
}

TEST_CASE("profinite integers", "[profinite]") {
    const ProfiniteInt a(-3);
    CHECK(a.component(5, 3) == PadicInt::from_integer(5, -3, 3));
    CHECK(a.residue(12) == 9);
    CHECK(!a.is_even());
    const ProfiniteInt b(1, {{2, PadicInt::from_integer(2, 2, 4)}, {3, PadicInt::from_integer(3, 5, 2)}});
    CHECK(b.is_even());
    CHECK(b.residue(12) == 2);  // 2 mod 4, 5 mod 3
    CHECK(b.residue(35) == 1);
    CHECK_THROWS_AS(b.component(2, 5), std::domain_error);
    CHECK((a * b).residue(12) == mod(9 * 2, 12));
    CHECK((a + b).residue(36) == mod(b.residue(36) - 3, 36));
    CHECK((-b).residue(12) == 10);
}

TEST_CASE("exact rationals guard against overflow", "[rational]") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(3), std::overflow_error);
    CHECK(RatMod1(-1, 4) == RatMod1(3, 4));
    CHECK(RatMod1(7, 4) == RatMod1(3, 4));
    CHECK(3 * RatMod1(1, 2) == RatMod1(1, 2));
}
