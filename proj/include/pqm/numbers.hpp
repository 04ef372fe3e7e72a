#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pqm {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using cd = std::complex<double>;

// ---------------------------------------------------------------------------
// Elementary integer helpers. All of them throw std::overflow_error instead of
// wrapping.

bool is_prime(u64 n);

// Prime factorization with primes ascending. factorize(1) is empty.
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 ipow(u64 base, int exp);

// Least nonnegative residue of a modulo m (m > 0).
i64 mod(i64 a, i64 m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

i64 mul_mod(i64 a, i64 b, i64 m);

// p-adic valuation of a nonzero integer.
int valuation(i64 a, u64 p);

// ---------------------------------------------------------------------------
// Exact rational numbers with 64-bit reduced numerator and denominator.

class Rational {
public:
    Rational() = default;
    Rational(i64 num, i64 den = 1);

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    std::string str() const;

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// ord_p and |q|_p = p^{-ord_p(q)} of a nonzero rational.
int padic_ord(const Rational& q, u64 p);
Rational padic_abs(const Rational& q, u64 p);

// |q|_inf * prod_p |q|_p over the primes of numerator and denominator.
Rational ostrowski_product(const Rational& q);

// ---------------------------------------------------------------------------
// Element of Q/Z as a reduced fraction num/den with 0 <= num < den.

class RatMod1 {
public:
    RatMod1() = default;
    RatMod1(i64 num, i64 den);

    // a/n reduced mod 1.
    static RatMod1 residue(i64 a, i64 n) { return RatMod1(a, n); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend RatMod1 operator+(const RatMod1& a, const RatMod1& b);
    friend RatMod1 operator-(const RatMod1& a, const RatMod1& b);
    friend RatMod1 operator*(i64 k, const RatMod1& a);
    friend RatMod1 operator*(const RatMod1& a, i64 k) { return k * a; }
    RatMod1 operator-() const;
    RatMod1& operator+=(const RatMod1& o) { return *this = *this + o; }
    RatMod1& operator-=(const RatMod1& o) { return *this = *this - o; }
    friend bool operator==(const RatMod1& a, const RatMod1& b) = default;
    friend auto operator<=>(const RatMod1& a, const RatMod1& b) = default;

    std::string str() const;

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RatMod1& q);

// exp(2 pi i q) held exactly through its exponent.
class UnitPhase {
public:
    UnitPhase() = default;
    explicit UnitPhase(RatMod1 exponent) : exponent_(exponent) {}

    const RatMod1& exponent() const { return exponent_; }
    // Exact at multiples of 1/4; otherwise within one ulp of cos/sin.
    cd value() const;

    friend UnitPhase operator*(const UnitPhase& a, const UnitPhase& b) {
        return UnitPhase(a.exponent_ + b.exponent_);
    }
    UnitPhase conj() const { return UnitPhase(-exponent_); }
    friend bool operator==(const UnitPhase& a, const UnitPhase& b) = default;

private:
    RatMod1 exponent_;
};

// omega_n(alpha) = exp(2 pi i alpha / n).
inline UnitPhase omega(i64 n, i64 alpha) { return UnitPhase(RatMod1(alpha, n)); }

// Table of omega_n(k), k in [0, n).
std::vector<cd> omega_table(i64 n);

// ---------------------------------------------------------------------------
// Truncated p-adic integer: digits d_0..d_{N-1} of a mod p^N.

class PadicInt {
public:
    PadicInt(u64 p, std::vector<std::uint32_t> digits);

    // Base-p expansion of an integer; negatives use the (p-1)-complement form.
    static PadicInt from_integer(u64 p, i64 value, int precision);
    static PadicInt zero(u64 p, int precision) { return from_integer(p, 0, precision); }

    u64 prime() const { return p_; }
    int precision() const { return static_cast<int>(digits_.size()); }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::uint32_t digit(int i) const { return digits_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;

    // Drop to precision m <= N.
    PadicInt truncate(int m) const;

    // sum_{nu<k} d_nu p^nu; requires k <= N and p^k representable.
    i64 residue(int k) const;

    // Index of the first nonzero digit; std::domain_error if all digits vanish.
    int ord() const;
    Rational abs() const;

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    PadicInt operator-() const;
    friend bool operator==(const PadicInt& a, const PadicInt& b) = default;

    std::string str() const;

private:
    u64 p_;
    std::vector<std::uint32_t> digits_;
};

enum class PadicOp { add, sub, mul };
PadicInt padic_arith(const PadicInt& a, const PadicInt& b, PadicOp op);

// xi_k: projection Z_p -> Z(p^k).
inline i64 project_xi(const PadicInt& a, int k) { return a.residue(k); }

// ---------------------------------------------------------------------------
// Element of Q_p/Z_p with zero integer part: sum_{j=1..k} d_{-j} p^{-j}.

class PadicFrac {
public:
    // neg_digits[j-1] is the coefficient of p^{-j}. Trailing zeros are removed.
    PadicFrac(u64 p, std::vector<std::uint32_t> neg_digits);

    static PadicFrac zero(u64 p) { return PadicFrac(p, {}); }
    // m / p^k reduced mod Z_p; m may be any integer.
    static PadicFrac from_fraction(u64 p, i64 m, int k);
    // Requires den(q) to be a power of p.
    static PadicFrac from_ratmod1(u64 p, const RatMod1& q);

    u64 prime() const { return p_; }
    // Support degree k: the coset lies in p^{-k} Z_p / Z_p and not in p^{-k+1} Z_p / Z_p.
    int degree() const { return static_cast<int>(digits_.size()); }
    const std::vector<std::uint32_t>& neg_digits() const { return digits_; }
    bool is_zero() const { return digits_.empty(); }

    // Numerator m of m/p^k with k = degree().
    i64 numerator() const;
    RatMod1 to_ratmod1() const;

    friend PadicFrac operator+(const PadicFrac& a, const PadicFrac& b);
    friend PadicFrac operator-(const PadicFrac& a, const PadicFrac& b);
    PadicFrac operator-() const;
    friend bool operator==(const PadicFrac& a, const PadicFrac& b) = default;

    std::string str() const;

private:
    u64 p_;
    std::vector<std::uint32_t> digits_;
};

// tilde-xi_k: Z(p^k) -> Q_p/Z_p, beta |-> p^{-k} beta.
PadicFrac lift_tilde_xi(u64 p, int k, i64 beta);

// Coset product a*b mod Z_p; needs a.precision() >= b.degree().
PadicFrac frac_mul(const PadicInt& a, const PadicFrac& b);

// chi_p(a b) as an exact phase.
UnitPhase chi_p(const PadicInt& a, const PadicFrac& b);

// ---------------------------------------------------------------------------
// Element of Z-hat: an integer tail plus finitely many p-adic overrides.

class ProfiniteInt {
public:
    ProfiniteInt() = default;
    explicit ProfiniteInt(i64 tail) : tail_(tail) {}
    ProfiniteInt(i64 tail, std::map<u64, PadicInt> overrides);

    i64 tail() const { return tail_; }
    const std::map<u64, PadicInt>& overrides() const { return overrides_; }

    // Image in Z_p at precision N; std::domain_error if an override is too short.
    PadicInt component(u64 p, int precision) const;
    // Image in Z(n), assembled through the CRT.
    i64 residue(i64 n) const;
    bool is_even() const;

    friend ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b);
    friend ProfiniteInt operator-(const ProfiniteInt& a, const ProfiniteInt& b);
    friend ProfiniteInt operator*(const ProfiniteInt& a, const ProfiniteInt& b);
    ProfiniteInt operator-() const;

private:
    i64 tail_ = 0;
    std::map<u64, PadicInt> overrides_;
};

// chi(a b) for a in Z-hat and b in Q/Z given by its prime components.
UnitPhase chi_global(const ProfiniteInt& a, const std::map<u64, PadicFrac>& b);

// ---------------------------------------------------------------------------
// CRT machinery for Z(n) = prod Z(p_i^{e_i}).

struct CrtFactor {
    u64 p;
    int e;
    i64 q;  // p^e
    i64 u;  // n / q
    i64 t;  // t u = 1 mod q
    i64 w;  // t u, the idempotent for this factor
};

struct CrtData {
    i64 n;
    std::vector<CrtFactor> factors;
};

CrtData crt_idempotents(i64 n);

// mu_i = mu mod q_i.
std::vector<i64> split_mu(const CrtData& crt, i64 mu);
// mu = sum mu_i w_i mod n.
i64 join_mu(const CrtData& crt, const std::vector<i64>& parts);
// nu-hat_i = nu t_i mod q_i, so nu/n = sum nu-hat_i/q_i mod 1.
std::vector<i64> split_nu_hat(const CrtData& crt, i64 nu);
// nu = sum nu-hat_i u_i mod n.
i64 join_nu_hat(const CrtData& crt, const std::vector<i64>& parts);

// Partial fractions of q over the primes of its denominator.
std::map<u64, PadicFrac> rat_decompose(const RatMod1& q);
RatMod1 rat_recombine(const std::map<u64, PadicFrac>& parts);

}  // namespace pqm
