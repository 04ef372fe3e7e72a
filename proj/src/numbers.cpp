#include "pqm/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pqm {

namespace {

__extension__ using i128 = __int128;

i64 narrow(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
        throw std::overflow_error("pqm: 64-bit overflow in exact arithmetic");
    }
    return static_cast<i64>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("pqm: integer overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("pqm: integer overflow");
    return r;
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("pqm: " + std::to_string(p) + " is not prime");
    // Digit products and carries must fit in 64 bits.
    if (p >= (u64{1} << 31)) throw std::invalid_argument("pqm: prime too large for digit arithmetic");
}

void require_same_prime(u64 p, u64 q) {
    if (p != q) throw std::invalid_argument("pqm: prime mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("pqm: cannot factorize 0");
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 ipow(u64 base, int exp) {
    if (exp < 0) throw std::invalid_argument("pqm: negative exponent");
    u64 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("pqm: power overflow");
    }
    if (r > static_cast<u64>(std::numeric_limits<i64>::max())) {
        throw std::overflow_error("pqm: power overflow");
    }
    return r;
}

i64 mod(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("pqm: modulus must be positive");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(((static_cast<i128>(mod(a, m)) * mod(b, m)) % m));
}

i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) {
        throw std::domain_error("pqm: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
    }
    return mod(old_s, m);
}

int valuation(i64 a, u64 p) {
    if (a == 0) throw std::domain_error("pqm: valuation of zero");
    int v = 0;
    const auto pp = static_cast<i64>(p);
    while (a % pp == 0) {
        a /= pp;
        ++v;
    }
    return v;
}

// ---------------------------------------------------------------------------

Rational::Rational(i64 num, i64 den) {
    if (den == 0) throw std::invalid_argument("pqm: zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

namespace {
Rational make_rational(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}
}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
    return make_rational(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                         static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make_rational(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("pqm: division by zero");
    return make_rational(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

int padic_ord(const Rational& q, u64 p) {
    require_prime(p);
    if (q.is_zero()) throw std::domain_error("pqm: ord of zero");
    const auto pp = static_cast<i64>(p);
    if (q.num() % pp == 0) return valuation(q.num(), p);
    if (q.den() % pp == 0) return -valuation(q.den(), p);
    return 0;
}

Rational padic_abs(const Rational& q, u64 p) {
    int v = padic_ord(q, p);
    auto pv = static_cast<i64>(ipow(p, v < 0 ? -v : v));
    return v >= 0 ? Rational(1, pv) : Rational(pv, 1);
}

Rational ostrowski_product(const Rational& q) {
    if (q.is_zero()) throw std::domain_error("pqm: Ostrowski product of zero");
    Rational r(q.num() < 0 ? -q.num() : q.num(), q.den());
    auto fold = [&](i64 m) {
        for (auto [p, e] : factorize(static_cast<u64>(m < 0 ? -m : m))) {
            r = r * padic_abs(q, p);
        }
    };
    fold(q.num());
    fold(q.den());
    return r;
}

// ---------------------------------------------------------------------------

namespace {
RatMod1 make_ratmod1(i128 n, i128 d) {
    if (d <= 0) throw std::invalid_argument("pqm: RatMod1 denominator must be positive");
    n %= d;
    if (n < 0) n += d;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return RatMod1(narrow(n), narrow(d));
}
}  // namespace

RatMod1::RatMod1(i64 num, i64 den) {
    if (den == 0) throw std::invalid_argument("pqm: zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = static_cast<i64>(n);
    den_ = static_cast<i64>(d);
}

RatMod1 operator+(const RatMod1& a, const RatMod1& b) {
    return make_ratmod1(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

RatMod1 operator-(const RatMod1& a, const RatMod1& b) { return a + (-b); }

RatMod1 RatMod1::operator-() const {
    RatMod1 r;
    r.num_ = num_ == 0 ? 0 : den_ - num_;
    r.den_ = den_;
    return r;
}

RatMod1 operator*(i64 k, const RatMod1& a) {
    return make_ratmod1(static_cast<i128>(k % a.den_) * a.num_, a.den_);
}

std::string RatMod1::str() const {
    return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const RatMod1& q) { return os << q.str(); }

cd UnitPhase::value() const {
    const i64 n = exponent_.num(), d = exponent_.den();
    if (d == 1) return {1.0, 0.0};
    if (d == 2) return {-1.0, 0.0};
    if (d == 4) return n == 1 ? cd{0.0, 1.0} : cd{0.0, -1.0};
    // Reduce to [-1/2, 1/2) before scaling so the angle keeps full relative precision.
    long double x = static_cast<long double>(n) / static_cast<long double>(d);
    if (x >= 0.5L) x -= 1.0L;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * x;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::vector<cd> omega_table(i64 n) {
    if (n < 1) throw std::invalid_argument("pqm: omega table needs n >= 1");
    std::vector<cd> t(static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = omega(n, k).value();
    return t;
}

// ---------------------------------------------------------------------------

PadicInt::PadicInt(u64 p, std::vector<std::uint32_t> digits) : p_(p), digits_(std::move(digits)) {
    require_prime(p_);
    if (digits_.empty()) throw std::invalid_argument("pqm: p-adic precision must be >= 1");
    for (auto d : digits_) {
        if (d >= p_) throw std::invalid_argument("pqm: p-adic digit out of range");
    }
}

namespace {
// Complement every digit and add one: the additive inverse mod p^N.
std::vector<std::uint32_t> negate_digits(std::vector<std::uint32_t> d, u64 p) {
    u64 carry = 1;
    for (auto& x : d) {
        u64 t = (p - 1 - x) + carry;
        x = static_cast<std::uint32_t>(t % p);
        carry = t / p;
    }
    return d;
}
}  // namespace

PadicInt PadicInt::from_integer(u64 p, i64 value, int precision) {
    require_prime(p);
    if (precision < 1) throw std::invalid_argument("pqm: p-adic precision must be >= 1");
    std::vector<std::uint32_t> d(static_cast<std::size_t>(precision), 0);
    u64 mag = value < 0 ? static_cast<u64>(-(value + 1)) + 1 : static_cast<u64>(value);
    for (auto& x : d) {
        x = static_cast<std::uint32_t>(mag % p);
        mag /= p;
    }
    if (value < 0) d = negate_digits(std::move(d), p);
    return PadicInt(p, std::move(d));
}

bool PadicInt::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

PadicInt PadicInt::truncate(int m) const {
    if (m < 1 || m > precision()) throw std::domain_error("pqm: truncation beyond precision");
    return PadicInt(p_, std::vector<std::uint32_t>(digits_.begin(), digits_.begin() + m));
}

i64 PadicInt::residue(int k) const {
    if (k < 0 || k > precision()) {
        throw std::domain_error("pqm: projection degree " + std::to_string(k) +
                                " exceeds precision " + std::to_string(precision()));
    }
    i64 r = 0;
    for (int i = k - 1; i >= 0; --i) {
        r = checked_add(checked_mul(r, static_cast<i64>(p_)), digits_[static_cast<std::size_t>(i)]);
    }
    return r;
}

int PadicInt::ord() const {
    for (int i = 0; i < precision(); ++i) {
        if (digits_[static_cast<std::size_t>(i)] != 0) return i;
    }
    throw std::domain_error("pqm: valuation undetermined at this precision");
}

Rational PadicInt::abs() const { return Rational(1, static_cast<i64>(ipow(p_, ord()))); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    require_same_prime(a.p_, b.p_);
    const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
    std::vector<std::uint32_t> r(n);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u64 t = u64{a.digits_[i]} + b.digits_[i] + carry;
        r[i] = static_cast<std::uint32_t>(t % a.p_);
        carry = t / a.p_;
    }
    return PadicInt(a.p_, std::move(r));
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, negate_digits(digits_, p_)); }

PadicInt operator-(const PadicInt& a, const PadicInt& b) { return a + (-b); }

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    require_same_prime(a.p_, b.p_);
    const auto n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
    const u64 p = a.p_;
    std::vector<u64> r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; i + j < n; ++j) {
            u64 t = r[i + j] + u64{a.digits_[i]} * b.digits_[j] + carry;
            r[i + j] = t % p;
            carry = t / p;
        }
    }
    return PadicInt(p, std::vector<std::uint32_t>(r.begin(), r.end()));
}

std::string PadicInt::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < digits_.size(); ++i) os << (i ? "," : "") << digits_[i];
    os << ")_" << p_;
    return os.str();
}

PadicInt padic_arith(const PadicInt& a, const PadicInt& b, PadicOp op) {
    switch (op) {
        case PadicOp::add: return a + b;
        case PadicOp::sub: return a - b;
        case PadicOp::mul: return a * b;
    }
    throw std::invalid_argument("pqm: unknown p-adic operation");
}

// ---------------------------------------------------------------------------

PadicFrac::PadicFrac(u64 p, std::vector<std::uint32_t> neg_digits)
    : p_(p), digits_(std::move(neg_digits)) {
    require_prime(p_);
    for (auto d : digits_) {
        if (d >= p_) throw std::invalid_argument("pqm: p-adic digit out of range");
    }
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

PadicFrac PadicFrac::from_fraction(u64 p, i64 m, int k) {
    require_prime(p);
    if (k < 0) throw std::invalid_argument("pqm: negative degree");
    const auto q = static_cast<i64>(ipow(p, k));
    u64 r = static_cast<u64>(mod(m, q));
    // r = sum_j d_{-j} p^{k-j}: base-p digit k-j of r.
    std::vector<std::uint32_t> d(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        d[static_cast<std::size_t>(k - 1 - i)] = static_cast<std::uint32_t>(r % p);
        r /= p;
    }
    return PadicFrac(p, std::move(d));
}

PadicFrac PadicFrac::from_ratmod1(u64 p, const RatMod1& q) {
    i64 den = q.den();
    int k = 0;
    while (den % static_cast<i64>(p) == 0) {
        den /= static_cast<i64>(p);
        ++k;
    }
    if (den != 1) {
        throw std::invalid_argument("pqm: " + q.str() + " is not a " + std::to_string(p) +
                                    "-power fraction");
    }
    return from_fraction(p, q.num(), k);
}

i64 PadicFrac::numerator() const {
    i64 m = 0;
    for (auto d : digits_) m = checked_add(checked_mul(m, static_cast<i64>(p_)), d);
    return m;
}

RatMod1 PadicFrac::to_ratmod1() const {
    return RatMod1(numerator(), static_cast<i64>(ipow(p_, degree())));
}

PadicFrac operator+(const PadicFrac& a, const PadicFrac& b) {
    require_same_prime(a.p_, b.p_);
    const std::size_t k = std::max(a.digits_.size(), b.digits_.size());
    auto at = [](const std::vector<std::uint32_t>& v, std::size_t j) -> u64 {
        return j < v.size() ? v[j] : 0;
    };
    std::vector<std::uint32_t> r(k);
    u64 carry = 0;
    // Least significant digit is p^{-k}; the carry out of p^{-1} lands in Z_p and is dropped.
    for (std::size_t j = k; j-- > 0;) {
        u64 t = at(a.digits_, j) + at(b.digits_, j) + carry;
        r[j] = static_cast<std::uint32_t>(t % a.p_);
        carry = t / a.p_;
    }
    return PadicFrac(a.p_, std::move(r));
}

PadicFrac PadicFrac::operator-() const {
    if (digits_.empty()) return *this;
    std::vector<std::uint32_t> r(digits_.size());
    u64 carry = 1;
    for (std::size_t j = digits_.size(); j-- > 0;) {
        u64 t = (p_ - 1 - digits_[j]) + carry;
        r[j] = static_cast<std::uint32_t>(t % p_);
        carry = t / p_;
    }
    return PadicFrac(p_, std::move(r));
}

PadicFrac operator-(const PadicFrac& a, const PadicFrac& b) { return a + (-b); }

std::string PadicFrac::str() const {
    if (digits_.empty()) return "0";
    return std::to_string(numerator()) + "/" + std::to_string(p_) + "^" + std::to_string(degree());
}

PadicFrac lift_tilde_xi(u64 p, int k, i64 beta) {
    const auto q = static_cast<i64>(ipow(p, k));
    if (beta < 0 || beta >= q) throw std::invalid_argument("pqm: residue out of range for Z(p^k)");
    return PadicFrac::from_fraction(p, beta, k);
}

PadicFrac frac_mul(const PadicInt& a, const PadicFrac& b) {
    require_same_prime(a.prime(), b.prime());
    const int k = b.degree();
    if (a.precision() < k) {
        throw std::domain_error("pqm: insufficient p-adic precision: coset of degree " +
                                std::to_string(k) + " needs " + std::to_string(k) + " digits, have " +
                                std::to_string(a.precision()));
    }
    const u64 p = a.prime();
    // r[s] is the coefficient of p^{-s}, s = 1..k.
    std::vector<u64> r(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
        const u64 bj = b.neg_digits()[static_cast<std::size_t>(j - 1)];
        if (bj == 0) continue;
        u64 carry = 0;
        for (int i = 0; i < j; ++i) {
            const auto s = static_cast<std::size_t>(j - i);
            u64 t = r[s] + u64{a.digit(i)} * bj + carry;
            r[s] = t % p;
            carry = t / p;
        }
    }
    return PadicFrac(p, std::vector<std::uint32_t>(r.begin() + 1, r.end()));
}

UnitPhase chi_p(const PadicInt& a, const PadicFrac& b) {
    return UnitPhase(frac_mul(a, b).to_ratmod1());
}

// ---------------------------------------------------------------------------

ProfiniteInt::ProfiniteInt(i64 tail, std::map<u64, PadicInt> overrides)
    : tail_(tail), overrides_(std::move(overrides)) {
    for (const auto& [p, a] : overrides_) {
        if (a.prime() != p) throw std::invalid_argument("pqm: override keyed by the wrong prime");
    }
}

PadicInt ProfiniteInt::component(u64 p, int precision) const {
    auto it = overrides_.find(p);
    if (it == overrides_.end()) return PadicInt::from_integer(p, tail_, precision);
    if (it->second.precision() < precision) {
        throw std::domain_error("pqm: profinite component at " + std::to_string(p) + " known to " +
                                std::to_string(it->second.precision()) + " digits, need " +
                                std::to_string(precision));
    }
    return it->second.truncate(precision);
}

i64 ProfiniteInt::residue(i64 n) const {
    if (n == 1) return 0;
    const CrtData crt = crt_idempotents(n);
    std::vector<i64> parts;
    for (const auto& f : crt.factors) parts.push_back(component(f.p, f.e).residue(f.e));
    return join_mu(crt, parts);
}

bool ProfiniteInt::is_even() const { return component(2, 1).digit(0) == 0; }

namespace {
template <class TailOp, class DigitOp>
ProfiniteInt combine(const ProfiniteInt& a, const ProfiniteInt& b, TailOp tail_op, DigitOp digit_op) {
    std::map<u64, PadicInt> out;
    auto visit = [&](u64 p) {
        if (out.count(p)) return;
        auto ia = a.overrides().find(p), ib = b.overrides().find(p);
        int prec = std::numeric_limits<int>::max();
        if (ia != a.overrides().end()) prec = std::min(prec, ia->second.precision());
        if (ib != b.overrides().end()) prec = std::min(prec, ib->second.precision());
        out.emplace(p, digit_op(a.component(p, prec), b.component(p, prec)));
    };
    for (const auto& kv : a.overrides()) visit(kv.first);
    for (const auto& kv : b.overrides()) visit(kv.first);
    return ProfiniteInt(tail_op(a.tail(), b.tail()), std::move(out));
}
}  // namespace

ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b) {
    return combine(a, b, checked_add, [](const PadicInt& x, const PadicInt& y) { return x + y; });
}

ProfiniteInt operator*(const ProfiniteInt& a, const ProfiniteInt& b) {
    return combine(a, b, checked_mul, [](const PadicInt& x, const PadicInt& y) { return x * y; });
}

ProfiniteInt ProfiniteInt::operator-() const {
    std::map<u64, PadicInt> out;
    for (const auto& [p, x] : overrides_) out.emplace(p, -x);
    return ProfiniteInt(checked_mul(tail_, -1), std::move(out));
}

ProfiniteInt operator-(const ProfiniteInt& a, const ProfiniteInt& b) { return a + (-b); }

UnitPhase chi_global(const ProfiniteInt& a, const std::map<u64, PadicFrac>& b) {
    RatMod1 total;
    for (const auto& [p, bp] : b) {
        if (bp.is_zero()) continue;
        total += frac_mul(a.component(p, bp.degree()), bp).to_ratmod1();
    }
    return UnitPhase(total);
}

// ---------------------------------------------------------------------------

CrtData crt_idempotents(i64 n) {
    if (n < 2) throw std::invalid_argument("pqm: CRT needs n >= 2");
    CrtData crt{n, {}};
    for (auto [p, e] : factorize(static_cast<u64>(n))) {
        const auto q = static_cast<i64>(ipow(p, e));
        const i64 u = n / q;
        const i64 t = mod_inverse(u % q, q);
        crt.factors.push_back({p, e, q, u, t, t * u});
    }
    return crt;
}

namespace {
void require_residue(i64 x, i64 n) {
    if (x < 0 || x >= n) {
        throw std::invalid_argument("pqm: residue " + std::to_string(x) + " outside Z(" +
                                    std::to_string(n) + ")");
    }
}
void require_parts(const CrtData& crt, const std::vector<i64>& parts) {
    if (parts.size() != crt.factors.size()) throw std::invalid_argument("pqm: CRT component count");
    for (std::size_t i = 0; i < parts.size(); ++i) require_residue(parts[i], crt.factors[i].q);
}
}  // namespace

std::vector<i64> split_mu(const CrtData& crt, i64 mu) {
    require_residue(mu, crt.n);
    std::vector<i64> out;
    for (const auto& f : crt.factors) out.push_back(mu % f.q);
    return out;
}

i64 join_mu(const CrtData& crt, const std::vector<i64>& parts) {
    require_parts(crt, parts);
    i64 r = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        r = (r + mul_mod(parts[i], crt.factors[i].w, crt.n)) % crt.n;
    }
    return r;
}

std::vector<i64> split_nu_hat(const CrtData& crt, i64 nu) {
    require_residue(nu, crt.n);
    std::vector<i64> out;
    for (const auto& f : crt.factors) out.push_back(mul_mod(nu, f.t, f.q));
    return out;
}

i64 join_nu_hat(const CrtData& crt, const std::vector<i64>& parts) {
    require_parts(crt, parts);
    i64 r = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        r = (r + mul_mod(parts[i], crt.factors[i].u, crt.n)) % crt.n;
    }
    return r;
}

std::map<u64, PadicFrac> rat_decompose(const RatMod1& q) {
    std::map<u64, PadicFrac> out;
    if (q.is_zero()) return out;
    const CrtData crt = crt_idempotents(q.den());
    for (const auto& f : crt.factors) {
        out.emplace(f.p, PadicFrac::from_fraction(f.p, mul_mod(q.num(), f.t, f.q), f.e));
    }
    return out;
}

RatMod1 rat_recombine(const std::map<u64, PadicFrac>& parts) {
    RatMod1 r;
    for (const auto& [p, a] : parts) {
        if (a.prime() != p) throw std::invalid_argument("pqm: component keyed by the wrong prime");
        r += a.to_ratmod1();
    }
    return r;
}

}  // namespace pqm
