#include "pqm/schwartz_bruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pqm {

namespace {

i64 ppow(u64 p, int e) { return static_cast<i64>(ipow(p, e)); }

Rep to_rep(Side s) { return s == Side::position ? Rep::position : Rep::momentum; }

Side flip(Side s) { return s == Side::position ? Side::momentum : Side::position; }

FiniteState as_state(const LocalSBFunction& f) {
    return FiniteState(ppow(f.p, f.degree), to_rep(f.side), f.values);
}

double max_modulus(const std::vector<cd>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

LocalSBFunction::LocalSBFunction(u64 p_, Side side_, int degree_, std::vector<cd> values_)
    : p(p_), side(side_), degree(degree_), values(std::move(values_)) {
    if (!is_prime(p)) throw std::invalid_argument("pqm: " + std::to_string(p) + " is not prime");
    if (degree < 0) throw std::invalid_argument("pqm: negative degree");
    if (static_cast<i64>(values.size()) != ppow(p, degree)) {
        throw std::invalid_argument("pqm: degree " + std::to_string(degree) + " needs " +
                                    std::to_string(ppow(p, degree)) + " values");
    }
}

LocalSBFunction LocalSBFunction::trivial(u64 p, Side side) { return LocalSBFunction(p, side, 0, {1.0}); }

cd integrate_local(const LocalSBFunction& f) {
    cd s = 0.0;
    for (const auto& v : f.values) s += v;
    // Dividing once keeps the result bit-identical under refinement for exact sums.
    return f.side == Side::position ? s / static_cast<double>(ppow(f.p, f.degree)) : s;
}

LocalSBFunction refine(const LocalSBFunction& f, int degree) {
    if (degree < f.degree) throw std::invalid_argument("pqm: refinement cannot lower the degree");
    if (degree == f.degree) return f;
    const i64 q = ppow(f.p, degree);
    const i64 q0 = ppow(f.p, f.degree);
    const i64 step = q / q0;
    std::vector<cd> v(static_cast<std::size_t>(q));
    for (i64 x = 0; x < q; ++x) {
        if (f.side == Side::position) {
            v[static_cast<std::size_t>(x)] = f.values[static_cast<std::size_t>(x % q0)];
        } else if (x % step == 0) {
            v[static_cast<std::size_t>(x)] = f.values[static_cast<std::size_t>(x / step)];
        }
    }
    return LocalSBFunction(f.p, f.side, degree, std::move(v));
}

cd local_inner(const LocalSBFunction& f, const LocalSBFunction& g) {
    if (f.p != g.p) throw std::invalid_argument("pqm: prime mismatch");
    if (f.side != g.side) throw std::invalid_argument("pqm: side mismatch");
    const int d = std::max(f.degree, g.degree);
    const auto a = refine(f, d);
    const auto b = refine(g, d);
    cd s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return f.side == Side::position ? s / static_cast<double>(ppow(f.p, d)) : s;
}

LocalSBFunction local_fourier(const LocalSBFunction& f) {
    return LocalSBFunction(f.p, flip(f.side), f.degree, fourier(as_state(f)).amplitudes);
}

LocalSBFunction local_inverse_fourier(const LocalSBFunction& f) {
    return LocalSBFunction(f.p, flip(f.side), f.degree, inverse_fourier(as_state(f)).amplitudes);
}

int constancy_degree(const LocalSBFunction& f, double tol) {
    if (f.side != Side::position) throw std::invalid_argument("pqm: constancy degree of a momentum function");
    const double eps = tol * std::max(1.0, max_modulus(f.values));
    for (int c = 0; c < f.degree; ++c) {
        const i64 qc = ppow(f.p, c);
        bool ok = true;
        for (std::size_t x = 0; x < f.values.size() && ok; ++x) {
            ok = std::abs(f.values[x] - f.values[x % static_cast<std::size_t>(qc)]) <= eps;
        }
        if (ok) return c;
    }
    return f.degree;
}

int support_degree(const LocalSBFunction& f, double tol) {
    if (f.side != Side::momentum) throw std::invalid_argument("pqm: support degree of a position function");
    const double eps = tol * std::max(1.0, max_modulus(f.values));
    for (int k = 0; k < f.degree; ++k) {
        const i64 step = ppow(f.p, f.degree - k);
        bool ok = true;
        for (std::size_t m = 0; m < f.values.size() && ok; ++m) {
            ok = static_cast<i64>(m) % step == 0 || std::abs(f.values[m]) <= eps;
        }
        if (ok) return k;
    }
    return f.degree;
}

LocalSBFunction delta_exact(u64 p) { return LocalSBFunction::trivial(p, Side::momentum); }

LocalSBFunction delta_approx(u64 p, int N) {
    if (N < 1) throw std::invalid_argument("pqm: delta approximant needs N >= 1");
    const i64 q = ppow(p, N);
    std::vector<cd> v(static_cast<std::size_t>(q));
    v[0] = static_cast<double>(q);
    return LocalSBFunction(p, Side::position, N, std::move(v));
}

LocalSBFunction scale_variable(const LocalSBFunction& f, i64 lambda) {
    if (lambda < 1) throw std::invalid_argument("pqm: scale factor must be a positive integer");
    const int r = valuation(lambda, f.p);
    const i64 unit = lambda / ppow(f.p, r);
    if (f.side == Side::position && r > 0) {
        throw std::invalid_argument("pqm: f(lambda x) with |lambda|_p < 1 leaves Z_p; use QpFunction");
    }
    const i64 q0 = ppow(f.p, f.degree);
    const int degree = f.degree + (f.side == Side::momentum ? r : 0);
    const i64 q = ppow(f.p, degree);
    std::vector<cd> v(static_cast<std::size_t>(q));
    for (i64 m = 0; m < q; ++m) v[static_cast<std::size_t>(m)] = f.values[static_cast<std::size_t>(mul_mod(unit, m, q0))];
    return LocalSBFunction(f.p, f.side, degree, std::move(v));
}

// ---------------------------------------------------------------------------

QpFunction::QpFunction(u64 p_, int k_, int n_, std::vector<cd> values_)
    : p(p_), k(k_), n(n_), values(std::move(values_)) {
    if (!is_prime(p)) throw std::invalid_argument("pqm: " + std::to_string(p) + " is not prime");
    if (n + k < 0) throw std::invalid_argument("pqm: constancy degree exceeds support degree");
    if (static_cast<i64>(values.size()) != ppow(p, n + k)) {
        throw std::invalid_argument("pqm: Q_p function needs p^(n+k) values");
    }
}

QpFunction QpFunction::from_position(const LocalSBFunction& f) {
    if (f.side != Side::position) throw std::invalid_argument("pqm: expected a position function");
    return QpFunction(f.p, 0, f.degree, f.values);
}

cd integrate_qp(const QpFunction& f) {
    cd s = 0.0;
    for (const auto& v : f.values) s += v;
    return f.n >= 0 ? s / static_cast<double>(ppow(f.p, f.n)) : s * static_cast<double>(ppow(f.p, -f.n));
}

QpFunction scale_qp(const QpFunction& f, i64 lambda) {
    if (lambda < 1) throw std::invalid_argument("pqm: scale factor must be a positive integer");
    const int r = valuation(lambda, f.p);
    const i64 unit = lambda / ppow(f.p, r);
    const i64 q = ppow(f.p, f.n + f.k);
    std::vector<cd> v(static_cast<std::size_t>(q));
    for (i64 y = 0; y < q; ++y) v[static_cast<std::size_t>(y)] = f.values[static_cast<std::size_t>(mul_mod(unit, y, q))];
    return QpFunction(f.p, f.k + r, f.n - r, std::move(v));
}

std::vector<cd> hat_transform_2adic(const LocalSBFunction& F) {
    if (F.p != 2) throw std::invalid_argument("pqm: the hat transform is defined for p = 2 only");
    if (F.side != Side::momentum) throw std::invalid_argument("pqm: the hat transform takes a momentum function");
    const i64 q = ppow(2, F.degree + 1);
    std::vector<cd> h(static_cast<std::size_t>(q));
    for (i64 y = 0; y < q; ++y) {
        cd s = 0.0;
        for (std::size_t m = 0; m < F.values.size(); ++m) {
            s += F.values[m] * omega(q, mul_mod(y, static_cast<i64>(m), q)).value();
        }
        h[static_cast<std::size_t>(y)] = s;
    }
    return h;
}

// ---------------------------------------------------------------------------

GlobalSBFunction::GlobalSBFunction(Side side_, std::vector<GlobalTerm> terms_)
    : side(side_), terms(std::move(terms_)) {
    for (const auto& t : terms) {
        for (const auto& [p, f] : t.factors) {
            if (f.p != p) throw std::invalid_argument("pqm: factor keyed by the wrong prime");
            if (f.side != side) throw std::invalid_argument("pqm: factor on the wrong side");
        }
    }
}

namespace {

const LocalSBFunction& factor_or(const GlobalTerm& t, u64 p, const LocalSBFunction& fallback) {
    const auto it = t.factors.find(p);
    return it == t.factors.end() ? fallback : it->second;
}

std::map<u64, int> max_degrees(const GlobalSBFunction& f) {
    std::map<u64, int> e;
    for (const auto& t : f.terms) {
        for (const auto& [p, loc] : t.factors) e[p] = std::max(e[p], loc.degree);
    }
    return e;
}

}  // namespace

cd global_inner(const GlobalSBFunction& f, const GlobalSBFunction& g) {
    if (f.side != g.side) throw std::invalid_argument("pqm: side mismatch");
    cd total = 0.0;
    for (const auto& s : f.terms) {
        for (const auto& t : g.terms) {
            std::set<u64> primes;
            for (const auto& kv : s.factors) primes.insert(kv.first);
            for (const auto& kv : t.factors) primes.insert(kv.first);
            cd v = std::conj(s.coefficient) * t.coefficient;
            for (u64 p : primes) {
                const auto triv = LocalSBFunction::trivial(p, f.side);
                v *= local_inner(factor_or(s, p, triv), factor_or(t, p, triv));
            }
            total += v;
        }
    }
    return total;
}

GlobalSBFunction global_fourier(const GlobalSBFunction& f) {
    GlobalSBFunction out;
    out.side = flip(f.side);
    for (const auto& t : f.terms) {
        GlobalTerm nt{t.coefficient, {}};
        for (const auto& [p, loc] : t.factors) nt.factors.emplace(p, local_fourier(loc));
        out.terms.push_back(std::move(nt));
    }
    return out;
}

i64 canonical_dimension(const GlobalSBFunction& f) {
    i64 l = 1;
    for (const auto& [p, e] : max_degrees(f)) {
        if (e > 0) {
            const i64 q = ppow(p, e);
            if (__builtin_mul_overflow(l, q, &l)) throw std::overflow_error("pqm: canonical dimension overflows");
        }
    }
    if (l == 1) throw std::invalid_argument("pqm: dimension 1 excluded");
    return l;
}

FiniteState canonicalize_global(const GlobalSBFunction& f, std::optional<i64> target) {
    const i64 l0 = canonical_dimension(f);
    const i64 l = target.value_or(l0);
    if (l % l0 != 0) {
        throw std::invalid_argument("pqm: target Z(" + std::to_string(l) + ") cannot hold degrees of Z(" +
                                    std::to_string(l0) + ")");
    }
    const CrtData crt = crt_idempotents(l);
    TensorDecomposition td{l, to_rep(f.side), {}};
    for (const auto& t : f.terms) {
        ProductTerm pt{t.coefficient, {}};
        for (const auto& [p, loc] : t.factors) {
            if (l % static_cast<i64>(p) != 0) pt.coefficient *= loc.values[0];  // degree 0 by construction of l0
        }
        for (const auto& fac : crt.factors) {
            const auto triv = LocalSBFunction::trivial(fac.p, f.side);
            const auto loc = refine(factor_or(t, fac.p, triv), fac.e);
            pt.factors.emplace(fac.p, FiniteState(fac.q, td.rep, loc.values));
        }
        td.terms.push_back(std::move(pt));
    }
    return tensor_join(td);
}

GlobalSBFunction global_displace_parity(const GlobalSBFunction& f, const RatMod1& a, const ProfiniteInt& b,
                                        const RatMod1& c, GlobalOp kind) {
    const auto a_parts = rat_decompose(a);
    std::set<u64> primes;
    for (const auto& t : f.terms) {
        for (const auto& kv : t.factors) primes.insert(kv.first);
    }
    for (const auto& kv : a_parts) primes.insert(kv.first);
    const cd scalar = kind == GlobalOp::displace ? UnitPhase(c).value() : cd(1.0);

    GlobalSBFunction out;
    out.side = f.side;
    for (const auto& t : f.terms) {
        GlobalTerm nt{t.coefficient * scalar, {}};
        for (u64 p : primes) {
            const auto ait = a_parts.find(p);
            const bool has_factor = t.factors.count(p) != 0;
            // Trivial factors are fixed by D(0, b, 0) and P(0, b).
            if (!has_factor && ait == a_parts.end()) continue;
            const auto triv = LocalSBFunction::trivial(p, f.side);
            const LocalSBFunction& loc = factor_or(t, p, triv);
            const RatMod1 ap = ait == a_parts.end() ? RatMod1() : ait->second.to_ratmod1();
            const int deg_a = ait == a_parts.end() ? 0 : ait->second.degree();
            const int d = std::max(loc.degree, deg_a);
            const i64 q = ppow(p, d);
            const i64 b_lift = d > 0 ? b.component(p, d).residue(d) : 0;
            const FiniteState st(q, to_rep(f.side), refine(loc, d).values);
            const FiniteState moved = kind == GlobalOp::displace
                                          ? displace(HWElement::from_continuum(q, ap, b_lift), st)
                                          : parity_apply(PhasePoint{q, ap, b_lift}, st);
            nt.factors.emplace(p, LocalSBFunction(p, f.side, d, moved.amplitudes));
        }
        out.terms.push_back(std::move(nt));
    }
    return out;
}

}  // namespace pqm
