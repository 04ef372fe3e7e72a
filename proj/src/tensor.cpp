#include <algorithm>
#include <stdexcept>

#include "pqm/finite_qm.hpp"

namespace pqm {

namespace {
std::vector<i64> rep_order(i64 n, Rep rep) {
    return rep == Rep::position ? crt_position_order(n) : crt_momentum_order(n);
}

// Strides of the flattened multi-index, first factor most significant.
std::vector<i64> strides(const CrtData& crt) {
    std::vector<i64> s(crt.factors.size());
    i64 acc = 1;
    for (std::size_t i = crt.factors.size(); i-- > 0;) {
        s[i] = acc;
        acc *= crt.factors[i].q;
    }
    return s;
}

constexpr double kRankOneTol = 1e-12;
}  // namespace

TensorDecomposition tensor_factor(const FiniteState& f) {
    const i64 n = f.n;
    const CrtData crt = crt_idempotents(n);
    const auto order = rep_order(n, f.rep);
    const auto st = strides(crt);
    const std::size_t m = crt.factors.size();

    std::vector<cd> t(static_cast<std::size_t>(n));
    for (i64 flat = 0; flat < n; ++flat) t[static_cast<std::size_t>(flat)] = f[order[static_cast<std::size_t>(flat)]];

    TensorDecomposition out{n, f.rep, {}};
    auto axis_of = [&](i64 flat, std::size_t i) { return (flat / st[i]) % crt.factors[i].q; };

    const auto pivot_it = std::max_element(t.begin(), t.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); });
    const i64 pivot = pivot_it - t.begin();
    const cd pv = *pivot_it;
    const double scale = std::abs(pv);
    if (scale == 0.0) {
        ProductTerm term{0.0, {}};
        for (const auto& fac : crt.factors) term.factors.emplace(fac.p, FiniteState::zero(fac.q, f.rep));
        out.terms.push_back(std::move(term));
        return out;
    }

    // Rank-1 attempt: fibers through the pivot, rescaled by pivot^{1-m}.
    ProductTerm r1{std::pow(pv, 1.0 - static_cast<double>(m)), {}};
    std::vector<std::vector<cd>> fibers(m);
    for (std::size_t i = 0; i < m; ++i) {
        const i64 q = crt.factors[i].q;
        const i64 base = pivot - axis_of(pivot, i) * st[i];
        fibers[i].resize(static_cast<std::size_t>(q));
        for (i64 k = 0; k < q; ++k) fibers[i][static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(base + k * st[i])];
    }
    double err = 0.0;
    for (i64 flat = 0; flat < n; ++flat) {
        cd v = r1.coefficient;
        for (std::size_t i = 0; i < m; ++i) v *= fibers[i][static_cast<std::size_t>(axis_of(flat, i))];
        err = std::max(err, std::abs(v - t[static_cast<std::size_t>(flat)]));
    }
    if (err <= kRankOneTol * scale) {
        for (std::size_t i = 0; i < m; ++i) {
            r1.factors.emplace(crt.factors[i].p, FiniteState(crt.factors[i].q, f.rep, fibers[i]));
        }
        out.terms.push_back(std::move(r1));
        return out;
    }

    // Exact expansion: delta states on every axis but the last, the fiber on the last.
    const i64 q_last = crt.factors[m - 1].q;
    for (i64 head = 0; head < n / q_last; ++head) {
        std::vector<cd> fiber(t.begin() + head * q_last, t.begin() + (head + 1) * q_last);
        if (std::all_of(fiber.begin(), fiber.end(), [](cd v) { return v == cd(0.0); })) continue;
        ProductTerm term{1.0, {}};
        const i64 flat0 = head * q_last;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            FiniteState d = FiniteState::zero(crt.factors[i].q, f.rep);
            d[axis_of(flat0, i)] = 1.0;
            term.factors.emplace(crt.factors[i].p, std::move(d));
        }
        term.factors.emplace(crt.factors[m - 1].p, FiniteState(q_last, f.rep, std::move(fiber)));
        out.terms.push_back(std::move(term));
    }
    return out;
}

FiniteState tensor_join(const TensorDecomposition& td) {
    const i64 n = td.n;
    const CrtData crt = crt_idempotents(n);
    const auto order = rep_order(n, td.rep);
    const auto st = strides(crt);

    FiniteState out = FiniteState::zero(n, td.rep);
    for (const auto& term : td.terms) {
        std::vector<const FiniteState*> fs;
        for (const auto& fac : crt.factors) {
            const auto it = term.factors.find(fac.p);
            if (it == term.factors.end() || it->second.n != fac.q || it->second.rep != td.rep) {
                throw std::invalid_argument("pqm: product term lacks a factor on Z(" + std::to_string(fac.q) + ")");
            }
            fs.push_back(&it->second);
        }
        for (i64 flat = 0; flat < n; ++flat) {
            cd v = term.coefficient;
            for (std::size_t i = 0; i < fs.size(); ++i) v *= (*fs[i])[(flat / st[i]) % crt.factors[i].q];
            out[order[static_cast<std::size_t>(flat)]] += v;
        }
    }
    return out;
}

HWFactorization factor_hw(const HWElement& d) {
    const i64 n = d.n;
    const CrtData crt = crt_idempotents(n);
    const RatMod1 a(d.alpha, hw_grid(n) * n);
    const RatMod1 c = d.phase + a * d.beta;
    const auto a_parts = rat_decompose(a);
    auto c_parts = rat_decompose(c);

    HWFactorization out;
    for (const auto& fac : crt.factors) {
        RatMod1 ap, cp;
        if (auto it = a_parts.find(fac.p); it != a_parts.end()) ap = it->second.to_ratmod1();
        if (auto it = c_parts.find(fac.p); it != c_parts.end()) {
            cp = it->second.to_ratmod1();
            c_parts.erase(it);
        }
        out.factors.emplace(fac.p, HWElement::from_continuum(fac.q, ap, d.beta, cp));
    }
    out.scalar = rat_recombine(c_parts);
    return out;
}

OperatorMatrix join_operator(i64 n, const std::map<u64, OperatorMatrix>& factors) {
    const CrtData crt = crt_idempotents(n);
    OperatorMatrix k = OperatorMatrix::Identity(1, 1);
    for (const auto& fac : crt.factors) {
        const auto it = factors.find(fac.p);
        if (it == factors.end() || it->second.rows() != fac.q || it->second.cols() != fac.q) {
            throw std::invalid_argument("pqm: missing " + std::to_string(fac.q) + "x" + std::to_string(fac.q) +
                                        " factor for p = " + std::to_string(fac.p));
        }
        const OperatorMatrix& b = it->second;
        OperatorMatrix next(k.rows() * b.rows(), k.cols() * b.cols());
        for (Eigen::Index i = 0; i < k.rows(); ++i) {
            for (Eigen::Index j = 0; j < k.cols(); ++j) next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = k(i, j) * b;
        }
        k = std::move(next);
    }
    const auto order = crt_position_order(n);
    OperatorMatrix out(n, n);
    for (i64 i = 0; i < n; ++i) {
        for (i64 j = 0; j < n; ++j) out(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) = k(i, j);
    }
    return out;
}

}  // namespace pqm
