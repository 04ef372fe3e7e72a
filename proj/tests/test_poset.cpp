#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "pqm/poset.hpp"
#include "support.hpp"

using namespace pqm;

namespace {

bool divides(u64 a, u64 b) { return b % a == 0; }

// Largest antichain of the divisors (other than 1) of n, by subset enumeration.
std::size_t width_oracle(u64 n) {
    std::vector<u64> d;
    for (u64 k = 2; k <= n; ++k) {
        if (n % k == 0) d.push_back(k);
    }
    std::size_t best = 0;
    for (u64 mask = 1; mask < (u64{1} << d.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < d.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < d.size() && ok; ++j) {
                if ((mask >> j & 1) && (divides(d[i], d[j]) || divides(d[j], d[i]))) ok = false;
            }
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

// Longest divisibility chain ending at k among divisors >= 2.
std::size_t chain_oracle(u64 k) {
    std::size_t best = 1;
    for (u64 d = 2; d < k; ++d) {
        if (k % d == 0) best = std::max(best, chain_oracle(d) + 1);
    }
    return best;
}

Supernatural random_sn() {
    std::map<u64, int> fin;
    std::set<u64> inf;
    for (u64 p : {2u, 3u, 5u, 7u}) {
        const auto r = test::random_int(0, 4);
        if (r == 4) {
            inf.insert(p);
        } else if (r > 0) {
            fin[p] = static_cast<int>(r);
        }
    }
    const Tail tail = test::random_int(0, 5) == 0 ? Tail::all_infinity : Tail::all_zero;
    if (tail == Tail::all_infinity) {
        for (u64 p : {2u, 3u, 5u, 7u}) {
            if (!inf.count(p) && !fin.count(p)) fin[p] = 0;
        }
        inf.clear();
    }
    if (tail == Tail::all_zero && fin.empty() && inf.empty()) fin[2] = 1;
    return Supernatural(fin, inf, tail);
}

}  // namespace

TEST_CASE("supernatural divisibility", "[supernatural]") {
    const auto s12 = Supernatural::from_integer(12);
    const auto s23 = Supernatural::omega_of({2, 3});
    CHECK(sn_divides(s12, s23));
    CHECK(!sn_divides(Supernatural::prime_power_inf(2), s12));
    CHECK(sn_divides(s23, Supernatural::omega()));
    CHECK(sn_divides(Supernatural::omega_except({5}), Supernatural::omega()));
    CHECK(!sn_divides(Supernatural::omega(), Supernatural::omega_except({5})));
    CHECK_THROWS_AS(Supernatural::from_integer(1), std::invalid_argument);
    CHECK(s12.value() == 12);
    CHECK_THROWS_AS(s23.value(), std::domain_error);

    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_sn();
        const auto b = random_sn();
        const auto c = random_sn();
        CHECK(sn_divides(a, a));
        if (sn_divides(a, b) && sn_divides(b, a)) CHECK(a == b);
        if (sn_divides(a, b) && sn_divides(b, c)) CHECK(sn_divides(a, c));
        const auto l = sn_lcm(a, b);
        CHECK(sn_divides(a, l));
        CHECK(sn_divides(b, l));
        if (sn_divides(a, c) && sn_divides(b, c)) CHECK(sn_divides(l, c));
    }
}

TEST_CASE("suprema of chains and finite sets", "[supernatural]") {
    CHECK(sn_sup(PowersOf{3}) == Supernatural::prime_power_inf(3));
    CHECK(sn_sup(PowersOf{12}) == Supernatural::omega_of({2, 3}));
    CHECK(sn_sup(std::vector<Supernatural>{Supernatural::from_integer(4), Supernatural::from_integer(6)}) ==
          Supernatural::from_integer(12));
    CHECK(sn_sup(AllPrimesExhausted{}) == Supernatural::omega());
    for (u64 k = 1; k <= 6; ++k) CHECK(sn_divides(Supernatural::from_integer(ipow(5, static_cast<int>(k))), sn_sup(PowersOf{5})));
}

TEST_CASE("divisor posets", "[poset]") {
    const auto p12 = divisor_poset(12);
    REQUIRE(p12.size() == 5);
    std::vector<u64> vals;
    for (const auto& e : p12.elements()) vals.push_back(e.value());
    CHECK(vals == std::vector<u64>{2, 3, 4, 6, 12});
    CHECK(divisor_poset(7).size() == 1);
    CHECK(divisor_poset(36).size() == 8);
    CHECK(p12.check_axioms());
}

TEST_CASE("width and length", "[poset]") {
    const auto w12 = poset_width_length(divisor_poset(12));
    CHECK(w12.width == 2);
    CHECK(w12.length == 3);
    CHECK(w12.chain_partition.size() == 2);

    const auto w36 = poset_width_length(divisor_poset(36));
    CHECK(w36.width == 3);
    CHECK(w36.length == 4);

    const auto w = poset_width_length(divisor_poset(243));
    CHECK(w.width == 1);
    CHECK(w.length == 5);

    for (u64 n = 2; n <= 400; ++n) {
        const auto P = divisor_poset(n);
        if (P.size() > 22) continue;
        const auto r = poset_width_length(P);
        CHECK(r.width == width_oracle(n));
        CHECK(r.length == chain_oracle(n));
        CHECK(r.chain_partition.size() == r.width);
        CHECK(r.max_antichain.size() == r.width);
        CHECK(r.longest_chain.size() == r.length);
        CHECK(P.size() <= r.width * r.length);
        std::vector<int> hits(P.size());
        for (const auto& chain : r.chain_partition) {
            for (std::size_t i = 0; i < chain.size(); ++i) {
                ++hits[chain[i]];
                if (i > 0) CHECK(P.leq(chain[i - 1], chain[i]));
            }
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        for (std::size_t i = 0; i < r.max_antichain.size(); ++i) {
            for (std::size_t j = i + 1; j < r.max_antichain.size(); ++j) {
                CHECK(!P.leq(r.max_antichain[i], r.max_antichain[j]));
                CHECK(!P.leq(r.max_antichain[j], r.max_antichain[i]));
            }
        }
    }
    CHECK_THROWS_AS(poset_width_length(divisor_poset(36), 4), std::length_error);
}

TEST_CASE("divisor topology", "[topology]") {
    const auto P = divisor_poset(12);
    const auto u4 = basis_open(P, *P.index_of(Supernatural::from_integer(4)));
    CHECK(u4 == Subset{true, false, true, false, false});
    CHECK(is_open(P, u4));
    CHECK(!is_open(P, Subset{false, false, true, false, false}));
    CHECK(is_closed(P, Subset{false, false, true, true, true}));
    CHECK(check_t0(P));
    const auto t1 = check_t1(P);
    CHECK(!t1.holds);
    REQUIRE(t1.witness);
    CHECK(P.element(t1.witness->first).value() == 2);
    CHECK(P.element(t1.witness->second).value() == 4);

    const auto single = check_t1(divisor_poset(13));
    CHECK(single.holds);
    CHECK(!single.witness);

    std::vector<Subset> cover;
    for (std::size_t i = 0; i < P.size(); ++i) cover.push_back(basis_open(P, i));
    const auto sub = finite_subcover(P, cover);
    REQUIRE(sub);
    CHECK(sub->size() == 1);  // U(12) alone
    CHECK(!finite_subcover(P, {u4}));
}

TEST_CASE("T0 but not T1 on every divisor poset", "[topology][slow]") {
    for (u64 n = 2; n <= 2000; ++n) {
        const auto P = divisor_poset(n);
        CHECK(check_t0(P));
        const auto t1 = check_t1(P);
        CHECK(t1.holds == is_prime(n));
        if (!t1.holds) {
            REQUIRE(t1.witness);
            CHECK(P.leq(t1.witness->first, t1.witness->second));
            CHECK(t1.witness->first != t1.witness->second);
        }
    }
}
