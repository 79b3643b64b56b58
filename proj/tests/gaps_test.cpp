#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hallgap/gaps.hpp"
#include "test_util.hpp"

using namespace hallgap;

static std::vector<Int> ints(std::initializer_list<const char*> xs) {
    std::vector<Int> v;
    for (const char* s : xs) v.emplace_back(s);
    return v;
}

static const std::vector<Int> kFixture = ints(
    {"2", "5234", "8158", "93844", "367806", "421351", "720114", "939787", "5853886516781223",
     "38115991067861271", "322001299796379844"});

static void test_gap_pair() {
    CHECK(check_gap_pair(Int(2), Int(5234)));
    CHECK(check_gap_pair(Int(2), Int(3)));  // 5^6 = 15625 > 2
    Int big = ipow(Int(10), 30);
    CHECK(!check_gap_pair(big, big + 1));  // 15625 <= 10^30
    CHECK(check_gap_pair(big, big + ipow(Int(10), 28)));
    CHECK_THROWS(check_gap_pair(Int(5), Int(5)), std::domain_error);
    CHECK_THROWS(check_gap_pair(Int(7), Int(3)), std::domain_error);
}

static void test_zone_conformance() {
    for (const Int& x : kFixture) CHECK_MSG(check_zone_conformance(x, true), x.get_str());

    CHECK(check_zone_conformance(Int(7), false));  // vacuous for non-Hall x

    // immediately next to a large even square: the even-side inequality bites
    Int n(10002);
    CHECK(!check_zone_conformance(n * n + 1, true));
    // next to a large odd square: the even side passes, the odd side bites
    Int m(10001);
    CHECK(!check_zone_conformance(m * m + 1, true));
}

static void test_regime() {
    CHECK(regime_of(Int(2)) == Regime::NearEvenSquare);
    CHECK(regime_of(Int(5234)) == Regime::NearEvenSquare);
    CHECK(regime_of(Int(8158)) == Regime::NearEvenSquare);
    CHECK(regime_of(Int(93844)) == Regime::Generic);
    CHECK(regime_of(Int(1001 * 1001 + 5)) == Regime::NearOddSquare);
    CHECK(regime_of(Int(49)) == Regime::Generic);  // squares are never tagged
    CHECK(regime_of(Int(1)) == Regime::Generic);
}

static void test_gap_report() {
    GapReport rep = gap_report(kFixture);
    CHECK(rep.all_ok);
    CHECK(rep.pairs.size() == 10 && rep.zones.size() == 11);
    CHECK(rep.pairs[0].x1 == 2 && rep.pairs[0].x2 == 5234 && rep.pairs[0].gap == 5232);
    CHECK(rep.pairs[0].bound_ok && rep.pairs[0].regime == Regime::NearEvenSquare);
    CHECK(rep.pairs[3].x1 == 93844 && rep.pairs[3].regime == Regime::Generic);
    for (const auto& [x, ok] : rep.zones) CHECK_MSG(ok, x.get_str());
    for (const GapPair& p : rep.pairs) CHECK(p.gap == p.x2 - p.x1 && p.bound_ok);

    rep = gap_report(ints({"2"}));
    CHECK(rep.all_ok && rep.pairs.empty() && rep.zones.size() == 1);

    rep = gap_report({});
    CHECK(rep.all_ok && rep.pairs.empty() && rep.zones.empty());

    try {
        gap_report(ints({"2", "3"}));
        CHECK_MSG(false, "expected ValidationError for non-Hall 3");
    } catch (const ValidationError& e) {
        CHECK(e.offenders == ints({"3"}));
    }
    try {
        gap_report(ints({"5234", "2"}));
        CHECK_MSG(false, "expected ValidationError for out-of-order input");
    } catch (const ValidationError& e) {
        bool has2 = false;
        for (const Int& x : e.offenders) has2 = has2 || x == 2;
        CHECK(has2);
    }
    try {
        gap_report(ints({"4", "8"}));
        CHECK_MSG(false, "expected ValidationError for two non-Hall values");
    } catch (const ValidationError& e) {
        CHECK(e.offenders == ints({"4", "8"}));
    }
}

static void test_lemma10() {
    // x + y: 3^1 | f(3,6) = 9 and 3 | 6; with b = 5 the antecedent fails
    CHECK(lemma10_check(ints({"1", "1"}), Int(3), Int(6), 1));
    CHECK(lemma10_check(ints({"1", "1"}), Int(3), Int(5), 1));

    CHECK_THROWS(lemma10_check(ints({"5"}), Int(3), Int(5), 1), std::domain_error);
    CHECK_THROWS(lemma10_check(ints({"1", "1"}), Int(0), Int(5), 1), std::domain_error);
    CHECK_THROWS(lemma10_check(ints({"1", "1"}), Int(3), Int(0), 1), std::domain_error);
    CHECK_THROWS(lemma10_check(ints({"1", "0"}), Int(3), Int(5), 1), std::domain_error);
    CHECK_THROWS(lemma10_check(ints({"1", "2"}), Int(4), Int(5), 1), std::domain_error);
    CHECK_THROWS(lemma10_check(ints({"1", "2", "3"}), Int(5), Int(7), 1), std::domain_error);

    // the implication is a theorem: no random instance may refute it
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> val(1, 20);
    std::uniform_int_distribution<int> d_dist(1, 3);
    int tried = 0;
    while (tried < 10000) {
        int d = d_dist(rng);
        std::vector<Int> coeffs;
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(coef(rng));
        Int a(val(rng) * ((rng() & 1) ? 1 : -1));
        Int b(val(rng) * ((rng() & 1) ? 1 : -1));
        Int kd = coeffs.back();
        if (kd == 0 || gcd(kd, a) != 1) continue;
        long m = d + static_cast<long>(rng() % 4);
        ++tried;
        CHECK(lemma10_check(coeffs, a, b, m));
    }
}

int main() {
    test_gap_pair();
    test_zone_conformance();
    test_regime();
    test_gap_report();
    test_lemma10();
    return testutil::test_summary("gaps_test");
}
