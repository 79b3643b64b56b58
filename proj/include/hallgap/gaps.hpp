#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hallgap/arith.hpp"

namespace hallgap {

// Integerized minimum-gap predicate for consecutive Hall numbers:
// (5 (x2 - x1))^6 > x1, equivalent to x2 - x1 > x1^(1/6)/5. x1 < x2 required.
bool check_gap_pair(const Int& x1, const Int& x2);

// Strict integerized exclusion-zone inequalities for a Hall number: around
// the nearest even square (a^3 > 6(n-1)^2 in CaseI, (a+1)^3 > 8(n-1)^2 in
// CaseII) and around the nearest odd square m^2 (|x - m^2|^2 > m). The odd
// check is skipped for m = 1, whose nominal radius would exclude x = 2; the
// zone statements address large x. hall = false is vacuously true.
bool check_zone_conformance(const Int& x, bool hall);

// Reporting tag: inside twice the zone radius of the nearest even or odd
// square (even tested first).
enum class Regime { Generic, NearEvenSquare, NearOddSquare };

const char* to_string(Regime r);

Regime regime_of(const Int& x);

struct GapPair {
    Int x1, x2, gap;
    bool bound_ok;
    Regime regime;  // of x1
};

struct GapReport {
    std::vector<GapPair> pairs;
    std::vector<std::pair<Int, bool>> zones;  // (x, zone_ok) per input
    bool all_ok;
};

struct ValidationError : std::runtime_error {
    std::vector<Int> offenders;
    ValidationError(const std::string& msg, std::vector<Int> off)
        : std::runtime_error(msg), offenders(std::move(off)) {}
};

// halls must be strictly increasing and every entry Hall; otherwise throws
// ValidationError naming the offending values.
GapReport gap_report(const std::vector<Int>& halls);

// One implication instance of the divisibility lemma for the homogeneous
// form f(x,y) = k0 x^d + k1 x^(d-1) y + ... + kd y^d: whether
// a^m | f(a,b) implies a | b. Preconditions (domain errors): d >= 1, a and b
// non-zero, kd != 0, gcd(kd, a) = 1, m >= d.
bool lemma10_check(const std::vector<Int>& coeffs, const Int& a, const Int& b, long m);

}  // namespace hallgap
