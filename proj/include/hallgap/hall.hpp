#pragma once

#include <string>

#include "hallgap/arith.hpp"

namespace hallgap {

// Position of the nearest square y^2 relative to x^3.
enum class Side { SquareAbove, SquareBelow };

const char* to_string(Side s);

struct NearestSquare {
    Int y;     // root of the square nearest to x^3
    Int k;     // |x^3 - y^2|
    Side side;
};

// x >= 2. The two candidate distances x^3 - s^2 and (s+1)^2 - x^3 have
// opposite parity, so there is never a tie; perfect squares get k = 0 and
// side = SquareBelow by convention.
NearestSquare nearest_square(const Int& x);

struct HallCertificate {
    Int x;
    Int y;
    Int k;
    Side side;
    bool is_hall;           // x non-square and k^2 < x, decided exactly
    std::string r_decimal;  // sqrt(x)/k to 4 significant digits, "inf" if k = 0
};

HallCertificate hall_certificate(const Int& x);

// sqrt(x)/k rounded half-even to 4 significant digits, using only integer
// comparisons (ties require sqrt(x)/k rational, which the tie test detects
// exactly). Plain fixed-point notation, never scientific. x >= 0, k > 0.
std::string sqrt_ratio_sig4(const Int& x, const Int& k);

struct FOffset {
    Int y;          // root minimizing |x^3 - y^2| (see note at f_interval)
    RatInterval f;  // encloses |x^(3/2) - y|
    Side side;
};

// Distance from x^(3/2) to the integer y whose square is nearest to x^3.
// That y is almost always the nearest integer to x^(3/2) outright; the two
// minimizers can differ only when frac(x^(3/2)) exceeds 1/2 by less than
// ~1/(8 x^(3/2)), and picking the square's minimizer keeps the identity
// k = 2 f x^(3/2) -+ f^2 exact against nearest_square's k.
// x >= 2 and non-square.
FOffset f_interval(const Int& x, int precision_bits = 0);

// Certified check of 2 f x < 1 + 1/(4 sqrt(x)) for a Hall number x: the left
// side is taken from above (f.hi) and the right side from below (sqrt upper
// bound in the denominator), so `true` is a proof. Non-Hall x is a domain
// error.
bool lemma3_check(const Int& x, int precision_bits = 0);

}  // namespace hallgap
