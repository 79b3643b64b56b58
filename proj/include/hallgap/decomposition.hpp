#pragma once

#include "hallgap/arith.hpp"

namespace hallgap {

// Which side of the even square: x = n^2 + a (CaseI) or x = n^2 - a (CaseII).
enum class Case { CaseI, CaseII };

const char* to_string(Case c);

struct SquareDecomposition {
    Int x;
    Int n;      // even, >= 2
    Int a;      // 1..2n (CaseI), 1..2n-2 (CaseII)
    Case kind;
    Int L;      // 3a^2 mod 8n
    Int t;      // 3a^2 div 8n
    Int W;      // n^3 + 3na/2 (CaseI), n^3 - 3na/2 (CaseII)
};

// Split x around the nearest even square root: every non-square x > 2 lands
// in exactly one of [n^2+1, n^2+2n] (CaseI) or [n^2-2n+2, n^2-1] (CaseII)
// for a unique even n. x <= 2 or a perfect square is a domain error.
SquareDecomposition decompose(const Int& x);

// 3a^2 mod 8n for even n >= 2, 1 <= a <= 2n. Satisfies the stepping law
// L(a+1) = (L(a) + 6a + 3) mod 8n that the screened scanner walks with.
Int residue_L(const Int& n, const Int& a);

struct QEnclosure {
    RatInterval value;
    long terms_used;  // series terms summed (series route)
    Rat tail_bound;   // certified bound on the omitted series tail
};

// Certified enclosure of the fractional correction q in
//   x^(3/2) = W + t + L/(8n) - q1(a)   (CaseI,  x = n^2 + a)
//   x^(3/2) = W + t + L/(8n) + q2(a)   (CaseII, x = n^2 - a)
// computed two independent ways and intersected: a truncated binomial series
// with a rigorous tail bound (q1 alternates, so consecutive partial sums
// bracket it; q2's terms are positive with ratio below a/n^2, giving a
// geometric tail), and algebraically as +-(W + t + L/(8n) - sqrt(x^3)) via
// sqrt_interval. An empty intersection means a bug, not bad input, and
// throws std::logic_error. a = 0 returns exactly [0, 0].
QEnclosure q_enclosure(const Int& n, const Int& a, Case kind, int precision_bits = 0);

// Same evaluation without the per-case ceiling on a: any 0 <= a <= n^2 for
// CaseI (a < n^2 for CaseII). The difference-bound suites sample a up to
// 2.375 n, past the CaseI bound 2n, and the series converges all the same.
QEnclosure q_eval_unchecked(const Int& n, const Int& a, Case kind, int precision_bits = 0);

enum class ScreenVerdict { RejectLZero, RejectFar, Candidate };

const char* to_string(ScreenVerdict v);

struct ScreenDetail {
    RatInterval gap;    // |L/(8n) - q1| (CaseI) or |L/(8n) - (1 - q2)| (CaseII)
    RatInterval bound;  // (1 + 1/(4 sqrt x)) / (2x)
    ScreenVerdict verdict;
};

// Necessary-condition screen: a Hall number's decomposition must have L != 0
// and gap < bound. RejectFar only when gap > bound is interval-proven, so no
// Hall number is ever screened out; Candidate means "not refuted".
ScreenVerdict lemma4_screen(const SquareDecomposition& d, int precision_bits = 0);
ScreenDetail lemma4_screen_detail(const SquareDecomposition& d, int precision_bits = 0);

enum class Parity { Even, Odd };

const char* to_string(Parity p);

struct ZoneRadii {
    Rat case1_min_a;  // even n: cbrt(6) (n-1)^(2/3);  odd n: sqrt(n)
    Rat case2_min_a;  // even n: 2 (n-1)^(2/3) - 1;    odd n: sqrt(n)
};

// Hall-free zone radii around n^2, as certified rational lower bounds rounded
// down at 64 fractional bits. parity selects the even-square (two-case) or
// odd-square formula; pass the parity of n. n >= 2.
ZoneRadii exclusion_zone(const Int& n, Parity parity);

}  // namespace hallgap
