#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hallgap/arith.hpp"

namespace hallgap {

struct FamilyMember {
    Int t;
    Rat x;
    Rat y;                  // the subtracted square's root (or direct subtrahend)
    Rat k;
    Rat identity_residual;  // x^3 - y^2 - k, or x^3 - Y - k when y holds Y
};

// x(t) = 3125 t^2 - 3000 t + 719 with
//   x^3 - (125 t^2 - 114 t + 26)(15625 t^2 - 15375 t + 3781)^2 = 27 (2t - 1);
// the y field holds the full subtrahend Y (already a product, not squared
// again), and the residual x^3 - Y - k is identically zero.
FamilyMember danilov_elkies(const Int& t);

struct PellSolution {
    Int t;
    Int s;
};

// Integer solutions of s^2 = 125 t^2 - 114 t + 26 in increasing |t|.
// Substituting u = 125 t - 57 turns the condition into the negative Pell
// equation u^2 - 125 s^2 = -1 (multiply through by 125: u^2 + 1 =
// 15625 t^2 - 14250 t + 3250 = 125 s^2), so solutions are the odd powers of
// the fundamental unit 682 + 61 sqrt(125). u mod 125 alternates between +57
// and -57 across those powers, so exactly one of +-u yields an integral
// t = (u + 57)/125 per power. max_count >= 1.
std::vector<PellSolution> pell_enumerate(int max_count);

// Fundamental solution of u^2 - D s^2 = -1 via the continued fraction of
// sqrt(D); nullopt when the period is even (no solution exists). D must be
// positive and non-square.
std::optional<std::pair<Int, Int>> negative_pell_fundamental(const Int& D);

struct ChowlaMember {
    FamilyMember member;
    bool x_integral;
    bool y_integral;
};

// Audit of the Chowla polynomials as printed in the literature:
//   x = t (t^9 + 6 t^6 + 15 t^3 + 12)/9
//   y = t^15/27 + (t^12 + 4 t^9 + 8 t^6)/3 + (5 t^3 + 1)/12
//   k = -(3 t^6 + 14 t^3 + 27)/108
// over exact rationals. The residual x^3 - y^2 - k is reported, never
// asserted: the printed polynomials do not satisfy the identity (at t = 3
// the residual is 751551980/9 even though x = 8158 is genuinely Hall).
ChowlaMember chowla_audit(const Int& t);

struct AbcTriple {
    Int a, b, c;
    Int radical;          // rad(abc), exact
    std::string quality;  // log(c)/log(radical), 6 significant digits
    bool is_abc_triple;   // radical < c, exact comparison
};

struct UnfactoredError : std::runtime_error {
    Int core;  // the composite that survived every factoring stage
    explicit UnfactoredError(Int c)
        : std::runtime_error("unfactored composite " + c.get_str()), core(std::move(c)) {}
};

// a, b > 0 and coprime (domain error otherwise); c = a + b. The radical is
// exact or the call throws UnfactoredError; quality alone is floating point.
AbcTriple abc_quality(const Int& a, const Int& b);

// Distinct prime factors, ascending. Trial wheel to 10^7, perfect-power
// reduction, deterministic Miller-Rabin (proven below 3.317e24), bounded
// Pollard rho; a surviving composite throws UnfactoredError rather than
// returning a wrong answer.
std::vector<Int> prime_factors_distinct(const Int& n);

}  // namespace hallgap
