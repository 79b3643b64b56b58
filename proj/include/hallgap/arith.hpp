#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

namespace hallgap {

using Int = mpz_class;
using Rat = mpq_class;

// Fallback interval precision (fractional bits). Operations taking a
// precision_bits parameter treat 0 as "use default_precision_bits()".
inline constexpr int kDefaultPrecisionBits = 128;

// HALLGAP_PRECISION_BITS when set (decimal, 16..1048576), else 128. A set but
// unusable value throws std::domain_error so misconfiguration is loud.
int default_precision_bits();

// Resolve a precision_bits argument: 0 picks the library default; anything
// negative (or a resolved value < 1) is a domain error.
int resolve_precision(int precision_bits);

// num/den in lowest terms. mpq_class does not canonicalize on construction,
// so routing every fraction through here avoids a classic footgun.
Rat make_rat(const Int& num, const Int& den);

Int ipow(const Int& base, unsigned long exp);

// Floor square root by integer Newton iteration. The iterate can land one
// below the true floor when it overshoots from above, so the +-1 correction
// loops at the end are load-bearing, not decoration. Throws for n < 0.
Int isqrt(const Int& n);

// Floor cube root, n >= 0.
Int icbrt(const Int& n);

bool is_square(const Int& n);

// Closed interval [lo, hi] with exact rational endpoints. Every operation
// returns an interval containing the exact image of its operands, so chains
// of operations never lose containment of the real value they track.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat lo_, Rat hi_);

    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }

    RatInterval operator-() const { return RatInterval(Rat(-hi), Rat(-lo)); }
    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator+(const Rat& v) const;
    RatInterval operator-(const Rat& v) const;
    RatInterval operator*(const Rat& v) const;

    // Interval of |.|; collapses to [0, max] when the input straddles zero.
    RatInterval abs() const;

    std::optional<RatInterval> intersect(const RatInterval& o) const;
};

RatInterval operator+(const Rat& v, const RatInterval& i);
RatInterval operator-(const Rat& v, const RatInterval& i);
RatInterval operator*(const Rat& v, const RatInterval& i);

// [s/2^p, (s+1)/2^p] with s = isqrt(n * 4^p): contains sqrt(n), width 2^-p.
RatInterval sqrt_interval(const Int& n, int precision_bits = 0);

// Same construction for cube roots: c = icbrt(n * 8^p).
RatInterval cbrt_interval(const Int& n, int precision_bits = 0);

}  // namespace hallgap
