#include "hallgap/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace hallgap {

int default_precision_bits() {
    const char* env = std::getenv("HALLGAP_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 16 || v > (1L << 20))
        throw std::domain_error(
            "HALLGAP_PRECISION_BITS must be an integer in [16, 1048576], got '" +
            std::string(env) + "'");
    return static_cast<int>(v);
}

int resolve_precision(int precision_bits) {
    int p = precision_bits == 0 ? default_precision_bits() : precision_bits;
    if (p < 1) throw std::domain_error("precision_bits must be >= 1");
    return p;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/*
 * Integer Newton iteration x' = (x + n/x) / 2 (floor division), seeded at or
 * above sqrt(n). While x > floor(sqrt(n)) the iterate strictly decreases, and
 * it can undershoot by at most one (x + floor(n/x) >= 2 sqrt(n) - 1), so the
 * first non-decrease stops within one of the answer and the correction loops
 * below run O(1) times.
 */
Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    if (n < 2) return n;

    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x;
    if (bits <= 96) {
        // sqrt(double) is within 1 ulp here; +2 keeps the seed above the root.
        x = Int(std::sqrt(n.get_d())) + 2;
    } else {
        // 2^ceil(bits/2) >= sqrt(n).
        x = 1;
        x <<= (bits + 1) / 2;
    }
    for (;;) {
        Int next = (x + n / x) >> 1;
        if (next >= x) break;
        x = next;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

Int icbrt(const Int& n) {
    if (n < 0) throw std::domain_error("icbrt: negative input");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return RatInterval(Rat(lo + o.lo), Rat(hi + o.hi));
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return RatInterval(Rat(lo - o.hi), Rat(hi - o.lo));
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return RatInterval(mn, mx);
}

RatInterval RatInterval::operator+(const Rat& v) const {
    return RatInterval(Rat(lo + v), Rat(hi + v));
}

RatInterval RatInterval::operator-(const Rat& v) const {
    return RatInterval(Rat(lo - v), Rat(hi - v));
}

RatInterval RatInterval::operator*(const Rat& v) const {
    if (v >= 0) return RatInterval(Rat(lo * v), Rat(hi * v));
    return RatInterval(Rat(hi * v), Rat(lo * v));
}

RatInterval RatInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return -*this;
    Rat mx = hi > -lo ? hi : Rat(-lo);
    return RatInterval(Rat(0), mx);
}

std::optional<RatInterval> RatInterval::intersect(const RatInterval& o) const {
    Rat l = lo > o.lo ? lo : o.lo;
    Rat h = hi < o.hi ? hi : o.hi;
    if (l > h) return std::nullopt;
    return RatInterval(l, h);
}

RatInterval operator+(const Rat& v, const RatInterval& i) { return i + v; }

RatInterval operator-(const Rat& v, const RatInterval& i) {
    return RatInterval(Rat(v - i.hi), Rat(v - i.lo));
}

RatInterval operator*(const Rat& v, const RatInterval& i) { return i * v; }

RatInterval sqrt_interval(const Int& n, int precision_bits) {
    if (n < 0) throw std::domain_error("sqrt_interval: negative input");
    int p = resolve_precision(precision_bits);
    Int s = isqrt(n << (2 * p));
    Int den = Int(1) << p;
    return RatInterval(make_rat(s, den), make_rat(s + 1, den));
}

RatInterval cbrt_interval(const Int& n, int precision_bits) {
    if (n < 0) throw std::domain_error("cbrt_interval: negative input");
    int p = resolve_precision(precision_bits);
    Int c = icbrt(n << (3 * p));
    Int den = Int(1) << p;
    return RatInterval(make_rat(c, den), make_rat(c + 1, den));
}

}  // namespace hallgap
