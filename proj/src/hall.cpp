#include "hallgap/hall.hpp"

namespace hallgap {

const char* to_string(Side s) {
    return s == Side::SquareAbove ? "SquareAbove" : "SquareBelow";
}

NearestSquare nearest_square(const Int& x) {
    if (x < 2) throw std::domain_error("nearest_square: x must be >= 2");
    Int T = x * x * x;
    Int s = isqrt(T);
    Int below = T - s * s;
    Int above = (s + 1) * (s + 1) - T;
    // below + above = 2s + 1 is odd, so below == above is impossible.
    if (below <= above) return {s, below, Side::SquareBelow};
    return {s + 1, above, Side::SquareAbove};
}

HallCertificate hall_certificate(const Int& x) {
    if (x < 2) throw std::domain_error("hall_certificate: x must be >= 2");
    NearestSquare ns = nearest_square(x);
    bool hall = !is_square(x) && ns.k * ns.k < x;
    std::string r = ns.k == 0 ? "inf" : sqrt_ratio_sig4(x, ns.k);
    return {x, ns.y, ns.k, ns.side, hall, r};
}

namespace {

// rho >= 10^e, decided exactly: x >= k^2 10^(2e) (negative e cross-multiplied).
bool ratio_at_least_pow10(const Int& x, const Int& k, long e) {
    if (e >= 0) return x >= k * k * ipow(10, 2 * static_cast<unsigned long>(e));
    return x * ipow(10, 2 * static_cast<unsigned long>(-e)) >= k * k;
}

}  // namespace

std::string sqrt_ratio_sig4(const Int& x, const Int& k) {
    if (x < 0 || k <= 0) throw std::domain_error("sqrt_ratio_sig4: need x >= 0, k > 0");
    if (x == 0) return "0.000";

    // Decimal exponent: largest e with 10^e <= sqrt(x)/k. Seed from operand
    // sizes, then settle with exact comparisons (a couple of steps at most).
    long e = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 10) + 1) / 2 -
             static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 10)) + 1;
    while (!ratio_at_least_pow10(x, k, e)) --e;
    while (ratio_at_least_pow10(x, k, e + 1)) ++e;

    // Mantissa m = round(sqrt(x)/k * 10^(3-e)), half-even. Scale so the value
    // is sqrt(T)/K, then m0 = floor(sqrt(T))/K and the rounding direction is
    // sign(4T - K^2 (2 m0 + 1)^2), zero meaning an exact tie.
    Int T = x, K = k;
    if (e <= 3)
        T *= ipow(10, 2 * static_cast<unsigned long>(3 - e));
    else
        K *= ipow(10, static_cast<unsigned long>(e - 3));
    Int m = isqrt(T) / K;
    Int tie = 4 * T - K * K * (2 * m + 1) * (2 * m + 1);
    if (tie > 0 || (tie == 0 && mpz_odd_p(m.get_mpz_t())))
        ++m;
    if (m == 10000) {
        m = 1000;
        ++e;
    }

    std::string digits = m.get_str();  // exactly 4 digits, 1000..9999
    if (e >= 3) return digits + std::string(static_cast<size_t>(e - 3), '0');
    if (e >= 0)
        return digits.substr(0, static_cast<size_t>(e + 1)) + "." +
               digits.substr(static_cast<size_t>(e + 1));
    return "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
}

FOffset f_interval(const Int& x, int precision_bits) {
    if (x < 2) throw std::domain_error("f_interval: x must be >= 2");
    if (is_square(x)) throw std::domain_error("f_interval: x must not be a perfect square");
    NearestSquare ns = nearest_square(x);
    RatInterval root = sqrt_interval(x * x * x, precision_bits);
    RatInterval f = ns.side == Side::SquareBelow ? root - Rat(ns.y) : Rat(ns.y) - root;
    // x non-square makes f > 0 mathematically; the enclosure endpoint can
    // still dip below zero by the interval width, so clamp.
    if (f.lo < 0) f.lo = 0;
    return {ns.y, f, ns.side};
}

bool lemma3_check(const Int& x, int precision_bits) {
    HallCertificate cert = hall_certificate(x);
    if (!cert.is_hall) throw std::domain_error("lemma3_check: x is not a Hall number");
    FOffset fo = f_interval(x, precision_bits);
    Rat lhs = 2 * fo.f.hi * Rat(x);
    Rat rhs = 1 + make_rat(1, 4) / sqrt_interval(x, precision_bits).hi;
    return lhs < rhs;
}

}  // namespace hallgap
