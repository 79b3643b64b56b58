#include "hallgap/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hallgap {

FamilyMember danilov_elkies(const Int& t) {
    Int x = 3125 * t * t - 3000 * t + 719;
    Int P = 125 * t * t - 114 * t + 26;
    Int Q = 15625 * t * t - 15375 * t + 3781;
    Int Y = P * Q * Q;
    Int k = 27 * (2 * t - 1);
    Rat residual(x * x * x - Y - k);
    return {t, Rat(x), Rat(Y), Rat(k), residual};
}

std::optional<std::pair<Int, Int>> negative_pell_fundamental(const Int& D) {
    if (D <= 0 || is_square(D))
        throw std::domain_error("negative_pell_fundamental: D must be positive and non-square");
    // Standard continued fraction of sqrt(D): terms a_i with state
    // (m, d, a), convergents h/k. The expansion is periodic from a_1 and the
    // period ends at the first a_i == 2 a_0; an odd period makes the
    // convergent just before that point solve u^2 - D s^2 = -1.
    Int a0 = isqrt(D);
    Int m = 0, d = 1, a = a0;
    Int h_prev = 1, h = a0;  // h_{-1}, h_0
    Int k_prev = 0, k = 1;
    long period = 0;
    while (true) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        ++period;
        if (a == 2 * a0) break;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    if (period % 2 == 0) return std::nullopt;
    if (h * h - D * k * k != -1)
        throw std::logic_error("negative_pell_fundamental: convergent check failed");
    return std::make_pair(h, k);
}

std::vector<PellSolution> pell_enumerate(int max_count) {
    if (max_count < 1) throw std::domain_error("pell_enumerate: max_count must be >= 1");
    auto fund = negative_pell_fundamental(125);
    if (!fund) throw std::logic_error("pell_enumerate: sqrt(125) period should be odd");
    Int u = fund->first, s = fund->second;
    // alpha^2 = A + B sqrt(125) advances through the odd powers of alpha.
    Int A = u * u + 125 * s * s;
    Int B = 2 * u * s;
    std::vector<PellSolution> out;
    while (static_cast<int>(out.size()) < max_count) {
        for (const Int& up : {u, Int(-u)}) {
            Int num = up + 57;
            if (mpz_divisible_ui_p(num.get_mpz_t(), 125)) {
                out.push_back({Int(num / 125), s});
                break;
            }
        }
        Int u_next = u * A + 125 * s * B;
        Int s_next = u * B + s * A;
        u = u_next;
        s = s_next;
    }
    return out;
}

ChowlaMember chowla_audit(const Int& t) {
    Int t3 = t * t * t;
    Int t6 = t3 * t3;
    Int t9 = t6 * t3;
    Int t12 = t9 * t3;
    Int t15 = t12 * t3;
    Rat x = make_rat(t * (t9 + 6 * t6 + 15 * t3 + 12), 9);
    Rat y = make_rat(t15, 27) + make_rat(t12 + 4 * t9 + 8 * t6, 3) + make_rat(5 * t3 + 1, 12);
    Rat k = make_rat(-(3 * t6 + 14 * t3 + 27), 108);
    Rat residual = x * x * x - y * y - k;
    return {{t, x, y, k, residual}, x.get_den() == 1, y.get_den() == 1};
}

namespace {

// Deterministic Miller-Rabin. The 13 bases prove primality below
// 3.317e24 (all our abc inputs reduce below that after trial division);
// larger inputs get the same bases as a strong probabilistic check.
bool miller_rabin(const Int& n) {
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    for (unsigned long b : bases) {
        if (n == b) return true;
        Int x;
        Int base(static_cast<long>(b));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    return miller_rabin(n);
}

// Brent-style rho with fixed parameters; returns a proper divisor or 0.
Int pollard_rho(const Int& n, unsigned long c, long budget) {
    Int x = 2, y = 2, g = 1;
    Int cc(static_cast<long>(c));
    long steps = 0;
    while (g == 1 && steps < budget) {
        Int prod = 1;
        for (int i = 0; i < 128 && steps < budget; ++i, ++steps) {
            x = (x * x + cc) % n;
            y = (y * y + cc) % n;
            y = (y * y + cc) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) return 0;  // cycle collapsed, try another c
            prod = prod * diff % n;
        }
        g = gcd(prod, n);
    }
    if (g == 1 || g == n) return 0;
    return g;
}

void factor_into(const Int& input, std::vector<Int>& primes, int depth) {
    Int m = input;
    if (m <= 1) return;
    if (depth > 64) throw UnfactoredError(m);

    // trial division: 2, 3, 5 then a mod-30 wheel
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(static_cast<long>(p));
            while (mpz_divisible_ui_p(m.get_mpz_t(), p))
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    static const int wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    unsigned long p = 7;
    for (int w = 0; p <= 10000000ul; p += wheel[w], w = (w + 1) & 7) {
        if (mpz_fits_ulong_p(m.get_mpz_t())) {
            unsigned long mu = mpz_get_ui(m.get_mpz_t());
            if (mu == 1 || p * p > mu) break;  // p <= 10^7, p*p fits in 64 bits
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(static_cast<long>(p));
            while (mpz_divisible_ui_p(m.get_mpz_t(), p))
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m == 1) return;
    // anything below the wheel's square is prime now
    if (m <= Int(10000000ul) * Int(10000000ul) || is_prime(m)) {
        primes.push_back(m);
        return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(m.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k)) {
                factor_into(root, primes, depth + 1);
                return;
            }
        }
    }
    for (unsigned long c : {1ul, 3ul, 5ul}) {
        Int g = pollard_rho(m, c, 200000);
        if (g != 0) {
            factor_into(g, primes, depth + 1);
            factor_into(Int(m / g), primes, depth + 1);
            return;
        }
    }
    throw UnfactoredError(m);
}

}  // namespace

std::vector<Int> prime_factors_distinct(const Int& n) {
    if (n < 1) throw std::domain_error("prime_factors_distinct: n must be >= 1");
    std::vector<Int> primes;
    factor_into(n, primes, 0);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

AbcTriple abc_quality(const Int& a, const Int& b) {
    if (a <= 0 || b <= 0) throw std::domain_error("abc_quality: a and b must be positive");
    if (gcd(a, b) != 1) throw std::domain_error("abc_quality: a and b must be coprime");
    const Int c = a + b;
    // a, b, c are pairwise coprime (any common prime of c and a divides b),
    // so rad(abc) is the plain product of the three radicals.
    Int radical = 1;
    for (const Int* m : {&a, &b, &c})
        for (const Int& p : prime_factors_distinct(*m)) radical *= p;

    // log(c)/log(radical) in doubles; reporting only, the flag is exact.
    long ce, re;
    double cm = mpz_get_d_2exp(&ce, c.get_mpz_t());
    double rm = mpz_get_d_2exp(&re, radical.get_mpz_t());
    double q = (std::log2(cm) + static_cast<double>(ce)) /
               (std::log2(rm) + static_cast<double>(re));

    // 6 significant digits, fixed notation
    char buf[64];
    int lead = q >= 1 ? static_cast<int>(std::floor(std::log10(q))) : 0;
    std::snprintf(buf, sizeof buf, "%.*f", lead > 5 ? 0 : 5 - lead, q);
    return {a, b, c, radical, std::string(buf), radical < c};
}

}  // namespace hallgap
