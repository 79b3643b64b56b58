#include "hallgap/gaps.hpp"

#include "hallgap/decomposition.hpp"
#include "hallgap/hall.hpp"

namespace hallgap {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::NearEvenSquare: return "NearEvenSquare";
        case Regime::NearOddSquare: return "NearOddSquare";
        default: return "Generic";
    }
}

bool check_gap_pair(const Int& x1, const Int& x2) {
    if (x1 >= x2) throw std::domain_error("check_gap_pair: need x1 < x2");
    return ipow(5 * (x2 - x1), 6) > x1;
}

namespace {

struct EvenSplit {
    Int n, a;
    Case kind;
};

// Total version of the even-square split (decompose rejects x = 2).
EvenSplit even_split(const Int& x) {
    Int r = isqrt(x);
    if (mpz_even_p(r.get_mpz_t())) return {r, Int(x - r * r), Case::CaseI};
    return {Int(r + 1), Int((r + 1) * (r + 1) - x), Case::CaseII};
}

// Root of the odd square nearest to x (ties broken downward).
Int nearest_odd_root(const Int& x) {
    Int r = isqrt(x);
    Int m1 = mpz_odd_p(r.get_mpz_t()) ? r : Int(r - 1);
    if (m1 < 1) m1 = 1;
    Int m2 = m1 + 2;
    Int d1 = x - m1 * m1;
    if (d1 < 0) d1 = -d1;
    Int d2 = m2 * m2 - x;
    if (d2 < 0) d2 = -d2;
    return d2 < d1 ? m2 : m1;
}

}  // namespace

bool check_zone_conformance(const Int& x, bool hall) {
    if (!hall) return true;
    EvenSplit e = even_split(x);
    Int m2 = (e.n - 1) * (e.n - 1);
    bool even_ok = e.kind == Case::CaseI ? ipow(e.a, 3) > 6 * m2
                                         : ipow(e.a + 1, 3) > 8 * m2;
    Int m = nearest_odd_root(x);
    bool odd_ok = true;
    if (m >= 3) {
        Int ap = x - m * m;
        if (ap < 0) ap = -ap;
        odd_ok = ap * ap > m;
    }
    return even_ok && odd_ok;
}

Regime regime_of(const Int& x) {
    if (x < 2 || is_square(x)) return Regime::Generic;
    EvenSplit e = even_split(x);
    Int m2 = (e.n - 1) * (e.n - 1);
    bool near_even = e.kind == Case::CaseI ? ipow(e.a, 3) <= 48 * m2
                                           : ipow(e.a + 2, 3) <= 64 * m2;
    if (near_even) return Regime::NearEvenSquare;
    Int m = nearest_odd_root(x);
    if (m >= 3) {
        Int ap = x - m * m;
        if (ap < 0) ap = -ap;
        if (ap * ap <= 4 * m) return Regime::NearOddSquare;
    }
    return Regime::Generic;
}

GapReport gap_report(const std::vector<Int>& halls) {
    std::vector<Int> offenders;
    for (size_t i = 0; i < halls.size(); ++i) {
        if (i > 0 && halls[i] <= halls[i - 1]) {
            offenders.push_back(halls[i]);
            continue;
        }
        if (halls[i] < 2 || !hall_certificate(halls[i]).is_hall)
            offenders.push_back(halls[i]);
    }
    if (!offenders.empty())
        throw ValidationError("gap_report: input must be strictly increasing Hall numbers",
                              offenders);

    GapReport rep;
    rep.all_ok = true;
    for (size_t i = 0; i + 1 < halls.size(); ++i) {
        GapPair p;
        p.x1 = halls[i];
        p.x2 = halls[i + 1];
        p.gap = p.x2 - p.x1;
        p.bound_ok = check_gap_pair(p.x1, p.x2);
        p.regime = regime_of(p.x1);
        rep.all_ok = rep.all_ok && p.bound_ok;
        rep.pairs.push_back(std::move(p));
    }
    for (const Int& x : halls) {
        bool ok = check_zone_conformance(x, true);
        rep.all_ok = rep.all_ok && ok;
        rep.zones.emplace_back(x, ok);
    }
    return rep;
}

bool lemma10_check(const std::vector<Int>& coeffs, const Int& a, const Int& b, long m) {
    if (coeffs.size() < 2) throw std::domain_error("lemma10_check: degree must be >= 1");
    long d = static_cast<long>(coeffs.size()) - 1;
    if (a == 0 || b == 0) throw std::domain_error("lemma10_check: a and b must be non-zero");
    const Int& kd = coeffs.back();
    if (kd == 0) throw std::domain_error("lemma10_check: y^d coefficient must be non-zero");
    if (gcd(kd, a) != 1) throw std::domain_error("lemma10_check: need gcd(kd, a) = 1");
    if (m < d) throw std::domain_error("lemma10_check: need m >= degree");

    Int f = 0;
    for (long i = 0; i <= d; ++i)
        f += coeffs[static_cast<size_t>(i)] *
             ipow(a, static_cast<unsigned long>(d - i)) *
             ipow(b, static_cast<unsigned long>(i));
    Int am = ipow(a, static_cast<unsigned long>(m));
    if (!mpz_divisible_p(f.get_mpz_t(), am.get_mpz_t())) return true;  // vacuous
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

}  // namespace hallgap
