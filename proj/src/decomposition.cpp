#include "hallgap/decomposition.hpp"

namespace hallgap {

const char* to_string(Case c) { return c == Case::CaseI ? "CaseI" : "CaseII"; }

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(ScreenVerdict v) {
    switch (v) {
        case ScreenVerdict::RejectLZero: return "RejectLZero";
        case ScreenVerdict::RejectFar: return "RejectFar";
        default: return "Candidate";
    }
}

namespace {

void require_even_n(const Int& n, const char* who) {
    if (n < 2 || mpz_odd_p(n.get_mpz_t()))
        throw std::domain_error(std::string(who) + ": n must be even and >= 2");
}

// L and t of 3a^2 = 8n t + L, plus W. Shared by decompose and the algebraic
// q route (which feeds a beyond the case bounds).
void split_parts(const Int& n, const Int& a, Case kind, Int& L, Int& t, Int& W) {
    Int sq = 3 * a * a;
    Int m = 8 * n;
    mpz_fdiv_qr(t.get_mpz_t(), L.get_mpz_t(), sq.get_mpz_t(), m.get_mpz_t());
    Int half = 3 * n * a / 2;  // exact: n is even
    W = kind == Case::CaseI ? Int(n * n * n + half) : Int(n * n * n - half);
}

}  // namespace

SquareDecomposition decompose(const Int& x) {
    if (x <= 2) throw std::domain_error("decompose: x must be > 2");
    if (is_square(x)) throw std::domain_error("decompose: x must not be a perfect square");
    Int r = isqrt(x);
    SquareDecomposition d;
    d.x = x;
    if (mpz_even_p(r.get_mpz_t())) {
        d.n = r;
        d.a = x - r * r;
        d.kind = Case::CaseI;
    } else {
        d.n = r + 1;
        d.a = d.n * d.n - x;
        d.kind = Case::CaseII;
    }
    split_parts(d.n, d.a, d.kind, d.L, d.t, d.W);
    return d;
}

Int residue_L(const Int& n, const Int& a) {
    require_even_n(n, "residue_L");
    if (a < 1 || a > 2 * n) throw std::domain_error("residue_L: need 1 <= a <= 2n");
    Int L;
    Int sq = 3 * a * a;
    Int m = 8 * n;
    mpz_fdiv_r(L.get_mpz_t(), sq.get_mpz_t(), m.get_mpz_t());
    return L;
}

/*
 * Series route. With u = a/n^2 and (1 +- u)^(3/2) = sum_j b_j (+-u)^j,
 * b_{j+1} = b_j (3/2 - j)/(j+1), the correction is
 *     q1 = -n^3 sum_{j>=3} b_j u^j        (terms alternate, first positive)
 *     q2 = +n^3 sum_{j>=3} b_j (-u)^j     (every term positive)
 * with the shared magnitude m_j = |b_j| a^j / n^(2j-3), m_3 = a^3/(16 n^3),
 * and ratio m_{j+1}/m_j = (2j-3)/(2j+2) u < u. Enclosures:
 *     q1: consecutive partial sums bracket (alternating, decreasing), tail
 *         bound = first omitted magnitude; works up to u = 1.
 *     q2: geometric tail, bound = m/(1-u); needs u < 1, which CaseII has
 *         structurally (a < n^2 whenever x > 0).
 * Within the case bounds u <= 1/2, so the tail is at most twice the first
 * omitted term; the cap only matters for the u = 1 corner (x = 8), where the
 * algebraic route supplies the width anyway.
 */
QEnclosure q_eval_unchecked(const Int& n, const Int& a, Case kind, int precision_bits) {
    require_even_n(n, "q_enclosure");
    int p = resolve_precision(precision_bits);
    Int n2 = n * n;
    if (a < 0) throw std::domain_error("q_enclosure: a must be >= 0");
    if (a > n2 || (kind == Case::CaseII && a >= n2))
        throw std::domain_error("q_enclosure: a out of series range");
    if (a == 0) return {RatInterval::point(Rat(0)), 0, Rat(0)};

    Rat u = make_rat(a, n2);
    Rat mag = make_rat(a * a * a, 16 * n2 * n);
    Rat sum = 0;
    Rat eps = make_rat(1, Int(1) << (p + 4));
    const long cap = 4L * p + 256;
    long terms = 0;
    bool positive = true;  // sign of the current q1 term
    for (long j = 3;; ++j) {
        if (kind == Case::CaseI && !positive)
            sum -= mag;
        else
            sum += mag;
        ++terms;
        mag *= make_rat(2 * j - 3, 2 * j + 2) * u;
        positive = !positive;
        if (mag < eps || terms >= cap) break;
    }
    RatInterval series = [&] {
        if (kind == Case::CaseI) {
            if (positive) return RatInterval(sum, Rat(sum + mag));
            return RatInterval(Rat(sum - mag), sum);
        }
        return RatInterval(sum, Rat(sum + mag / (1 - u)));
    }();
    Rat tail = kind == Case::CaseI ? mag : Rat(mag / (1 - u));

    Int x = kind == Case::CaseI ? Int(n2 + a) : Int(n2 - a);
    Int L, t, W;
    split_parts(n, a, kind, L, t, W);
    Rat anchor = Rat(W + t) + make_rat(L, 8 * n);
    RatInterval root = sqrt_interval(x * x * x, p + 4);
    RatInterval alg = kind == Case::CaseI ? RatInterval(Rat(anchor - root.hi), Rat(anchor - root.lo))
                                          : RatInterval(Rat(root.lo - anchor), Rat(root.hi - anchor));

    auto both = series.intersect(alg);
    if (!both)
        throw std::logic_error("q_enclosure: series and algebraic routes disagree");
    RatInterval value = *both;
    if (value.lo < 0) value.lo = 0;
    return {value, terms, tail};
}

QEnclosure q_enclosure(const Int& n, const Int& a, Case kind, int precision_bits) {
    require_even_n(n, "q_enclosure");
    Int limit = kind == Case::CaseI ? Int(2 * n) : Int(2 * n - 2);
    if (a < 0 || a > limit)
        throw std::domain_error("q_enclosure: a outside the case bounds");
    return q_eval_unchecked(n, a, kind, precision_bits);
}

ScreenDetail lemma4_screen_detail(const SquareDecomposition& d, int precision_bits) {
    int p = resolve_precision(precision_bits);
    QEnclosure q = q_enclosure(d.n, d.a, d.kind, p);
    Rat target = make_rat(d.L, 8 * d.n);
    RatInterval gap = d.kind == Case::CaseI ? (q.value - target).abs()
                                            : (q.value + (target - 1)).abs();
    RatInterval sx = sqrt_interval(d.x, p);
    Rat two_x = Rat(2 * d.x);
    RatInterval bound(Rat((1 + make_rat(1, 4) / sx.hi) / two_x),
                      Rat((1 + make_rat(1, 4) / sx.lo) / two_x));
    ScreenVerdict v = ScreenVerdict::Candidate;
    if (d.L == 0)
        v = ScreenVerdict::RejectLZero;
    else if (gap.lo > bound.hi)
        v = ScreenVerdict::RejectFar;
    return {gap, bound, v};
}

ScreenVerdict lemma4_screen(const SquareDecomposition& d, int precision_bits) {
    return lemma4_screen_detail(d, precision_bits).verdict;
}

ZoneRadii exclusion_zone(const Int& n, Parity parity) {
    if (n < 2) throw std::domain_error("exclusion_zone: n must be >= 2");
    const int p = 64;  // fixed rounding grid, part of the reporting contract
    if (parity == Parity::Odd) {
        Rat r = sqrt_interval(n, p).lo;
        return {r, r};
    }
    Int m2 = (n - 1) * (n - 1);
    Rat c1 = cbrt_interval(6 * m2, p).lo;
    Rat c2 = 2 * cbrt_interval(m2, p).lo - 1;
    return {c1, c2};
}

}  // namespace hallgap
