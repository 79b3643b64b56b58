#include "hallgap/search.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <type_traits>

#include "hallgap/hall.hpp"

namespace hallgap {

const char* to_string(ScanMethod m) {
    return m == ScanMethod::Naive ? "naive" : "screened";
}

namespace detail {

double screened_qtilde(double n, double a, bool case_one) {
    // 8n * (a^3/(16 n^3) -+ 3a^4/(128 n^5) + 3a^5/(256 n^7)), signs per case.
    double n2 = n * n;
    double a3 = a * a * a;
    double t1 = a3 / (2 * n2);
    double t2 = 3 * a3 * a / (16 * n2 * n2);
    double t3 = 3 * a3 * a * a / (32 * n2 * n2 * n2);
    return case_one ? t1 - t2 + t3 : t1 + t2 + t3;
}

double screened_margin(double n) {
    // Everything in units of L. For n >= 1000: the screen bound satisfies
    // 8n B <= 4/n + 9/n^2, dropping the series after the a^5 term costs at
    // most 7/n^2 across both cases, and the double evaluation of qtilde over
    // a whole block stays within ~40 n ulp. 1/16 + 2^-30 is headroom.
    return 0.0625 + 4.0 / n + 17.0 / (n * n) + std::ldexp(n, -48) + std::ldexp(1.0, -30);
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

const Int kNaiveBelow = 1000000;  // margin derivation assumes n >= 1000

const Int& max_i(const Int& a, const Int& b) { return a < b ? b : a; }
const Int& min_i(const Int& a, const Int& b) { return a < b ? a : b; }

// Even n with (n-1)^2 < x <= (n+1)^2, i.e. the root of the block holding x.
Int block_root_for(const Int& x) {
    Int r = isqrt(x - 1);
    if (mpz_odd_p(r.get_mpz_t())) ++r;
    return r < 2 ? Int(2) : r;
}

// Hall verdict without building the certificate string; the scanners call
// this millions of times.
bool is_hall_quick(const Int& x) {
    if (is_square(x)) return false;
    Int T = x * x * x;
    Int s = isqrt(T);
    Int k = T - s * s;
    Int above = 2 * s + 1 - k;  // (s+1)^2 - T
    if (above < k) k = above;
    return k * k < x;
}

void naive_chunk(const Int& from, const Int& to_excl, ScanResult& res) {
    for (Int x = from; x < to_excl; ++x)
        if (is_hall_quick(x)) res.hall_numbers.push_back(x);
    res.examined += to_excl - from;
    res.candidates_confirmed += to_excl - from;
}

template <class I>
I from_int(const Int& v) {
    if constexpr (std::is_same_v<I, Int>)
        return v;
    else
        return static_cast<I>(mpz_get_si(v.get_mpz_t()));
}

template <class I>
Int to_int(const I& v) {
    if constexpr (std::is_same_v<I, Int>)
        return v;
    else
        return Int(static_cast<long>(v));
}

template <class I>
double to_dbl(const I& v) {
    if constexpr (std::is_same_v<I, Int>)
        return v.get_d();
    else
        return static_cast<double>(v);
}

/*
 * One case walk of a screened block. a runs over [a_lo, a_hi]; CaseII walks
 * downward so x ascends either way. L steps by +-(6a -+ 3) mod 8n. Every a
 * inside the exclusion-zone-adjacent bands (a <= z_in near the even square,
 * a >= z_out near the flanking odd square) is exact-confirmed regardless of
 * the filter. The long long instantiation covers n < 2^40 (steps stay under
 * 2^45); beyond that the same code runs on Int.
 */
template <class I>
void walk_case(const Int& n_b, const Int& a_lo_b, const Int& a_hi_b, const Int& z_in_b,
               const Int& z_out_b, bool case_one, ScanResult& res) {
    if (a_lo_b > a_hi_b) return;
    const I a_lo = from_int<I>(a_lo_b), a_hi = from_int<I>(a_hi_b);
    const I z_in = from_int<I>(z_in_b), z_out = from_int<I>(z_out_b);
    const I m8n = from_int<I>(Int(8 * n_b));
    const Int n2 = n_b * n_b;
    const double dn = n_b.get_d();
    const double margin = detail::screened_margin(dn);

    unsigned long confirmed = 0, screened = 0;
    auto exact = [&](const I& a) {
        Int x = case_one ? Int(n2 + to_int(a)) : Int(n2 - to_int(a));
        if (is_hall_quick(x)) res.hall_numbers.push_back(x);
        ++confirmed;
    };
    auto visit = [&](const I& a, const I& L) {
        if (a <= z_in || a >= z_out) {
            exact(a);
            return;
        }
        if (L == 0) {
            ++screened;
            return;
        }
        double target = case_one ? to_dbl(L) : to_dbl(I(m8n - L));
        if (std::fabs(target - detail::screened_qtilde(dn, to_dbl(a), case_one)) < margin)
            exact(a);
        else
            ++screened;
    };

    if (case_one) {
        I L = from_int<I>(Int((3 * a_lo_b * a_lo_b) % (8 * n_b)));
        for (I a = a_lo;; ++a) {
            visit(a, L);
            if (a == a_hi) break;
            L += 6 * a + 3;
            while (L >= m8n) L -= m8n;
        }
    } else {
        I L = from_int<I>(Int((3 * a_hi_b * a_hi_b) % (8 * n_b)));
        for (I a = a_hi;; --a) {
            visit(a, L);
            if (a == a_lo) break;
            L -= 6 * a - 3;
            while (L < 0) L += m8n;
        }
    }
    res.examined += a_hi_b - a_lo_b + 1;
    res.candidates_confirmed += confirmed;
    res.candidates_screened_out += screened;
}

// The screened portion [xlo, xhi_excl) of block n (n >= 1000 guaranteed by
// the caller). CaseII runs first so results come out ascending.
void screened_block(const Int& n, const Int& xlo, const Int& xhi_excl, ScanResult& res) {
    Int n2 = n * n;
    Int nm1sq = (n - 1) * (n - 1);
    Int z1_in = icbrt(6 * nm1sq);
    Int z2_in = icbrt(8 * nm1sq) - 1;
    Int z1_out = 2 * n + 1 - isqrt(n + 1);
    Int z2_out = 2 * n - 1 - isqrt(n - 1);
    bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 40;

    Int xII_lo = max_i(xlo, nm1sq + 1);
    Int xII_hi = min_i(xhi_excl - 1, n2 - 1);
    if (xII_lo <= xII_hi) {
        Int a_lo = n2 - xII_hi, a_hi = n2 - xII_lo;
        if (small)
            walk_case<long long>(n, a_lo, a_hi, z2_in, z2_out, false, res);
        else
            walk_case<Int>(n, a_lo, a_hi, z2_in, z2_out, false, res);
    }
    Int xI_lo = max_i(xlo, n2 + 1);
    Int xI_hi = min_i(xhi_excl - 1, n2 + 2 * n);
    if (xI_lo <= xI_hi) {
        Int a_lo = xI_lo - n2, a_hi = xI_hi - n2;
        if (small)
            walk_case<long long>(n, a_lo, a_hi, z1_in, z1_out, true, res);
        else
            walk_case<Int>(n, a_lo, a_hi, z1_in, z1_out, true, res);
    }
}

Int parse_decimal(const std::string& s, const char* what) {
    if (s.empty()) throw std::runtime_error(std::string(what) + ": empty number");
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw std::runtime_error(std::string(what) + ": bad number '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::runtime_error(std::string(what) + ": bad number '" + s + "'");
    return Int(s, 10);
}

ScanResult scan_single(const ScanRange& range, const std::string& checkpoint_path) {
    auto t0 = Clock::now();
    ScanResult res;
    Int lo = max_i(range.lo, Int(2));
    Int hi = range.hi;
    Int start = lo;
    if (!checkpoint_path.empty() && std::filesystem::exists(checkpoint_path)) {
        Checkpoint cp = read_checkpoint(checkpoint_path);
        res.hall_numbers = cp.hall_numbers;
        Int done_to = (cp.cursor + 1) * (cp.cursor + 1) + 1;
        if (done_to > start) start = done_to;
    }

    Int last_block = 0;
    auto last_write = Clock::now();
    if (start < hi) {
        for (Int n = block_root_for(start);; n += 2) {
            Int b_lo = max_i(start, (n - 1) * (n - 1) + 1);
            if (b_lo >= hi) break;
            Int b_hi = min_i(hi, (n + 1) * (n + 1) + 1);  // exclusive
            if (range.method == ScanMethod::Naive) {
                naive_chunk(b_lo, b_hi, res);
            } else {
                Int nv_hi = min_i(b_hi, kNaiveBelow);
                if (b_lo < nv_hi) naive_chunk(b_lo, nv_hi, res);
                Int sc_lo = max_i(b_lo, kNaiveBelow);
                if (sc_lo < b_hi) screened_block(n, sc_lo, b_hi, res);
            }
            last_block = n;
            if (!checkpoint_path.empty()) {
                auto now = Clock::now();
                if (now - last_write > std::chrono::milliseconds(200)) {
                    write_checkpoint(checkpoint_path, {n, res.hall_numbers});
                    last_write = now;
                }
            }
        }
    }
    if (!checkpoint_path.empty() && last_block != 0)
        write_checkpoint(checkpoint_path, {last_block, res.hall_numbers});
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

}  // namespace

ScanResult scan(const ScanRange& range, const std::string& checkpoint_path) {
    if (range.lo >= range.hi) throw std::invalid_argument("scan: need lo < hi");
    if (range.shards < 1) throw std::invalid_argument("scan: shards must be >= 1");
    if (range.shards > 1 && !checkpoint_path.empty())
        throw std::invalid_argument("scan: checkpointing requires shards == 1");
    if (range.shards == 1) return scan_single(range, checkpoint_path);

    auto t0 = Clock::now();
    std::vector<ScanRange> pieces = shard_ranges(range);
    std::vector<std::future<ScanResult>> futs;
    futs.reserve(pieces.size());
    for (const ScanRange& piece : pieces)
        futs.push_back(std::async(std::launch::async,
                                  [piece] { return scan_single(piece, std::string()); }));
    ScanResult res;
    for (auto& f : futs) {
        ScanResult part = f.get();
        res.hall_numbers.insert(res.hall_numbers.end(), part.hall_numbers.begin(),
                                part.hall_numbers.end());
        res.examined += part.examined;
        res.candidates_confirmed += part.candidates_confirmed;
        res.candidates_screened_out += part.candidates_screened_out;
    }
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

ScanResult scan_naive(const ScanRange& range) {
    ScanRange r = range;
    r.method = ScanMethod::Naive;
    return scan(r);
}

ScanResult scan_screened(const ScanRange& range) {
    ScanRange r = range;
    r.method = ScanMethod::Screened;
    return scan(r);
}

std::vector<ScanRange> shard_ranges(const ScanRange& range) {
    Int lo = max_i(range.lo, Int(2));
    Int hi = range.hi;
    if (lo >= hi) return {ScanRange{lo, lo, range.method, 1}};
    Int width = hi - lo;
    long want = range.shards < 1 ? 1 : range.shards;
    if (width < want) want = static_cast<long>(mpz_get_si(width.get_mpz_t()));

    std::vector<Int> bounds{lo};
    for (long i = 1; i < want; ++i) {
        Int ideal = lo + width * i / want;
        Int m = isqrt(ideal);
        if (mpz_odd_p(m.get_mpz_t())) {
            // choose the closer flanking even root
            Int down = (m - 1) * (m - 1), up = (m + 1) * (m + 1);
            m = ideal - down <= up - ideal ? Int(m - 1) : Int(m + 1);
        }
        Int b = m * m;
        if (b <= bounds.back() || b >= hi) continue;
        bounds.push_back(b);
    }
    bounds.push_back(hi);

    std::vector<ScanRange> pieces;
    pieces.reserve(bounds.size() - 1);
    for (size_t i = 0; i + 1 < bounds.size(); ++i)
        pieces.push_back(ScanRange{bounds[i], bounds[i + 1], range.method, 1});
    return pieces;
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("cursor=", 0) != 0)
        throw std::runtime_error("checkpoint: first line must be cursor=<n>");
    Checkpoint cp;
    cp.cursor = parse_decimal(line.substr(7), "checkpoint");
    if (cp.cursor < 2 || mpz_odd_p(cp.cursor.get_mpz_t()))
        throw std::runtime_error("checkpoint: cursor must be an even block root");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Int v = parse_decimal(line, "checkpoint");
        if (!cp.hall_numbers.empty() && v <= cp.hall_numbers.back())
            throw std::runtime_error("checkpoint: results out of order");
        cp.hall_numbers.push_back(v);
    }
    return cp;
}

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << "cursor=" << cp.cursor.get_str() << "\n";
        for (const Int& x : cp.hall_numbers) out << x.get_str() << "\n";
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hallgap
