#pragma once

#include <string>
#include <vector>

#include "hallgap/arith.hpp"

namespace hallgap {

enum class ScanMethod { Naive, Screened };

const char* to_string(ScanMethod m);

struct ScanRange {
    Int lo;  // inclusive; values below 2 are clamped up to 2
    Int hi;  // exclusive
    ScanMethod method = ScanMethod::Screened;
    int shards = 1;
};

struct ScanResult {
    std::vector<Int> hall_numbers;      // ascending
    Int examined = 0;                   // integers walked (screened skips squares)
    Int candidates_confirmed = 0;       // sent through exact confirmation
    Int candidates_screened_out = 0;    // rejected by the necessary condition
    double elapsed_seconds = 0;         // wall clock; never serialized
};

// Exact confirmation of every integer in the range.
ScanResult scan_naive(const ScanRange& range);

// Blockwise scan over even squares: block(n) = [(n-1)^2+1, (n+1)^2]. Inside
// a block both case walks maintain L incrementally and apply, in order:
//   - exclusion-zone-adjacent bands: always exact-confirmed,
//   - L == 0: screened out (necessary condition for even n >= 1000),
//   - a double-precision estimate of 8n q against L with a margin covering
//     the screen bound, series truncation, and fp error: survivors are
//     exact-confirmed, the rest screened out.
// The margin is derived for n >= 1000, so everything below 10^6 simply
// delegates to scan_naive. Results are always identical to scan_naive.
ScanResult scan_screened(const ScanRange& range);

// Dispatch on range.method and range.shards (shards run in parallel and are
// merged deterministically). checkpoint_path enables resumable block-cursor
// checkpoints and is mutually exclusive with shards > 1 (invalid_argument).
ScanResult scan(const ScanRange& range, const std::string& checkpoint_path = {});

// Split a range at even-square boundaries so no case walk straddles a shard.
// Snapping can merge adjacent boundaries, so the result may hold fewer
// pieces than requested; it always partitions [max(lo,2), hi).
std::vector<ScanRange> shard_ranges(const ScanRange& range);

struct Checkpoint {
    Int cursor;  // last fully completed even block root
    std::vector<Int> hall_numbers;
};

// File format: "cursor=<n>" on the first line, then one Hall number per
// line, ascending, as the scan accumulated them.
Checkpoint read_checkpoint(const std::string& path);
void write_checkpoint(const std::string& path, const Checkpoint& cp);

namespace detail {

// The scanner's double-precision estimate of 8n q (three series terms) and
// the acceptance margin |L' - qtilde| must stay under for a survivor; both
// exposed so tests can validate the error budget against exact rationals.
double screened_qtilde(double n, double a, bool case_one);
double screened_margin(double n);

}  // namespace detail

}  // namespace hallgap
