#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallgap/decomposition.hpp"
#include "hallgap/families.hpp"
#include "hallgap/gaps.hpp"
#include "hallgap/hall.hpp"
#include "hallgap/search.hpp"

namespace hallgap {

enum class Format { JSON, CSV, PlainText };

// "json" | "csv" | "text"
Format parse_format(const std::string& name);

// All renderers are deterministic byte-for-byte: object keys are emitted in
// insertion order, big integers as decimal strings, rationals as "p/q" (or
// "p" when the denominator is 1), and nothing time- or locale-dependent goes
// in. JSON carries "schema_version": 1.

struct VerifyReport {
    std::vector<HallCertificate> entries;
    bool all_hall;
};
std::string render_verify(const VerifyReport& rep, Format fmt);

struct ScanReport {
    Int from, to;
    ScanMethod method;
    int shards;
    ScanResult result;  // elapsed_seconds is deliberately not serialized
};
std::string render_scan(const ScanReport& rep, Format fmt);

std::string render_gaps(const GapReport& rep, Format fmt);

std::string render_family_danilov(const std::vector<FamilyMember>& members, Format fmt);
std::string render_family_chowla(const std::vector<ChowlaMember>& members, Format fmt);

struct PellRow {
    PellSolution sol;
    Int x;         // danilov_elkies(t).x
    bool is_hall;  // exact verdict for that x
};
std::string render_family_pell(const std::vector<PellRow>& rows, Format fmt);

std::string render_abc(const AbcTriple& triple, Format fmt);

struct ZoneRow {
    Int n;
    Parity parity;
    ZoneRadii radii;
};
std::string render_zones(const std::vector<ZoneRow>& rows, Format fmt);

// "p/q" (or "p" for integers), canonical and sign-normalized by mpq.
std::string rat_str(const Rat& r);

// Decimal rendering of a non-negative rational, truncated (never rounded up)
// to `frac_digits` fractional digits, e.g. 31.157024 for the zone tables.
std::string rat_decimal_floor(const Rat& r, int frac_digits);

struct FixtureParseError : std::runtime_error {
    std::vector<long> lines;  // 1-based offending line numbers
    FixtureParseError(const std::string& msg, std::vector<long> lines_)
        : std::runtime_error(msg), lines(std::move(lines_)) {}
};

// Fixture format: one decimal integer per line, '#' starts a comment,
// blank lines ignored, values strictly increasing. Violations raise
// FixtureParseError with every offending line number.
std::vector<Int> parse_fixture(std::istream& in);
std::vector<Int> load_fixture(const std::string& path);  // adds open errors

}  // namespace hallgap
