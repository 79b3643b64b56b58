#include "hallgap/cli.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "CLI11.hpp"

#include "hallgap/arith.hpp"
#include "hallgap/decomposition.hpp"
#include "hallgap/families.hpp"
#include "hallgap/gaps.hpp"
#include "hallgap/hall.hpp"
#include "hallgap/report.hpp"
#include "hallgap/search.hpp"

namespace hallgap {

namespace {

// Strict decimal parse for big-integer command line values. CLI11 keeps them
// as strings; GMP would silently accept whitespace and base prefixes, so
// validate the shape first.
Int parse_int_arg(const std::string& s, const std::string& what) {
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = i < s.size();
    for (; ok && i < s.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
    if (!ok) throw std::domain_error(what + " must be a decimal integer, got '" + s + "'");
    return Int(s, 10);
}

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

int cmd_verify(const std::string& path, Format fmt, std::ostream& out, std::ostream& err) {
    std::vector<Int> xs = load_fixture(path);
    VerifyReport rep;
    rep.all_hall = true;
    rep.entries.reserve(xs.size());
    for (const Int& x : xs) {
        rep.entries.push_back(hall_certificate(x));
        rep.all_hall = rep.all_hall && rep.entries.back().is_hall;
    }
    out << render_verify(rep, fmt);
    err << "verify: " << rep.entries.size() << " entries, all_hall="
        << (rep.all_hall ? "true" : "false") << "\n";
    return rep.all_hall ? 0 : 1;
}

int cmd_scan(const std::string& from_s, const std::string& to_s, const std::string& method_s,
             int shards, const std::string& checkpoint, Format fmt, std::ostream& out,
             std::ostream& err) {
    Int from = parse_int_arg(from_s, "--from");
    Int to = parse_int_arg(to_s, "--to");
    if (from < 2) from = 2;  // nothing below 2 can qualify
    ScanMethod method = method_s == "naive" ? ScanMethod::Naive : ScanMethod::Screened;
    ScanRange range{from, to, method, shards};
    ScanResult res = scan(range, checkpoint);
    ScanReport rep{from, to, method, shards, res};
    out << render_scan(rep, fmt);
    err << "scan: examined=" << res.examined.get_str()
        << " confirmed=" << res.candidates_confirmed.get_str()
        << " screened_out=" << res.candidates_screened_out.get_str()
        << " hall=" << res.hall_numbers.size() << " elapsed=" << fmt3(res.elapsed_seconds)
        << "s\n";
    return 0;
}

int cmd_gaps(const std::string& path, Format fmt, std::ostream& out, std::ostream& err) {
    std::vector<Int> xs = load_fixture(path);
    GapReport rep = gap_report(xs);
    out << render_gaps(rep, fmt);
    err << "gaps: pairs=" << rep.pairs.size() << " zones=" << rep.zones.size()
        << " all_ok=" << (rep.all_ok ? "true" : "false") << "\n";
    return rep.all_ok ? 0 : 1;
}

int cmd_family(const std::string& name, const std::vector<std::string>& t_args, int count,
               bool count_set, Format fmt, std::ostream& out, std::ostream& err) {
    if (name == "pell") {
        if (!count_set || !t_args.empty())
            throw std::domain_error("family pell takes --count, not --t");
        std::vector<PellSolution> sols = pell_enumerate(count);
        std::vector<PellRow> rows;
        rows.reserve(sols.size());
        for (const PellSolution& sol : sols) {
            FamilyMember m = danilov_elkies(sol.t);
            Int x = m.x.get_num();  // integral for integer t
            rows.push_back({sol, x, hall_certificate(x).is_hall});
        }
        out << render_family_pell(rows, fmt);
        err << "family pell: " << rows.size() << " solutions\n";
        return 0;
    }
    if (name != "danilov-elkies" && name != "chowla")
        throw std::domain_error("unknown family '" + name +
                                "' (expected danilov-elkies, chowla or pell)");
    if (t_args.empty() || count_set)
        throw std::domain_error("family " + name + " takes one or more --t, not --count");
    if (name == "danilov-elkies") {
        std::vector<FamilyMember> members;
        members.reserve(t_args.size());
        for (const std::string& ts : t_args)
            members.push_back(danilov_elkies(parse_int_arg(ts, "--t")));
        out << render_family_danilov(members, fmt);
        err << "family danilov-elkies: " << members.size() << " members\n";
        return 0;
    }
    std::vector<ChowlaMember> members;
    members.reserve(t_args.size());
    for (const std::string& ts : t_args) members.push_back(chowla_audit(parse_int_arg(ts, "--t")));
    out << render_family_chowla(members, fmt);
    err << "family chowla: " << members.size() << " members\n";
    return 0;
}

int cmd_abc(const std::string& a_s, const std::string& b_s, Format fmt, std::ostream& out,
            std::ostream& err) {
    AbcTriple t = abc_quality(parse_int_arg(a_s, "--a"), parse_int_arg(b_s, "--b"));
    out << render_abc(t, fmt);
    err << "abc: radical=" << t.radical.get_str() << " quality=" << t.quality << "\n";
    return 0;
}

int cmd_zones(const std::string& nmax_s, Format fmt, std::ostream& out, std::ostream& err) {
    Int nmax = parse_int_arg(nmax_s, "--n-max");
    if (nmax < 2) throw std::domain_error("zones: --n-max must be >= 2");
    std::vector<ZoneRow> rows;
    for (Int n = 2; n <= nmax; ++n) {
        Parity p = mpz_even_p(n.get_mpz_t()) ? Parity::Even : Parity::Odd;
        rows.push_back({n, p, exclusion_zone(n, p)});
    }
    out << render_zones(rows, fmt);
    err << "zones: " << rows.size() << " rows\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact search and certification of Hall numbers"};
    app.name("hallgap");
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    std::string verify_input;
    CLI::App* verify = app.add_subcommand("verify", "certify each x listed in a fixture file");
    verify->fallthrough();
    verify->add_option("input", verify_input, "fixture file, one integer per line")->required();

    std::string scan_from, scan_to, scan_method = "screened", scan_checkpoint;
    int scan_shards = 1;
    CLI::App* scan = app.add_subcommand("scan", "find every Hall number in [from, to)");
    scan->fallthrough();
    scan->add_option("--from", scan_from, "range start (inclusive, clamped up to 2)")->required();
    scan->add_option("--to", scan_to, "range end (exclusive)")->required();
    scan->add_option("--method", scan_method, "scan strategy")
        ->check(CLI::IsMember({"naive", "screened"}))
        ->capture_default_str();
    scan->add_option("--shards", scan_shards, "parallel shards")->capture_default_str();
    scan->add_option("--checkpoint", scan_checkpoint,
                     "checkpoint file for resumable single-shard scans");

    std::string gaps_input;
    CLI::App* gaps = app.add_subcommand("gaps", "check gap bounds and zone conformance");
    gaps->fallthrough();
    gaps->add_option("--input", gaps_input, "fixture file of Hall numbers, ascending")
        ->required();

    std::string family_name;
    std::vector<std::string> family_t;
    int family_count = 0;
    CLI::App* family = app.add_subcommand("family", "evaluate a parametric family");
    family->fallthrough();
    family->add_option("--name", family_name, "danilov-elkies, chowla or pell")->required();
    family->add_option("--t", family_t, "parameter value (repeatable)");
    CLI::Option* count_opt = family->add_option("--count", family_count,
                                                "number of Pell solutions to enumerate");

    std::string abc_a, abc_b;
    CLI::App* abc = app.add_subcommand("abc", "radical and quality of a + b = c");
    abc->fallthrough();
    abc->add_option("--a", abc_a, "first summand")->required();
    abc->add_option("--b", abc_b, "second summand")->required();

    std::string zones_nmax;
    CLI::App* zones = app.add_subcommand("zones", "exclusion zone radii for n = 2..n-max");
    zones->fallthrough();
    zones->add_option("--n-max", zones_nmax, "largest root n to tabulate")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("hallgap");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        default_precision_bits();  // reject a bad HALLGAP_PRECISION_BITS before any work
        Format fmt = parse_format(format_name);
        if (verify->parsed()) return cmd_verify(verify_input, fmt, out, err);
        if (scan->parsed())
            return cmd_scan(scan_from, scan_to, scan_method, scan_shards, scan_checkpoint, fmt,
                            out, err);
        if (gaps->parsed()) return cmd_gaps(gaps_input, fmt, out, err);
        if (family->parsed())
            return cmd_family(family_name, family_t, family_count, count_opt->count() > 0, fmt,
                              out, err);
        if (abc->parsed()) return cmd_abc(abc_a, abc_b, fmt, out, err);
        if (zones->parsed()) return cmd_zones(zones_nmax, fmt, out, err);
        err << "no command given\n";
        return 2;
    } catch (const FixtureParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << e.what();
        for (const Int& x : e.offenders) err << " " << x.get_str();
        err << "\n";
        return 1;
    } catch (const UnfactoredError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace hallgap
