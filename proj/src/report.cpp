#include "hallgap/report.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace hallgap {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* bstr(bool b) { return b ? "true" : "false"; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

bool looks_decimal(const std::string& s) {
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::JSON;
    if (name == "csv") return Format::CSV;
    if (name == "text") return Format::PlainText;
    throw std::domain_error("unknown format '" + name + "' (expected json, csv or text)");
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string rat_decimal_floor(const Rat& r, int frac_digits) {
    if (r < 0) throw std::domain_error("rat_decimal_floor: negative value");
    Int scale = ipow(10, static_cast<unsigned long>(frac_digits));
    Int v;
    Int num = r.get_num() * scale;
    mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    std::string digits = v.get_str();
    size_t fd = static_cast<size_t>(frac_digits);
    if (digits.size() <= fd) digits.insert(0, fd + 1 - digits.size(), '0');
    return digits.substr(0, digits.size() - fd) + "." + digits.substr(digits.size() - fd);
}

std::string render_verify(const VerifyReport& rep, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "verify";
        j["entries"] = ordered_json::array();
        for (const HallCertificate& c : rep.entries) {
            ordered_json e;
            e["x"] = c.x.get_str();
            e["y"] = c.y.get_str();
            e["k"] = c.k.get_str();
            e["side"] = to_string(c.side);
            e["r"] = c.r_decimal;
            e["is_hall"] = c.is_hall;
            j["entries"].push_back(std::move(e));
        }
        j["all_hall"] = rep.all_hall;
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "x,y,k,side,r,is_hall\n";
        for (const HallCertificate& c : rep.entries)
            out << c.x.get_str() << "," << c.y.get_str() << "," << c.k.get_str() << ","
                << to_string(c.side) << "," << c.r_decimal << "," << bstr(c.is_hall) << "\n";
        return out.str();
    }
    for (const HallCertificate& c : rep.entries)
        out << "x=" << c.x.get_str() << " y=" << c.y.get_str() << " k=" << c.k.get_str()
            << " side=" << to_string(c.side) << " r=" << c.r_decimal
            << " is_hall=" << bstr(c.is_hall) << "\n";
    out << "all_hall=" << bstr(rep.all_hall) << "\n";
    return out.str();
}

std::string render_scan(const ScanReport& rep, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "scan";
        j["from"] = rep.from.get_str();
        j["to"] = rep.to.get_str();
        j["method"] = to_string(rep.method);
        j["shards"] = rep.shards;
        j["hall_numbers"] = ordered_json::array();
        for (const Int& x : rep.result.hall_numbers) j["hall_numbers"].push_back(x.get_str());
        j["examined"] = rep.result.examined.get_str();
        j["candidates_confirmed"] = rep.result.candidates_confirmed.get_str();
        j["candidates_screened_out"] = rep.result.candidates_screened_out.get_str();
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "x\n";
        for (const Int& x : rep.result.hall_numbers) out << x.get_str() << "\n";
        return out.str();
    }
    for (const Int& x : rep.result.hall_numbers) out << x.get_str() << "\n";
    return out.str();
}

std::string render_gaps(const GapReport& rep, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "gaps";
        j["pairs"] = ordered_json::array();
        for (const GapPair& p : rep.pairs) {
            ordered_json e;
            e["x1"] = p.x1.get_str();
            e["x2"] = p.x2.get_str();
            e["gap"] = p.gap.get_str();
            e["bound_ok"] = p.bound_ok;
            e["regime"] = to_string(p.regime);
            j["pairs"].push_back(std::move(e));
        }
        j["zones"] = ordered_json::array();
        for (const auto& [x, ok] : rep.zones) {
            ordered_json e;
            e["x"] = x.get_str();
            e["zone_ok"] = ok;
            j["zones"].push_back(std::move(e));
        }
        j["all_ok"] = rep.all_ok;
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        // one row per input x; gap columns describe (x, next) and stay empty
        // on the last row
        out << "x,zone_ok,gap_to_next,gap_bound_ok,regime\n";
        for (size_t i = 0; i < rep.zones.size(); ++i) {
            out << rep.zones[i].first.get_str() << "," << bstr(rep.zones[i].second) << ",";
            if (i < rep.pairs.size())
                out << rep.pairs[i].gap.get_str() << "," << bstr(rep.pairs[i].bound_ok) << ","
                    << to_string(rep.pairs[i].regime);
            else
                out << ",,";
            out << "\n";
        }
        return out.str();
    }
    for (const GapPair& p : rep.pairs)
        out << "x1=" << p.x1.get_str() << " x2=" << p.x2.get_str() << " gap=" << p.gap.get_str()
            << " bound_ok=" << bstr(p.bound_ok) << " regime=" << to_string(p.regime) << "\n";
    for (const auto& [x, ok] : rep.zones)
        out << "zone x=" << x.get_str() << " ok=" << bstr(ok) << "\n";
    out << "all_ok=" << bstr(rep.all_ok) << "\n";
    return out.str();
}

std::string render_family_danilov(const std::vector<FamilyMember>& members, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "family";
        j["name"] = "danilov-elkies";
        j["members"] = ordered_json::array();
        for (const FamilyMember& m : members) {
            ordered_json e;
            e["t"] = m.t.get_str();
            e["x"] = rat_str(m.x);
            e["y"] = rat_str(m.y);
            e["k"] = rat_str(m.k);
            e["residual"] = rat_str(m.identity_residual);
            j["members"].push_back(std::move(e));
        }
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "t,x,y,k,residual\n";
        for (const FamilyMember& m : members)
            out << m.t.get_str() << "," << rat_str(m.x) << "," << rat_str(m.y) << ","
                << rat_str(m.k) << "," << rat_str(m.identity_residual) << "\n";
        return out.str();
    }
    for (const FamilyMember& m : members)
        out << "t=" << m.t.get_str() << " x=" << rat_str(m.x) << " y=" << rat_str(m.y)
            << " k=" << rat_str(m.k) << " residual=" << rat_str(m.identity_residual) << "\n";
    return out.str();
}

std::string render_family_chowla(const std::vector<ChowlaMember>& members, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "family";
        j["name"] = "chowla";
        j["members"] = ordered_json::array();
        for (const ChowlaMember& m : members) {
            ordered_json e;
            e["t"] = m.member.t.get_str();
            e["x"] = rat_str(m.member.x);
            e["y"] = rat_str(m.member.y);
            e["k"] = rat_str(m.member.k);
            e["residual"] = rat_str(m.member.identity_residual);
            e["x_integral"] = m.x_integral;
            e["y_integral"] = m.y_integral;
            j["members"].push_back(std::move(e));
        }
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "t,x,y,k,residual,x_integral,y_integral\n";
        for (const ChowlaMember& m : members)
            out << m.member.t.get_str() << "," << rat_str(m.member.x) << ","
                << rat_str(m.member.y) << "," << rat_str(m.member.k) << ","
                << rat_str(m.member.identity_residual) << "," << bstr(m.x_integral) << ","
                << bstr(m.y_integral) << "\n";
        return out.str();
    }
    for (const ChowlaMember& m : members)
        out << "t=" << m.member.t.get_str() << " x=" << rat_str(m.member.x)
            << " y=" << rat_str(m.member.y) << " k=" << rat_str(m.member.k)
            << " residual=" << rat_str(m.member.identity_residual)
            << " x_integral=" << bstr(m.x_integral) << " y_integral=" << bstr(m.y_integral)
            << "\n";
    return out.str();
}

std::string render_family_pell(const std::vector<PellRow>& rows, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "family";
        j["name"] = "pell";
        j["solutions"] = ordered_json::array();
        for (const PellRow& r : rows) {
            ordered_json e;
            e["t"] = r.sol.t.get_str();
            e["s"] = r.sol.s.get_str();
            e["x"] = r.x.get_str();
            e["is_hall"] = r.is_hall;
            j["solutions"].push_back(std::move(e));
        }
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "t,s,x,is_hall\n";
        for (const PellRow& r : rows)
            out << r.sol.t.get_str() << "," << r.sol.s.get_str() << "," << r.x.get_str() << ","
                << bstr(r.is_hall) << "\n";
        return out.str();
    }
    for (const PellRow& r : rows)
        out << "t=" << r.sol.t.get_str() << " s=" << r.sol.s.get_str()
            << " x=" << r.x.get_str() << " is_hall=" << bstr(r.is_hall) << "\n";
    return out.str();
}

std::string render_abc(const AbcTriple& t, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "abc";
        j["a"] = t.a.get_str();
        j["b"] = t.b.get_str();
        j["c"] = t.c.get_str();
        j["radical"] = t.radical.get_str();
        j["quality"] = t.quality;
        j["is_abc_triple"] = t.is_abc_triple;
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "a,b,c,radical,quality,is_abc_triple\n"
            << t.a.get_str() << "," << t.b.get_str() << "," << t.c.get_str() << ","
            << t.radical.get_str() << "," << t.quality << "," << bstr(t.is_abc_triple) << "\n";
        return out.str();
    }
    out << "a=" << t.a.get_str() << " b=" << t.b.get_str() << " c=" << t.c.get_str()
        << " radical=" << t.radical.get_str() << " quality=" << t.quality
        << " is_abc_triple=" << bstr(t.is_abc_triple) << "\n";
    return out.str();
}

std::string render_zones(const std::vector<ZoneRow>& rows, Format fmt) {
    if (fmt == Format::JSON) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "zones";
        j["rows"] = ordered_json::array();
        for (const ZoneRow& r : rows) {
            ordered_json e;
            e["n"] = r.n.get_str();
            e["parity"] = to_string(r.parity);
            e["case1_min_a"] = rat_decimal_floor(r.radii.case1_min_a, 6);
            e["case1_min_a_exact"] = rat_str(r.radii.case1_min_a);
            e["case2_min_a"] = rat_decimal_floor(r.radii.case2_min_a, 6);
            e["case2_min_a_exact"] = rat_str(r.radii.case2_min_a);
            j["rows"].push_back(std::move(e));
        }
        return dump(j);
    }
    std::ostringstream out;
    if (fmt == Format::CSV) {
        out << "n,parity,case1_min_a,case2_min_a\n";
        for (const ZoneRow& r : rows)
            out << r.n.get_str() << "," << to_string(r.parity) << ","
                << rat_decimal_floor(r.radii.case1_min_a, 6) << ","
                << rat_decimal_floor(r.radii.case2_min_a, 6) << "\n";
        return out.str();
    }
    for (const ZoneRow& r : rows)
        out << "n=" << r.n.get_str() << " parity=" << to_string(r.parity)
            << " case1_min_a=" << rat_decimal_floor(r.radii.case1_min_a, 6)
            << " case2_min_a=" << rat_decimal_floor(r.radii.case2_min_a, 6) << "\n";
    return out.str();
}

std::vector<Int> parse_fixture(std::istream& in) {
    std::vector<Int> out;
    std::vector<long> bad;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        if (!looks_decimal(tok)) {
            bad.push_back(lineno);
            continue;
        }
        Int v(tok, 10);
        if (!out.empty() && v <= out.back()) {
            bad.push_back(lineno);
            continue;
        }
        out.push_back(v);
    }
    if (!bad.empty()) {
        std::string msg = "fixture: invalid or non-increasing entries at line";
        if (bad.size() > 1) msg += "s";
        for (long l : bad) msg += " " + std::to_string(l);
        throw FixtureParseError(msg, bad);
    }
    return out;
}

std::vector<Int> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    return parse_fixture(in);
}

}  // namespace hallgap
