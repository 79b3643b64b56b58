#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hallgap/arith.hpp"
#include "hallgap/cli.hpp"
#include "hallgap/search.hpp"
#include "test_util.hpp"

using hallgap::Int;
using ordered_json = nlohmann::ordered_json;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

static RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = hallgap::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

static void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    f << body;
}

static void test_verify() {
    const std::string fix = "cli_test_fix.txt";
    write_file(fix, "# header comment\n2\n5234\n");

    RunResult r = run({"verify", fix, "--format", "json"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["schema_version"] == 1 && j["command"] == "verify");
    CHECK(j["entries"].size() == 2);
    CHECK(j["entries"][1]["y"] == "378661");
    CHECK(j["entries"][1]["r"] == "4.256");
    CHECK(j["all_hall"] == true);
    CHECK(j.dump(2) + "\n" == r.out);  // canonical bytes survive a round trip

    r = run({"verify", fix, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "x,y,k,side,r,is_hall\n"
          "2,3,1,SquareAbove,1.414,true\n"
          "5234,378661,17,SquareAbove,4.256,true\n");

    write_file(fix, "2\n3\n");
    r = run({"verify", fix});
    CHECK(r.code == 1);
    CHECK(r.out.find("is_hall=false") != std::string::npos);
    CHECK(r.out.find("all_hall=false") != std::string::npos);

    write_file(fix, "2\nxyz\n7 junk\n9\n");
    r = run({"verify", fix});
    CHECK(r.code == 2);
    CHECK_MSG(r.err.find("lines 2 3") != std::string::npos, r.err);

    write_file(fix, "# nothing but comments\n\n");
    r = run({"verify", fix});
    CHECK(r.code == 0);

    r = run({"verify", "no_such_file_anywhere.txt"});
    CHECK(r.code == 2);

    std::remove(fix.c_str());
}

static void test_scan() {
    RunResult r = run({"scan", "--from", "1", "--to", "10000", "--method", "naive"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n5234\n8158\n");
    CHECK(r.err.find("examined=9998") != std::string::npos);

    r = run({"scan", "--from", "1", "--to", "10000", "--format", "json"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["command"] == "scan");
    CHECK(j["from"] == "2" && j["to"] == "10000");  // clamped lower end
    CHECK(j["method"] == "screened" && j["shards"] == 1);
    CHECK(j["hall_numbers"] == ordered_json::array({"2", "5234", "8158"}));
    CHECK(j["examined"] == "9998");
    CHECK(j.dump(2) + "\n" == r.out);

    RunResult twice = run({"scan", "--from", "1", "--to", "10000", "--format", "json"});
    CHECK(twice.out == r.out);  // byte-reproducible across runs

    r = run({"scan", "--from", "1", "--to", "10000", "--shards", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "x\n2\n5234\n8158\n");

    CHECK(run({"scan", "--from", "5", "--to", "3"}).code == 2);
    CHECK(run({"scan", "--from", "2", "--to", "2"}).code == 2);
    CHECK(run({"scan", "--from", "two", "--to", "30"}).code == 2);
    CHECK(run({"scan", "--from", "2", "--to", "100", "--shards", "0"}).code == 2);

    const std::string ckpt = "cli_test_ckpt.txt";
    std::remove(ckpt.c_str());
    r = run({"scan", "--from", "2", "--to", "9000", "--checkpoint", ckpt});
    CHECK(r.code == 0);
    hallgap::Checkpoint cp = hallgap::read_checkpoint(ckpt);
    CHECK(cp.cursor >= 94 && cp.hall_numbers.size() == 3);
    CHECK(run({"scan", "--from", "2", "--to", "9000", "--checkpoint", ckpt, "--shards", "4"})
              .code == 2);
    std::remove(ckpt.c_str());
}

static void test_gaps() {
    const std::string fix = "cli_test_gaps.txt";
    write_file(fix, "2\n5234\n");
    RunResult r = run({"gaps", "--input", fix, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "x,zone_ok,gap_to_next,gap_bound_ok,regime\n"
          "2,true,5232,true,NearEvenSquare\n"
          "5234,true,,,\n");

    r = run({"gaps", "--input", fix, "--format", "json"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["pairs"][0]["gap"] == "5232" && j["pairs"][0]["bound_ok"] == true);
    CHECK(j["zones"].size() == 2 && j["all_ok"] == true);

    write_file(fix, "2\n3\n");
    r = run({"gaps", "--input", fix});
    CHECK(r.code == 1);
    CHECK_MSG(r.err.find("3") != std::string::npos, r.err);

    write_file(fix, "5234\n2\n");  // rejected at parse time, before validation
    CHECK(run({"gaps", "--input", fix}).code == 2);

    std::remove(fix.c_str());
}

static void test_family() {
    RunResult r = run({"family", "--name", "pell", "--count", "2", "--format", "json"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["name"] == "pell");
    CHECK(j["solutions"][0]["t"] == "-5" && j["solutions"][0]["x"] == "93844");
    CHECK(j["solutions"][1]["t"] == "10150883");
    CHECK(j["solutions"][1]["x"] == "322001299796379844");
    CHECK(j["solutions"][0]["is_hall"] == true && j["solutions"][1]["is_hall"] == true);

    r = run({"family", "--name", "danilov-elkies", "--t=-5", "--t", "0", "--format", "json"});
    CHECK(r.code == 0);
    j = ordered_json::parse(r.out);
    CHECK(j["members"].size() == 2);
    CHECK(j["members"][0]["x"] == "93844" && j["members"][0]["residual"] == "0");
    CHECK(j["members"][1]["x"] == "719");

    r = run({"family", "--name", "chowla", "--t", "3", "--format", "json"});
    CHECK(r.code == 0);
    j = ordered_json::parse(r.out);
    CHECK(j["members"][0]["x"] == "8158");
    CHECK(j["members"][0]["y"] == "2210362/3");
    CHECK(j["members"][0]["residual"] == "751551980/9");
    CHECK(j["members"][0]["x_integral"] == true && j["members"][0]["y_integral"] == false);

    CHECK(run({"family", "--name", "bogus", "--t", "1"}).code == 2);
    CHECK(run({"family", "--name", "chowla"}).code == 2);
    CHECK(run({"family", "--name", "pell"}).code == 2);
    CHECK(run({"family", "--name", "pell", "--t", "3"}).code == 2);
    CHECK(run({"family", "--name", "pell", "--count", "0"}).code == 2);
    CHECK(run({"family", "--name", "danilov-elkies", "--count", "2"}).code == 2);
}

static void test_abc() {
    RunResult r = run({"abc", "--a", "125", "--b", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "a,b,c,radical,quality,is_abc_triple\n125,3,128,30,1.42657,true\n");

    CHECK(run({"abc", "--a", "4", "--b", "6"}).code == 2);
    CHECK(run({"abc", "--a", "125", "--b", "0"}).code == 2);

    Int hard = (hallgap::ipow(Int(2), 89) - 1) * (hallgap::ipow(Int(2), 107) - 1);
    r = run({"abc", "--a", "1", "--b", hard.get_str()});
    CHECK(r.code == 1);
    CHECK_MSG(r.err.find("unfactored") != std::string::npos, r.err);
}

static void test_zones() {
    RunResult r = run({"zones", "--n-max", "8", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK_MSG(r.out ==
                  "n,parity,case1_min_a,case2_min_a\n"
                  "2,even,1.817120,1.000000\n"
                  "3,odd,1.732050,1.732050\n"
                  "4,even,3.779763,3.160167\n"
                  "5,odd,2.236067,2.236067\n"
                  "6,even,5.313292,4.848035\n"
                  "7,odd,2.645751,2.645751\n"
                  "8,even,6.649399,6.318611\n",
              r.out);

    r = run({"zones", "--n-max", "4", "--format", "json"});
    CHECK(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["case2_min_a"] == "1.000000");
    CHECK(j["rows"][0]["case2_min_a_exact"] == "1");

    CHECK(run({"zones", "--n-max", "1"}).code == 2);
    CHECK(run({"zones", "--n-max", "x"}).code == 2);
}

static void test_cli_basics() {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(r.out.find("zones") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"scan", "--from", "1", "--to", "10", "--format", "yaml"}).code == 2);

    const std::string fix = "cli_test_env.txt";
    write_file(fix, "2\n");
    setenv("HALLGAP_PRECISION_BITS", "7", 1);
    CHECK(run({"verify", fix}).code == 2);
    setenv("HALLGAP_PRECISION_BITS", "64", 1);
    CHECK(run({"verify", fix}).code == 0);
    unsetenv("HALLGAP_PRECISION_BITS");
    std::remove(fix.c_str());
}

int main() {
    test_verify();
    test_scan();
    test_gaps();
    test_family();
    test_abc();
    test_zones();
    test_cli_basics();
    return testutil::test_summary("cli_test");
}
