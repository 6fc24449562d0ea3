#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clawdeg/cli.hpp"

using namespace clawdeg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("degree") {
    const Run r = run({"degree", "--group", "z2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.empty());
    CHECK(run({"degree", "--group", "z3", "--n", "3", "--method", "triangulation"}).out == "9\n");
    CHECK(run({"degree", "--group", "z2xz2", "--n", "3", "--method", "inclusion-exclusion"}).out == "96\n");
    CHECK(run({"degree", "--group", "z2", "--n", "2..4", "--format", "csv"}).out ==
          "group,n,degree\nz2,2,0\nz2,3,1\nz2,4,8\n");
}

TEST_CASE("verify") {
    const Run r = run({"verify", "--group", "z3", "--n", "3", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("formula              9") != std::string::npos);
    CHECK(r.out.find("inclusion-exclusion  9") != std::string::npos);
    CHECK(r.out.find("triangulation        9") != std::string::npos);
    CHECK(r.out.find("result pass") != std::string::npos);

    const auto j = nlohmann::json::parse(run({"verify", "--group", "z2", "--n", "2..4", "--format", "json"}).out);
    CHECK(j["result"] == "pass");
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][2]["triangulation"] == "8");
}

TEST_CASE("table") {
    const Run r = run({"table", "--group", "z2xz2", "--n", "2..3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "group,n,degree\nz2xz2,2,0\nz2xz2,3,96\n");
    CHECK(run({"table", "--group", "z3", "--n", "2..4"}).out == "2 0\n3 9\n4 660\n");
    CHECK(run({"table", "--group", "z2", "--n", "2..21"}).code == kExitUsage);
}

TEST_CASE("exports") {
    CHECK(run({"vertices", "--group", "z2", "--n", "3"}).out == "0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
    CHECK(run({"vertices", "--group", "z2", "--n", "3", "--format", "ext"}).out.rfind("V-representation\nbegin\n4 4 rational\n", 0) == 0);
    const auto h = nlohmann::json::parse(run({"facets", "--group", "z3", "--n", "2", "--format", "json"}).out);
    CHECK(h["kind"] == "H");
    CHECK(h["halfspaces"].size() == 4 + 2 + 6);
    CHECK(run({"facets", "--group", "z2", "--n", "3", "--format", "ine"}).out.rfind("H-representation", 0) == 0);
    CHECK(run({"vertices", "--group", "z2", "--n", "3", "--format", "csv"}).code == kExitUsage);
}

TEST_CASE("volume and assemble") {
    const Run v = run({"volume", "--group", "z2", "--n", "4"});
    CHECK(v.code == 0);
    CHECK(v.out == "volume in Z^4  16\nlattice index   2\nvolume in L     8\n");
    const auto j = nlohmann::json::parse(run({"volume", "--group", "z3", "--n", "3", "--format", "json"}).out);
    CHECK(j["volume_l"] == "9");
    CHECK(j["volume_zd"] == "27");
    CHECK(j["triangulation"]["simplices"].size() > 0);

    const Run a = run({"assemble", "--group", "z2xz2", "--n", "2"});
    CHECK(a.code == 0);
    CHECK(a.out.find("degree 0") != std::string::npos);
    const auto aj = nlohmann::json::parse(run({"assemble", "--group", "z3", "--n", "3", "--format", "json"}).out);
    CHECK(aj[0]["volume"] == "27");
}

TEST_CASE("lemma") {
    const Run r = run({"lemma", "--group", "z3", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("z3-one-cut n=2 instances=18 confirmed=18 refuted=0") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"lemma", "--lemma", "z2-cut-simplex", "--n", "3", "--format", "json"}).out);
    CHECK(j.size() == 8);
    CHECK(j[0]["verdict"] == "confirmed");
    CHECK(j[0].contains("hypothesis"));
    CHECK(run({"lemma", "--lemma", "z2-cut-simplex", "--group", "z3", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"degree", "--group", "z4", "--n", "3"},
             {"degree", "--group", "z2"},
             {"degree", "--group", "z2", "--n", "1"},
             {"degree", "--group", "z2", "--n", "x"},
             {"degree", "--group", "z2", "--n", "5..3"},
             {"degree", "--group", "z2", "--n", "3", "--method", "magic"},
             {"frobnicate"},
         }) {
        const Run r = run(args);
        CHECK(r.code == kExitUsage);
        CHECK(r.err.rfind("clawdeg:error:usage:", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("guard rails") {
    const Run r = run({"degree", "--group", "z2", "--n", "9", "--method", "triangulation"});
    CHECK(r.code == kExitGuardRail);
    CHECK(r.err.rfind("clawdeg:error:guard-rail:", 0) == 0);
}

TEST_CASE("output file") {
    const std::string path = "clawdeg_cli_test_output.csv";
    const Run r = run({"table", "--group", "z2", "--n", "2..3", "--format", "csv", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str() == "group,n,degree\nz2,2,0\nz2,3,1\n");
    std::remove(path.c_str());
}

TEST_CASE("help") {
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical commands give identical output") {
    const std::vector<std::string> args{"verify", "--group", "z3", "--n", "2..3", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
