#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cech/json_io.hpp"
#include "support/testutil.hpp"

using namespace cech;

namespace {

struct RunResult {
    int exit_code;
    json output;
    std::string raw;
};

std::string cli_binary() {
    const char* env = std::getenv("CECH_CLI");
    REQUIRE_MESSAGE(env != nullptr, "CECH_CLI must point at the cech executable");
    return env;
}

std::string scratch_dir() {
    static std::string dir = [] {
        std::string tmpl = "/tmp/cech_cli_test_XXXXXX";
        char* got = mkdtemp(tmpl.data());
        REQUIRE(got != nullptr);
        return std::string(got);
    }();
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& contents) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = scratch_dir() + "/out.txt";
    const std::string cmd = cli_binary() + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.raw = ss.str();
    if (!res.raw.empty() && res.raw.front() == '{') res.output = json::parse(res.raw);
    return res;
}

}  // namespace

TEST_CASE("space new/info round trip and verdict fields") {
    const auto made = run_cli("space new --from cyclic --n 7 --m 2");
    REQUIRE(made.exit_code == 0);
    const auto file = write_fixture("z7.json", made.raw);

    const auto info = run_cli("space info " + file);
    REQUIRE(info.exit_code == 0);
    CHECK(info.output["points"] == 7);
    CHECK(info.output["connected"] == true);
    CHECK(info.output["topological"] == false);
    CHECK(info.output["indiscrete"] == false);

    // the emitted space re-ingests losslessly
    CHECK(space_from_json(json::parse(made.raw)) == cyclic_space(7, 2));
}

TEST_CASE("space info on the quotient fixture reports non-topological, exit 0") {
    const auto q3 = write_fixture(
        "q3.json",
        space_to_json(testutil::q3_space()).dump());
    const auto info = run_cli("space info " + q3);
    CHECK(info.exit_code == 0);
    CHECK(info.output["topological"] == false);
}

TEST_CASE("space op quotient reproduces the fixture") {
    const json q{{"space", space_to_json(testutil::p4_space())},
                 {"classes", json::array({"x1", "x2", "x3"})},
                 {"assign", json::array({0, 1, 1, 2})}};
    const auto file = write_fixture("quot.json", q.dump());
    const auto res = run_cli("space op quotient " + file);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output["closure"][0] == json::array({0, 1}));
    CHECK(res.output["closure"][1] == json::array({1, 2}));
}

TEST_CASE("homotopy winding and equal") {
    const auto loop = write_fixture(
        "loop.json",
        R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,2,4,6,1,3,5,0]})");
    const auto wind = run_cli("homotopy winding " + loop);
    REQUIRE(wind.exit_code == 0);
    CHECK(wind.output["winding"] == 2);

    const auto constant = write_fixture(
        "const.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0]})");
    const auto eq = run_cli("homotopy equal " + loop + " " + constant + " --cap 24");
    CHECK(eq.exit_code == 1);
    CHECK(eq.output["verdict"] == "no");
}

TEST_CASE("homotopy word on a wedge loop") {
    const auto loop = write_fixture(
        "wedge_loop.json",
        R"({"space": {"wedge": {"n1": 7, "m1": 2, "n2": 7, "m2": 2}},
            "points": [0,1,3,5,0,7,9,11,0]})");
    const auto word = run_cli("homotopy word " + loop);
    REQUIRE(word.exit_code == 0);
    CHECK(word.output["display"] == "a b");
}

TEST_CASE("homotopy equal on wedge loops uses the word invariant") {
    const auto ab = write_fixture(
        "w_ab.json",
        R"({"space": {"wedge": {"n1": 7, "m1": 2, "n2": 7, "m2": 2}},
            "points": [0,2,4,6,1,3,5,0,8,10,12,7,9,11,0]})");
    const auto ba = write_fixture(
        "w_ba.json",
        R"({"space": {"wedge": {"n1": 7, "m1": 2, "n2": 7, "m2": 2}},
            "points": [0,8,10,12,7,9,11,0,2,4,6,1,3,5,0]})");
    const auto res = run_cli("homotopy equal " + ab + " " + ba);
    CHECK(res.exit_code == 1);
    CHECK(res.output["verdict"] == "no");
    CHECK(res.output["witness"]["invariant"].get<std::string>().find("wedge word") !=
          std::string::npos);

    const auto same = run_cli("homotopy equal " + ab + " " + ab);
    CHECK(same.exit_code == 0);
    CHECK(same.output["verdict"] == "yes");
}

TEST_CASE("homotopy equal reports unknown with exit 0 when nothing separates") {
    // theta graph: three two-edge arms between two junctions
    const json theta{
        {"vertices", json::array({"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"})},
        {"edges",
         json::array({json::array({0, 1}), json::array({1, 0}), json::array({1, 2}),
                      json::array({2, 1}), json::array({2, 3}), json::array({3, 2}),
                      json::array({0, 4}), json::array({4, 0}), json::array({4, 5}),
                      json::array({5, 4}), json::array({5, 3}), json::array({3, 5}),
                      json::array({0, 6}), json::array({6, 0}), json::array({6, 7}),
                      json::array({7, 6}), json::array({7, 3}), json::array({3, 7})})}};
    const auto gfile = write_fixture("theta.json", theta.dump());
    const auto space = run_cli("space new --from graph " + gfile);
    REQUIRE(space.exit_code == 0);
    const auto sfile = write_fixture("theta_space.json", space.raw);

    const auto a = write_fixture(
        "theta_a.json", json{{"space", json{{"file", "theta_space.json"}}},
                             {"points", json::array({0, 1, 2, 3, 5, 4, 0})}}
                            .dump());
    const auto b = write_fixture(
        "theta_b.json", json{{"space", json{{"file", "theta_space.json"}}},
                             {"points", json::array({0, 1, 2, 3, 7, 6, 0})}}
                            .dump());
    const auto res = run_cli("homotopy equal " + a + " " + b + " --cap 8");
    CHECK(res.exit_code == 0);
    CHECK(res.output["verdict"] == "unknown");
}

TEST_CASE("space op disjoint and product") {
    const auto a = write_fixture("du_a.json",
                                 space_to_json(cyclic_space(3, 1)).dump());
    const auto b = write_fixture("du_b.json",
                                 space_to_json(testutil::p4_space()).dump());
    const auto du = run_cli("space op disjoint " + a + " " + b);
    REQUIRE(du.exit_code == 0);
    CHECK(du.output["labels"].size() == 7);
    CHECK(du.output["labels"][0] == "0/0");
    CHECK(du.output["labels"][3] == "1/1");

    const auto prod = run_cli("space op product " + a + " " + a);
    REQUIRE(prod.exit_code == 0);
    CHECK(prod.output["labels"].size() == 9);
}

TEST_CASE("cover check exit codes") {
    const auto bad = write_fixture("bad_cover.json", R"({"cyclic_cover": {"k":2,"n":6,"m":2}})");
    const auto res = run_cli("cover check " + bad);
    CHECK(res.exit_code == 1);
    CHECK(res.output["covering"] == false);

    const auto good = write_fixture("good_cover.json", R"({"cyclic_cover": {"k":2,"n":7,"m":2}})");
    const auto res2 = run_cli("cover check " + good);
    CHECK(res2.exit_code == 0);
    CHECK(res2.output["covering"] == true);
    CHECK(res2.output.contains("surrogate"));
}

TEST_CASE("cover lift and lifts") {
    const auto cov = write_fixture("cov.json", R"({"cyclic_cover": {"k":2,"n":7,"m":2}})");
    const auto base = write_fixture(
        "base.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,2,4]})");
    const auto lift = run_cli("cover lift " + cov + " --path " + base + " --start 7");
    REQUIRE(lift.exit_code == 0);
    CHECK(lift.output["points"] == json::array({7, 9, 11}));

    const auto amb_cov = write_fixture("amb.json", R"({"cyclic_cover": {"k":2,"n":4,"m":4}})");
    const auto amb_base = write_fixture(
        "amb_base.json", R"({"space": {"cyclic": {"n": 4, "m": 4}}, "points": [0,0]})");
    const auto lifts = run_cli("cover lifts " + amb_cov + " --path " + amb_base + " --start 0");
    REQUIRE(lifts.exit_code == 0);
    CHECK(lifts.output["lifts"] == "multiple");

    const auto fail = run_cli("cover lift " + amb_cov + " --path " + amb_base + " --start 0");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output["error"] == "non-unique lift");
}

TEST_CASE("map check in both modes") {
    const json cont{{"domain", json{{"cyclic", {{"n", 7}, {"m", 1}}}}},
                    {"codomain", json{{"cyclic", {{"n", 7}, {"m", 2}}}}},
                    {"values", json::array({0, 1, 2, 3, 4, 5, 6})}};
    const auto cfile = write_fixture("cont.json", cont.dump());
    CHECK(run_cli("map check " + cfile).exit_code == 0);

    const json breaks{{"domain", json{{"cyclic", {{"n", 7}, {"m", 2}}}}},
                      {"codomain", json{{"cyclic", {{"n", 7}, {"m", 1}}}}},
                      {"values", json::array({0, 1, 2, 3, 4, 5, 6})}};
    const auto bfile = write_fixture("breaks.json", breaks.dump());
    const auto res = run_cli("map check " + bfile);
    CHECK(res.exit_code == 1);
    CHECK(res.output["continuous"] == false);

    const json qr{{"domain", json{{"points", json::array({json::array({0.0}),
                                                          json::array({0.5})})}}},
                  {"codomain", json{{"points", json::array({json::array({0.0}),
                                                            json::array({1.0})})}}},
                  {"values", json::array({0, 1})}};
    const auto qfile = write_fixture("qr.json", qr.dump());
    CHECK(run_cli("map check " + qfile + " --qr 0.5 1.0").exit_code == 0);
    CHECK(run_cli("map check " + qfile + " --qr 0.5 0.9").exit_code == 1);
}

TEST_CASE("path commands") {
    const auto good = write_fixture(
        "p_good.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,2,4,6]})");
    CHECK(run_cli("path check " + good).exit_code == 0);

    const auto bad = write_fixture(
        "p_bad.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,3]})");
    const auto res = run_cli("path check " + bad);
    CHECK(res.exit_code == 1);
    CHECK(res.output["valid"] == false);

    const auto a = write_fixture(
        "p_a.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,2]})");
    const auto b = write_fixture(
        "p_b.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [2,4]})");
    const auto st = run_cli("path star " + a + " " + b);
    REQUIRE(st.exit_code == 0);
    CHECK(st.output["points"] == json::array({0, 2, 4}));

    const auto rev = run_cli("path reverse " + a);
    CHECK(rev.output["points"] == json::array({2, 0}));
}

TEST_CASE("persist commands") {
    const auto cloud = write_fixture("cloud.csv", "0\n1\n2\n10\n");
    const auto bars = run_cli("persist barcode " + cloud);
    REQUIRE(bars.exit_code == 0);
    REQUIRE(bars.output["bars"].size() == 4);
    CHECK(bars.output["bars"][0][1].is_null());
    CHECK(bars.output["bars"][1][1] == 8.0);

    const auto den = run_cli("persist dendrogram " + cloud + " --newick");
    REQUIRE(den.exit_code == 0);
    CHECK(den.output["newick"].get<std::string>().find("p3") != std::string::npos);

    const auto comp = run_cli("persist components " + cloud + " --q 0.5 --r 1");
    REQUIRE(comp.exit_code == 0);
    CHECK(comp.output["map"] == json::array({0, 0, 0, 1}));
}

TEST_CASE("input errors exit with 2 and no JSON payload") {
    const auto malformed = write_fixture("broken.json", "{ not json");
    CHECK(run_cli("space info " + malformed).exit_code == 2);
    CHECK(run_cli("nonsense subcommand").exit_code == 2);
    CHECK(run_cli("space new --from cyclic --m 2").exit_code == 2);  // missing --n

    const auto oor = write_fixture(
        "oor.json", R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,9]})");
    CHECK(run_cli("path check " + oor).exit_code == 2);
}

TEST_CASE("identical invocations produce identical output") {
    const auto cloud = write_fixture("det_cloud.csv", "0,0\n1,0\n0,1\n5,5\n5,6\n");
    const auto once = run_cli("persist barcode " + cloud);
    const auto twice = run_cli("persist barcode " + cloud);
    CHECK(once.raw == twice.raw);

    const auto cover = write_fixture("det_cover.json", R"({"cyclic_cover": {"k":3,"n":5,"m":1}})");
    CHECK(run_cli("cover check " + cover).raw == run_cli("cover check " + cover).raw);
}

TEST_CASE("text format renders without JSON braces") {
    const auto loop = write_fixture(
        "loop2.json",
        R"({"space": {"cyclic": {"n": 7, "m": 2}}, "points": [0,2,4,6,1,3,5,0]})");
    const auto res = run_cli("--format text homotopy winding " + loop);
    CHECK(res.exit_code == 0);
    CHECK(res.raw.find("winding: 2") != std::string::npos);
}
