#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cantorval/cli.hpp"

using namespace cantorval;

namespace {

CliResult cli(std::initializer_list<std::string> args) {
    return run_cli(std::vector<std::string>(args));
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("classify json schema") {
    const CliResult r = cli({"classify", "3,2", "1/4", "--json"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.err.empty());
    const Json j = Json::parse(r.out);

    // Top-level keys in contract order.
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"sequence", "q", "verdict", "thresholds", "provenance"});

    CHECK(j["sequence"] == Json::array({3, 2}));
    CHECK(j["q"] == "1/4");
    CHECK(j["verdict"] == "MC");

    const Json& th = j["thresholds"];
    std::vector<std::string> tkeys;
    for (auto it = th.begin(); it != th.end(); ++it) tkeys.push_back(it.key());
    CHECK(tkeys == std::vector<std::string>{"kakeya_I_threshold", "kakeya_II_bound",
                                            "theorem3_bound", "window_lo", "window_hi_naive",
                                            "window_hi_refined", "monotone_bound"});
    CHECK(th["kakeya_I_threshold"] == "2/7");
    CHECK(th["kakeya_II_bound"] == "1/6");
    CHECK(th["theorem3_bound"] == "1/4");
    CHECK(th["window_lo"] == "1/2");
    CHECK(th["window_hi_naive"] == "2/7");
    CHECK(th["window_hi_refined"] == "2/7");
    CHECK(th["monotone_bound"] == "2/3");

    REQUIRE(j["provenance"].size() == 1);
    CHECK(j["provenance"][0]["rule"] == "THEOREM_7");
    CHECK(j["provenance"][0]["witness"] == "1/4 == 1/4");
}

TEST_CASE("classify json is byte deterministic") {
    const CliResult a = cli({"classify", "10,9,8,7,6,5,2", "2/49", "--json"});
    const CliResult b = cli({"classify", "10,9,8,7,6,5,2", "2/49", "--json"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\t') == std::string::npos);

    const Json j = Json::parse(a.out);
    CHECK(j["verdict"] == "MC");
    CHECK(j["thresholds"]["kakeya_I_threshold"] == "3/50");
    CHECK_FALSE(j["thresholds"].contains("kakeya_II_bound"));
    CHECK(j["thresholds"]["theorem3_bound"] == "1/42");
    CHECK(j["thresholds"]["window_lo"] == "1/38");
    CHECK(j["thresholds"]["window_hi_naive"] == "2/49");
    CHECK(j["thresholds"]["window_hi_refined"] == "3/50");
    CHECK(j["thresholds"]["monotone_bound"] == "1/5");
    REQUIRE(j["provenance"].size() == 3);
    CHECK(j["provenance"][0]["witness"] == "2/49 >= 1/38");
    CHECK(j["provenance"][1]["witness"] == "2/49 < 3/50");
    CHECK(j["provenance"][2]["witness"] == "2/49 <= 1/5");
}

TEST_CASE("classify human output") {
    const CliResult r = cli({"classify", "3,2", "1/4"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("verdict: MC (Cantorval)") != std::string::npos);
    CHECK(r.out.find("THEOREM_7") != std::string::npos);
    CHECK(r.out.find("1/4 == 1/4") != std::string::npos);
}

TEST_CASE("unknown verdict exits zero and names brackets") {
    const CliResult r = cli({"classify", "3,2", "27/100"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("verdict: Unknown") != std::string::npos);
    CHECK(r.out.find("nearest thresholds:") != std::string::npos);
    CHECK(r.out.find("below 1/4") != std::string::npos);
    CHECK(r.out.find("above 2/7") != std::string::npos);

    const CliResult js = cli({"classify", "3,2", "27/100", "--json"});
    const Json j = Json::parse(js.out);
    CHECK(j["verdict"] == "Unknown");
    CHECK(j["provenance"].empty());
}

TEST_CASE("input errors exit two") {
    CHECK(cli({}).exit_code == 2);
    CHECK(cli({"frobnicate"}).exit_code == 2);
    CHECK(cli({"classify", "3,2"}).exit_code == 2);          // missing q
    CHECK(cli({"classify", "3,2", "abc"}).exit_code == 2);   // malformed ratio
    CHECK(cli({"classify", "3,2", "1/2"}).exit_code == 2);   // q out of range
    CHECK(cli({"classify", "3,x", "1/4"}).exit_code == 2);   // malformed block
    CHECK(cli({"classify", "3,-2", "1/4"}).exit_code == 2);  // nonpositive term
    CHECK(cli({"scan", "0"}).exit_code == 2);
    CHECK(cli({"cover", "3,2", "1/4"}).exit_code == 2);      // --depth required
    CHECK(cli({"certify", "3,2", "1/4", "--method", "th9"}).exit_code == 2);
    CHECK(cli({"oracle", "3,2", "1/4", "--terms", "25"}).exit_code == 2); // needs --force
    for (auto args : {std::vector<std::string>{"classify", "3,2"},
                      std::vector<std::string>{"classify", "3,2", "abc"}}) {
        const CliResult r = run_cli(args);
        CHECK_FALSE(r.err.empty());
        CHECK(r.err.rfind("error:", 0) == 0);
    }
}

TEST_CASE("budget exhaustion exits three") {
    const CliResult r = cli({"cover", "10,9,8,7,6,5,2", "2/49", "--depth", "5"});
    CHECK(r.exit_code == 3);
    CHECK_FALSE(r.err.empty());
    CHECK(cli({"certify", "3,2", "1/4", "--method", "th7", "--depth", "12"}).exit_code == 3);
}

TEST_CASE("inapplicable certificates exit four") {
    CHECK(cli({"certify", "3,2", "1/4", "--method", "th2"}).exit_code == 4);
    CHECK(cli({"certify", "3,2", "1/5", "--method", "th7"}).exit_code == 4);
    CHECK(cli({"certify", "4,3", "1/6", "--method", "th7"}).exit_code == 4);
}

TEST_CASE("help exits zero") {
    const CliResult r = cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
    CHECK(r.out.find("scan") != std::string::npos);
}

TEST_CASE("scan json regions") {
    const CliResult r = cli({"scan", "3,2", "--json"});
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["sequence"] == Json::array({3, 2}));

    REQUIRE(j["critical_points"].size() == 3);
    CHECK(j["critical_points"][0]["q"] == "1/6");
    CHECK(j["critical_points"][1]["q"] == "1/4");
    CHECK(j["critical_points"][1]["labels"] ==
          Json::array({"theorem3_bound", "theorem7_point"}));
    CHECK(j["critical_points"][2]["q"] == "2/7");

    REQUIRE(j["regions"].size() == 4);
    auto region = [&](size_t i) { return j["regions"][i]; };
    CHECK(region(0)["lo"] == "0/1");
    CHECK(region(0)["hi"] == "1/4");
    CHECK(region(0)["lo_closed"] == false);
    CHECK(region(0)["hi_closed"] == false);
    CHECK(region(0)["verdict"] == "C");
    CHECK(region(1)["lo"] == "1/4");
    CHECK(region(1)["hi"] == "1/4");
    CHECK(region(1)["lo_closed"] == true);
    CHECK(region(1)["hi_closed"] == true);
    CHECK(region(1)["verdict"] == "MC");
    CHECK(region(1)["rule"] == "THEOREM_7");
    CHECK(region(2)["verdict"] == "Unknown");
    CHECK(region(2)["rule"].is_null());
    CHECK(region(3)["lo"] == "2/7");
    CHECK(region(3)["hi"] == "1/2");
    CHECK(region(3)["lo_closed"] == true);
    CHECK(region(3)["hi_closed"] == false);
    CHECK(region(3)["verdict"] == "I");
    CHECK(region(3)["rule"] == "KAKEYA_I");

    const CliResult again = cli({"scan", "3,2", "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("scan of a singleton block") {
    const CliResult r = cli({"scan", "5", "--json"});
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["critical_points"].empty());
    REQUIRE(j["regions"].size() == 1);
    CHECK(j["regions"][0]["lo"] == "0/1");
    CHECK(j["regions"][0]["hi"] == "1/2");
    CHECK(j["regions"][0]["verdict"] == "C");
}

TEST_CASE("scan ascii output") {
    const CliResult r = cli({"scan", "3,2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("block: 3,2") != std::string::npos);
    CHECK(r.out.find("regions:") != std::string::npos);
    CHECK(r.out.find("[2/7, 1/2)  I") != std::string::npos);
    CHECK(r.out.find("(1/4, 2/7)  Unknown") != std::string::npos);
}

TEST_CASE("render formats") {
    const CliResult svg = cli({"render", "3,2", "--format", "svg"});
    REQUIRE(svg.exit_code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out.find("</svg>") != std::string::npos);

    const CliResult js = cli({"render", "3,2", "--format", "json"});
    REQUIRE(js.exit_code == 0);
    CHECK(Json::parse(js.out)["regions"].size() == 4);

    const CliResult ascii = cli({"render", "3,2"});
    REQUIRE(ascii.exit_code == 0);
    CHECK(ascii.out.find("block: 3,2") != std::string::npos);
    CHECK(ascii.out.find("regions:") == std::string::npos); // table is scan-only

    const std::string path = "/tmp/cantorval_test_scan.svg";
    const CliResult file = cli({"scan", "3,2", "--svg", path});
    REQUIRE(file.exit_code == 0);
    CHECK(file.out.find("svg written: " + path) != std::string::npos);
    const std::string body = slurp(path);
    CHECK(body.rfind("<svg", 0) == 0);
}

TEST_CASE("cover output") {
    const CliResult r = cli({"cover", "3,2", "1/4", "--depth", "1"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("components: 3") != std::string::npos);
    CHECK(r.out.find("total_length: 6/1") != std::string::npos);
    CHECK(r.out.find("[0/1, 5/3]") != std::string::npos);
    CHECK(r.out.find("[2/1, 14/3]") != std::string::npos);
    CHECK(r.out.find("[5/1, 20/3]") != std::string::npos);

    const CliResult js = cli({"cover", "3,2", "1/4", "--depth", "2", "--json"});
    const Json j = Json::parse(js.out);
    CHECK(j["depth"] == 2);
    CHECK(j["point_count"] == 16);
    CHECK(j["component_count"] == 9);
    CHECK(j["tail_radius"] == "5/12");
    CHECK(j["total_length"] == "11/2");
    CHECK(j["components_truncated"] == false);
    REQUIRE(j["components"].size() == 9);
    CHECK(j["components"][0]["lo"] == "0/1");
    CHECK(j["components"][0]["hi"] == "5/12");
}

TEST_CASE("oracle output") {
    const CliResult r = cli({"oracle", "3,2", "1/4", "--terms", "4"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("sums: 16") != std::string::npos);
    CHECK(r.out.find("largest_gap: (5/4, 2/1) length 3/4") != std::string::npos);

    const CliResult js = cli({"oracle", "3,2", "1/4", "--terms", "4", "--json"});
    const Json j = Json::parse(js.out);
    CHECK(j["count"] == 16);
    CHECK(j["sums"][0] == "0/1");
    CHECK(j["sums"][1] == "1/2");
    CHECK(j["largest_gap"]["lo"] == "5/4");
    CHECK(j["largest_gap"]["hi"] == "2/1");
    CHECK(j["largest_gap"]["length"] == "3/4");
    CHECK(j["gaps_elided"] == false);
}

TEST_CASE("certify output") {
    const CliResult th2 = cli({"certify", "3,2,2,2", "1/6", "--method", "th2", "--json"});
    REQUIRE(th2.exit_code == 0);
    const Json j2 = Json::parse(th2.out);
    CHECK(j2["method"] == "THEOREM_2_CONSTRUCTION");
    CHECK(j2["lo"] == "12/5");
    CHECK(j2["hi"] == "42/5");
    CHECK(j2["witness_depth"] == 0);

    const CliResult human = cli({"certify", "3,2,2,2", "1/6", "--method", "th2"});
    CHECK(human.out.find("midpoint digit check: ok") != std::string::npos);

    const CliResult th7 = cli({"certify", "3,2", "1/4", "--method", "th7", "--depth", "4",
                               "--json"});
    REQUIRE(th7.exit_code == 0);
    const Json j7 = Json::parse(th7.out);
    CHECK(j7["method"] == "THEOREM_7_DIGITS");
    CHECK(j7["lo"] == "3/1");
    CHECK(j7["hi"] == "4/1");
    CHECK(j7["kappa"] == 1);
    CHECK(j7["depth"] == 4);
    CHECK(j7["grid_points"] == 257);
}

TEST_CASE("scale invariance is visible through the interface") {
    const CliResult a = cli({"classify", "3,2", "1/4", "--json"});
    const CliResult b = cli({"classify", "6,4", "1/4", "--json"});
    const Json ja = Json::parse(a.out);
    const Json jb = Json::parse(b.out);
    CHECK(ja["verdict"] == jb["verdict"]);
    CHECK(ja["thresholds"] == jb["thresholds"]); // thresholds from the primitive block
    CHECK(ja["provenance"] == jb["provenance"]);
    CHECK(jb["sequence"] == Json::array({6, 4}));
}
