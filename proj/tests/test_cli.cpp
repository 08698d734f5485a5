#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lefforge/cli.hpp"

using namespace lefforge;

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

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("json documents carry schema and config") {
    const auto j = run_json({"ideal", "--t", "2", "--m", "2", "--n", "3"});
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["command"] == "ideal");
    CHECK(j["config"]["shape"]["m"] == 2);
    CHECK(j["result"]["generators"].size() == 3);
}

TEST_CASE("betti with witnesses") {
    const auto j = run_json({"betti", "--t", "2", "--m", "3", "--n", "3", "--full"});
    CHECK(j["result"]["value"] == 2);
    CHECK(j["result"]["kind"] == "exact");
    CHECK(j["result"]["witnesses"].size() == 2);
}

TEST_CASE("check reports certification levels") {
    const auto fails = run_json({"check", "--t", "3", "--m", "4", "--n", "5", "--ring", "initial", "--property", "slp"});
    CHECK(fails["result"]["outcome"] == "fails_probabilistic");
    const auto holds = run_json({"check", "--t", "3", "--m", "4", "--n", "5", "--ring", "minors", "--property", "SLP"});
    CHECK(holds["result"]["outcome"] == "holds_certified");
    CHECK_FALSE(holds["result"]["trials"].empty());
    const auto cert = run_json({"check", "--t", "2", "--m", "4", "--n", "4", "--ring", "initial", "--property", "wlp"});
    CHECK(cert["result"]["outcome"] == "fails_certified");
    for (const auto* doc : {&fails, &holds, &cert}) CHECK(doc->dump().find("\"fails\"") == std::string::npos);
}

TEST_CASE("identical configs give byte-identical json") {
    const std::vector<std::string> args{"check",    "--t", "3",      "--m",    "4",      "--n",     "4",
                                        "--ring",   "minors", "--seed", "17", "--format", "json"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> sv{"survey", "--t", "2", "--max-m", "3", "--max-n", "4", "--format", "json"};
    CHECK(run(sv).out == run(sv).out);
}

TEST_CASE("LEFFORGE_SEED sets the default seed") {
    ::setenv("LEFFORGE_SEED", "12345", 1);
    const auto j = run_json({"criteria", "--t", "2", "--m", "4", "--n", "4"});
    CHECK(j["config"]["field"]["seed"] == 12345);
    const auto explicit_seed = run_json({"criteria", "--t", "2", "--m", "4", "--n", "4", "--seed", "9"});
    CHECK(explicit_seed["config"]["field"]["seed"] == 9);
    ::setenv("LEFFORGE_SEED", "banana", 1);
    CHECK(run({"criteria", "--t", "2", "--m", "4", "--n", "4"}).code == kExitParameter);
    ::unsetenv("LEFFORGE_SEED");
}

TEST_CASE("exit codes and one-line errors") {
    auto bad = run({"ideal", "--t", "3", "--m", "3", "--n", "3"});
    CHECK(bad.code == kExitParameter);
    CHECK(bad.err.rfind("error: parameter: ", 0) == 0);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
    CHECK(run({"check", "--t", "2", "--m", "3", "--n", "3", "--prime", "7", "--rational"}).code == kExitParameter);
    CHECK(run({"check", "--t", "2", "--m", "3", "--n", "3", "--prime", "15"}).code == kExitParameter);
    CHECK(run({"ideal", "--t", "2", "--m", "3", "--n", "3", "--format", "csv"}).code == kExitParameter);
    CHECK(run({"nonsense"}).code == kExitParameter);
    auto budget = run({"betti", "--t", "2", "--m", "4", "--n", "4", "--budget", "10"});
    CHECK(budget.code == kExitBudget);
    CHECK(budget.err.rfind("error: budget: required=", 0) == 0);
    CHECK(run({"omega", "--t", "3", "--m", "4", "--n", "5", "--a", "3"}).code == kExitParameter);
}

TEST_CASE("survey csv") {
    const auto r = run({"survey", "--t", "2", "--max-m", "4", "--max-n", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "t,m,n,F_value,classify_case,betti_corner,betti_corner_kind,wlp_initial,slp_initial,wlp_minors,slp_minors,"
          "wall_time_ms\r");
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    CHECK(rows.size() == 5);  // (2,3) (2,4) (3,3) (3,4) (4,4)
    bool saw_44 = false;
    for (const auto& row : rows) {
        if (row.rfind("2,4,4,", 0) == 0) {
            saw_44 = true;
            CHECK(row.find("fails_certified") != std::string::npos);
        }
        if (row.rfind("2,3,3,", 0) == 0) CHECK(row.find("fails") == std::string::npos);
    }
    CHECK(saw_44);
}

TEST_CASE("output file and the other subcommands") {
    const std::string path = "lefforge_cli_test_output.json";
    CHECK(run({"facets", "--t", "2", "--m", "3", "--n", "3", "--format", "json", "--output", path}).code == 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["result"]["facet_count"] == 6);
    CHECK(j["result"]["facet_count_lgv"] == 6);
    std::remove(path.c_str());

    const auto om = run_json({"omega", "--t", "3", "--m", "4", "--n", "5", "--a", "1"});
    REQUIRE(om["result"]["omega"].size() == 1);
    CHECK(om["result"]["omega"][0]["dimension"] == 5);
    CHECK(om["result"]["omega"][0]["facet_count"] == 8);
    const auto hm = run_json({"homology", "--t", "2", "--m", "3", "--n", "3", "--subset", "1,1;1,2;2,1;2,2;3,3"});
    CHECK(hm["result"]["reduced_homology"][1] == 1);
    const auto cr = run_json({"criteria", "--t", "2", "--m", "3", "--n", "3"});
    CHECK(cr["result"]["F_value"] == -3);
    CHECK(cr["result"]["failure_certificate"] == false);
    CHECK(run({"criteria", "--t", "2", "--m", "3", "--n", "3"}).out.find("F") != std::string::npos);
}
