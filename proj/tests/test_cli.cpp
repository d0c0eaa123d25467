#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "helpers.hpp"

using namespace test_helpers;

namespace {

std::string cli_path() {
    const char* env = std::getenv("MOVELETS_CLI");
    REQUIRE_MESSAGE(env != nullptr, "MOVELETS_CLI must point at the movelets binary");
    return env;
}

int run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("an eight-trajectory toy run produces movelets for both classes") {
    TempDir dir;
    REQUIRE(run_cli("synth --out " + dir.file("data.csv") + " --schema " + dir.file("schema.json") +
                    " --classes 2 --per-class 4 --length 8 --dims 3 --seed 5") == 0);
    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("movelets.json")) == 0);

    auto doc = nlohmann::json::parse(read_file(dir.file("movelets.json")));
    REQUIRE(doc.is_array());
    bool c0 = false, c1 = false;
    for (const auto& m : doc) {
        std::string tid = m["tid"].get<std::string>();
        c0 = c0 || tid.rfind("c0", 0) == 0;
        c1 = c1 || tid.rfind("c1", 0) == 0;
    }
    CHECK(c0);
    CHECK(c1);
}

TEST_CASE("thread counts do not change the discovery output bytes") {
    TempDir dir;
    REQUIRE(run_cli("synth --out " + dir.file("data.csv") + " --schema " + dir.file("schema.json") +
                    " --classes 2 --per-class 4 --length 8 --dims 2 --seed 9") == 0);
    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("one.json") + " --threads 1") ==
            0);
    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("eight.json") +
                    " --threads 8") == 0);
    CHECK(read_file(dir.file("one.json")) == read_file(dir.file("eight.json")));
}

TEST_CASE("schema and data errors exit with status 2") {
    TempDir dir;
    write_file(dir.file("schema.json"),
               R"({"dimensions":[{"name":"venue","kind":"nominal","distance":"binary"}]})");
    write_file(dir.file("bad_schema.json"), R"({"dimensions":[]})");
    write_file(dir.file("data.csv"), "tid,label,order,venue\na,L1,0,x\nb,L2,0,y\n");

    CHECK(run_cli("discover --train " + dir.file("missing.csv") + " --schema " +
                  dir.file("schema.json") + " --out " + dir.file("out.json")) == 2);
    CHECK(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                  dir.file("bad_schema.json") + " --out " + dir.file("out.json")) == 2);
    CHECK(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                  dir.file("schema.json")) == 2);  // missing --out
    CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("the run report counts candidates per trajectory") {
    TempDir dir;
    write_file(dir.file("schema.json"),
               R"({"dimensions":[{"name":"venue","kind":"nominal","distance":"binary"}]})");
    std::string csv = "tid,label,order,venue\n";
    for (int i = 0; i < 5; ++i) {
        csv += "a,L1," + std::to_string(i) + ",x" + std::to_string(i) + "\n";
    }
    csv += "b,L2,0,z\n";
    write_file(dir.file("data.csv"), csv);

    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("movelets.json") +
                    " --report " + dir.file("report.json")) == 0);

    auto report = nlohmann::json::parse(read_file(dir.file("report.json")));
    bool found = false;
    for (const auto& t : report["trajectories"]) {
        if (t["tid"] == "a") {
            CHECK(t["length"] == 5);
            CHECK(t["candidates_evaluated"] == 15);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("classify on identical train and test reaches accuracy 1") {
    TempDir dir;
    REQUIRE(run_cli("synth --out " + dir.file("data.csv") + " --schema " + dir.file("schema.json") +
                    " --classes 2 --per-class 4 --length 8 --dims 2 --seed 13") == 0);
    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("movelets.json")) == 0);
    REQUIRE(run_cli("transform --data " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --movelets " + dir.file("movelets.json") +
                    " --out " + dir.file("features.csv")) == 0);
    REQUIRE(run_cli("classify --train-features " + dir.file("features.csv") +
                    " --test-features " + dir.file("features.csv") + " -k 1 --report " +
                    dir.file("report.json")) == 0);

    auto report = nlohmann::json::parse(read_file(dir.file("report.json")));
    CHECK(report["accuracy"].get<double>() == 1.0);
}

TEST_CASE("synth runs with one seed write identical bytes") {
    TempDir dir;
    REQUIRE(run_cli("synth --out " + dir.file("a.csv") + " --truth " + dir.file("a.json") +
                    " --seed 42 --per-class 3 --length 6") == 0);
    REQUIRE(run_cli("synth --out " + dir.file("b.csv") + " --truth " + dir.file("b.json") +
                    " --seed 42 --per-class 3 --length 6") == 0);
    CHECK(read_file(dir.file("a.csv")) == read_file(dir.file("b.csv")));
    CHECK(read_file(dir.file("a.json")) == read_file(dir.file("b.json")));
}

TEST_CASE("transform emits one column per movelet in binary mode") {
    TempDir dir;
    REQUIRE(run_cli("synth --out " + dir.file("data.csv") + " --schema " + dir.file("schema.json") +
                    " --classes 2 --per-class 3 --length 6 --dims 2 --seed 17") == 0);
    REQUIRE(run_cli("discover --train " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --out " + dir.file("movelets.json")) == 0);
    REQUIRE(run_cli("transform --data " + dir.file("data.csv") + " --schema " +
                    dir.file("schema.json") + " --movelets " + dir.file("movelets.json") +
                    " --out " + dir.file("features.csv") + " --mode binary") == 0);

    auto movelets = nlohmann::json::parse(read_file(dir.file("movelets.json")));
    std::string features = read_file(dir.file("features.csv"));
    // header row: tid,label,m0,...  (first line is the mode comment)
    size_t header_start = features.find('\n') + 1;
    std::string header = features.substr(header_start, features.find('\n', header_start) - header_start);
    size_t columns = std::count(header.begin(), header.end(), ',') - 1;
    CHECK(columns == movelets.size());
}
