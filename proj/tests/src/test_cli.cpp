#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "chvatal/enumerate.hpp"
#include "chvatal/json_io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CHVATAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kTriangle = R"('{"vertices":["a","b","c"],"faces":[["a","b","c"]]}')";

} // namespace

TEST_CASE("verify reports structural facts for a valid family") {
    const RunResult r = run_cli(std::string("verify -i ") + kTriangle);
    REQUIRE(r.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(r.out);
    CHECK(doc["valid"] == true);
    CHECK(doc["vertices"] == 3);
    CHECK(doc["faces"] == 1);
    CHECK(doc["rank"] == 3);
    CHECK(doc["intersecting"] == true);
    CHECK(doc["closure_faces"] == 7);
}

TEST_CASE("verify exits 2 on malformed input") {
    CHECK(run_cli("verify -i '{\"vertices\": [\"a\"]}'").code == 2);
    CHECK(run_cli("verify -i '{broken'").code == 2);
    CHECK(run_cli("verify -i /no/such/file.json").code == 2);
}

TEST_CASE("compress emits witness, final family and optional trace") {
    const char* input =
        R"('{"vertices":["a","b","v"],"faces":[["a","v"],["b","v"],["a","b"]]}')";
    const RunResult bare = run_cli(std::string("compress --a a --b b -i ") + input);
    REQUIRE(bare.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(bare.out);
    CHECK(doc["witness"] == "a");
    CHECK(doc["input_size"] == 3);
    CHECK(doc["final_size"] == 3);
    CHECK(doc["steps"] == 1);
    CHECK(doc["final_family"]["faces"].size() == 3);
    CHECK_FALSE(doc.contains("trace"));

    const RunResult traced =
        run_cli(std::string("compress --a a --b b --trace -i ") + input);
    REQUIRE(traced.code == 0);
    const chvatal::Json tdoc = chvatal::Json::parse(traced.out);
    REQUIRE(tdoc.contains("trace"));
    REQUIRE(tdoc["trace"].size() == 1);
    CHECK(tdoc["trace"][0]["v"] == "v");
    CHECK(tdoc["trace"][0]["removed"] == chvatal::Json::array({chvatal::Json::array({"b", "v"})}));
}

TEST_CASE("compress validates its vertices and preconditions") {
    const char* input = R"('{"vertices":["a","b"],"faces":[["a","b"]]}')";
    CHECK(run_cli(std::string("compress --a a --b nope -i ") + input).code == 3);
    CHECK(run_cli(std::string("compress --a a -i ") + input).code == 2);
    const char* uncovered = R"('{"vertices":["a","b","c"],"faces":[["c"]]}')";
    CHECK(run_cli(std::string("compress --a a --b b -i ") + uncovered).code == 3);
}

TEST_CASE("rank3 certifies a triangle and reports labels") {
    const RunResult r = run_cli(std::string("rank3 -i ") + kTriangle);
    REQUIRE(r.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(r.out);
    CHECK(doc["witness"] == "b");
    CHECK(doc["star_size"] == 4);
    CHECK(doc["family_size"] == 1);
    REQUIRE(doc["steps"].size() == 2);
    CHECK(doc["steps"][0]["rule"] == "case1");
    CHECK(doc["steps"][1]["rule"] == "in_star");
}

TEST_CASE("rank3 exits 3 when preconditions fail") {
    const char* disjoint =
        R"('{"vertices":["a","b","c","d"],"faces":[["a","b"],["c","d"]]}')";
    CHECK(run_cli(std::string("rank3 -i ") + disjoint).code == 3);
    const char* rank4 =
        R"('{"vertices":["a","b","c","d"],"faces":[["a","b","c","d"]]}')";
    CHECK(run_cli(std::string("rank3 -i ") + rank4).code == 3);
}

TEST_CASE("oracle verdict on a holding instance") {
    const char* pair =
        R"('{"vertices":["a","b","c","d"],"faces":[["a","b"],["c","d"]]}')";
    const RunResult r = run_cli(std::string("oracle -i ") + pair);
    REQUIRE(r.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(r.out);
    CHECK(doc["holds"] == true);
    CHECK(doc["max_intersecting_size"] == 2);
    CHECK(doc["max_star_size"] == 2);
    CHECK(doc["max_star_vertex"] == "a");
    CHECK(doc["closure_faces"] == 6);
}

TEST_CASE("enumerate totals and canonical classes match the library") {
    const RunResult r = run_cli("enumerate --n 2");
    REQUIRE(r.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(r.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["total"] == 5);
    CHECK(doc["verified"] == false);

    const RunResult canon = run_cli("enumerate --n 3 --canonical");
    REQUIRE(canon.code == 0);
    const chvatal::Json cdoc = chvatal::Json::parse(canon.out);
    const auto expected = chvatal::enumerate_complexes(3, true, false);
    CHECK(cdoc["total"] == expected.total);
    CHECK(cdoc["canonical"] == *expected.canonical);
}

TEST_CASE("enumerate guards the n=6 walk behind --huge") {
    CHECK(run_cli("enumerate --n 6").code == 3);
    CHECK(run_cli("enumerate --n 7 --huge").code == 3);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify").code == 2);
    CHECK(run_cli("enumerate --n notanumber").code == 2);
    CHECK(run_cli("verify --bogus -i x").code == 2);
}

TEST_CASE("--version and --schema") {
    const RunResult v = run_cli("--version");
    CHECK(v.code == 0);
    CHECK(v.out.rfind("chvatal ", 0) == 0);

    const RunResult s = run_cli("--schema");
    CHECK(s.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(s.out);
    CHECK(doc.contains("properties"));
}

TEST_CASE("compress output round-trips through verify") {
    const char* input =
        R"('{"vertices":["a","b","v"],"faces":[["a","v"],["b","v"],["a","b"]]}')";
    const RunResult r = run_cli(std::string("compress --a a --b b -i ") + input);
    REQUIRE(r.code == 0);
    const chvatal::Json doc = chvatal::Json::parse(r.out);

    const std::string path = "/tmp/chvatal_cli_roundtrip.json";
    {
        std::ofstream out(path);
        out << doc["final_family"].dump();
    }
    const RunResult again = run_cli("verify -i " + path);
    CHECK(again.code == 0);
    const chvatal::Json vdoc = chvatal::Json::parse(again.out);
    CHECK(vdoc["valid"] == true);
    CHECK(vdoc["faces"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("reports are deterministic apart from wall time") {
    chvatal::Json a = chvatal::Json::parse(run_cli("enumerate --n 3 --verify --jobs 1").out);
    chvatal::Json b = chvatal::Json::parse(run_cli("enumerate --n 3 --verify --jobs 5").out);
    a.erase("wall_seconds");
    b.erase("wall_seconds");
    CHECK(a == b);
}
