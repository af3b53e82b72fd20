#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "scring/cli.hpp"

using namespace scring;
using nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ordered_json parse(const CliResult& r) { return ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("mul emits the closed-form product") {
    CliResult r = run({"mul", "--q", "7", "--x", "B", "--y", "C", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["command"] == "mul");
    CHECK(doc["q"] == 7);
    CHECK(doc["results"] == ordered_json{{"C", 6}});
    CHECK(doc["version"] == "0.1.0");
    CHECK(doc["checks"].empty());

    CliResult text = run({"mul", "--q", "7", "--x", "B", "--y", "C"});
    CHECK(text.code == 0);
    CHECK(text.out.find("C: 6") != std::string::npos);
}

TEST_CASE("json output is byte-identical under parse and re-dump") {
    const std::vector<std::vector<std::string>> cases = {
        {"mul", "--q", "7", "--x", "D+", "--y", "E+", "--format", "json"},
        {"classes", "--q", "4", "--format", "json"},
        {"idempotents", "--q", "5", "--format", "json"},
        {"chars", "--q", "3", "--format", "json"},
        {"fusion", "--q", "5", "--format", "json"},
    };
    for (const auto& args : cases) {
        INFO("command ", args[0]);
        CliResult r = run(args);
        REQUIRE(r.code == 0);
        ordered_json doc = parse(r);
        CHECK(doc.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("usage and configuration errors exit with 2") {
    CHECK(run({"mul", "--q", "2", "--x", "B", "--y", "C"}).code == 2);
    CHECK(run({"mul", "--q", "6", "--x", "B", "--y", "C"}).code == 2);
    CHECK(run({"mul", "--q", "7", "--x", "Z", "--y", "C"}).code == 2);
    CHECK(run({"mul", "--q", "7", "--x", "B"}).code == 2);
    CHECK(run({"classes", "--q", "5", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"scheme", "--q", "3"}).code == 2);
    CHECK(run({"scheme", "--q", "5", "--variant", "bogus"}).code == 2);
    CHECK(run({"verify", "--q", "2"}).code == 2);
    CHECK(run({"verify", "--inject-fault", "bogus"}).code == 2);
    CliResult r = run({"mul", "--q", "2", "--x", "B", "--y", "C"});
    CHECK(!r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("help exits zero") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mul") != std::string::npos);
}

TEST_CASE("classes reports sizes and order") {
    CliResult r = run({"classes", "--q", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"]["order"] == 60);
    CHECK(doc["results"]["sizes"]["A"] == 3);
    CHECK(doc["results"]["sizes"]["C"] == 18);
    for (const auto& c : doc["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("table covers all 49 products") {
    CliResult r = run({"table", "--q", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"].size() == 49);
    CHECK(doc["results"]["B*C"] == ordered_json{{"C", 2}});
    CHECK(doc["results"]["B*B"] == ordered_json{{"A", 2}});
}

TEST_CASE("idempotents emits exact rationals") {
    CliResult r = run({"idempotents", "--q", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"]["pi"]["pi1"]["A"] == "1/120");
    CHECK(doc["results"]["traces"]["pi1"] == "1");
    CHECK(doc["results"]["traces"]["pi2"] == "9");
    CHECK(doc["results"]["traces"]["pi3"] == "10");
    CHECK(doc["results"]["traces"]["pi4"] == "10");
    CHECK(doc["results"]["subalgebras"].contains("rank3"));
    for (const auto& c : doc["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("scheme emits classes, constants, and the tilde eigensystem") {
    CliResult r = run({"scheme", "--q", "4", "--variant", "tilde", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"]["n"] == 60);
    CHECK(doc["results"]["classes"][1]["valency"] == 5);
    CHECK(doc["results"]["dimensions"] == ordered_json::array({1, 5, 50, 4}));
    for (const auto& c : doc["checks"]) CHECK(c["status"] == "pass");

    CliResult d5 = run({"scheme", "--q", "4", "--variant", "d5", "--format", "json"});
    REQUIRE(d5.code == 0);
    ordered_json ddoc = parse(d5);
    CHECK(!ddoc["results"].contains("dimensions"));
    CHECK(ddoc["results"]["classes"].size() == 6);
}

TEST_CASE("chars reports ranks and profiles") {
    CliResult r = run({"chars", "--q", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"]["ranks"]["pi~1"] == ordered_json{{"U(0)", 1}});
    CHECK(doc["results"]["ranks"]["pi~4"] == ordered_json{{"V(0)", 2}});
    CHECK(doc["results"]["character_table"]["approximate"] == true);
    CHECK(doc["results"]["fx_profiles"]["F*A"]["a"] == 1);
    for (const auto& c : doc["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("verify runs the product battery and honors fault injection") {
    {
        CliResult r = run({"verify", "--q", "3", "--format", "json"});
        REQUIRE(r.code == 0);
        ordered_json doc = parse(r);
        CHECK(doc["results"]["mode"] == "core");
        CHECK(doc["results"]["failed"] == 0);
        CHECK(doc["results"]["passed"] == 50);
        CHECK(doc["seed"] == 12345);
    }
    {
        CliResult r = run(
            {"verify", "--q", "3", "--inject-fault", "structure-table", "--format", "json"});
        CHECK(r.code == 1);
        ordered_json doc = parse(r);
        CHECK(doc["results"]["failed"].get<int64_t>() > 0);
        bool witnessed = false;
        for (const auto& c : doc["checks"])
            if (c["status"] == "fail" && !c["witness"].get<std::string>().empty())
                witnessed = true;
        CHECK(witnessed);
    }
    {
        CliResult r = run(
            {"verify", "--q", "4", "--inject-fault", "scheme-adjacency", "--format", "json"});
        CHECK(r.code == 1);
        ordered_json doc = parse(r);
        bool witnessed = false;
        for (const auto& c : doc["checks"])
            if (c["status"] == "fail" && !c["witness"].get<std::string>().empty())
                witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("verify --all aggregates every battery") {
    CliResult r = run({"verify", "--q", "3", "--all", "--format", "json"});
    REQUIRE(r.code == 0);
    ordered_json doc = parse(r);
    CHECK(doc["results"]["mode"] == "full");
    bool timed = false;
    for (const auto& c : doc["checks"])
        if (c["name"].get<std::string>().find("wall time") != std::string::npos) timed = true;
    CHECK(timed);
}

TEST_CASE("q caps come from SC_MAX_Q and --max-q") {
    REQUIRE(setenv("SC_MAX_Q", "5", 1) == 0);
    CHECK(run({"mul", "--q", "7", "--x", "B", "--y", "C"}).code == 2);
    CHECK(run({"mul", "--q", "7", "--x", "B", "--y", "C", "--max-q", "7"}).code == 0);
    REQUIRE(setenv("SC_MAX_Q", "banana", 1) == 0);
    CHECK(run({"mul", "--q", "3", "--x", "B", "--y", "C"}).code == 2);
    REQUIRE(unsetenv("SC_MAX_Q") == 0);
    CHECK(run({"mul", "--q", "7", "--x", "B", "--y", "C"}).code == 0);
    CHECK(run({"mul", "--q", "11", "--x", "B", "--y", "C"}).code == 2);
    CHECK(run({"mul", "--q", "11", "--x", "B", "--y", "C", "--max-q", "11"}).code == 0);
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "cli_out_test.json";
    CliResult r =
        run({"classes", "--q", "3", "--format", "json", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    ordered_json doc = ordered_json::parse(in);
    CHECK(doc["command"] == "classes");
    in.close();
    std::remove(path.c_str());
}
