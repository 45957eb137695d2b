#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <padic/config_io.hpp>

using namespace padic;

namespace {

std::string cli_path() {
    const char* p = std::getenv("PADIC_WELCH_CLI");
    return p ? p : "";
}

std::string write_temp(const std::string& name, const std::string& contents) {
    std::string path = std::string("/tmp/padic_welch_test_") + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "/tmp/padic_welch_test_stdout";
    std::string command = cli_path() + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(command.c_str());
    RunResult r{-1, ""};
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

const char* kOnb2 = R"({"p": 2, "d": 2, "vectors": [["1","0"],["0","1"]]})";
const char* kSingle = R"({"p": 2, "d": 2, "vectors": [["1","0"]]})";
const char* kBadPrime = R"({"p": 4, "d": 1, "vectors": [["1"]]})";
const char* kTrivialZauner = R"({"p": 2, "d": 1, "vectors": [["1"]]})";

} // namespace

TEST_CASE("cli golden exit codes") {
    REQUIRE_MESSAGE(!cli_path().empty(), "PADIC_WELCH_CLI must point at the built binary");

    std::string onb = write_temp("onb.json", kOnb2);
    std::string single = write_temp("single.json", kSingle);
    std::string bad = write_temp("bad.json", kBadPrime);
    std::string zauner1 = write_temp("zauner1.json", kTrivialZauner);

    // 0: positive verdicts
    CHECK(run_cli("bound --input " + onb).exit_code == 0);
    CHECK(run_cli("verify --input " + onb).exit_code == 0);
    CHECK(run_cli("zauner --input " + zauner1).exit_code == 0);
    CHECK(run_cli("equiangular --input " + onb + " --a 1 --gamma 0").exit_code == 0);
    CHECK(run_cli("classical --d 2 --n 4").exit_code == 0);
    CHECK(run_cli("search --p 2 --d 1 --n 3 --mode q1 --entries 1,-1").exit_code == 0);

    // 1: negative verdicts
    CHECK(run_cli("verify --input " + single).exit_code == 1);
    CHECK(run_cli("tensor --input " + onb + " --m 2").exit_code == 1);
    CHECK(run_cli("search --p 2 --d 1 --n 2 --mode q1 --entries 1,-1").exit_code == 1);
    CHECK(run_cli("equiangular --input " + onb + " --a 1 --gamma 2^0").exit_code == 1);

    // 2: precondition not met
    CHECK(run_cli("bound --input " + single).exit_code == 2);
    CHECK(run_cli("bound --input " + onb + " --m 2").exit_code == 2);
    CHECK(run_cli("zauner --input " + onb).exit_code == 2); // n != d^2
    CHECK(run_cli("search --p 2 --d 2 --n 4 --mode q1 --height 2 --budget 100").exit_code == 2);

    // 3: input errors
    CHECK(run_cli("bound --input " + bad).exit_code == 3);
    CHECK(run_cli("bound --input /nonexistent.json").exit_code == 3);
    CHECK(run_cli("bound").exit_code == 3);
    CHECK(run_cli("equiangular --input " + onb + " --a 1").exit_code == 3); // missing gamma
    CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 3);
}

TEST_CASE("cli text output mentions the tightness witness on exit 2") {
    std::string single = write_temp("single.json", kSingle);
    RunResult r = run_cli("bound --input " + single);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("tight: no") != std::string::npos);
    CHECK(r.output.find("witness") != std::string::npos);
}

TEST_CASE("cli machine output round-trips exact quantities") {
    std::string onb = write_temp("onb3.json", R"({"p": 3, "d": 3, "vectors": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
    RunResult r = run_cli("bound --input " + onb + " --format machine");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["tool"] == "padic-welch");
    CHECK(doc["command"] == "bound");
    CHECK(doc["exit_code"] == 0);

    // parse back the input config and every exact quantity
    FrameConfig echoed = config_from_json(doc["input"]);
    CHECK(echoed.ctx.p() == 3);
    WelchReport recomputed = welch_general(echoed, 1);
    CHECK(parse_absvalue(doc["result"]["lhs"].get<std::string>(), 3) == recomputed.lhs);
    CHECK(parse_absvalue(doc["result"]["rhs"].get<std::string>(), 3) == recomputed.rhs);
    CHECK(parse_rational(doc["result"]["precondition"]["b"].get<std::string>()) == recomputed.precondition.b);
    CHECK(doc["result"]["equality"] == true);
}

TEST_CASE("cli machine errors are structured") {
    std::string bad = write_temp("bad.json", kBadPrime);
    RunResult r = run_cli("bound --input " + bad + " --format machine");
    CHECK(r.exit_code == 3);
    Json doc = Json::parse(r.output);
    CHECK(doc["error"]["kind"] == "input");
    CHECK(doc["exit_code"] == 3);
}

TEST_CASE("cli search machine report echoes the spec") {
    std::string spec = write_temp("spec.json", R"({
        "p": 2, "d": 1, "n": 3, "mode": "q1", "entries": ["1", "-1"], "workers": 2
    })");
    RunResult r = run_cli("search --input " + spec + " --format machine");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.output);
    CHECK(doc["result"]["hit_count"] == 4);
    CHECK(doc["result"]["spec"]["mode"] == "q1");
    FrameConfig first = config_from_json(doc["result"]["hits"][0]["config"]);
    CHECK(q1_check(first).ok);
}
