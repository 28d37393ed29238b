#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

// End-to-end tests of the installed command-line binary: every test spawns
// the real executable (path injected at compile time) and inspects exit
// code, stdout and stderr.

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "probarg_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fixture(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    ++counter;
    fs::path out = work_dir() / ("stdout" + std::to_string(counter) + ".txt");
    fs::path err = work_dir() / ("stderr" + std::to_string(counter) + ".txt");
    std::string cmd = std::string("\"") + PROBARG_CLI_PATH + "\" " + args + " > " +
                      out.string() + " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    CliResult r;
    r.code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// six arguments, the running example used throughout the test suite
const char* kSixArgApx =
    "arg(a1). arg(a2). arg(a3). arg(a4). arg(a5). arg(a6).\n"
    "att(a1,a2). att(a2,a1). att(a2,a3). att(a3,a4).\n"
    "att(a4,a5). att(a5,a4). att(a5,a3). att(a6,a5).\n";

const char* kSixArgAssign =
    "a1 0.7\na2 0.3\na3 0.5\na4 0.5\na5 0.2\na6 0.4\n";

std::string six_file() {
    static std::string p = fixture("six.apx", kSixArgApx).string();
    return p;
}

std::map<std::string, std::string> parse_pass_fail(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("  ", 0) == 0) continue;   // violation detail
        auto colon = line.find(": ");
        if (colon != std::string::npos)
            out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

} // namespace

TEST_CASE("cli semantics output") {
    SUBCASE("grounded labelling") {
        auto r = run_cli("semantics --file " + six_file() + " --semantics grounded");
        CHECK(r.code == 0);
        CHECK(r.out == "IN: a6\nOUT: a5\nUNDEC: a1 a2 a3 a4\n");
        CHECK(r.err.empty());
    }
    SUBCASE("stable labellings, blank-line separated") {
        auto r = run_cli("semantics --file " + six_file() + " --semantics stable");
        CHECK(r.code == 0);
        CHECK(r.out ==
              "IN: a1 a3 a6\nOUT: a2 a4 a5\nUNDEC:\n"
              "\n"
              "IN: a2 a4 a6\nOUT: a1 a3 a5\nUNDEC:\n");
    }
    SUBCASE("json mode") {
        auto r = run_cli("semantics --file " + six_file() +
                         " --semantics grounded --output json");
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        REQUIRE(j["labellings"].size() == 1);
        CHECK(j["labellings"][0]["in"] == json::array({"a6"}));
        CHECK(j["labellings"][0]["out"] == json::array({"a5"}));
        CHECK(j["labellings"][0]["undec"] == json::array({"a1", "a2", "a3", "a4"}));
    }
}

TEST_CASE("cli epistemic labelling") {
    auto assign = fixture("six.assign", kSixArgAssign).string();
    SUBCASE("text") {
        auto r = run_cli("epistemic --file " + six_file() + " --assignment " + assign);
        CHECK(r.code == 0);
        CHECK(r.out ==
              "IN: a1\nOUT: a2 a5 a6\nUNDEC: a3 a4\nEXTENSION: a1\n");
    }
    SUBCASE("json") {
        auto r = run_cli("epistemic --file " + six_file() + " --assignment " +
                         assign + " --output json");
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["extension"] == json::array({"a1"}));
        CHECK(j["labellings"][0]["undec"] == json::array({"a3", "a4"}));
    }
    SUBCASE("partial assignment is a usage error") {
        auto part = fixture("partial.assign", "a1 0.7\na2 0.3\n").string();
        auto r = run_cli("epistemic --file " + six_file() + " --assignment " + part);
        CHECK(r.code == 3);
        CHECK(r.err.find("must assign every argument") != std::string::npos);
        CHECK(r.err.find("4 missing") != std::string::npos);
    }
}

TEST_CASE("cli property check") {
    auto assign = fixture("six.assign", kSixArgAssign).string();
    SUBCASE("full classification with violations") {
        auto r = run_cli("check --file " + six_file() + " --assignment " + assign);
        CHECK(r.code == 1);   // not every property holds
        auto verdicts = parse_pass_fail(r.out);
        REQUIRE(verdicts.size() == 12);
        const std::map<std::string, std::string> expected = {
            {"COH", "PASS"}, {"SFOU", "FAIL"}, {"FOU", "FAIL"}, {"SOPT", "PASS"},
            {"OPT", "FAIL"}, {"JUS", "FAIL"},  {"TER", "FAIL"}, {"RAT", "PASS"},
            {"NEU", "FAIL"}, {"INV", "FAIL"},  {"MAX", "FAIL"}, {"MIN", "FAIL"},
        };
        CHECK(verdicts == expected);
        CHECK(r.out.find("  SFOU a6: P >= 0.5 (lhs 0.4, rhs 0.5)") != std::string::npos);
    }
    SUBCASE("passing subset exits zero") {
        auto r = run_cli("check --file " + six_file() + " --assignment " + assign +
                         " --properties COH,RAT");
        CHECK(r.code == 0);
        CHECK(r.out == "COH: PASS\nRAT: PASS\n");
    }
    SUBCASE("json shape") {
        auto r = run_cli("check --file " + six_file() + " --assignment " + assign +
                         " --properties SFOU --output json");
        CHECK(r.code == 1);
        json j = json::parse(r.out);
        REQUIRE(j["properties"].size() == 1);
        CHECK(j["properties"][0]["id"] == "SFOU");
        CHECK(j["properties"][0]["holds"] == false);
        REQUIRE(j["properties"][0]["violations"].size() == 1);
        CHECK(j["properties"][0]["violations"][0]["arguments"] ==
              json::array({"a6"}));
        CHECK(j["properties"][0]["violations"][0]["lhs"].get<double>() ==
              doctest::Approx(0.4));
    }
    SUBCASE("unknown property is a usage error") {
        auto r = run_cli("check --file " + six_file() + " --assignment " + assign +
                         " --properties COH,BOGUS");
        CHECK(r.code == 3);
        CHECK(r.err.find("unknown property 'BOGUS'") != std::string::npos);
    }
}

TEST_CASE("cli completion") {
    auto ab = fixture("ab.apx", "arg(A).\narg(B).\natt(A,B).\n").string();
    SUBCASE("fully determined completion, exact output") {
        auto pin = fixture("pin_b.assign", "B 0.3\n").string();
        auto r = run_cli("complete --file " + ab + " --partial " + pin +
                         " --properties INV");
        CHECK(r.code == 0);
        CHECK(r.out ==
              "A 0.7\nB 0.3\n"
              "# entropy 1.2217286\n"
              "# status optimal\n"
              "# kkt 0\n");
    }
    SUBCASE("infeasible pins, certificate names the structural row") {
        auto tri = fixture("tri.apx",
                           "arg(A). arg(B). arg(C).\n"
                           "att(A,B). att(A,C). att(B,C).\n")
                       .string();
        auto pins = fixture("tri.assign", "B 0.7\nC 0.6\n").string();
        auto r = run_cli("complete --file " + tri + " --partial " + pins +
                         " --properties COH");
        CHECK(r.code == 1);
        CHECK(r.out ==
              "# entropy 0\n"
              "# status infeasible\n"
              "# kkt 0\n"
              "# violated: COH B->C (violated by 0.3)\n");
    }
    SUBCASE("json carries status, assignment and iteration count") {
        auto cyc = fixture("cyc.apx",
                           "arg(A). arg(B). arg(C).\n"
                           "att(A,B). att(B,C). att(C,A).\n")
                       .string();
        auto pin = fixture("pin_a.assign", "A 0.4\n").string();
        auto r = run_cli("complete --file " + cyc + " --partial " + pin +
                         " --properties COH --output json");
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        const auto& c = j["completion"];
        CHECK(c["status"] == "optimal");
        CHECK(c["assignment"]["A"].get<double>() == doctest::Approx(0.4));
        CHECK(c["assignment"]["B"].get<double>() == doctest::Approx(0.5).epsilon(1e-5));
        CHECK(c["iterations"].get<int>() > 0);
        CHECK(c["kkt"].get<double>() <= 1e-8);
        CHECK(c["certificate"].empty());
    }
    SUBCASE("nonlinear property is rejected") {
        auto pin = fixture("pin_b.assign", "B 0.3\n").string();
        auto r = run_cli("complete --file " + ab + " --partial " + pin +
                         " --properties RAT");
        CHECK(r.code == 3);
        CHECK(r.err.find("error:") != std::string::npos);
    }
}

TEST_CASE("cli verify") {
    auto r = run_cli("verify --file " + six_file() + " --samples 500");
    CHECK(r.code == 0);
    CHECK(r.out.find("convexity_RAT: OK (expected counterexample:") != std::string::npos);
    CHECK(r.out.find("COUNTEREXAMPLE") == std::string::npos);
    // every line reports OK
    std::istringstream ss(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(ss, line)) {
        ++lines;
        CHECK(line.find(": OK") != std::string::npos);
    }
    CHECK(lines > 30);

    SUBCASE("deterministic across runs") {
        auto again = run_cli("verify --file " + six_file() + " --samples 500");
        CHECK(again.code == 0);
        CHECK(again.out == r.out);
    }
    SUBCASE("json mode") {
        auto j = run_cli("verify --file " + six_file() +
                         " --samples 300 --output json");
        CHECK(j.code == 0);
        json parsed = json::parse(j.out);
        REQUIRE(parsed["verify"].size() > 30);
        for (const auto& item : parsed["verify"]) CHECK(item["ok"] == true);
    }
}

TEST_CASE("cli input formats") {
    SUBCASE("tgf frameworks use node ids as names") {
        auto tgf = fixture("chain.tgf", "1 first\n2 second\n#\n1 2\n").string();
        auto r = run_cli("semantics --file " + tgf +
                         " --format tgf --semantics grounded");
        CHECK(r.code == 0);
        CHECK(r.out == "IN: 1\nOUT: 2\nUNDEC:\n");
    }
    SUBCASE("determinism of completion output") {
        auto cyc = fixture("cyc2.apx",
                           "arg(A). arg(B). arg(C).\n"
                           "att(A,B). att(B,C). att(C,A).\n")
                       .string();
        auto pin = fixture("pin_a2.assign", "A 0.4\n").string();
        std::string args = "complete --file " + cyc + " --partial " + pin +
                           " --properties COH";
        auto r1 = run_cli(args);
        auto r2 = run_cli(args);
        CHECK(r1.code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("cli error handling and exit codes") {
    SUBCASE("missing framework file") {
        auto r = run_cli("semantics --file /nonexistent/x.apx --semantics grounded");
        CHECK(r.code == 2);
        CHECK(r.err.find("cannot read file") != std::string::npos);
    }
    SUBCASE("malformed framework file") {
        auto bad = fixture("broken.apx", "arg(a)\natt(a\n").string();
        auto r = run_cli("semantics --file " + bad + " --semantics grounded");
        CHECK(r.code == 2);
        CHECK(r.err.find("cannot parse") != std::string::npos);
    }
    SUBCASE("assignment referencing an unknown argument") {
        auto assign = fixture("ghost.assign", "ghost 0.5\n").string();
        auto r = run_cli("epistemic --file " + six_file() + " --assignment " + assign);
        CHECK(r.code == 3);
    }
    SUBCASE("out-of-range probability is a parse error") {
        auto assign = fixture("range.assign", "a1 1.5\n").string();
        auto r = run_cli("epistemic --file " + six_file() + " --assignment " + assign);
        CHECK(r.code == 2);
    }
    SUBCASE("usage errors from the argument parser") {
        CHECK(run_cli("semantics --file x.apx --semantics bogus").code == 3);
        CHECK(run_cli("semantics --file " + six_file() + " --semantics grounded" +
                      " --no-such-flag")
                  .code == 3);
        CHECK(run_cli("nonsense").code == 3);
        CHECK(run_cli("verify --file " + six_file() + " --samples 0").code == 3);
        CHECK(run_cli("").code == 3);   // a subcommand is required
    }
    SUBCASE("--help succeeds") {
        CHECK(run_cli("--help").code == 0);
        CHECK(run_cli("complete --help").code == 0);
    }
}
