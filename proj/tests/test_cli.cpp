#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ramanujan/cli.hpp"
#include "ramanujan/ram_signal.hpp"

using namespace ramanujan::cli;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args, const SelftestHooks& hooks = {})
{
    std::ostringstream out, err;
    const int code = run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / "ramanujan_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content)
{
    const fs::path path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

std::set<std::string> failing_checks(const Json& report)
{
    std::set<std::string> names;
    for (const Json& c : report["checks"])
        if (!c["passed"].get<bool>()) names.insert(c["name"].get<std::string>());
    return names;
}

}  // namespace

TEST_CASE("pi prints a single line")
{
    const Result r = invoke({"pi", "--method", "chudnovsky", "--digits", "42"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "3.141592653589793238462643383279502884197169\n");

    const Result j = invoke({"pi", "--method", "machin", "--digits", "20", "--json", "--report-convergence"});
    REQUIRE(j.code == kExitOk);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["value"] == "3.14159265358979323846");
    CHECK(parsed["correct_digits"] == 20);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"graph", "build", "--p", "4", "--q", "29"}).code == kExitDomain);
    CHECK(invoke({"pi", "--digits", "0"}).code == kExitDomain);
    CHECK(invoke({"pi", "--digits", "10", "--frobnicate"}).code == kExitUsage);
    CHECK(invoke({"pi", "--method", "leibniz", "--digits", "10"}).code == kExitUsage);
    CHECK(invoke({"pi"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"graph"}).code == kExitUsage);
    CHECK(invoke({"sums", "table", "--q", "x", "--n", "3"}).code == kExitUsage);
    CHECK(invoke({"cf", "verify", "--name", "nope"}).code == kExitDomain);
    const Result help = invoke({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("selftest") != std::string::npos);
}

TEST_CASE("cf subcommands")
{
    const Result verify = invoke({"cf", "verify", "--name", "e", "--digits", "30", "--json"});
    REQUIRE(verify.code == kExitOk);
    const Json v = Json::parse(verify.out);
    CHECK(v["match"] == true);
    CHECK(v["name"] == "e");
    CHECK(v["digits"] == 30);
    for (const char* key : {"status", "abs_error", "depth_used"}) CHECK(v.contains(key));

    const Result eval = invoke({"cf", "eval", "--a-poly", "3,7,4", "--b-poly", "-2,-4,-2,0,0", "--a0", "4", "--digits", "30"});
    CHECK(eval.code == kExitOk);
    CHECK(eval.out == "3.258891353270929454597917356924\n");  // 1/(1 - log 2)

    CHECK(invoke({"cf", "expand", "--rational", "5000/127"}).out == "[39,2,1,2,2,1,4]\n");
    CHECK(invoke({"cf", "expand", "--constant", "pi", "--terms", "5"}).out == "[3,7,15,1,292]\n");
    CHECK(invoke({"cf", "expand"}).code == kExitDomain);
}

TEST_CASE("graph build and check")
{
    const Result stdout_build = invoke({"graph", "build", "--p", "5", "--q", "13"});
    REQUIRE(stdout_build.code == kExitOk);
    CHECK(stdout_build.out.rfind("2184 6552\n", 0) == 0);

    const std::string path = (scratch_dir() / "x5_13.txt").string();
    const Result built = invoke({"graph", "build", "--p", "5", "--q", "13", "--out", path, "--json"});
    REQUIRE(built.code == kExitOk);
    const Json meta = Json::parse(built.out);
    CHECK(meta["branch"] == "PGL");
    CHECK(meta["vertices"] == 2184);
    CHECK(meta["degree"] == 6);
    for (const char* key : {"p", "q", "lambda", "bound", "is_ramanujan"}) CHECK(meta.contains(key));
    std::ifstream sidecar(path + ".json");
    CHECK(Json::parse(sidecar) == meta);

    const Result check = invoke({"graph", "check", "--in", path, "--degree", "6", "--json"});
    CHECK(check.code == kExitOk);
    const Json report = Json::parse(check.out);
    CHECK(report["regular"] == true);
    CHECK(report["connected"] == true);
    CHECK(report["bipartite"] == true);
    CHECK(report["lambda_nontrivial"].get<double>() <= 2 * std::sqrt(5.0));

    CHECK(invoke({"graph", "check", "--in", path, "--degree", "5"}).code == kExitDomain);
    CHECK(invoke({"graph", "check", "--in", "/nonexistent", "--degree", "5"}).code == kExitDomain);
}

TEST_CASE("sums subcommands")
{
    CHECK(invoke({"sums", "table", "--q", "6", "--n", "12"}).out == "2 1 -1 -2 -1 1 2 1 -1 -2 -1 1\n");
    const Result tau = invoke({"sums", "tau", "--max", "100", "--check-bound", "--json"});
    REQUIRE(tau.code == kExitOk);
    const Json t = Json::parse(tau.out);
    CHECK(t["tau"].size() == 100);
    CHECK(t["tau"][4] == "4830");
    CHECK(t["bound"]["holds"] == true);
    CHECK(t["bound"]["primes_checked"] == 25);
}

TEST_CASE("signal subcommands")
{
    std::string text;
    for (long n = 0; n < 21; ++n)
        text += std::to_string(ramanujan::rs::ramanujan_sum(3, n) + ramanujan::rs::ramanujan_sum(7, n)) + "\n";
    const std::string path = write_file("mix.txt", text);

    const Result periods = invoke({"signal", "periods", "--in", path, "--top", "2"});
    CHECK(periods.code == kExitOk);
    CHECK(periods.out == "7 0.75\n3 0.25\n");

    const Result decomposed = invoke({"signal", "decompose", "--in", path, "--json"});
    REQUIRE(decomposed.code == kExitOk);
    const Json d = Json::parse(decomposed.out);
    CHECK(d["N"] == 21);
    CHECK(d["residual"] == 0.0);
    REQUIRE(d["components"].size() == 4);
    CHECK(d["components"][1]["q"] == 3);
    CHECK(d["components"][1]["samples"][0] == 2.0);

    const std::string csv = write_file("c6.csv", "value\n2\n1\n-1\n-2\n-1\n1\n");
    const Json c6 = Json::parse(invoke({"signal", "periods", "--in", csv, "--top", "1", "--json"}).out);
    CHECK(c6["periods"][0]["q"] == 6);
    CHECK(c6["periods"][0]["energy_fraction"] == 1.0);

    CHECK(invoke({"signal", "periods", "--in", write_file("bad.txt", "1\nx\n")}).code == kExitDomain);
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<std::vector<std::string>> commands{
        {"pi", "--method", "ramanujan", "--digits", "300", "--json"},
        {"cf", "verify", "--name", "log2", "--digits", "50", "--json"},
        {"graph", "build", "--p", "5", "--q", "13", "--json"},
        {"sums", "tau", "--max", "50", "--check-bound"},
        {"selftest", "--level", "quick", "--json"}};
    for (const auto& argv : commands) {
        const Result a = invoke(argv);
        const Result b = invoke(argv);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("selftest reports the unattainable checks and nothing else")
{
    const Result r = invoke({"selftest", "--level", "quick", "--json"});
    CHECK(r.code == kExitDomain);
    const Json report = Json::parse(r.out);
    CHECK(report["passed"] == false);
    CHECK(failing_checks(report) == std::set<std::string>{"Madhava 21 terms", "conjecture zeta3"});
    for (const Json& c : report["checks"]) CHECK_FALSE(c["anchor"].get<std::string>().empty());
}

TEST_CASE("selftest full adds the spectral check")
{
    const Result r = invoke({"selftest", "--level", "full"});
    CHECK(r.out.find("PASS X^{5,29}: lambda <= 4.899") != std::string::npos);
    CHECK(r.out.find("d(6) series trend") != std::string::npos);
}

TEST_CASE("selftest catches a corrupted c_q table")
{
    SelftestHooks hooks;
    hooks.ramanujan_sum = [](ramanujan::nt::Natural q, long n) {
        const long v = ramanujan::rs::ramanujan_sum(q, n);
        return q == 6 && n == 3 ? v + 1 : v;
    };
    const Result r = invoke({"selftest", "--level", "quick"}, hooks);
    CHECK(r.code != kExitOk);
    CHECK(r.out.find("FAIL Table c_6") != std::string::npos);
}
