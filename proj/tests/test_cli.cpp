#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "twinbent/cli.hpp"

using namespace twinbent::cli;
using nlohmann::json;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured invoke(RunConfig config)
{
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

RunConfig make(const std::string& sub, int m)
{
    RunConfig c;
    c.subcommand = sub;
    c.m = m;
    return c;
}

} // namespace

TEST_CASE("bent reports the spectrum")
{
    auto c = make("bent", 3);
    const auto r = invoke(c);
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["command"] == "bent");
    CHECK(j["bent"] == true);
    CHECK(j["spectrum_abs"] == 8);
}

TEST_CASE("certificate at m = 4")
{
    const auto r = invoke(make("certificate", 4));
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["rho"] == 9);
    CHECK(j["blue"] == 16);
    CHECK(j["conclusion"] == "non-isomorphic");
}

TEST_CASE("srg for tau at m = 2")
{
    auto c = make("srg", 2);
    c.fn = "tau";
    const auto r = invoke(c);
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["v"] == 16);
    CHECK(j["k"] == 6);
    CHECK(j["lambda"] == 2);
    CHECK(j["mu"] == 2);
    CHECK(j["ok"] == true);
}

TEST_CASE("every subcommand succeeds at m = 2")
{
    for (const auto& sub : subcommands()) {
        const auto r = invoke(make(sub, 2));
        CAPTURE(sub);
        CHECK(r.code == kExitOk);
        const auto j = json::parse(r.out);
        CHECK(j["ok"] == true);
    }
}

TEST_CASE("output is deterministic")
{
    for (const char* sub : {"all", "conjectures", "hadamard"}) {
        auto c = make(sub, 3);
        if (std::string(sub) == "all") c.m = 2;
        CHECK(invoke(c).out == invoke(c).out);
    }
    auto c = make("clique", 3);
    const auto single = invoke(c).out;
    c.threads = 3;
    CHECK(invoke(c).out == single);
}

TEST_CASE("usage errors have their own exit code")
{
    CHECK(invoke(make("nope", 2)).code == kExitUsage);
    CHECK(invoke(make("bent", 0)).code == kExitUsage);
    CHECK(invoke(make("bent", 7)).code == kExitUsage);
    CHECK(invoke(make("hadamard", 4)).code == kExitUsage);
    auto c = make("bent", 2);
    c.fn = "phi";
    CHECK(invoke(c).code == kExitUsage);
    c = make("srg", 2);
    c.format = OutputFormat::csv;
    const auto r = invoke(c);
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("budget exhaustion is reported as inconclusive")
{
    auto c = make("clique", 3);
    c.budget = 1;
    const auto r = invoke(c);
    CHECK(r.code == kExitInconclusive);
    const auto j = json::parse(r.out);
    CHECK(j["inconclusive"] == true);
    CHECK(j["exact"] == false);
}

TEST_CASE("alternative formats")
{
    auto c = make("bent", 1);
    c.format = OutputFormat::csv;
    auto r = invoke(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("index,digits,sigma,tau\n", 0) == 0);

    c = make("hadamard", 1);
    c.format = OutputFormat::text;
    r = invoke(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "+1 -1\n+1 +1\n");

    c = make("cayley", 1);
    c.format = OutputFormat::text;
    r = invoke(c);
    CHECK(r.out == "p edge 4 2\ne 1 2\ne 3 4\n");
}

TEST_CASE("--out writes to a file")
{
    const auto path = (std::filesystem::temp_directory_path() / "twinbent_cli_test.json").string();
    auto c = make("srg", 1);
    c.out = path;
    const auto r = invoke(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = json::parse(in);
    CHECK(j["v"] == 4);
    std::remove(path.c_str());
}

TEST_CASE("hadamard at m = 2 documents exhaustive absence")
{
    const auto r = invoke(make("hadamard", 2));
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["B_search"]["exhaustive"] == true);
}
