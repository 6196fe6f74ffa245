#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kloos/cli.hpp"
#include "kloos/serialization.hpp"

using namespace kloos;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("kloos_cli_" + name)).string();
}

}  // namespace

TEST(Cli, ExitCodeMatrix) {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"field", "--p", "2", "--d", "4"}, 0},
        {{"field", "--p", "4", "--d", "2"}, 2},
        {{"field", "--p", "2", "--d", "23"}, 2},
        {{"kloosterman", "eval", "--p", "5", "--d", "1", "--b", "1"}, 0},
        {{"kloosterman", "eval", "--p", "5", "--d", "2", "--b", "g^7"}, 0},
        {{"kloosterman", "eval", "--p", "5", "--d", "1", "--b", "0"}, 2},
        {{"kloosterman", "eval", "--p", "5", "--d", "1", "--b", "7"}, 2},
        {{"kloosterman", "eval", "--p", "5", "--d", "1"}, 2},
        {{"dickson", "coeffs", "--n", "5", "--r", "2"}, 0},
        {{"dickson", "eval", "--n", "5", "--r", "2", "--x", "1/3"}, 0},
        {{"dickson", "eval", "--n", "5", "--r", "2", "--x", "abc"}, 2},
        {{"minpoly", "--p", "5", "--m", "1", "--a", "1"}, 0},
        {{"minpoly", "--p", "7", "--m", "2", "--a", "d^5"}, 0},
        {{"minpoly", "--p", "5", "--m", "1", "--a", "0"}, 2},
        {{"irred", "--n", "9", "--r", "3"}, 0},
        {{"irred", "--n", "9", "--r", "3", "--certify-primes", "10"}, 0},
        {{"irred", "--n", "8", "--r", "3"}, 2},
        {{"irred", "--n", "9", "--r", "1"}, 2},
        {{"lucas", "primdiv", "--P", "1", "--Q", "-1", "--k", "12"}, 0},
        {{"lucas", "check", "--P", "1", "--Q", "-1", "--kmax", "100"}, 0},
        {{"lucas", "check", "--P", "2", "--Q", "4", "--kmax", "100"}, 2},
        {{"lucas", "check", "--P", "1", "--Q", "-1", "--kmin", "2", "--kmax", "13"}, 1},
        {{"lucas", "primdiv", "--P", "2", "--Q", "4", "--k", "12"}, 2},
        {{"search", "--p", "2", "--max-order", "4096"}, 0},
        {{"search", "--p", "2", "--max-order", "131072"}, 2},
        {{"search", "--p", "6"}, 2},
        {{"replay", "--p", "7", "--l", "2"}, 0},
        {{"replay", "--p", "3", "--l", "2"}, 2},
        {{"carlitz", "--p", "5", "--m", "1", "--n", "3", "--a", "1"}, 0},
        {{"carlitz", "--p", "2", "--m", "2", "--n", "2", "--a", "d^1"}, 0},
        {{"carlitz", "--p", "5", "--m", "1", "--n", "3", "--a", "0"}, 2},
        {{"frobnicate"}, 2},
        {{}, 2},
        {{"field", "--p", "2", "--d", "2", "--format", "xml"}, 2},
        {{"field", "--p", "2", "--d", "2", "--format", "csv"}, 2},
        {{"field", "--p", "2", "--d", "4", "--ceiling", "8"}, 2},
    };
    for (const auto& c : cases) {
        std::string joined;
        for (const auto& a : c.args) joined += a + " ";
        EXPECT_EQ(run(c.args).code, c.code) << joined;
    }
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, CarlitzOutput) {
    const Invocation r = run({"carlitz", "--p", "5", "--m", "1", "--n", "3", "--a", "1"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_TRUE(j.at("equal").get<bool>());
    EXPECT_EQ(j.at("extension_sum").at("coords"), j.at("dickson_side").at("coords"));
}

TEST(Cli, KloostermanOutputUsesDecimalStrings) {
    const Invocation r = run({"kloosterman", "eval", "--p", "5", "--d", "1", "--b", "1"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_EQ(j.at("counts"), Json({2, 0, 1, 1, 0}));
    EXPECT_EQ(j.at("coords"), Json({"2", "0", "1", "1"}));
    EXPECT_FALSE(j.at("is_minus_one").get<bool>());
    EXPECT_EQ(kloosterman_value_from_json(j).value.lambda_residue(), 4u);
}

TEST(Cli, IrredVerdict) {
    const Json j = run({"irred", "--n", "9", "--r", "3"}).json();
    EXPECT_EQ(j.at("verdict"), "irreducible");
    EXPECT_EQ(j.at("turnwald")[0].at("s"), "27");
    EXPECT_EQ(certificate_from_json(j).verdict, Verdict::irreducible);
}

TEST(Cli, SearchHitsAndCsv) {
    const Invocation r = run({"search", "--p", "2", "--max-order", "4096"});
    ASSERT_EQ(r.code, 0);
    const SearchReport report = r.json().get<SearchReport>();
    ASSERT_FALSE(report.hits.empty());
    for (const auto& hit : report.hits) EXPECT_EQ(hit.field_order(), 16u);
    EXPECT_EQ(report.ceiling, 4096u);

    const Invocation csv = run({"search", "--p", "2", "--max-order", "256", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("p,m,n,a_index,field_order,counts\n", 0), 0u);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"minpoly", "--p", "13", "--m", "1", "--a", "5", "--seed", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutputFileAndConfig) {
    const std::string out_path = temp_path("out.json");
    const std::string cfg_path = temp_path("run.ini");
    std::ofstream(cfg_path) << "seed = 4\noutput = " << out_path << "\n";
    const Invocation r = run({"--config", cfg_path, "field", "--p", "3", "--d", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json from_file = Json::parse(std::ifstream(out_path));
    EXPECT_EQ(from_file, r.json());
    // The configured seed is used, and a flag overrides the file.
    EXPECT_EQ(r.out, run({"field", "--p", "3", "--d", "3", "--seed", "4"}).out);
    const Invocation flag = run({"--config", cfg_path, "--seed", "0", "field", "--p", "3", "--d", "3"});
    EXPECT_EQ(flag.out, run({"field", "--p", "3", "--d", "3", "--seed", "0"}).out);
    std::filesystem::remove(out_path);
    std::filesystem::remove(cfg_path);
}

TEST(Cli, EnvironmentCeilingIsEchoed) {
    ::setenv(cli::kCeilingEnv, "256", 1);
    const Invocation r = run({"search", "--p", "2"});
    const Invocation too_big = run({"kloosterman", "eval", "--p", "2", "--d", "9", "--b", "1"});
    ::unsetenv(cli::kCeilingEnv);
    ASSERT_EQ(r.code, 0);
    const Json header = r.json().at("header");
    EXPECT_EQ(header.at("ceiling"), 256);
    EXPECT_EQ(header.at("ceiling_source"), std::string("env:") + cli::kCeilingEnv);
    EXPECT_EQ(too_big.code, 2);
    EXPECT_EQ(run({"search", "--p", "2", "--max-order", "256"}).json().at("header").at("ceiling_source"), "flag");
}

TEST(Cli, ReplayOutput) {
    const Invocation r = run({"replay", "--p", "5", "--l", "3"});
    ASSERT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_GE(j.at("steps").size(), 5u);
}
