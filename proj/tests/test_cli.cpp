#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hblm/cli.hpp"
#include "hblm/report.hpp"

using namespace hblm;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hblm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("hblm_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CharpolOfDeformationLattice)
{
    auto r = run({"charpol", "--p", "2", "--e", "2", "--base", "feps", "--lattice", "pi*f1+eps*f1 ; pi*f2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "X^2 - eps*X\n");
}

TEST(Cli, CharpolGenericAndJson)
{
    auto r = run({"charpol", "--p", "3", "--e", "2", "--lattice", "f1", "--generic"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "X^2 + X*t0 + t0^2\n");
    auto j = run({"charpol", "--p", "3", "--e", "2", "--lattice", "f1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["charpol"], "X^2");
}

TEST(Cli, VerifyWritesJsonReport)
{
    auto dir = temp_dir("verify");
    auto path = (dir / "report.json").string();
    auto r = run({"verify", "--p", "3", "--e", "2", "--base", "feps", "--suite", "all", "--format", "json", "-o", path});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(slurp(path));
    ASSERT_EQ(j["reports"].size(), all_checks().size());
    for (const auto& rep : j["reports"]) {
        EXPECT_NE(rep["status"], "fail");
        // Parse then reserialize gives the same document.
        EXPECT_EQ(to_json(report_from_json(rep)).dump(), rep.dump());
    }
}

TEST(Cli, BudgetExceededIsAUsageError)
{
    auto r = run({"enumerate", "--p", "7", "--e", "3", "--base", "feps"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
    EXPECT_NE(r.err.find("--budget"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--p", "2", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"ring-info", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"ring-info", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run({"charpol", "--p", "2"}).code, 2);  // --lattice missing
    EXPECT_EQ(run({"charpol", "--p", "2", "--lattice", "pi*f3"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RingInfoAndConfigFile)
{
    auto dir = temp_dir("config");
    auto cfg = dir / "ring.cfg";
    std::ofstream(cfg) << "# dual numbers over F3\np=3 eps=1\ne=2\n";
    auto r = run({"ring-info", "--config", cfg.string(), "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["label"], "F3[eps] e=2");
    EXPECT_EQ(j["pi_charpol"], "X^2");
    // Flags override the file.
    auto o = run({"ring-info", "--config", cfg.string(), "--e", "3", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(o.out)["label"], "F3[eps] e=3");
    auto z = run({"ring-info", "--p", "3", "--e", "2", "--base", "zpn", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(z.out)["label"], "Z/9 e=2");
}

TEST(Cli, ClassifyAndEnumerate)
{
    auto c = run({"classify", "--p", "2", "--e", "2", "--format", "csv"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "p,n,f,eps,e,u,N,DP,K,R,dp_eq_k\n2,1,1,0,2,1,7,7,7,6,1\n");
    auto t = run({"classify", "--p", "2", "--e", "2"});
    EXPECT_NE(t.out.find("type (1,1): 1"), std::string::npos);
    auto e = run({"enumerate", "--p", "2", "--e", "2", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(e.out)["count"], 7);
}

TEST(Cli, CheckLattice)
{
    auto r = run({"check-lattice", "--p", "3", "--e", "2", "--base", "feps", "--lattice", "pi*f1+eps*f1 ; pi*f2", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["point"], true);
    EXPECT_EQ(j["DP"], false);
    EXPECT_EQ(j["K"], false);
    EXPECT_EQ(j["R"], false);
    auto pm = run({"check-lattice", "--p", "2", "--e", "2", "--lattice", "pi*f1 ; pi*f2", "--format", "json"});
    auto k = nlohmann::json::parse(pm.out);
    EXPECT_EQ(k["DP"], true);
    EXPECT_EQ(k["R"], false);
    EXPECT_EQ(k["type"], "(1,1)");
}

TEST(Cli, IdenticalInvocationsGiveIdenticalOutput)
{
    std::vector<std::string> args{"verify", "--grid", "--suite", "dp_equals_k,charpol_square", "--format", "json", "--no-timing"};
    auto a = run(args);
    auto b_args = args;
    b_args.insert(b_args.end(), {"--workers", "3"});
    auto b = run(b_args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, run(args).out);
}

TEST(Cli, AtlasWritesOneJsonPerRingAndACsv)
{
    auto dir = temp_dir("atlas");
    auto rings = dir / "rings.txt";
    std::ofstream(rings) << "p=2 e=2\np=3 e=1 # comment\n\n";
    auto r = run({"atlas", "--rings", rings.string(), "-o", (dir / "out").string(), "--no-timing"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(dir / "out" / "atlas.csv"), "p,n,f,eps,e,u,N,DP,K,R,dp_eq_k\n2,1,1,0,2,1,7,7,7,6,1\n3,1,1,0,1,1,4,4,4,4,1\n");
    auto j = nlohmann::json::parse(slurp(dir / "out" / "F2_e_2.json"));
    EXPECT_EQ(j["check"], "classify");
    EXPECT_EQ(j["types"]["(1,1)"], 1);
}
