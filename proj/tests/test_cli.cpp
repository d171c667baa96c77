#include <ybforge/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ybforge;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int status;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = {})
{
    std::ostringstream out, err;
    std::istringstream in(input);
    const int status = cli::run_cli(args, cli::Io{out, err, in});
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        ::unsetenv("YBFORGE_GRID");
        dir_ = fs::temp_directory_path() / ("ybforge-cli-" + std::to_string(::getpid()) + "-" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override
    {
        ::unsetenv("YBFORGE_GRID");
        fs::remove_all(dir_);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, ExamplesList)
{
    const CliRun r = run({"examples", "list"});
    EXPECT_EQ(r.status, 0);
    std::string expected;
    for (const auto& n : example_names()) expected += n + "\n";
    EXPECT_EQ(r.out, expected);
    const json j = json::parse(run({"--json", "examples", "list"}).out);
    EXPECT_EQ(j["properties"]["examples"].size(), 8u);
}

TEST_F(Cli, ExpectedCheckStatus)
{
    const std::vector<std::pair<std::string, int>> cases{
        {"dual2", 0}, {"split2", 0}, {"mat2", 1}, {"t21", 0}, {"sym2jordan", 0}, {"heis3", 0}, {"gl11", 0}, {"theorem22", 0},
        {"t21:1,1", 1}, {"split2:-2/3", 0}, {"theorem22:3", 1}};
    for (const auto& [name, status] : cases) EXPECT_EQ(run({"check", name}).status, status) << name;
    EXPECT_EQ(run({"check", "sym2jordan", "--jordan-mode", "full"}).status, 1);
    EXPECT_EQ(run({"check", "sym2jordan", "--jordan-mode", "symmetrized"}).status, 0);
    EXPECT_EQ(run({"check", "mat2", "--expect", "associative", "--expect", "unital"}).status, 0);
    EXPECT_EQ(run({"check", "nosuch"}).status, 2);
    EXPECT_EQ(run({"check", "dual2", "--jordan-mode", "weird"}).status, 2);
}

TEST_F(Cli, CheckJsonReport)
{
    const json j = json::parse(run({"--json", "check", "t21"}).out);
    EXPECT_EQ(j["tool"], "ybforge");
    EXPECT_EQ(j["exit_status"], 0);
    EXPECT_EQ(j["properties"]["commutative"], true);
    EXPECT_EQ(j["properties"]["unital"], false);
    bool saw_w = false;
    for (const auto& c : j["checks"])
        if (c["name"].get<std::string>().starts_with("jordan_w")) saw_w = c["verdict"].get<bool>();
    EXPECT_TRUE(saw_w);
}

TEST_F(Cli, EmitCheckDualizeRoundTrip)
{
    const std::string a = path("t21.json"), c = path("t21co.json"), back = path("t21back.json");
    ASSERT_EQ(run({"examples", "emit", "t21", "--s", "-1", "--t", "-1", "-o", a}).status, 0);
    EXPECT_EQ(run({"check", a}).status, 0);
    ASSERT_EQ(run({"dualize", a, "-o", c}).status, 0);
    EXPECT_EQ(run({"check", c}).status, 0);
    ASSERT_EQ(run({"dualize", c, "-o", back}).status, 0);
    EXPECT_EQ(slurp(a), slurp(back));

    // the emitted dual is the built-in theorem22 coalgebra
    const std::string ref = path("t22.json");
    ASSERT_EQ(run({"examples", "emit", "theorem22", "--beta", "-1", "-o", ref}).status, 0);
    auto strip = [](json j) {
        j.erase("basis");
        return j;
    };
    EXPECT_EQ(strip(read_json_file(c)), strip(read_json_file(ref)));

    // stdout form equals the file form
    EXPECT_EQ(run({"examples", "emit", "t21"}).out, slurp(a));
}

TEST_F(Cli, MalformedInput)
{
    const std::string bad = path("bad.json");
    std::ofstream(bad) << "{\"kind\": \"algebra\", \"dim\": 2";
    const CliRun r = run({"check", bad});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_EQ(run({"check", path("missing.json")}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"ybe", "build", "rA", "--algebra", "t21"}).status, 2); // no unit
    const json j = json::parse(run({"--json", "check", bad}).out);
    EXPECT_EQ(j["exit_status"], 2);
    EXPECT_TRUE(j.contains("error"));
}

TEST_F(Cli, BuildThenVerify)
{
    const std::string op = path("ra.json");
    ASSERT_EQ(run({"ybe", "build", "rA", "--algebra", "mat2", "--alpha", "2", "--beta", "3", "--gamma", "2", "-o", op}).status, 0);
    EXPECT_EQ(run({"ybe", "verify", op}).status, 0);
    EXPECT_EQ(run({"ybe", "verify", op, "--braid", "--qybe"}).status, 1);
    EXPECT_EQ(run({"ybe", "verify", op, "--equiv"}).status, 0);

    const std::string no = path("ra_no.json");
    ASSERT_EQ(run({"ybe", "build", "rA", "--algebra", "dual2", "--alpha", "1", "--beta", "1", "--gamma", "2", "-o", no}).status, 0);
    EXPECT_EQ(run({"ybe", "verify", no, "--braid"}).status, 1);

    // stdin
    const std::string text = run({"ybe", "build", "phi", "--lie", "gl11", "--z", "1,1,0,0", "--alpha", "3"}).out;
    EXPECT_EQ(run({"ybe", "verify"}, text).status, 0);
    EXPECT_EQ(run({"ybe", "verify", "-"}, text).status, 0);
    EXPECT_EQ(run({"ybe", "verify"}, "[]").status, 2);

    for (const std::string kind : {"colored", "oneparam", "wxz38", "phiInverse", "superColored"}) {
        std::vector<std::string> args{"ybe", "build", kind};
        if (kind == "phiInverse" || kind == "superColored") args.insert(args.end(), {"--lie", "heis3", "--z", "z"});
        else args.insert(args.end(), {"--algebra", "dual2"});
        if (kind == "superColored") args.insert(args.end(), {"--alpha-table", "0:1,1:2", "--beta-table", "0:1,1:1"});
        const CliRun b = run(args);
        EXPECT_EQ(b.status, 0) << kind << b.err;
        EXPECT_NO_THROW(linop2_from_json(json::parse(b.out))) << kind;
    }
}

TEST_F(Cli, GridVerifiers)
{
    const json c = json::parse(run({"--json", "ybe", "colored", "--algebra", "mat2", "--p", "1", "--q", "2"}).out);
    EXPECT_EQ(c["exit_status"], 0);
    EXPECT_EQ(c["checks"][0]["certified"], true);
    EXPECT_EQ(run({"ybe", "colored", "--algebra", "dual2", "--grid", "3"}).status, 2);
    EXPECT_EQ(run({"ybe", "colored", "--algebra", "dual2", "--s", "0", "--t", "2"}).status, 0);
    EXPECT_EQ(run({"ybe", "oneparam", "--algebra", "dual2", "--q", "2"}).status, 0);
    EXPECT_EQ(run({"ybe", "oneparam", "--algebra", "dual2", "--grid", "6"}).status, 2);
    EXPECT_EQ(run({"ybe", "wxz38", "--algebra", "mat2", "--lambda", "-1", "--mu", "5"}).status, 0);
    EXPECT_EQ(run({"ybe", "phi", "--lie", "heis3", "--z", "z", "--alpha", "5"}).status, 0);
    EXPECT_EQ(run({"ybe", "phi", "--lie", "heis3", "--z", "x"}).status, 2);
    EXPECT_EQ(run({"ybe", "superColored", "--lie", "heis3", "--z", "z", "--alpha-table", "0:1,1:2,2:3", "--beta-table",
                   "0:1,1:1,2:1", "--s", "1", "--t", "2"})
                  .status,
              0);
    const CliRun g = run({"--json", "ybe", "superColored", "--lie", "gl11", "--z", "1,1,0,0", "--alpha-table", "0:1,1:2,2:3",
                       "--beta-table", "0:1,1:1,2:1"});
    EXPECT_EQ(g.status, 1);
    EXPECT_TRUE(json::parse(g.out)["checks"][0].contains("witness"));
    const json jr = json::parse(run({"--json", "ybe", "jordanRestricted", "--algebra", "sym2jordan"}).out);
    EXPECT_EQ(jr["exit_status"], 0);
    EXPECT_EQ(jr["properties"]["full_braid"], false);
    EXPECT_EQ(jr["properties"]["spanning_rank"], 24);
}

TEST_F(Cli, GridEnvironment)
{
    ::setenv("YBFORGE_GRID", "3", 1);
    EXPECT_EQ(run({"ybe", "colored", "--algebra", "dual2"}).status, 2);
    EXPECT_EQ(run({"ybe", "colored", "--algebra", "dual2", "--grid", "4"}).status, 0); // flag wins
    ::setenv("YBFORGE_GRID", "5", 1);
    const json j = json::parse(run({"--json", "ybe", "colored", "--algebra", "dual2"}).out);
    EXPECT_EQ(j["exit_status"], 0);
    ::setenv("YBFORGE_GRID", "five", 1);
    EXPECT_EQ(run({"ybe", "colored", "--algebra", "dual2"}).status, 2);
}

TEST_F(Cli, Deterministic)
{
    const std::vector<std::string> args{"--json", "ybe", "colored", "--algebra", "dual2", "--p", "2", "--q", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> emit{"examples", "emit", "gl11"};
    EXPECT_EQ(run(emit).out, run(emit).out);
}

TEST_F(Cli, Version)
{
    const CliRun r = run({"--version"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find(version_string), std::string::npos);
}
