#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsde/cli.hpp"
#include "fsde/io.hpp"

using namespace fsde;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "fsde");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fsde-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string file(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST(ParseTfn, Examples) {
    EXPECT_EQ(cli::parse_tfn("0.75"), TriangularFuzzyNumber(0.75, 0.75, 0.75));
    EXPECT_EQ(cli::parse_tfn("8,10,12"), TriangularFuzzyNumber(8, 10, 12));
    EXPECT_EQ(cli::parse_tfn(" 0.5 , 1 , 1.5 "), TriangularFuzzyNumber(0.5, 1, 1.5));
    EXPECT_THROW(cli::parse_tfn("12,10,8"), parse_error);
    EXPECT_THROW(cli::parse_tfn("1,2"), parse_error);
    EXPECT_THROW(cli::parse_tfn("a,b,c"), parse_error);
    EXPECT_THROW(cli::parse_tfn(""), parse_error);
    try {
        cli::parse_tfn("12,10,8", "mu");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("--mu"), std::string::npos);
    }
}

TEST(MakeConfig, DefaultsPerModel) {
    const auto gbm = cli::make_config(cli::Command::fuzzy_solve, {});
    EXPECT_EQ(gbm.mu, TriangularFuzzyNumber(0.65, 0.75, 0.85));
    EXPECT_EQ(gbm.sigma, TriangularFuzzyNumber(0.25, 0.30, 0.35));
    EXPECT_EQ(gbm.dt, std::ldexp(1.0, -8));
    EXPECT_EQ(gbm.fine_steps(), 256U);
    EXPECT_EQ(gbm.Rs, std::vector<std::size_t>{1});

    const auto lang = cli::make_config(cli::Command::solve, {{"model", "langevin"}});
    EXPECT_EQ(lang.mu, TriangularFuzzyNumber(8, 10, 12));
    EXPECT_EQ(lang.x0, TriangularFuzzyNumber::crisp(1.0));

    const auto conv = cli::make_config(cli::Command::converge, {});
    EXPECT_EQ(conv.Rs, (std::vector<std::size_t>{8, 4, 2}));
    EXPECT_EQ(conv.seeds, 1000U);
    EXPECT_EQ(cli::make_config(cli::Command::alpha_sweep, {}).alphas.size(), 11U);
}

TEST(MakeConfig, DtExponent) {
    const auto c = cli::make_config(cli::Command::solve, {{"dt-exp", "-10"}});
    EXPECT_EQ(c.dt, std::ldexp(1.0, -10));
    EXPECT_EQ(c.fine_steps(), 1024U);
    EXPECT_THROW(cli::make_config(cli::Command::solve, {{"dt-exp", "-8"}, {"dt", "0.1"}}),
                 parse_error);
}

TEST(MakeConfig, Validation) {
    using C = cli::Command;
    EXPECT_THROW(cli::make_config(C::solve, {{"T", "0"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"dt", "-0.1"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"R", "0"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"R", "3"}}), divisibility_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"dt", "0.3"}}), divisibility_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"R", "4,2"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"alpha", "1.1"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"alphas", "0,0.5,0.4"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"format", "xml"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"model", "heston"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"seeds", "0"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"bogus", "1"}}), parse_error);
    EXPECT_THROW(cli::make_config(C::solve, {{"model", "langevin"}, {"mu", "-1,10,12"}}),
                 domain_error);
}

TEST_F(CliTest, FuzzySolveWritesTheBoundCsv) {
    const auto r = invoke({"fuzzy-solve", "--model", "gbm", "--mu", "0.65,0.75,0.85", "--sigma",
                           "0.25,0.30,0.35", "--x0", "1", "--dt-exp", "-8", "--R", "4",
                           "--alpha", "0", "--seed", "42", "--out", file("f.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("crossing_fraction="), std::string::npos);
    std::ifstream is(file("f.csv"));
    const auto table = io::read_csv(is);
    EXPECT_EQ(table.header, (std::vector<std::string>{"t", "X_lower", "X_upper", "crossing"}));
    EXPECT_EQ(table.rows.size(), 65U);
    EXPECT_EQ(table.rows.back()[0], 1.0);
}

TEST_F(CliTest, SolveZeroNoiseSummary) {
    const auto r = invoke({"solve", "--mu", "0.75", "--sigma", "0", "--out", file("s.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto pos = r.out.find("X_exact(T)=");
    ASSERT_NE(pos, std::string::npos);
    const double exact = std::stod(r.out.substr(pos + 11));
    EXPECT_NEAR(exact, std::exp(0.75), 1e-9);
}

TEST_F(CliTest, ExactOutputsForFigures) {
    auto r = invoke({"solve", "--R", "4", "--out", file("em.csv"), "--exact-out", file("ex.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream ex(file("ex.csv"));
    EXPECT_EQ(io::read_csv(ex).rows.size(), 257U);

    r = invoke({"fuzzy-solve", "--out", file("f.csv"), "--exact-out", file("fx.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream fx(file("fx.csv"));
    EXPECT_EQ(io::read_csv(fx).header.size(), 4U);
}

TEST_F(CliTest, EveryCommandRunsInBothFormats) {
    for (const char* cmd : {"paths", "solve", "fuzzy-solve", "envelope", "alpha-sweep"}) {
        for (const char* fmt : {"csv", "json"}) {
            const auto out = file(std::string(cmd) + "." + fmt);
            const auto r = invoke({cmd, "--model", "langevin", "--dt-exp", "-10", "--format", fmt,
                                   "--out", out});
            ASSERT_EQ(r.code, 0) << cmd << ' ' << fmt << ": " << r.err;
            ASSERT_TRUE(fs::exists(out));
            ASSERT_FALSE(r.out.empty());
        }
    }
    const auto r = invoke({"converge", "--seeds", "20", "--format", "json", "--out", file("c.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("slope="), std::string::npos);
}

TEST_F(CliTest, IdenticalFlagsGiveIdenticalFiles) {
    for (const char* cmd : {"paths", "fuzzy-solve", "envelope", "alpha-sweep", "converge"}) {
        const std::vector<std::string> common{cmd, "--seed", "7", "--seeds", "10"};
        auto a = common;
        a.insert(a.end(), {"--out", file("a")});
        auto b = common;
        b.insert(b.end(), {"--out", file("b")});
        ASSERT_EQ(invoke(a).code, 0);
        ASSERT_EQ(invoke(b).code, 0);
        EXPECT_EQ(slurp(file("a")), slurp(file("b"))) << cmd;
    }
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
    {
        std::ofstream cfg(file("run.cfg"));
        cfg << "# Langevin, Table 2\nmodel = langevin\nmu = 8,10,12\nsigma = 0.5,1,1.5\n"
               "dt_exp = -10\nalpha = 0.5\n";
    }
    const auto r = invoke({"fuzzy-solve", "--config", file("run.cfg"), "--alpha", "0.25", "--out",
                           file("f.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("fuzzy-solve langevin alpha=0.25"), std::string::npos) << r.out;
    std::ifstream is(file("f.csv"));
    EXPECT_EQ(io::read_csv(is).rows.size(), 1025U);
}

TEST_F(CliTest, DistinctExitCodes) {
    EXPECT_EQ(invoke({"solve", "--bogus", "1"}).code, cli::exit_code::usage);
    EXPECT_EQ(invoke({}).code, cli::exit_code::usage);
    const auto order = invoke({"fuzzy-solve", "--mu", "12,10,8", "--out", file("x.csv")});
    EXPECT_EQ(order.code, cli::exit_code::invalid_value);
    EXPECT_NE(order.err.find("--mu"), std::string::npos);
    const auto div = invoke({"solve", "--R", "3", "--out", file("x.csv")});
    EXPECT_EQ(div.code, cli::exit_code::divisibility);
    EXPECT_NE(div.err.find("does not divide"), std::string::npos);
    const auto unwritable = invoke({"solve", "--out", file("missing/dir/x.csv")});
    EXPECT_EQ(unwritable.code, cli::exit_code::output);
    EXPECT_NE(unwritable.err.find("cannot open output file"), std::string::npos);
    EXPECT_EQ(invoke({"converge", "--model", "langevin", "--out", file("x.csv")}).code,
              cli::exit_code::invalid_value);
    EXPECT_EQ(invoke({"solve", "--config", file("nope.cfg")}).code, cli::exit_code::invalid_value);
    EXPECT_EQ(invoke({"solve", "--help"}).code, cli::exit_code::ok);
}

TEST_F(CliTest, UnstableLangevinStepWarnsOnStderr) {
    const auto r = invoke({"solve", "--model", "langevin", "--mu", "10", "--sigma", "1", "--dt",
                           "0.125", "--out", file("x.csv")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST_F(CliTest, SeparateProcessesAgree) {
    const std::string args =
        " fuzzy-solve --model gbm --mu 0.65,0.75,0.85 --sigma 0.25,0.30,0.35 --dt-exp -8 --R 4"
        " --alpha 0 --seed 42 --out ";
    ASSERT_EQ(std::system((std::string(FSDE_CLI_PATH) + args + file("p1.csv") + " > /dev/null").c_str()), 0);
    ASSERT_EQ(std::system((std::string(FSDE_CLI_PATH) + args + file("p2.csv") + " > /dev/null").c_str()), 0);
    const auto r = invoke({"fuzzy-solve", "--model", "gbm", "--mu", "0.65,0.75,0.85", "--sigma",
                           "0.25,0.30,0.35", "--dt-exp", "-8", "--R", "4", "--alpha", "0",
                           "--seed", "42", "--out", file("p3.csv")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(file("p1.csv")), slurp(file("p2.csv")));
    EXPECT_EQ(slurp(file("p1.csv")), slurp(file("p3.csv")));
}
