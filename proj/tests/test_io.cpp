#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "fsde/io.hpp"

using namespace fsde;

TEST(FormatReal, SeventeenSignificantDigits) {
    EXPECT_EQ(io::format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_real(1.0), "1");
    EXPECT_EQ(io::format_real(-2.5), "-2.5");
    EXPECT_EQ(io::format_real(std::ldexp(1.0, -8)), "0.00390625");
}

TEST(FormatReal, RoundTripsExactly) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mag(-300.0, 300.0);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < 10000; ++i) {
        const double v = (sign(rng) ? -1.0 : 1.0) * std::pow(10.0, mag(rng));
        ASSERT_EQ(std::stod(io::format_real(v)), v);
    }
}

TEST(Csv, FuzzyTrajectoryRoundTrip) {
    const FuzzyModelParams fp(ModelKind::langevin, {8, 10, 12}, {0.5, 1, 1.5},
                              TriangularFuzzyNumber::crisp(1.0));
    const auto ft = fuzzy_euler_maruyama(fp, generate_path(0.0, 0.001, 500, 5), 1, 0.0);
    std::stringstream ss;
    io::write_fuzzy_csv(ss, ft);
    const auto table = io::read_csv(ss);
    ASSERT_EQ(table.header, (std::vector<std::string>{"t", "X_lower", "X_upper", "crossing"}));
    ASSERT_EQ(table.rows.size(), ft.times.size());
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        ASSERT_EQ(table.rows[i][0], ft.times[i]);
        ASSERT_EQ(table.rows[i][1], ft.lower[i]);
        ASSERT_EQ(table.rows[i][2], ft.upper[i]);
        crossings += table.rows[i][3] == 1.0;
    }
    EXPECT_EQ(crossings, ft.crossings.size());
}

TEST(Csv, PathAndTrajectoryHeaders) {
    const auto path = generate_path(0.0, 0.25, 4, 1);
    std::stringstream a;
    io::write_path_csv(a, path);
    const auto pt = io::read_csv(a);
    EXPECT_EQ(pt.header, (std::vector<std::string>{"t", "W"}));
    EXPECT_EQ(pt.rows.size(), 5U);
    EXPECT_EQ(pt.rows[0][1], 0.0);

    std::stringstream b;
    io::write_trajectory_csv(b, euler_maruyama(gbm_model({0.75, 0.3, 1.0}), path, 2));
    const auto tt = io::read_csv(b);
    EXPECT_EQ(tt.header, (std::vector<std::string>{"t", "X"}));
    EXPECT_EQ(tt.rows.size(), 3U);
}

TEST(Csv, ReaderRejectsMalformedInput) {
    std::stringstream empty;
    EXPECT_THROW(io::read_csv(empty), parse_error);
    std::stringstream text("t,X\n0,abc\n");
    EXPECT_THROW(io::read_csv(text), parse_error);
    std::stringstream ragged("t,X\n0,1,2\n");
    EXPECT_THROW(io::read_csv(ragged), parse_error);
}

TEST(Json, ConvergenceReportDocument) {
    ConvergenceReport r;
    r.model = "gbm(mu=0.75, sigma=0.3, x0=1)";
    r.ensemble_size = 3;
    r.first_seed = 99;
    r.entries = {{8, 0.03125, 0.024}, {4, 0.015625, 0.015}};
    std::stringstream ss;
    io::write_convergence_json(ss, r);
    const auto doc = nlohmann::json::parse(ss.str());
    EXPECT_EQ(doc["ensemble_size"], 3);
    EXPECT_EQ(doc["first_seed"], 99);
    ASSERT_EQ(doc["entries"].size(), 2U);
    EXPECT_EQ(doc["entries"][0]["r"], 8);
    EXPECT_EQ(doc["entries"][1]["endpoint_error"].get<double>(), 0.015);
    EXPECT_TRUE(doc.contains("loglog_slope"));
}

TEST(Json, FuzzyTrajectoryValuesRoundTrip) {
    const FuzzyModelParams fp(ModelKind::gbm, {0.65, 0.75, 0.85}, {0.25, 0.30, 0.35},
                              TriangularFuzzyNumber::crisp(1.0));
    const auto ft = fuzzy_euler_maruyama(fp, generate_path(0.0, std::ldexp(1.0, -8), 256, 4), 4,
                                         0.0);
    std::stringstream ss;
    io::write_fuzzy_json(ss, ft);
    const auto doc = nlohmann::json::parse(ss.str());
    EXPECT_EQ(doc["x_lower"].get<std::vector<double>>(), ft.lower);
    EXPECT_EQ(doc["x_upper"].get<std::vector<double>>(), ft.upper);
    EXPECT_EQ(doc["t"].get<std::vector<double>>(), ft.times);
    EXPECT_EQ(doc["alpha"].get<double>(), 0.0);
    EXPECT_EQ(doc["r"], 4);
}

TEST(Json, AlphaSweepKeys) {
    AlphaSweep s{{{0.0, 1.0, 2.0}, {1.0, 1.5, 1.5}}};
    std::stringstream ss;
    io::write_alpha_sweep_json(ss, s);
    const auto doc = nlohmann::json::parse(ss.str());
    ASSERT_EQ(doc["rows"].size(), 2U);
    EXPECT_EQ(doc["rows"][0]["lower_t"].get<double>(), 1.0);
    EXPECT_EQ(doc["rows"][1]["upper_t"].get<double>(), 1.5);
}

TEST(KeyValues, ParsesCommentsAndOverrides) {
    std::stringstream ss(
        "# Table 2\nmodel = langevin\nmu = 8,10,12  # fuzzy\n\n  sigma=0.5,1,1.5\nmu = 9,10,11\n");
    const auto kv = io::read_key_values(ss);
    EXPECT_EQ(kv.at("model"), "langevin");
    EXPECT_EQ(kv.at("mu"), "9,10,11");
    EXPECT_EQ(kv.at("sigma"), "0.5,1,1.5");
    std::stringstream bad("mu 8,10,12\n");
    EXPECT_THROW(io::read_key_values(bad), parse_error);
    std::stringstream nokey(" = 3\n");
    EXPECT_THROW(io::read_key_values(nokey), parse_error);
}
