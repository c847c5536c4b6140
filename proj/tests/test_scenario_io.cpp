#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "poissinr/cdf_io.hpp"
#include "poissinr/scenario.hpp"

using namespace poissinr;

TEST(ParseScenario, FullFile)
{
    const Scenario sc = parse_scenario(R"(
# figure 3
half_isd_Rc = 250
eta = 2.6, 3
sigma_dB = 0, 3, 6, 8   # four curves
association = best_server, nearest
tx_power_P = 20
pathloss_K = 1e-3
noise_Nth = 1e-13
mean_bs_count = 50
ue_grid_count = 100
n_runs = 20
seed = 18446744073709551615
density_mapping = hexagonal
ue_layout = lattice
fit_a = 3
fit_b = -6
correction_domain = decibel
quantile_lo = 0.1
quantile_hi = 0.9
outage_thresholds_dB = -6, 0
output_dir = results/fig3
)");
    EXPECT_DOUBLE_EQ(sc.network.half_isd_Rc, 250.0);
    EXPECT_EQ(sc.etas, (std::vector<double>{2.6, 3.0}));
    EXPECT_EQ(sc.sigmas_dB, (std::vector<double>{0, 3, 6, 8}));
    ASSERT_EQ(sc.associations.size(), 2u);
    EXPECT_EQ(sc.associations[1], Association::nearest);
    EXPECT_DOUBLE_EQ(sc.network.noise_Nth, 1e-13);
    EXPECT_EQ(sc.network.seed, 18446744073709551615ULL);
    EXPECT_EQ(sc.network.density_mapping, DensityMapping::hexagonal);
    EXPECT_EQ(sc.ue_layout, UeLayout::lattice);
    EXPECT_EQ(sc.outage_thresholds_dB, (std::vector<double>{-6, 0}));
    EXPECT_EQ(sc.output_dir, "results/fig3");
    EXPECT_DOUBLE_EQ(sc.at(3.0, 6.0).sigma_dB, 6.0);
    EXPECT_DOUBLE_EQ(sc.fluid(3.0).correction(), 3.0);
}

TEST(ParseScenario, DefaultsWhenEmpty)
{
    const Scenario sc = parse_scenario("");
    EXPECT_EQ(sc.network.n_runs, 500u);
    EXPECT_EQ(sc.network.ue_grid_count, 400u);
    EXPECT_DOUBLE_EQ(sc.network.mean_bs_count, 50.0);
    EXPECT_DOUBLE_EQ(sc.fit_a, 3.0);
    EXPECT_DOUBLE_EQ(sc.fit_b, -6.0);
    EXPECT_DOUBLE_EQ(sc.quantile_lo, 0.05);
    EXPECT_DOUBLE_EQ(sc.quantile_hi, 0.95);
}

TEST(ParseScenario, Rejections)
{
    EXPECT_THROW(parse_scenario("colour = blue"), ConfigError);
    EXPECT_THROW(parse_scenario("eta = 3\neta = 4"), ConfigError);
    EXPECT_THROW(parse_scenario("eta 3"), ConfigError);
    EXPECT_THROW(parse_scenario("eta = 1.9"), ConfigError);
    EXPECT_THROW(parse_scenario("eta = 3, x"), ConfigError);
    EXPECT_THROW(parse_scenario("sigma_dB = -1"), ConfigError);
    EXPECT_THROW(parse_scenario("half_isd_Rc = 0"), ConfigError);
    EXPECT_THROW(parse_scenario("half_isd_Rc = 1, 2"), ConfigError);
    EXPECT_THROW(parse_scenario("n_runs = -3"), ConfigError);
    EXPECT_THROW(parse_scenario("n_runs = 0"), ConfigError);
    EXPECT_THROW(parse_scenario("association = random"), ConfigError);
    EXPECT_THROW(parse_scenario("quantile_lo = 0.9\nquantile_hi = 0.1"), ConfigError);
    EXPECT_THROW(parse_scenario("density_mapping = square"), ConfigError);
    EXPECT_THROW(load_scenario("/nonexistent/scenario.txt"), ConfigError);
}

TEST(CdfCsv, FormatHasFixedGrid)
{
    const std::string text = format_cdf_csv([](double p) { return 10.0 * p; });
    EXPECT_EQ(text.substr(0, 10), "p,sinr_dB\n");
    EXPECT_NE(text.find("\n0.001,0.010000\n"), std::string::npos);
    EXPECT_NE(text.find("\n0.999,9.990000\n"), std::string::npos);
    const TabulatedCdf t = parse_cdf_csv(text);
    EXPECT_EQ(t.size(), 999u);
    EXPECT_NEAR(t.quantile(0.5), 5.0, 1e-9);
    EXPECT_NEAR(t.quantile(0.1234), 1.234, 1e-9);
    EXPECT_NEAR(t.quantile(0.0), 0.01, 1e-12);
}

TEST(CdfCsv, EmpiricalRoundTripWithinRounding)
{
    std::vector<double> samples;
    for (int i = 0; i < 5000; ++i) samples.push_back(std::sin(i * 0.37) * 12.0 + i * 1e-3);
    const EmpiricalCdf cdf(samples);
    const TabulatedCdf back = parse_cdf_csv(format_cdf_csv(cdf));
    for (int k = 1; k <= 999; k += 7) {
        ASSERT_NEAR(back.quantile(k / 1000.0), cdf.interpolated_quantile(k / 1000.0), 1e-6);
    }
}

TEST(CdfCsv, MalformedInputs)
{
    EXPECT_THROW(parse_cdf_csv(""), ConfigError);
    EXPECT_THROW(parse_cdf_csv("x,y\n0.1,1\n0.2,2\n"), ConfigError);
    EXPECT_THROW(parse_cdf_csv("p,sinr_dB\n0.1,1\n"), ConfigError);
    EXPECT_THROW(parse_cdf_csv("p,sinr_dB\n0.1,1\n0.2\n"), ConfigError);
    EXPECT_THROW(parse_cdf_csv("p,sinr_dB\n0.1,1\n0.2,abc\n"), ConfigError);
    EXPECT_THROW(parse_cdf_csv("p,sinr_dB\n0.2,1\n0.1,2\n"), ConfigError);
    EXPECT_THROW(parse_cdf_csv("p,sinr_dB\n0.1,3\n0.2,2\n"), ConfigError);
}

TEST(NumberLabel, Compact)
{
    EXPECT_EQ(number_label(2.6), "2.6");
    EXPECT_EQ(number_label(3.0), "3");
    EXPECT_EQ(number_label(0.0), "0");
}
