#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "poissinr/sinr.hpp"

using namespace poissinr;

namespace {

RxPowerVector make_rx(std::vector<double> powers, std::vector<double> distances = {})
{
    RxPowerVector rx;
    if (distances.empty()) distances.assign(powers.size(), 1.0);
    rx.powers = std::move(powers);
    rx.distances = std::move(distances);
    return rx;
}

// Neumaier-compensated interference sum, written independently of split_signal.
double compensated_sinr(const std::vector<double>& p, std::size_t serving, double noise)
{
    double sum = 0.0, c = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == serving) continue;
        const double t = sum + p[j];
        c += std::abs(sum) >= std::abs(p[j]) ? (sum - t) + p[j] : (p[j] - t) + sum;
        sum = t;
    }
    return p[serving] / (sum + c + noise);
}

BsLayout random_layout(RandomStream& rng, std::size_t n, double side)
{
    std::uniform_real_distribution<double> u(0.0, side);
    BsLayout layout;
    layout.side = side;
    for (std::size_t i = 0; i < n; ++i) layout.positions.push_back({u(rng), u(rng)});
    return layout;
}

}  // namespace

TEST(ReceivedPowers, SingleBsNoShadowing)
{
    NetworkConfig config;
    config.tx_power_P = 2.0;
    config.pathloss_K = 0.5;
    config.eta = 3.0;
    BsLayout layout{{{1.0, 1.0}}, config.side()};
    RandomStream rng(1);
    const RxPowerVector rx = received_powers({4.0, 5.0}, layout, config, false, rng);
    ASSERT_EQ(rx.size(), 1u);
    EXPECT_NEAR(rx.distances[0], 5.0, 1e-12);
    EXPECT_NEAR(rx.powers[0], 2.0 * 0.5 * std::pow(5.0, -3.0), 1e-15);
    EXPECT_FALSE(rx.serving_index.has_value());
}

TEST(ReceivedPowers, EmptyLayoutThrows)
{
    NetworkConfig config;
    BsLayout layout{{}, config.side()};
    RandomStream rng(1);
    EXPECT_THROW(received_powers({0.0, 0.0}, layout, config, true, rng), EmptyNetworkError);
}

TEST(ReceivedPowers, ColocatedUeIsClamped)
{
    NetworkConfig config;
    config.half_isd_Rc = 2.0;
    BsLayout layout{{{3.0, 3.0}}, config.side()};
    RandomStream rng(1);
    const RxPowerVector rx = received_powers({3.0, 3.0}, layout, config, false, rng);
    EXPECT_DOUBLE_EQ(rx.distances[0], 2.0 / 1000.0);
    EXPECT_TRUE(std::isfinite(rx.powers[0]));
}

TEST(ReceivedPowers, WithoutShadowingPowerOrderFollowsDistance)
{
    NetworkConfig config;
    RandomStream rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const BsLayout layout = random_layout(rng, 30, config.side());
        const RxPowerVector rx = received_powers({1.0, 2.0}, layout, config, false, rng);
        std::vector<std::size_t> by_dist(rx.size()), by_power(rx.size());
        std::iota(by_dist.begin(), by_dist.end(), 0);
        std::iota(by_power.begin(), by_power.end(), 0);
        std::stable_sort(by_dist.begin(), by_dist.end(),
                         [&](auto a, auto b) { return rx.distances[a] < rx.distances[b]; });
        std::stable_sort(by_power.begin(), by_power.end(),
                         [&](auto a, auto b) { return rx.powers[a] > rx.powers[b]; });
        ASSERT_EQ(by_dist, by_power);
    }
}

TEST(ReceivedPowers, ShadowingRatioIsLognormal)
{
    NetworkConfig config;
    config.sigma_dB = 6.0;
    RandomStream rng(9);
    const BsLayout layout = random_layout(rng, 50, config.side());
    std::vector<double> ratio_dB;
    for (int k = 0; k < 4000; ++k) {
        const RxPowerVector rx = received_powers({3.0, 3.0}, layout, config, true, rng);
        for (std::size_t j = 0; j < rx.size(); ++j) {
            const double mean = config.tx_power_P * pathloss_gain(rx.distances[j], config.pathloss_K, config.eta);
            ratio_dB.push_back(to_dB(rx.powers[j] / mean));
        }
    }
    const double n = static_cast<double>(ratio_dB.size());
    const double mean = std::accumulate(ratio_dB.begin(), ratio_dB.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : ratio_dB) ss += (v - mean) * (v - mean);
    EXPECT_NEAR(mean, 0.0, 0.03);
    EXPECT_NEAR(std::sqrt(ss / (n - 1)), 6.0, 0.06);
}

TEST(Association, NearestExamples)
{
    EXPECT_EQ(associate_nearest(make_rx({1, 1, 1}, {3, 1, 2})).serving_index, 1u);
    EXPECT_EQ(associate_nearest(make_rx({1}, {5})).serving_index, 0u);
    EXPECT_EQ(associate_nearest(make_rx({1, 1}, {1, 1})).serving_index, 0u);
}

TEST(Association, BestServerExamples)
{
    EXPECT_EQ(associate_best_server(make_rx({1, 5, 2})).serving_index, 1u);
    EXPECT_EQ(associate_best_server(make_rx({4, 4})).serving_index, 0u);
    EXPECT_THROW(associate_best_server(RxPowerVector{}), EmptyNetworkError);
}

TEST(Association, BestServerEqualsNearestWithoutShadowing)
{
    NetworkConfig config;
    RandomStream rng(10);
    std::uniform_real_distribution<double> u(0.0, config.side());
    for (int trial = 0; trial < 2000; ++trial) {
        const BsLayout layout = random_layout(rng, 1 + trial % 60, config.side());
        const RxPowerVector rx = received_powers({u(rng), u(rng)}, layout, config, false, rng);
        const auto near = associate_nearest(rx);
        const auto best = associate_best_server(rx);
        ASSERT_EQ(near.serving_index, best.serving_index);
        ASSERT_EQ(compute_sinr(near, 0.0), compute_sinr(best, 0.0));
    }
}

TEST(Association, BestServerSinrDominatesNearest)
{
    NetworkConfig config;
    config.sigma_dB = 8.0;
    RandomStream rng(11);
    std::uniform_real_distribution<double> u(0.0, config.side());
    for (int trial = 0; trial < 5000; ++trial) {
        const BsLayout layout = random_layout(rng, 2 + trial % 60, config.side());
        const RxPowerVector rx = received_powers({u(rng), u(rng)}, layout, config, true, rng);
        const double noise = trial % 2 ? 0.0 : 1e-4;
        ASSERT_GE(compute_sinr(associate_best_server(rx), noise),
                  compute_sinr(associate_nearest(rx), noise));
    }
}

TEST(ComputeSinr, Examples)
{
    auto rx = make_rx({3.0});
    rx.serving_index = 0;
    EXPECT_DOUBLE_EQ(compute_sinr(rx, 0.5), 6.0);
    EXPECT_EQ(compute_sinr(rx, 0.0), std::numeric_limits<double>::infinity());

    auto rx3 = make_rx({2.0, 1.0, 1.0});
    rx3.serving_index = 0;
    EXPECT_DOUBLE_EQ(compute_sinr(rx3, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(to_dB(compute_sinr(rx3, 0.0)), 0.0);
}

TEST(ComputeSinr, ServingServerExcludedEvenWhenNotFirst)
{
    auto rx = make_rx({1.0, 4.0, 1.0});
    rx.serving_index = 1;
    EXPECT_DOUBLE_EQ(compute_sinr(rx, 0.0), 2.0);
}

TEST(ComputeSinr, UnsetServingIndexIsContractError)
{
    EXPECT_THROW(compute_sinr(make_rx({1.0, 2.0}), 0.0), std::logic_error);
}

TEST(ComputeSinr, MatchesCompensatedSummation)
{
    NetworkConfig config;
    config.sigma_dB = 6.0;
    RandomStream rng(12);
    std::uniform_real_distribution<double> u(0.0, config.side());
    for (int trial = 0; trial < 500; ++trial) {
        const BsLayout layout = random_layout(rng, 50, config.side());
        const auto rx = associate_best_server(received_powers({u(rng), u(rng)}, layout, config, true, rng));
        const double noise = trial % 3 == 0 ? 1e-3 : 0.0;
        const double expected = compensated_sinr(rx.powers, *rx.serving_index, noise);
        ASSERT_NEAR(compute_sinr(rx, noise), expected, 1e-12 * expected);
    }
}

TEST(ComputeSinr, DecreasesWhenInterferenceGrows)
{
    RandomStream rng(13);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto rx = make_rx(std::vector<double>(10));
        for (double& p : rx.powers) p = u(rng);
        rx.serving_index = 0;
        const double before = compute_sinr(rx, 0.1);
        rx.powers[1 + trial % 9] *= 1.001;
        ASSERT_LT(compute_sinr(rx, 0.1), before);
    }
}

TEST(ComputeSinr, ScaleInvariance)
{
    NetworkConfig base;
    base.sigma_dB = 6.0;
    NetworkConfig scaled = base;
    scaled.tx_power_P = 13.0;
    scaled.pathloss_K = 0.004;
    const double factor = scaled.tx_power_P * scaled.pathloss_K;
    RandomStream layout_rng(14);
    std::uniform_real_distribution<double> u(0.0, base.side());
    for (int trial = 0; trial < 300; ++trial) {
        const BsLayout layout = random_layout(layout_rng, 40, base.side());
        const Point ue{u(layout_rng), u(layout_rng)};
        RandomStream a(1000 + trial), b(1000 + trial);
        const auto rx1 = associate_best_server(received_powers(ue, layout, base, true, a));
        const auto rx2 = associate_best_server(received_powers(ue, layout, scaled, true, b));
        const double g0 = compute_sinr(rx1, 0.0);
        ASSERT_NEAR(compute_sinr(rx2, 0.0), g0, 1e-12 * g0);
        const double gn = compute_sinr(rx1, 0.02);
        ASSERT_NEAR(compute_sinr(rx2, 0.02 * factor), gn, 1e-12 * gn);
    }
}

TEST(SpectralEfficiency, Shannon)
{
    EXPECT_EQ(spectral_efficiency(0.0), 0.0);
    EXPECT_EQ(spectral_efficiency(1.0), 1.0);
    EXPECT_EQ(spectral_efficiency(3.0), 2.0);
    EXPECT_THROW(spectral_efficiency(-0.5), DomainError);
}
