#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "empirical.hpp"
#include "errors.hpp"
#include "network.hpp"
#include "propagation.hpp"
#include "random.hpp"
#include "sinr.hpp"

namespace poissinr {

/// Placement of the fixed UE set.
enum class UeLayout {
    uniform,  ///< i.i.d. uniform over the whole area, drawn once from the seed
    lattice,  ///< regular square lattice, cell-centred
};

inline std::string_view to_string(UeLayout u)
{
    return u == UeLayout::lattice ? "lattice" : "uniform";
}

struct CampaignOptions {
    Association association = Association::best_server;
    bool shadowing_on = true;
    UeLayout ue_layout = UeLayout::uniform;
    unsigned workers = 0;  ///< 0 = hardware concurrency
};

/// SINR samples of a campaign, in canonical (run, UE) order.
struct SinrSampleSet {
    std::vector<double> samples_dB;
    std::size_t n_runs = 0;
    std::size_t n_skipped = 0;      ///< UE samples dropped: empty layouts and infinite SINR
    std::size_t n_empty_runs = 0;   ///< runs whose layout had no BS
    NetworkConfig scenario;
    Association association = Association::best_server;
    bool shadowing_on = false;
};

/// Useful and interference powers (dB) of the samples kept by the campaign.
struct SignalDecomposition {
    std::vector<double> useful_dB;
    std::vector<double> interference_dB;
};

/// The fixed UE set of a campaign. Same for every run of a given seed.
inline std::vector<Point> ue_positions(const NetworkConfig& config, UeLayout layout)
{
    config.validate();
    const double side = config.side();
    const std::size_t n = config.ue_grid_count;
    std::vector<Point> ues;
    ues.reserve(n);
    if (layout == UeLayout::lattice) {
        const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        const double step = side / static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) {
            ues.push_back({(static_cast<double>(i % k) + 0.5) * step,
                           (static_cast<double>(i / k) + 0.5) * step});
        }
        return ues;
    }
    RandomStream rng = child_stream(config.seed, 0, StreamPurpose::ue_grid);
    std::uniform_real_distribution<double> coord(0.0, side);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        ues.push_back({x < side ? x : 0.0, y < side ? y : 0.0});
    }
    return ues;
}

namespace detail {

struct RunRecord {
    std::vector<double> useful;
    std::vector<double> interference;
    bool empty_layout = false;
};

inline RunRecord simulate_run(const NetworkConfig& config, const CampaignOptions& options,
                              const std::vector<Point>& ues, std::size_t run_index)
{
    RunRecord record;
    RandomStream layout_rng = child_stream(config.seed, run_index, StreamPurpose::layout);
    const BsLayout layout = sample_layout(config, layout_rng);
    if (layout.empty()) {
        record.empty_layout = true;
        return record;
    }
    RandomStream shadow_rng = child_stream(config.seed, run_index, StreamPurpose::shadowing);
    record.useful.reserve(ues.size());
    record.interference.reserve(ues.size());
    RxPowerVector rx;
    for (const Point& ue : ues) {
        received_powers_into(ue, layout, config, options.shadowing_on, shadow_rng, rx);
        rx = associate(std::move(rx), options.association);
        const SignalSplit s = split_signal(rx);
        record.useful.push_back(s.useful);
        record.interference.push_back(s.interference);
    }
    return record;
}

/// Runs fn(run_index) for every run on `workers` threads. Exceptions are
/// rethrown on the calling thread after all workers stop.
template <typename Fn>
void for_each_run(std::size_t n_runs, unsigned workers, Fn&& fn)
{
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_runs));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n_runs; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = n_runs;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct CampaignRecord {
    SinrSampleSet sinr;
    SignalDecomposition signals;
};

inline CampaignRecord simulate_campaign(const NetworkConfig& config, const CampaignOptions& options)
{
    config.validate();
    const std::vector<Point> ues = ue_positions(config, options.ue_layout);
    std::vector<RunRecord> runs(config.n_runs);
    for_each_run(config.n_runs, options.workers,
                 [&](std::size_t i) { runs[i] = simulate_run(config, options, ues, i); });

    CampaignRecord out;
    SinrSampleSet& set = out.sinr;
    set.n_runs = config.n_runs;
    set.scenario = config;
    set.association = options.association;
    set.shadowing_on = options.shadowing_on;
    set.samples_dB.reserve(config.n_runs * ues.size());
    for (const RunRecord& run : runs) {
        if (run.empty_layout) {
            ++set.n_empty_runs;
            set.n_skipped += ues.size();
            continue;
        }
        for (std::size_t u = 0; u < run.useful.size(); ++u) {
            const double denom = run.interference[u] + config.noise_Nth;
            const double sinr_dB = to_dB(run.useful[u] / denom);
            if (denom == 0.0 || !std::isfinite(sinr_dB)) {
                ++set.n_skipped;
                continue;
            }
            set.samples_dB.push_back(sinr_dB);
            out.signals.useful_dB.push_back(to_dB(run.useful[u]));
            out.signals.interference_dB.push_back(to_dB(run.interference[u]));
        }
    }
    if (set.samples_dB.empty()) {
        throw CampaignError("campaign produced no finite SINR sample (all layouts empty?)");
    }
    return out;
}

}  // namespace detail

/// Monte Carlo SINR campaign: the UE set is fixed, every run draws a fresh
/// Poisson layout (and shadowing). Output is independent of `workers`.
inline SinrSampleSet run_campaign(const NetworkConfig& config, const CampaignOptions& options)
{
    return detail::simulate_campaign(config, options).sinr;
}

/// Useful-signal and interference powers of the same samples run_campaign keeps.
inline SignalDecomposition decompose_signals(const NetworkConfig& config,
                                             const CampaignOptions& options)
{
    return detail::simulate_campaign(config, options).signals;
}

inline EmpiricalCdf empirical_cdf(const SinrSampleSet& samples)
{
    return EmpiricalCdf(samples.samples_dB);
}

}  // namespace poissinr
