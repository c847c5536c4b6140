#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "network.hpp"
#include "propagation.hpp"

namespace poissinr {

enum class Association {
    nearest,      ///< serve from the closest BS
    best_server,  ///< serve from the BS with the highest received power
};

inline std::string_view to_string(Association a)
{
    return a == Association::nearest ? "nearest" : "best_server";
}

/// Received powers at one UE, one entry per BS of the layout.
struct RxPowerVector {
    std::vector<double> powers;     ///< watts
    std::vector<double> distances;  ///< meters, after the minimum-distance clamp
    std::optional<std::size_t> serving_index;

    std::size_t size() const { return powers.size(); }
};

/// Fills `out` with p_j = P K r_j^-eta Y_j for every BS. Y_j = 1 when
/// shadowing is off; otherwise one i.i.d. lognormal draw per BS from `rng`.
/// Reuses the capacity of `out`.
inline void received_powers_into(Point ue, const BsLayout& layout, const NetworkConfig& config,
                                 bool shadowing_on, RandomStream& rng, RxPowerVector& out)
{
    if (layout.empty()) {
        throw EmptyNetworkError();
    }
    const std::size_t n = layout.count();
    out.powers.resize(n);
    out.distances.resize(n);
    out.serving_index.reset();
    const double r_min = config.min_distance();
    const double scale = config.tx_power_P;
    for (std::size_t j = 0; j < n; ++j) {
        const double r = std::max(torus_distance(ue, layout.positions[j], layout.side), r_min);
        double p = scale * pathloss_gain(r, config.pathloss_K, config.eta);
        if (shadowing_on) {
            p *= sample_shadowing(config.sigma_dB, rng);
        }
        out.distances[j] = r;
        out.powers[j] = p;
    }
}

inline RxPowerVector received_powers(Point ue, const BsLayout& layout,
                                     const NetworkConfig& config, bool shadowing_on,
                                     RandomStream& rng)
{
    RxPowerVector rx;
    received_powers_into(ue, layout, config, shadowing_on, rng, rx);
    return rx;
}

namespace detail {

/// Index of the first element that wins `better(candidate, incumbent)`.
template <typename Better>
std::size_t first_extreme(const std::vector<double>& v, Better better)
{
    if (v.empty()) {
        throw EmptyNetworkError();
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (better(v[j], v[best])) {
            best = j;
        }
    }
    return best;
}

}  // namespace detail

/// Serving BS = smallest distance, lowest index on ties.
inline RxPowerVector associate_nearest(RxPowerVector rx)
{
    rx.serving_index = detail::first_extreme(rx.distances, std::less<>{});
    return rx;
}

/// Serving BS = largest received power, lowest index on ties.
inline RxPowerVector associate_best_server(RxPowerVector rx)
{
    rx.serving_index = detail::first_extreme(rx.powers, std::greater<>{});
    return rx;
}

inline RxPowerVector associate(RxPowerVector rx, Association mode)
{
    return mode == Association::nearest ? associate_nearest(std::move(rx))
                                        : associate_best_server(std::move(rx));
}

/// Useful power of the serving BS and the summed power of all the others.
struct SignalSplit {
    double useful = 0.0;
    double interference = 0.0;
};

inline SignalSplit split_signal(const RxPowerVector& rx)
{
    if (!rx.serving_index || *rx.serving_index >= rx.size()) {
        throw std::logic_error("split_signal: serving index not set");
    }
    const std::size_t s = *rx.serving_index;
    SignalSplit out;
    out.useful = rx.powers[s];
    for (std::size_t j = 0; j < rx.size(); ++j) {
        if (j != s) {
            out.interference += rx.powers[j];
        }
    }
    return out;
}

/// gamma = p_serving / (sum of the other powers + N_th). Returns +infinity
/// when the denominator is zero (a lone BS without noise).
inline double compute_sinr(const RxPowerVector& rx, double noise_Nth)
{
    const SignalSplit s = split_signal(rx);
    const double denom = s.interference + noise_Nth;
    if (denom == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return s.useful / denom;
}

/// Shannon spectral efficiency log2(1 + gamma), bits/s/Hz.
inline double spectral_efficiency(double sinr)
{
    if (sinr < 0.0) {
        throw DomainError("spectral_efficiency: sinr must be >= 0");
    }
    return std::log2(1.0 + sinr);
}

}  // namespace poissinr
