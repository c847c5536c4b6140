#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "errors.hpp"
#include "random.hpp"

namespace poissinr {

/// ln(10)/10: converts a dB quantity into natural-log units.
inline constexpr double kDbToNeper = std::numbers::ln10 / 10.0;

inline double to_dB(double linear) { return 10.0 * std::log10(linear); }
inline double from_dB(double dB) { return std::pow(10.0, dB / 10.0); }

/// Deterministic path gain K r^-eta.
inline double pathloss_gain(double r, double K, double eta)
{
    if (!(r > 0.0)) {
        throw DomainError("pathloss_gain: distance must be > 0");
    }
    return K * std::pow(r, -eta);
}

/// Lognormal shadowing factor Y = 10^(xi/10), xi ~ N(0, sigma_dB^2).
/// sigma_dB == 0 returns exactly 1 without consuming the stream.
inline double sample_shadowing(double sigma_dB, RandomStream& rng)
{
    if (sigma_dB == 0.0) {
        return 1.0;
    }
    std::normal_distribution<double> xi(0.0, sigma_dB);
    return std::exp(kDbToNeper * xi(rng));
}

/// Parameters of the slowly varying received power density.
struct ShadowingParams {
    double sigma_dB = 0.0;
    double a_const = kDbToNeper;
    double mean_dB = 0.0;   ///< m = (1/a) ln(K P r^-eta)

    /// Parameters for the link of a BS with power P at distance r.
    static ShadowingParams for_link(double sigma_dB, double P, double K, double r, double eta)
    {
        return {sigma_dB, kDbToNeper, std::log(P * pathloss_gain(r, K, eta)) / kDbToNeper};
    }

    /// exp(a m): the median received power.
    double median_power() const { return std::exp(a_const * mean_dB); }
};

/// Lognormal density of the received power s:
///   1 / (a sigma s sqrt(2 pi)) * exp(-((ln s - a m) / (sqrt(2) a sigma))^2)
/// With sqrt(2) inside the exponent the prefactor needs sqrt(2 pi); a bare
/// sqrt(pi) would integrate to sqrt(2).
inline double shadowing_pdf(double s, const ShadowingParams& params)
{
    if (!(s > 0.0)) {
        throw DomainError("shadowing_pdf: power must be > 0");
    }
    if (!(params.sigma_dB > 0.0)) {
        throw DomainError("shadowing_pdf: sigma_dB must be > 0 for a density to exist");
    }
    const double a = params.a_const;
    const double sigma = params.sigma_dB;
    const double z = (std::log(s) - a * params.mean_dB) / (std::numbers::sqrt2 * a * sigma);
    return std::exp(-z * z) / (a * sigma * s * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace poissinr
