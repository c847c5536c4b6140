#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"

namespace poissinr {

/// Anything exposing a quantile function p -> SINR (dB).
template <typename T>
concept QuantileFunction = requires(const T& t, double p) {
    { t.quantile(p) } -> std::convertible_to<double>;
};

/// Right-continuous empirical CDF over SINR samples in dB.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> samples_dB) : sorted_(std::move(samples_dB))
    {
        if (sorted_.empty()) {
            throw ParameterError("empirical_cdf: no samples");
        }
        std::sort(sorted_.begin(), sorted_.end());
    }

    /// Order statistic x_(ceil(p n)); p <= 0 maps to the minimum.
    double quantile(double p) const
    {
        const auto n = static_cast<double>(sorted_.size());
        // p = k / n must give k even when p * n rounds to k + ulp
        const double pn = p * n;
        const double k = std::ceil(pn - 1e-9 * std::max(pn, 1.0));
        const auto idx = static_cast<std::size_t>(std::clamp(k, 1.0, n)) - 1;
        return sorted_[idx];
    }

    /// Linear interpolation between order statistics at position p (n - 1).
    double interpolated_quantile(double p) const
    {
        const double h = std::clamp(p, 0.0, 1.0) * static_cast<double>(sorted_.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted_.size() - 1);
        const double w = h - static_cast<double>(lo);
        return sorted_[lo] + w * (sorted_[hi] - sorted_[lo]);
    }

    /// Fraction of samples <= x.
    double cdf(double x) const
    {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    std::span<const double> sorted_samples_dB() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }

    /// Half-width of a distribution-free confidence interval for q(p), from the
    /// normal approximation to the binomial count of samples below q(p).
    /// `z` = 2.576 gives 99%.
    double quantile_half_width(double p, double z = 2.576) const
    {
        const double n = static_cast<double>(sorted_.size());
        const double d = z * std::sqrt(p * (1.0 - p) / n);
        return 0.5 * (quantile(std::min(p + d, 1.0)) - quantile(std::max(p - d, 0.0)));
    }

private:
    std::vector<double> sorted_;
};

inline EmpiricalCdf empirical_cdf(std::vector<double> samples_dB)
{
    return EmpiricalCdf(std::move(samples_dB));
}

/// P(SINR <= threshold_dB).
inline double outage_probability(const EmpiricalCdf& cdf, double threshold_dB)
{
    return cdf.cdf(threshold_dB);
}

/// Probability grid p_lo, p_lo + step, ... up to p_hi inclusive.
inline std::vector<double> probability_grid(double p_lo, double p_hi, double step = 0.01)
{
    std::vector<double> grid;
    const auto n = static_cast<std::size_t>(std::floor((p_hi - p_lo) / step + 1e-9));
    grid.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        // rounding keeps grid points like 0.05 + 0.01 k bit-stable across platforms
        grid.push_back(std::round((p_lo + static_cast<double>(k) * step) * 1e9) / 1e9);
    }
    return grid;
}

struct ShiftPoint {
    double p = 0.0;
    double shift_dB = 0.0;  ///< q_a(p) - q_b(p), signed
};

struct ShiftProfile {
    double max_shift_dB = 0.0;  ///< max |q_a(p) - q_b(p)| over the grid
    double p_at_max = 0.0;
    std::vector<ShiftPoint> profile;
};

/// Horizontal distance in dB between two CDFs at matched probability levels,
/// on a 0.01 grid over [p_lo, p_hi].
template <QuantileFunction A, QuantileFunction B>
ShiftProfile cdf_horizontal_shift_dB(const A& cdf_a, const B& cdf_b, double p_lo, double p_hi)
{
    if (!(p_lo > 0.0 && p_lo < p_hi && p_hi < 1.0)) {
        throw ParameterError("cdf_horizontal_shift_dB: need 0 < p_lo < p_hi < 1");
    }
    ShiftProfile out;
    for (const double p : probability_grid(p_lo, p_hi)) {
        const double d = cdf_a.quantile(p) - cdf_b.quantile(p);
        out.profile.push_back({p, d});
        if (std::abs(d) > out.max_shift_dB) {
            out.max_shift_dB = std::abs(d);
            out.p_at_max = p;
        }
    }
    return out;
}

}  // namespace poissinr
