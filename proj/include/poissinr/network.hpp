#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "random.hpp"

namespace poissinr {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// How the expected half inter-site distance R_c is turned into a BS density.
enum class DensityMapping {
    /// rho = 1 / (4 R_c^2): the mean nearest-neighbour distance of a planar
    /// Poisson process, 1 / (2 sqrt(rho)), equals R_c.
    nearest_neighbor,
    /// rho = 1 / (2 sqrt(3) R_c^2): one hexagonal cell of apothem R_c per BS.
    hexagonal,
};

inline std::string_view to_string(DensityMapping m)
{
    return m == DensityMapping::hexagonal ? "hexagonal" : "nearest_neighbor";
}

/// BS density (per m^2) for half inter-site distance `half_isd_Rc`.
inline double derive_density(double half_isd_Rc,
                             DensityMapping mapping = DensityMapping::nearest_neighbor)
{
    if (!(half_isd_Rc > 0.0) || !std::isfinite(half_isd_Rc)) {
        throw ParameterError("derive_density: half inter-site distance must be > 0");
    }
    const double rc2 = half_isd_Rc * half_isd_Rc;
    switch (mapping) {
    case DensityMapping::hexagonal:
        return 1.0 / (2.0 * std::numbers::sqrt3 * rc2);
    case DensityMapping::nearest_neighbor:
        break;
    }
    return 1.0 / (4.0 * rc2);
}

/// Scenario parameters shared by the simulator and the analytical baseline.
struct NetworkConfig {
    double half_isd_Rc = 1.0;   ///< meters
    double eta = 3.5;           ///< pathloss exponent
    double sigma_dB = 0.0;      ///< shadowing standard deviation
    double tx_power_P = 1.0;    ///< watts per subcarrier, every BS
    double pathloss_K = 1.0;
    double noise_Nth = 0.0;     ///< watts; 0 = interference limited
    double mean_bs_count = 50.0;
    std::size_t ue_grid_count = 400;
    std::size_t n_runs = 500;
    std::uint64_t seed = 1;
    DensityMapping density_mapping = DensityMapping::nearest_neighbor;

    /// Throws ParameterError naming the first offending field.
    void validate() const
    {
        auto require = [](bool ok, const char* what) {
            if (!ok) {
                throw ParameterError(std::string("invalid network config: ") + what);
            }
        };
        require(half_isd_Rc > 0.0 && std::isfinite(half_isd_Rc), "half_isd_Rc must be > 0");
        require(eta > 2.0 && std::isfinite(eta), "eta must be > 2");
        require(sigma_dB >= 0.0 && std::isfinite(sigma_dB), "sigma_dB must be >= 0");
        require(tx_power_P > 0.0 && std::isfinite(tx_power_P), "tx_power_P must be > 0");
        require(pathloss_K > 0.0 && std::isfinite(pathloss_K), "pathloss_K must be > 0");
        require(noise_Nth >= 0.0 && std::isfinite(noise_Nth), "noise_Nth must be >= 0");
        require(mean_bs_count > 0.0 && std::isfinite(mean_bs_count), "mean_bs_count must be > 0");
        require(ue_grid_count > 0, "ue_grid_count must be > 0");
        require(n_runs > 0, "n_runs must be > 0");
    }

    double density() const { return derive_density(half_isd_Rc, density_mapping); }

    /// S_A, chosen so that density() * area() == mean_bs_count.
    double area() const { return mean_bs_count / density(); }

    double side() const { return std::sqrt(area()); }

    /// UE-BS distances are clamped to this value to avoid the r -> 0 pole.
    double min_distance() const { return half_isd_Rc / 1000.0; }
};

/// One realization of BS positions on the square torus [0, side)^2.
struct BsLayout {
    std::vector<Point> positions;
    double side = 0.0;

    std::size_t count() const { return positions.size(); }
    bool empty() const { return positions.empty(); }
};

/// Draws count ~ Poisson(mean_bs_count) and i.i.d. uniform positions.
/// A zero count is a legal result.
inline BsLayout sample_layout(const NetworkConfig& config, RandomStream& rng)
{
    config.validate();
    BsLayout layout;
    layout.side = config.side();
    std::poisson_distribution<std::size_t> count_dist(config.mean_bs_count);
    const std::size_t n = count_dist(rng);
    std::uniform_real_distribution<double> coord(0.0, layout.side);
    layout.positions.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // uniform_real_distribution may round up to `side`
        double x = coord(rng);
        double y = coord(rng);
        if (x >= layout.side) x = 0.0;
        if (y >= layout.side) y = 0.0;
        layout.positions.push_back({x, y});
    }
    return layout;
}

/// Euclidean distance with per-axis periodic wrap.
inline double torus_distance(Point p, Point q, double side) noexcept
{
    double dx = std::abs(p.x - q.x);
    double dy = std::abs(p.y - q.y);
    dx = std::min(dx, side - dx);
    dy = std::min(dy, side - dy);
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace poissinr
