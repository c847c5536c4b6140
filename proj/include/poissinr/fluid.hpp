#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "errors.hpp"
#include "network.hpp"
#include "propagation.hpp"
#include "sinr.hpp"

namespace poissinr {

/// Domain in which the fitted correction a*eta + b is subtracted.
enum class CorrectionDomain {
    decibel,  ///< SINR_dB - (a eta + b)
    linear,   ///< SINR_lin - (a eta + b), kept for comparison only
};

inline std::string_view to_string(CorrectionDomain d)
{
    return d == CorrectionDomain::linear ? "linear" : "decibel";
}

/// Parameters of the fluid network baseline.
struct FluidParams {
    double half_isd_Rc = 1.0;
    double rho_bs = 0.25;
    double eta = 3.5;
    double fit_a = 3.0;
    double fit_b = -6.0;
    CorrectionDomain correction_domain = CorrectionDomain::decibel;

    static FluidParams from_config(const NetworkConfig& config)
    {
        FluidParams p;
        p.half_isd_Rc = config.half_isd_Rc;
        p.rho_bs = config.density();
        p.eta = config.eta;
        return p;
    }

    void validate() const
    {
        if (!(half_isd_Rc > 0.0) || !std::isfinite(half_isd_Rc)) {
            throw ParameterError("invalid fluid params: half_isd_Rc must be > 0");
        }
        if (!(rho_bs > 0.0) || !std::isfinite(rho_bs)) {
            throw ParameterError("invalid fluid params: rho_bs must be > 0");
        }
        if (!(eta > 2.0) || !std::isfinite(eta)) {
            throw ParameterError("invalid fluid params: eta must be > 2");
        }
        if (!std::isfinite(fit_a) || !std::isfinite(fit_b)) {
            throw ParameterError("invalid fluid params: fit constants must be finite");
        }
    }

    /// a eta + b
    double correction() const { return fit_a * eta + fit_b; }

    /// Lower end of the cell; matches the simulator's UE-BS distance clamp.
    double min_distance() const { return half_isd_Rc / 1000.0; }
};

namespace detail {

/// ln gamma(r), valid on (0, 2 Rc).
inline double log_fluid_sinr(double r, const FluidParams& p)
{
    return std::log((p.eta - 2.0) / (2.0 * std::numbers::pi * p.rho_bs)) - p.eta * std::log(r) +
           (p.eta - 2.0) * std::log(2.0 * p.half_isd_Rc - r);
}

inline void check_cell_distance(double r, const FluidParams& p)
{
    if (!(r > 0.0 && r <= p.half_isd_Rc)) {
        throw DomainError("fluid_sinr: r must lie in (0, Rc]");
    }
}

}  // namespace detail

/// Fluid-model SINR at distance r from the serving BS:
///   (eta - 2) / (2 pi rho) * r^-eta / (2 Rc - r)^(2 - eta)
inline double fluid_sinr(double r, const FluidParams& params)
{
    params.validate();
    detail::check_cell_distance(r, params);
    return std::exp(detail::log_fluid_sinr(r, params));
}

/// SINR after the fitted correction, in dB.
inline double modified_fluid_sinr_dB(double r, const FluidParams& params)
{
    const double g = fluid_sinr(r, params);
    if (params.correction_domain == CorrectionDomain::linear) {
        const double shifted = g - params.correction();
        return shifted > 0.0 ? to_dB(shifted) : -std::numeric_limits<double>::infinity();
    }
    return to_dB(g) - params.correction();
}

/// Distance r in (0, Rc] with fluid_sinr(r) == gamma, found by bisection on
/// ln gamma(r), which is strictly decreasing on the cell.
inline double invert_fluid_sinr(double gamma, const FluidParams& params)
{
    params.validate();
    const double rc = params.half_isd_Rc;
    const double target = std::log(gamma);
    const double at_edge = detail::log_fluid_sinr(rc, params);
    // fluid_sinr(Rc) round-trips through exp/log, allow a few ulps of slack
    const double slack = 1e-13 * std::max(1.0, std::abs(at_edge));
    if (!(gamma > 0.0) || target < at_edge - slack) {
        throw DomainError("invert_fluid_sinr: gamma below the cell-edge SINR");
    }
    if (target <= at_edge) {
        return rc;
    }
    auto f = [&](double r) { return detail::log_fluid_sinr(r, params) - target; };
    double lo = rc / 2.0;
    while (f(lo) < 0.0) {
        lo /= 2.0;
        if (lo < std::numeric_limits<double>::min()) {
            throw NumericalError("invert_fluid_sinr: gamma too large to bracket");
        }
    }
    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::bisect(
        f, lo, rc, boost::math::tools::eps_tolerance<double>(40), max_iter);
    return 0.5 * (a + b);
}

/// Analytical CDF for a user uniform on the disc of radius Rc around its BS,
/// restricted to r >= min_distance():
///   F(g) = 1 - (r(g) / Rc)^2.
/// With `modified` the CDF is the one of the corrected SINR.
inline double fluid_cdf(double gamma_dB, const FluidParams& params, bool modified)
{
    params.validate();
    double g_dB = gamma_dB;
    if (modified) {
        if (params.correction_domain == CorrectionDomain::linear) {
            const double lin = from_dB(gamma_dB) + params.correction();
            if (!(lin > 0.0)) {
                return 0.0;
            }
            g_dB = to_dB(lin);
        } else {
            g_dB = gamma_dB + params.correction();
        }
    }
    const double rc = params.half_isd_Rc;
    const double edge_dB = to_dB(fluid_sinr(rc, params));
    const double cap_dB = to_dB(fluid_sinr(params.min_distance(), params));
    if (g_dB <= edge_dB) {
        return 0.0;
    }
    if (g_dB >= cap_dB) {
        return 1.0;
    }
    const double r = invert_fluid_sinr(from_dB(g_dB), params);
    return 1.0 - (r / rc) * (r / rc);
}

/// Inverse of fluid_cdf for p in [0, 1]: the SINR (dB) at r = Rc sqrt(1 - p),
/// clamped at min_distance().
inline double fluid_quantile_dB(double p, const FluidParams& params, bool modified)
{
    params.validate();
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("fluid_quantile_dB: p must lie in [0, 1]");
    }
    const double r = std::max(params.half_isd_Rc * std::sqrt(1.0 - p), params.min_distance());
    return modified ? modified_fluid_sinr_dB(r, params) : to_dB(fluid_sinr(r, params));
}

/// Quantile/CDF pair of the analytical baseline.
class FluidCdf {
public:
    FluidCdf(FluidParams params, bool modified) : params_(params), modified_(modified)
    {
        params_.validate();
    }

    double quantile(double p) const { return fluid_quantile_dB(p, params_, modified_); }
    double cdf(double gamma_dB) const { return fluid_cdf(gamma_dB, params_, modified_); }
    const FluidParams& params() const { return params_; }
    bool modified() const { return modified_; }

private:
    FluidParams params_;
    bool modified_;
};

/// (2 / Rc^2) * integral over [r_min, Rc] of r f(r) dr, i.e. the average of f
/// over users uniform on the disc, excluding the inner r_min disc.
/// Throws NumericalError when the estimated absolute error exceeds abs_tol.
template <typename F>
double disc_average(F&& f, double r_min, double Rc, double abs_tol = 1e-6)
{
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double r) { return r * f(r); }, r_min, Rc, 15, 1e-12, &error);
    const double scale = 2.0 / (Rc * Rc);
    if (!std::isfinite(integral) || error * scale > abs_tol) {
        throw NumericalError("disc_average: quadrature error estimate " +
                             std::to_string(error * scale) + " exceeds tolerance " +
                             std::to_string(abs_tol));
    }
    return integral * scale;
}

/// Spectral efficiency at the cell edge, log2(1 + gamma(Rc)).
inline double cell_edge_throughput(const FluidParams& params)
{
    return spectral_efficiency(fluid_sinr(params.half_isd_Rc, params));
}

/// Mean spectral efficiency over the cell disc.
inline double cell_average_throughput(const FluidParams& params)
{
    params.validate();
    return disc_average(
        [&](double r) { return spectral_efficiency(fluid_sinr(r, params)); },
        params.min_distance(), params.half_isd_Rc);
}

}  // namespace poissinr
