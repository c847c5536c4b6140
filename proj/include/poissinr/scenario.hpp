#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "fluid.hpp"
#include "montecarlo.hpp"
#include "network.hpp"

namespace poissinr {

/// Everything a scenario file can set. `network.eta` and `network.sigma_dB`
/// are placeholders; the sweep values live in `etas` and `sigmas_dB`.
struct Scenario {
    NetworkConfig network;
    std::vector<double> etas{3.5};
    std::vector<double> sigmas_dB{0.0};
    std::vector<Association> associations{Association::best_server};
    UeLayout ue_layout = UeLayout::uniform;
    double fit_a = 3.0;
    double fit_b = -6.0;
    CorrectionDomain correction_domain = CorrectionDomain::decibel;
    double quantile_lo = 0.05;
    double quantile_hi = 0.95;
    std::vector<double> outage_thresholds_dB{0.0};
    std::string output_dir = "out";

    /// Network config for one point of the sweep.
    NetworkConfig at(double eta, double sigma_dB) const
    {
        NetworkConfig c = network;
        c.eta = eta;
        c.sigma_dB = sigma_dB;
        return c;
    }

    FluidParams fluid(double eta) const
    {
        FluidParams p = FluidParams::from_config(at(eta, 0.0));
        p.fit_a = fit_a;
        p.fit_b = fit_b;
        p.correction_domain = correction_domain;
        return p;
    }

    /// Range-checks every field; throws ConfigError.
    void validate() const
    {
        auto fail = [](const std::string& what) { throw ConfigError("scenario: " + what); };
        if (etas.empty()) fail("eta list is empty");
        if (sigmas_dB.empty()) fail("sigma_dB list is empty");
        if (associations.empty()) fail("association list is empty");
        try {
            for (double eta : etas) {
                for (double sigma : sigmas_dB) {
                    at(eta, sigma).validate();
                }
                fluid(eta).validate();
            }
        } catch (const ParameterError& e) {
            fail(e.what());
        }
        if (!(quantile_lo > 0.0 && quantile_lo < quantile_hi && quantile_hi < 1.0)) {
            fail("need 0 < quantile_lo < quantile_hi < 1");
        }
        for (double t : outage_thresholds_dB) {
            if (!std::isfinite(t)) fail("outage thresholds must be finite");
        }
        if (output_dir.empty()) fail("output_dir is empty");
    }
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> items;
    while (true) {
        const auto comma = s.find(',');
        items.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return items;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("scenario: key '" + std::string(key) + "': cannot parse '" +
                          std::string(text) + "' as a number");
    }
    return value;
}

inline std::vector<double> parse_doubles(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    for (auto item : split_list(text)) {
        out.push_back(parse_number<double>(key, item));
    }
    return out;
}

inline double parse_single(std::string_view key, std::string_view text)
{
    const auto values = parse_doubles(key, text);
    if (values.size() != 1) {
        throw ConfigError("scenario: key '" + std::string(key) + "' takes a single value");
    }
    return values.front();
}

}  // namespace detail

/// Parses the `key = value` scenario format. Lines starting with '#' and blank
/// lines are ignored; list values are comma separated. Unknown or repeated keys
/// are errors.
inline Scenario parse_scenario(std::string_view text)
{
    using namespace detail;
    Scenario sc;
    std::map<std::string, int, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("scenario line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (seen[std::string(key)]++ > 0) {
            throw ConfigError("scenario: duplicate key '" + std::string(key) + "'");
        }

        if (key == "half_isd_Rc") {
            sc.network.half_isd_Rc = parse_single(key, value);
        } else if (key == "eta") {
            sc.etas = parse_doubles(key, value);
        } else if (key == "sigma_dB") {
            sc.sigmas_dB = parse_doubles(key, value);
        } else if (key == "tx_power_P") {
            sc.network.tx_power_P = parse_single(key, value);
        } else if (key == "pathloss_K") {
            sc.network.pathloss_K = parse_single(key, value);
        } else if (key == "noise_Nth") {
            sc.network.noise_Nth = parse_single(key, value);
        } else if (key == "mean_bs_count") {
            sc.network.mean_bs_count = parse_single(key, value);
        } else if (key == "ue_grid_count") {
            sc.network.ue_grid_count = parse_number<std::size_t>(key, value);
        } else if (key == "n_runs") {
            sc.network.n_runs = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            sc.network.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "density_mapping") {
            if (value == "nearest_neighbor") {
                sc.network.density_mapping = DensityMapping::nearest_neighbor;
            } else if (value == "hexagonal") {
                sc.network.density_mapping = DensityMapping::hexagonal;
            } else {
                throw ConfigError("scenario: density_mapping must be nearest_neighbor or hexagonal");
            }
        } else if (key == "ue_layout") {
            if (value == "uniform") {
                sc.ue_layout = UeLayout::uniform;
            } else if (value == "lattice") {
                sc.ue_layout = UeLayout::lattice;
            } else {
                throw ConfigError("scenario: ue_layout must be uniform or lattice");
            }
        } else if (key == "association") {
            sc.associations.clear();
            for (auto item : split_list(value)) {
                if (item == "nearest") {
                    sc.associations.push_back(Association::nearest);
                } else if (item == "best_server") {
                    sc.associations.push_back(Association::best_server);
                } else {
                    throw ConfigError("scenario: association must be nearest or best_server");
                }
            }
        } else if (key == "fit_a") {
            sc.fit_a = parse_single(key, value);
        } else if (key == "fit_b") {
            sc.fit_b = parse_single(key, value);
        } else if (key == "correction_domain") {
            if (value == "decibel") {
                sc.correction_domain = CorrectionDomain::decibel;
            } else if (value == "linear") {
                sc.correction_domain = CorrectionDomain::linear;
            } else {
                throw ConfigError("scenario: correction_domain must be decibel or linear");
            }
        } else if (key == "quantile_lo") {
            sc.quantile_lo = parse_single(key, value);
        } else if (key == "quantile_hi") {
            sc.quantile_hi = parse_single(key, value);
        } else if (key == "outage_thresholds_dB") {
            sc.outage_thresholds_dB = value.empty() ? std::vector<double>{}
                                                    : parse_doubles(key, value);
        } else if (key == "output_dir") {
            sc.output_dir = std::string(value);
        } else {
            throw ConfigError("scenario: unknown key '" + std::string(key) + "'");
        }
    }
    sc.validate();
    return sc;
}

inline Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace poissinr
