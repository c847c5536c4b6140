#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "cdf_io.hpp"
#include "empirical.hpp"
#include "errors.hpp"
#include "fluid.hpp"
#include "montecarlo.hpp"
#include "scenario.hpp"

namespace poissinr {

/// Process exit codes of the command-line front end.
enum class ExitCode : int {
    ok = 0,
    threshold_exceeded = 1,
    config_error = 2,
    numerical_error = 3,
};

/// Environment variable that overrides the scenario's output_dir.
inline constexpr const char* kOutDirEnv = "POISSINR_OUT_DIR";

/// Options common to every command, coming from flags rather than the file.
struct CommandSettings {
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
    std::optional<std::string> out_dir;  ///< --out, wins over env and scenario
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::filesystem::path resolve_out_dir(const Scenario& sc, const CommandSettings& s)
{
    if (s.out_dir) return *s.out_dir;
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
    return sc.output_dir;
}

inline std::filesystem::path prepare_out_dir(const Scenario& sc, const CommandSettings& s)
{
    const auto dir = resolve_out_dir(sc, s);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    return dir;
}

inline Json scenario_json(const Scenario& sc)
{
    const NetworkConfig& n = sc.network;
    Json j;
    j["half_isd_Rc"] = n.half_isd_Rc;
    j["density_mapping"] = to_string(n.density_mapping);
    j["rho_bs"] = n.density();
    j["area"] = n.area();
    j["mean_bs_count"] = n.mean_bs_count;
    j["tx_power_P"] = n.tx_power_P;
    j["pathloss_K"] = n.pathloss_K;
    j["noise_Nth"] = n.noise_Nth;
    j["ue_grid_count"] = n.ue_grid_count;
    j["ue_layout"] = to_string(sc.ue_layout);
    j["n_runs"] = n.n_runs;
    j["seed"] = n.seed;
    j["eta"] = sc.etas;
    j["sigma_dB"] = sc.sigmas_dB;
    Json assoc = Json::array();
    for (auto a : sc.associations) assoc.push_back(to_string(a));
    j["association"] = assoc;
    j["fit_a"] = sc.fit_a;
    j["fit_b"] = sc.fit_b;
    j["correction_domain"] = to_string(sc.correction_domain);
    j["quantile_lo"] = sc.quantile_lo;
    j["quantile_hi"] = sc.quantile_hi;
    j["outage_thresholds_dB"] = sc.outage_thresholds_dB;
    return j;
}

inline Json shift_json(const ShiftProfile& s, bool with_profile)
{
    Json j;
    j["max_dB"] = s.max_shift_dB;
    j["p_at_max"] = s.p_at_max;
    if (!s.profile.empty()) {
        j["at_p_lo_dB"] = s.profile.front().shift_dB;
    }
    if (with_profile) {
        Json prof = Json::array();
        for (const auto& pt : s.profile) prof.push_back({{"p", pt.p}, {"shift_dB", pt.shift_dB}});
        j["profile"] = prof;
    }
    return j;
}

inline std::string cdf_file_name(double eta, double sigma, Association a)
{
    return "cdf_eta" + number_label(eta) + "_sigma" + number_label(sigma) + "_" +
           std::string(to_string(a)) + ".csv";
}

template <typename Fn>
ExitCode guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::config_error;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::config_error;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return ExitCode::numerical_error;
    } catch (const CampaignError& e) {
        err << "numerical error: " << e.what() << '\n';
        return ExitCode::numerical_error;
    } catch (const DomainError& e) {
        err << "numerical error: " << e.what() << '\n';
        return ExitCode::numerical_error;
    }
}

}  // namespace detail

/// Runs every (eta, association, sigma) campaign of the scenario. Writes one
/// CDF CSV per combination and `summary.json` into the output directory.
inline ExitCode cmd_simulate(Scenario sc, const CommandSettings& settings, std::ostream& log)
{
    return detail::guarded(log, [&] {
        if (settings.seed) sc.network.seed = *settings.seed;
        sc.validate();
        const auto dir = detail::prepare_out_dir(sc, settings);

        detail::Json results = detail::Json::array();
        for (const double eta : sc.etas) {
            const FluidCdf fluid(sc.fluid(eta), true);
            for (const Association assoc : sc.associations) {
                std::map<double, EmpiricalCdf> cdfs;
                std::vector<std::pair<double, SinrSampleSet>> sets;
                for (const double sigma : sc.sigmas_dB) {
                    CampaignOptions opt;
                    opt.association = assoc;
                    opt.shadowing_on = true;
                    opt.ue_layout = sc.ue_layout;
                    opt.workers = settings.workers;
                    SinrSampleSet set = run_campaign(sc.at(eta, sigma), opt);
                    EmpiricalCdf cdf = empirical_cdf(set);
                    const std::string name = detail::cdf_file_name(eta, sigma, assoc);
                    write_text_file(dir / name, format_cdf_csv(cdf));
                    log << "wrote " << (dir / name).string() << " (" << cdf.size()
                        << " samples, " << set.n_skipped << " skipped)\n";
                    cdfs.insert_or_assign(sigma, std::move(cdf));
                    set.samples_dB.clear();
                    sets.emplace_back(sigma, std::move(set));
                }
                for (const auto& [sigma, set] : sets) {
                    const EmpiricalCdf& cdf = cdfs.at(sigma);
                    detail::Json r;
                    r["eta"] = eta;
                    r["sigma_dB"] = sigma;
                    r["association"] = to_string(assoc);
                    r["file"] = detail::cdf_file_name(eta, sigma, assoc);
                    r["n_runs"] = set.n_runs;
                    r["n_samples"] = cdf.size();
                    r["n_skipped"] = set.n_skipped;
                    r["n_empty_runs"] = set.n_empty_runs;
                    r["median_dB"] = cdf.quantile(0.5);
                    detail::Json outage = detail::Json::array();
                    for (const double t : sc.outage_thresholds_dB) {
                        outage.push_back({{"threshold_dB", t},
                                          {"probability", outage_probability(cdf, t)}});
                    }
                    r["outage"] = outage;
                    if (sigma != 0.0 && cdfs.contains(0.0)) {
                        r["shift_vs_no_shadowing"] = detail::shift_json(
                            cdf_horizontal_shift_dB(cdf, cdfs.at(0.0), sc.quantile_lo,
                                                    sc.quantile_hi),
                            false);
                    }
                    r["shift_vs_modified_fluid"] = detail::shift_json(
                        cdf_horizontal_shift_dB(cdf, fluid, sc.quantile_lo, sc.quantile_hi),
                        false);
                    results.push_back(std::move(r));
                }
            }
        }
        detail::Json summary;
        summary["scenario"] = detail::scenario_json(sc);
        summary["results"] = results;
        write_text_file(dir / "summary.json", summary.dump(2) + "\n");
        log << "wrote " << (dir / "summary.json").string() << '\n';
        return ExitCode::ok;
    });
}

/// Analytical baseline for every eta of the scenario: unmodified and modified
/// fluid CDFs plus `fluid_summary.json` with cell-edge and cell-average
/// spectral efficiency.
inline ExitCode cmd_fluid(Scenario sc, const CommandSettings& settings, std::ostream& log)
{
    return detail::guarded(log, [&] {
        sc.validate();
        const auto dir = detail::prepare_out_dir(sc, settings);
        detail::Json rows = detail::Json::array();
        for (const double eta : sc.etas) {
            const FluidParams params = sc.fluid(eta);
            for (const bool modified : {false, true}) {
                const FluidCdf cdf(params, modified);
                const std::string name = "fluid_eta" + number_label(eta) +
                                         (modified ? "_modified.csv" : "_unmodified.csv");
                write_text_file(dir / name,
                                format_cdf_csv([&](double p) { return cdf.quantile(p); }));
                log << "wrote " << (dir / name).string() << '\n';
            }
            const double edge_sinr = fluid_sinr(params.half_isd_Rc, params);
            detail::Json r;
            r["eta"] = eta;
            r["rho_bs"] = params.rho_bs;
            r["half_isd_Rc"] = params.half_isd_Rc;
            r["correction_dB"] = params.correction();
            r["cell_edge_sinr_dB"] = to_dB(edge_sinr);
            r["cell_edge_throughput"] = cell_edge_throughput(params);
            r["cell_average_throughput"] = cell_average_throughput(params);
            rows.push_back(std::move(r));
        }
        detail::Json summary;
        summary["scenario"] = detail::scenario_json(sc);
        summary["fluid"] = rows;
        write_text_file(dir / "fluid_summary.json", summary.dump(2) + "\n");
        log << "wrote " << (dir / "fluid_summary.json").string() << '\n';
        return ExitCode::ok;
    });
}

struct CompareRequest {
    std::filesystem::path file_a;
    std::filesystem::path file_b;
    double p_lo = 0.05;
    double p_hi = 0.95;
    std::optional<double> threshold_dB;
    std::optional<std::filesystem::path> report_path;
};

/// Horizontal shift between two CDF files. Prints the JSON report to `out`
/// and returns threshold_exceeded when a threshold is given and exceeded.
inline ExitCode cmd_compare(const CompareRequest& req, std::ostream& out, std::ostream& log)
{
    return detail::guarded(log, [&] {
        if (!(req.p_lo > 0.0 && req.p_lo < req.p_hi && req.p_hi < 1.0)) {
            throw ConfigError("compare: need 0 < p_lo < p_hi < 1");
        }
        const TabulatedCdf a = load_cdf_csv(req.file_a);
        const TabulatedCdf b = load_cdf_csv(req.file_b);
        const ShiftProfile shift = cdf_horizontal_shift_dB(a, b, req.p_lo, req.p_hi);
        detail::Json report;
        report["file_a"] = req.file_a.string();
        report["file_b"] = req.file_b.string();
        report["p_lo"] = req.p_lo;
        report["p_hi"] = req.p_hi;
        report["shift"] = detail::shift_json(shift, true);
        ExitCode code = ExitCode::ok;
        if (req.threshold_dB) {
            const bool pass = shift.max_shift_dB <= *req.threshold_dB;
            report["threshold_dB"] = *req.threshold_dB;
            report["pass"] = pass;
            if (!pass) code = ExitCode::threshold_exceeded;
        }
        const std::string text = report.dump(2) + "\n";
        out << text;
        if (req.report_path) {
            write_text_file(*req.report_path, text);
        }
        return code;
    });
}

}  // namespace poissinr
