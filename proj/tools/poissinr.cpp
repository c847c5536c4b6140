// Command-line front end: simulate, fluid, compare.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "poissinr/poissinr.hpp"

namespace {

poissinr::ExitCode run_with_scenario(const std::string& path,
                                     const poissinr::CommandSettings& settings, bool simulate)
{
    poissinr::Scenario sc;
    try {
        sc = poissinr::load_scenario(path);
    } catch (const poissinr::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return poissinr::ExitCode::config_error;
    }
    return simulate ? poissinr::cmd_simulate(sc, settings, std::cerr)
                    : poissinr::cmd_fluid(sc, settings, std::cerr);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Downlink SINR of Poisson cellular networks: Monte Carlo and fluid baseline"};
    app.require_subcommand(1);

    std::string scenario_path;
    poissinr::CommandSettings settings;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    unsigned workers = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scenario", scenario_path, "Scenario file (key = value)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Override the scenario seed");
        sub->add_option("--workers", workers, "Worker threads (0 = all cores)");
        sub->add_option("--out", out_dir, "Output directory (overrides POISSINR_OUT_DIR)");
    };

    auto* simulate = app.add_subcommand("simulate", "Run Monte Carlo campaigns, write CDF CSVs");
    add_common(simulate);
    auto* fluid = app.add_subcommand("fluid", "Write analytical fluid CDFs and throughput");
    add_common(fluid);

    poissinr::CompareRequest cmp;
    std::string file_a;
    std::string file_b;
    std::optional<double> threshold;
    std::optional<std::string> report;
    auto* compare = app.add_subcommand("compare", "Horizontal dB shift between two CDF files");
    compare->add_option("file_a", file_a, "First CDF CSV")->required();
    compare->add_option("file_b", file_b, "Second CDF CSV")->required();
    compare->add_option("--p-lo", cmp.p_lo, "Lowest probability level")->capture_default_str();
    compare->add_option("--p-hi", cmp.p_hi, "Highest probability level")->capture_default_str();
    compare->add_option("--threshold-db", threshold, "Fail (exit 1) above this shift");
    compare->add_option("--report", report, "Also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(poissinr::ExitCode::config_error);
    }

    settings.seed = seed;
    settings.workers = workers;
    settings.out_dir = out_dir;

    poissinr::ExitCode code = poissinr::ExitCode::ok;
    if (*simulate) {
        code = run_with_scenario(scenario_path, settings, true);
    } else if (*fluid) {
        code = run_with_scenario(scenario_path, settings, false);
    } else if (*compare) {
        cmp.file_a = file_a;
        cmp.file_b = file_b;
        cmp.threshold_dB = threshold;
        if (report) cmp.report_path = *report;
        code = poissinr::cmd_compare(cmp, std::cout, std::cerr);
    }
    return static_cast<int>(code);
}
