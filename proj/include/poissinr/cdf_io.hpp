#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "empirical.hpp"
#include "errors.hpp"
#include "scenario.hpp"

namespace poissinr {

/// Header of every CDF file.
inline constexpr std::string_view kCdfCsvHeader = "p,sinr_dB";

/// Probability levels of the CDF files: 0.001, 0.002, ..., 0.999.
inline std::vector<double> csv_probability_grid()
{
    std::vector<double> grid;
    grid.reserve(999);
    for (int k = 1; k <= 999; ++k) {
        grid.push_back(k / 1000.0);
    }
    return grid;
}

/// Renders `quantile_dB(p)` on the fixed 0.001 grid as `p,sinr_dB` CSV.
template <std::invocable<double> QuantileFn>
std::string format_cdf_csv(QuantileFn&& quantile_dB)
{
    std::string out(kCdfCsvHeader);
    out += '\n';
    char line[64];
    for (const double p : csv_probability_grid()) {
        std::snprintf(line, sizeof line, "%.3f,%.6f\n", p, quantile_dB(p));
        out += line;
    }
    return out;
}

inline std::string format_cdf_csv(const EmpiricalCdf& cdf)
{
    return format_cdf_csv([&](double p) { return cdf.interpolated_quantile(p); });
}

/// Quantile function read back from a `p,sinr_dB` file; linear interpolation
/// between rows, clamped to the first and last row.
class TabulatedCdf {
public:
    TabulatedCdf(std::vector<double> p, std::vector<double> sinr_dB)
        : p_(std::move(p)), x_(std::move(sinr_dB))
    {
        if (p_.size() < 2 || p_.size() != x_.size()) {
            throw ConfigError("CDF table needs at least two rows");
        }
        for (std::size_t i = 1; i < p_.size(); ++i) {
            if (!(p_[i] > p_[i - 1])) {
                throw ConfigError("CDF table: p must be strictly increasing");
            }
            if (x_[i] < x_[i - 1]) {
                throw ConfigError("CDF table: sinr_dB must be non-decreasing");
            }
        }
    }

    double quantile(double p) const
    {
        if (p <= p_.front()) return x_.front();
        if (p >= p_.back()) return x_.back();
        const auto it = std::upper_bound(p_.begin(), p_.end(), p);
        const auto hi = static_cast<std::size_t>(it - p_.begin());
        const std::size_t lo = hi - 1;
        const double w = (p - p_[lo]) / (p_[hi] - p_[lo]);
        if (w == 0.0) return x_[lo];
        return x_[lo] + w * (x_[hi] - x_[lo]);
    }

    std::size_t size() const { return p_.size(); }

private:
    std::vector<double> p_;
    std::vector<double> x_;
};

inline TabulatedCdf parse_cdf_csv(std::string_view text, const std::string& origin = "<memory>")
{
    std::vector<double> ps;
    std::vector<double> xs;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = detail::trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kCdfCsvHeader) {
                throw ConfigError(origin + ": expected header '" + std::string(kCdfCsvHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split_list(line);
        if (fields.size() != 2) {
            throw ConfigError(origin + " line " + std::to_string(line_no) + ": expected 2 columns");
        }
        try {
            ps.push_back(detail::parse_number<double>("p", fields[0]));
            xs.push_back(detail::parse_number<double>("sinr_dB", fields[1]));
        } catch (const ConfigError& e) {
            throw ConfigError(origin + " line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header_seen) {
        throw ConfigError(origin + ": empty CDF file");
    }
    try {
        return TabulatedCdf(std::move(ps), std::move(xs));
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

inline std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline TabulatedCdf load_cdf_csv(const std::filesystem::path& path)
{
    return parse_cdf_csv(read_text_file(path), path.string());
}

inline void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
    out << content;
}

/// Short, locale-independent label for file names ("2.6", "3", "0.5").
inline std::string number_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace poissinr
