// SPDX-License-Identifier: Apache-2.0
//
// robustma: movable-antenna placement and robust beamforming under imperfect CSI
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Scenario configuration and the sweep harness: for each seeded channel
// realization, place antennas (grid optimizer plus both fixed baselines),
// evaluate the worst-case or non-outage received SNR across a swept
// parameter, average linear powers over realizations, and emit CSV.
// Every run is a pure function of the configuration including the seed.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "robustma/channel_model.hpp"
#include "robustma/core.hpp"
#include "robustma/csi_error.hpp"
#include "robustma/errors.hpp"
#include "robustma/outage_simulator.hpp"
#include "robustma/position_optimizer.hpp"
#include "robustma/robust_analysis.hpp"

namespace robustma {

enum class SweepAxis { delta2_db, rho, sigma2_db };

inline const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::delta2_db: return "delta2_db";
        case SweepAxis::rho: return "rho";
        case SweepAxis::sigma2_db: return "sigma2_db";
    }
    throw invalid_parameter("axis_name: unknown sweep axis");
}

/// Accepts both the CLI spellings (delta2, rho, sigma2) and the CSV header
/// names (delta2_db, rho, sigma2_db).
inline SweepAxis parse_sweep_axis(const std::string& text) {
    if (text == "delta2" || text == "delta2_db") return SweepAxis::delta2_db;
    if (text == "rho") return SweepAxis::rho;
    if (text == "sigma2" || text == "sigma2_db") return SweepAxis::sigma2_db;
    throw invalid_parameter("parse_sweep_axis: unknown axis '" + text +
                            "' (expected delta2, rho, or sigma2)");
}

/// Scenario and run parameters. Unset values (NaN or empty lists) are filled
/// by finalize_config: min_spacing defaults to wavelength/2, reference_gain
/// to (wavelength / 4 pi)^2, and each sweep list to its built-in default.
struct ExperimentConfig {
    double wavelength_m = 0.06;
    int antenna_count = 8;
    double region_length_m = 0.36;
    double min_spacing_m = std::numeric_limits<double>::quiet_NaN();
    int grid_points = 120;
    int path_count = 3;
    double distance_m = 100.0;
    double pathloss_exponent = 2.8;
    double transmit_snr_db = 100.0;
    double noise_power = 1.0;
    double reference_gain = std::numeric_limits<double>::quiet_NaN();

    double fixed_sigma2_db = -115.0; // error variance used by the rho sweep
    double fixed_rho = 0.05;         // outage target used by the sigma2 sweep

    SweepAxis axis = SweepAxis::delta2_db;
    std::vector<double> delta2_db_list;
    std::vector<double> rho_list;
    std::vector<double> sigma2_db_list;

    int channel_realizations = 100;
    int error_trials = 500;
    std::uint64_t base_seed = 1;
    int threads = 1;

    double p_max() const { return noise_power * from_db(transmit_snr_db); }
};

namespace detail {
inline constexpr std::uint64_t seed_stream_channel = 1;
inline constexpr std::uint64_t seed_stream_error = 2;
} // namespace detail

/// Fills defaults that depend on other fields, then validates everything
/// that does not need a channel realization to check.
inline ExperimentConfig finalize_config(ExperimentConfig cfg) {
    if (!(cfg.wavelength_m > 0.0))
        throw invalid_parameter("config: wavelength_m must be positive");
    if (std::isnan(cfg.min_spacing_m)) cfg.min_spacing_m = 0.5 * cfg.wavelength_m;
    if (std::isnan(cfg.reference_gain)) {
        const double amp = cfg.wavelength_m / (4.0 * std::numbers::pi);
        cfg.reference_gain = amp * amp;
    }
    if (cfg.delta2_db_list.empty())
        cfg.delta2_db_list = {-115.0, -112.5, -110.0, -107.5, -105.0,
                              -102.5, -100.0, -97.5,  -95.0};
    if (cfg.rho_list.empty()) cfg.rho_list = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5};
    if (cfg.sigma2_db_list.empty())
        cfg.sigma2_db_list = {-125.0, -120.0, -115.0, -110.0, -105.0};

    if (cfg.antenna_count < 1) throw invalid_parameter("config: antenna_count must be >= 1");
    if (cfg.path_count < 1) throw invalid_parameter("config: path_count must be >= 1");
    if (!(cfg.region_length_m > 0.0))
        throw invalid_parameter("config: region_length_m must be positive");
    if (!(cfg.min_spacing_m > 0.0))
        throw invalid_parameter("config: min_spacing_m must be positive");
    if (cfg.grid_points < 1) throw invalid_parameter("config: grid_points must be >= 1");
    if (!(cfg.distance_m > 0.0)) throw invalid_parameter("config: distance_m must be positive");
    if (!(cfg.pathloss_exponent >= 0.0))
        throw invalid_parameter("config: pathloss_exponent must be nonnegative");
    if (!(cfg.noise_power > 0.0)) throw invalid_parameter("config: noise_power must be positive");
    if (!(cfg.reference_gain >= 0.0))
        throw invalid_parameter("config: reference_gain must be nonnegative");
    if (!(cfg.fixed_rho > 0.0) || !(cfg.fixed_rho < 1.0))
        throw invalid_parameter("config: rho must lie in (0, 1)");
    for (double rho : cfg.rho_list)
        if (!(rho > 0.0) || !(rho < 1.0))
            throw invalid_parameter("config: swept rho values must lie in (0, 1)");
    for (double db : cfg.delta2_db_list)
        if (std::isnan(db)) throw invalid_parameter("config: delta2_db values must not be NaN");
    for (double db : cfg.sigma2_db_list)
        if (std::isnan(db)) throw invalid_parameter("config: sigma2_db values must not be NaN");
    if (cfg.channel_realizations < 1)
        throw invalid_parameter("config: realizations must be >= 1");
    if (cfg.error_trials < 1) throw invalid_parameter("config: trials must be >= 1");
    if (cfg.threads < 1) throw invalid_parameter("config: threads must be >= 1");
    return cfg;
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const std::string& token, int line_no) {
    const std::string t = trim(token);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw invalid_parameter("config line " + std::to_string(line_no) +
                                ": cannot parse number '" + t + "'");
    return v;
}

inline long long parse_integer(const std::string& token, int line_no) {
    const std::string t = trim(token);
    char* end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw invalid_parameter("config line " + std::to_string(line_no) +
                                ": cannot parse integer '" + t + "'");
    return v;
}

inline std::uint64_t parse_seed(const std::string& token, int line_no) {
    const std::string t = trim(token);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw invalid_parameter("config line " + std::to_string(line_no) +
                                ": cannot parse seed '" + t + "'");
    return static_cast<std::uint64_t>(v);
}

inline std::vector<double> parse_list(const std::string& token, int line_no) {
    std::vector<double> out;
    std::string piece;
    std::stringstream ss(token);
    while (std::getline(ss, piece, ',')) {
        std::stringstream inner(piece);
        std::string word;
        while (inner >> word) out.push_back(parse_double(word, line_no));
    }
    if (out.empty())
        throw invalid_parameter("config line " + std::to_string(line_no) + ": empty list");
    return out;
}

} // namespace detail

/// Reads a key = value configuration with [scenario], [error], [sweep], and
/// [run] sections. Unknown sections or keys are errors; '#' and ';' start
/// comments. Missing keys keep their defaults.
inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("load_config: cannot open '" + path + "'");
    ExperimentConfig cfg;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw invalid_parameter("config line " + std::to_string(line_no) +
                                        ": malformed section header");
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "error" && section != "sweep" &&
                section != "run")
                throw invalid_parameter("config line " + std::to_string(line_no) +
                                        ": unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_parameter("config line " + std::to_string(line_no) +
                                    ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        const int ln = line_no;

        if (section == "scenario") {
            if (key == "wavelength_m") cfg.wavelength_m = detail::parse_double(value, ln);
            else if (key == "antenna_count")
                cfg.antenna_count = static_cast<int>(detail::parse_integer(value, ln));
            else if (key == "region_length_m")
                cfg.region_length_m = detail::parse_double(value, ln);
            else if (key == "min_spacing_m") cfg.min_spacing_m = detail::parse_double(value, ln);
            else if (key == "grid_points")
                cfg.grid_points = static_cast<int>(detail::parse_integer(value, ln));
            else if (key == "path_count")
                cfg.path_count = static_cast<int>(detail::parse_integer(value, ln));
            else if (key == "distance_m") cfg.distance_m = detail::parse_double(value, ln);
            else if (key == "pathloss_exponent")
                cfg.pathloss_exponent = detail::parse_double(value, ln);
            else if (key == "transmit_snr_db")
                cfg.transmit_snr_db = detail::parse_double(value, ln);
            else if (key == "noise_power") cfg.noise_power = detail::parse_double(value, ln);
            else if (key == "reference_gain")
                cfg.reference_gain = detail::parse_double(value, ln);
            else
                throw invalid_parameter("config line " + std::to_string(ln) +
                                        ": unknown key '" + key + "' in [scenario]");
        } else if (section == "error") {
            if (key == "sigma2_db") cfg.fixed_sigma2_db = detail::parse_double(value, ln);
            else if (key == "rho") cfg.fixed_rho = detail::parse_double(value, ln);
            else
                throw invalid_parameter("config line " + std::to_string(ln) +
                                        ": unknown key '" + key + "' in [error]");
        } else if (section == "sweep") {
            if (key == "delta2_db") cfg.delta2_db_list = detail::parse_list(value, ln);
            else if (key == "rho") cfg.rho_list = detail::parse_list(value, ln);
            else if (key == "sigma2_db") cfg.sigma2_db_list = detail::parse_list(value, ln);
            else
                throw invalid_parameter("config line " + std::to_string(ln) +
                                        ": unknown key '" + key + "' in [sweep]");
        } else if (section == "run") {
            if (key == "realizations")
                cfg.channel_realizations = static_cast<int>(detail::parse_integer(value, ln));
            else if (key == "trials")
                cfg.error_trials = static_cast<int>(detail::parse_integer(value, ln));
            else if (key == "seed") cfg.base_seed = detail::parse_seed(value, ln);
            else if (key == "threads")
                cfg.threads = static_cast<int>(detail::parse_integer(value, ln));
            else
                throw invalid_parameter("config line " + std::to_string(ln) +
                                        ": unknown key '" + key + "' in [run]");
        } else {
            throw invalid_parameter("config line " + std::to_string(ln) +
                                    ": key '" + key + "' appears before any section");
        }
    }
    return cfg;
}

/// One seeded channel draw with every scheme's placement already applied.
struct ScenarioRealization {
    PathSet paths;
    PlacementSelection ma; // grid-optimal placement on the estimated map
    cvec h_fpa;            // channel at the centered fixed positions
    CombSelection as;      // activated comb subset
};

inline ScenarioRealization realize_scenario(const ExperimentConfig& cfg,
                                            std::uint64_t realization) {
    const std::uint64_t seed =
        derive_seed(cfg.base_seed, detail::seed_stream_channel, realization);
    ScenarioRealization scen;
    scen.paths = synthesize_paths(seed, cfg.path_count, cfg.wavelength_m, cfg.distance_m,
                                  cfg.pathloss_exponent, cfg.reference_gain);
    const SamplingGrid grid =
        SamplingGrid::make(cfg.grid_points, cfg.region_length_m, cfg.min_spacing_m);
    const ChannelMap map = build_channel_map(scen.paths, grid);
    scen.ma = optimize_placement_dp(map, cfg.antenna_count);
    scen.h_fpa = channel_at_positions(
        scen.paths, fpa_positions(cfg.antenna_count, cfg.region_length_m, cfg.min_spacing_m),
        cfg.region_length_m);
    scen.as = fpa_with_as(scen.paths, cfg.antenna_count, cfg.region_length_m,
                          cfg.min_spacing_m);
    return scen;
}

/// One sweep point: the averaged per-scheme metrics in dB, aligned with the
/// parent SweepResult's scheme names.
struct SweepRow {
    double sweep_value = 0.0;
    std::vector<double> values_db;
    int realizations = 0;
    std::uint64_t seed = 0;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::delta2_db;
    std::vector<std::string> schemes;
    std::vector<SweepRow> rows;
};

inline const std::vector<std::string>& worst_case_schemes() {
    static const std::vector<std::string> names = {
        "ma_robust_db", "ma_perfect_db", "fpa_noas_imperfect_db", "fpa_noas_perfect_db",
        "fpa_as_imperfect_db"};
    return names;
}

inline const std::vector<std::string>& outage_schemes() {
    static const std::vector<std::string> names = {
        "ma_robust_db",        "ma_perfect_db",       "fpa_noas_imperfect_db",
        "fpa_noas_perfect_db", "fpa_as_imperfect_db", "ma_bernstein_db"};
    return names;
}

namespace detail {

/// Runs fn(realization, slab) concurrently, then reduces the per-realization
/// slabs in index order so the averaged output never depends on scheduling.
template <typename Fn>
std::vector<double> average_over_realizations(int realizations, int threads,
                                              std::size_t slots, Fn&& fn) {
    std::vector<std::vector<double>> slabs(static_cast<std::size_t>(realizations));
    parallel_for(static_cast<std::size_t>(realizations), threads, [&](std::size_t r) {
        slabs[r].assign(slots, 0.0);
        fn(static_cast<std::uint64_t>(r), slabs[r]);
    });
    std::vector<double> sums(slots, 0.0);
    for (const auto& slab : slabs)
        for (std::size_t k = 0; k < slots; ++k) sums[k] += slab[k];
    for (double& s : sums) s /= static_cast<double>(realizations);
    return sums;
}

inline SweepResult assemble_result(const ExperimentConfig& cfg, SweepAxis axis,
                                   const std::vector<std::string>& schemes,
                                   const std::vector<double>& grid_values,
                                   const std::vector<double>& mean_powers) {
    SweepResult result;
    result.axis = axis;
    result.schemes = schemes;
    const std::size_t s_count = schemes.size();
    result.rows.resize(grid_values.size());
    for (std::size_t v = 0; v < grid_values.size(); ++v) {
        SweepRow& row = result.rows[v];
        row.sweep_value = grid_values[v];
        row.realizations = cfg.channel_realizations;
        row.seed = cfg.base_seed;
        row.values_db.resize(s_count);
        for (std::size_t s = 0; s < s_count; ++s)
            row.values_db[s] = to_db(mean_powers[v * s_count + s] / cfg.noise_power);
    }
    return result;
}

} // namespace detail

/// Worst-case received SNR versus the error-bound power delta^2 (in dB).
/// Perfect-CSI references run through the same closed form with delta = 0.
inline SweepResult run_worst_case_sweep(const ExperimentConfig& raw) {
    const ExperimentConfig cfg = finalize_config(raw);
    if (cfg.axis != SweepAxis::delta2_db)
        throw invalid_parameter("run_worst_case_sweep: sweep axis must be delta2_db");
    const std::vector<double>& values = cfg.delta2_db_list;
    const std::size_t s_count = worst_case_schemes().size();
    const double p_max = cfg.p_max();

    const std::vector<double> means = detail::average_over_realizations(
        cfg.channel_realizations, cfg.threads, values.size() * s_count,
        [&](std::uint64_t r, std::vector<double>& slab) {
            const ScenarioRealization scen = realize_scenario(cfg, r);
            for (std::size_t v = 0; v < values.size(); ++v) {
                const double delta = std::sqrt(from_db(values[v]));
                double* out = slab.data() + v * s_count;
                out[0] = worst_case_power(scen.ma.channel_subvector, delta, p_max).power;
                out[1] = worst_case_power(scen.ma.channel_subvector, 0.0, p_max).power;
                out[2] = worst_case_power(scen.h_fpa, delta, p_max).power;
                out[3] = worst_case_power(scen.h_fpa, 0.0, p_max).power;
                out[4] = worst_case_power(scen.as.channel_subvector, delta, p_max).power;
            }
        });
    return detail::assemble_result(cfg, SweepAxis::delta2_db, worst_case_schemes(), values,
                                   means);
}

/// Non-outage received SNR versus rho or sigma2 (in dB): empirical
/// percentiles per scheme under its own MRT, plus the closed-form Bernstein
/// curve for the grid placement, clamped at zero before dB conversion.
inline SweepResult run_outage_sweep(const ExperimentConfig& raw) {
    const ExperimentConfig cfg = finalize_config(raw);
    if (cfg.axis != SweepAxis::rho && cfg.axis != SweepAxis::sigma2_db)
        throw invalid_parameter("run_outage_sweep: sweep axis must be rho or sigma2_db");
    const bool rho_axis = cfg.axis == SweepAxis::rho;
    const std::vector<double>& values = rho_axis ? cfg.rho_list : cfg.sigma2_db_list;
    const std::size_t s_count = outage_schemes().size();
    const double p_max = cfg.p_max();

    const std::vector<double> means = detail::average_over_realizations(
        cfg.channel_realizations, cfg.threads, values.size() * s_count,
        [&](std::uint64_t r, std::vector<double>& slab) {
            const ScenarioRealization scen = realize_scenario(cfg, r);
            const cvec& h_ma = scen.ma.channel_subvector;
            const cvec& h_fpa = scen.h_fpa;
            const cvec& h_as = scen.as.channel_subvector;
            const Beamformer w_ma = mrt(h_ma, p_max);
            const Beamformer w_fpa = mrt(h_fpa, p_max);
            const Beamformer w_as = mrt(h_as, p_max);
            // Every scheme shares the same error stream so the comparison
            // rides on common random numbers.
            const std::uint64_t error_base =
                derive_seed(cfg.base_seed, detail::seed_stream_error, r);
            const double ma_perfect = worst_case_power(h_ma, 0.0, p_max).power;
            const double fpa_perfect = worst_case_power(h_fpa, 0.0, p_max).power;

            if (rho_axis) {
                const double sigma2 = from_db(cfg.fixed_sigma2_db);
                const auto p_ma = trial_powers_descending(h_ma, w_ma, sigma2,
                                                          cfg.error_trials, error_base);
                const auto p_fpa = trial_powers_descending(h_fpa, w_fpa, sigma2,
                                                           cfg.error_trials, error_base);
                const auto p_as = trial_powers_descending(h_as, w_as, sigma2,
                                                          cfg.error_trials, error_base);
                for (std::size_t v = 0; v < values.size(); ++v) {
                    const double rho = values[v];
                    double* out = slab.data() + v * s_count;
                    out[0] = percentile_descending(p_ma, rho);
                    out[1] = ma_perfect;
                    out[2] = percentile_descending(p_fpa, rho);
                    out[3] = fpa_perfect;
                    out[4] = percentile_descending(p_as, rho);
                    out[5] = bernstein_r0(h_ma, sigma2, p_max, rho).r0_clamped();
                }
            } else {
                const double rho = cfg.fixed_rho;
                for (std::size_t v = 0; v < values.size(); ++v) {
                    const double sigma2 = from_db(values[v]);
                    double* out = slab.data() + v * s_count;
                    out[0] = percentile_descending(
                        trial_powers_descending(h_ma, w_ma, sigma2, cfg.error_trials,
                                                error_base),
                        rho);
                    out[1] = ma_perfect;
                    out[2] = percentile_descending(
                        trial_powers_descending(h_fpa, w_fpa, sigma2, cfg.error_trials,
                                                error_base),
                        rho);
                    out[3] = fpa_perfect;
                    out[4] = percentile_descending(
                        trial_powers_descending(h_as, w_as, sigma2, cfg.error_trials,
                                                error_base),
                        rho);
                    out[5] = bernstein_r0(h_ma, sigma2, p_max, rho).r0_clamped();
                }
            }
        });
    return detail::assemble_result(cfg, cfg.axis, outage_schemes(), values, means);
}

/// Dispatch on the configured axis.
inline SweepResult run_sweep(const ExperimentConfig& cfg) {
    return cfg.axis == SweepAxis::delta2_db ? run_worst_case_sweep(cfg)
                                            : run_outage_sweep(cfg);
}

namespace detail {

/// Shortest decimal that round-trips a double; infinities print as inf/-inf.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace detail

/// Writes one header row (axis, schemes, realizations, seed) and one data
/// row per sweep value. Byte output is deterministic for fixed inputs.
inline void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("emit_csv: cannot open '" + path + "'");
    out << axis_name(result.axis);
    for (const std::string& s : result.schemes) out << ',' << s;
    out << ",realizations,seed\n";
    for (const SweepRow& row : result.rows) {
        out << detail::format_number(row.sweep_value);
        for (double v : row.values_db) out << ',' << detail::format_number(v);
        out << ',' << row.realizations << ',' << row.seed << '\n';
    }
    out.flush();
    if (!out) throw io_error("emit_csv: write failed for '" + path + "'");
}

/// Inverse of emit_csv, for round-trip checks and downstream tooling.
inline SweepResult read_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("read_sweep_csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw io_error("read_sweep_csv: '" + path + "' is empty");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) header.push_back(tok);
    }
    if (header.size() < 3 || header[header.size() - 2] != "realizations" ||
        header.back() != "seed")
        throw io_error("read_sweep_csv: malformed header in '" + path + "'");
    SweepResult result;
    result.axis = parse_sweep_axis(header.front());
    result.schemes.assign(header.begin() + 1, header.end() - 2);
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) cells.push_back(tok);
        if (cells.size() != header.size())
            throw io_error("read_sweep_csv: row " + std::to_string(line_no) + " in '" + path +
                           "' has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(header.size()));
        SweepRow row;
        row.sweep_value = detail::parse_double(cells.front(), line_no);
        for (std::size_t s = 0; s < result.schemes.size(); ++s)
            row.values_db.push_back(detail::parse_double(cells[1 + s], line_no));
        row.realizations =
            static_cast<int>(detail::parse_integer(cells[cells.size() - 2], line_no));
        row.seed = detail::parse_seed(cells.back(), line_no);
        result.rows.push_back(std::move(row));
    }
    return result;
}

} // namespace robustma
