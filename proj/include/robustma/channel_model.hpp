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

#pragma once

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <random>
#include <vector>

#include "robustma/core.hpp"
#include "robustma/errors.hpp"

namespace robustma {

/// Uniform discretization of a linear transmit region of length L into M
/// candidate antenna positions s_m = m*L/M, m = 1..M. Two selected indices
/// must differ by at least min_index_gap so that the physical spacing stays
/// at or above min_spacing_m.
struct SamplingGrid {
    int point_count = 0;        // M
    double length_m = 0.0;      // L
    double spacing_m = 0.0;     // L / M
    int min_index_gap = 0;      // round(min_spacing_m / spacing_m), >= 1
    double min_spacing_m = 0.0;

    static SamplingGrid make(int point_count, double length_m, double min_spacing_m) {
        if (point_count < 1)
            throw invalid_parameter("SamplingGrid: point_count must be >= 1, got " +
                                    std::to_string(point_count));
        if (!(length_m > 0.0))
            throw invalid_parameter("SamplingGrid: length_m must be positive");
        if (!(min_spacing_m > 0.0))
            throw invalid_parameter("SamplingGrid: min_spacing_m must be positive");
        SamplingGrid g;
        g.point_count = point_count;
        g.length_m = length_m;
        g.spacing_m = length_m / point_count;
        g.min_spacing_m = min_spacing_m;
        g.min_index_gap = static_cast<int>(std::llround(min_spacing_m / g.spacing_m));
        if (g.min_index_gap < 1)
            throw invalid_parameter("SamplingGrid: min_spacing_m " + std::to_string(min_spacing_m) +
                                    " is below the grid resolution " + std::to_string(g.spacing_m));
        return g;
    }

    /// Position of the 1-based sampling point index.
    double position_m(int index) const { return index * length_m / point_count; }
};

/// Multipath description of the transmitter-to-receiver link: per-path
/// departure angle and complex amplitude, plus the aggregate power.
struct PathSet {
    std::vector<double> aod_rad; // departure angles, each in [0, pi]
    cvec gains;                  // complex amplitudes b_k
    double wavelength_m = 0.0;
    double total_gain = 0.0;     // sum of |b_k|^2, linear power units

    int path_count() const { return static_cast<int>(gains.size()); }
};

/// Channel values over a sampling grid. true_values carries the realized
/// channel h_m, estimated_values the estimate the transmitter acts on; they
/// are equal until an error model perturbs a selected subvector downstream.
struct ChannelMap {
    SamplingGrid grid;
    cvec true_values;
    cvec estimated_values;
};

/// Draws a random multipath set. Aggregate power is
/// reference_gain * distance^(-pathloss_exponent), split across paths by
/// normalized uniform fractions; phases are uniform on [0, 2pi) and angles
/// uniform on [0, pi]. Draw order is fixed (powers, phases, angles) so a seed
/// pins the result bit-for-bit.
inline PathSet synthesize_paths(std::uint64_t rng_seed, int path_count, double wavelength_m,
                                double distance_m, double pathloss_exponent,
                                double reference_gain) {
    if (path_count < 1)
        throw invalid_parameter("synthesize_paths: path_count must be >= 1, got " +
                                std::to_string(path_count));
    if (!(distance_m > 0.0))
        throw invalid_parameter("synthesize_paths: distance_m must be positive");
    if (!(wavelength_m > 0.0))
        throw invalid_parameter("synthesize_paths: wavelength_m must be positive");
    if (!(reference_gain >= 0.0))
        throw invalid_parameter("synthesize_paths: reference_gain must be nonnegative");

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    PathSet paths;
    paths.wavelength_m = wavelength_m;
    paths.total_gain = reference_gain * std::pow(distance_m, -pathloss_exponent);

    std::vector<double> fractions(path_count);
    double fraction_sum = 0.0;
    for (int k = 0; k < path_count; ++k) {
        fractions[k] = 1.0 - unit(rng); // (0, 1]
        fraction_sum += fractions[k];
    }
    std::vector<double> phases(path_count);
    for (int k = 0; k < path_count; ++k) phases[k] = 2.0 * std::numbers::pi * unit(rng);
    paths.aod_rad.resize(path_count);
    for (int k = 0; k < path_count; ++k) paths.aod_rad[k] = std::numbers::pi * unit(rng);

    paths.gains.resize(path_count);
    for (int k = 0; k < path_count; ++k) {
        const double amplitude = std::sqrt(paths.total_gain * fractions[k] / fraction_sum);
        paths.gains[k] = std::polar(amplitude, phases[k]);
    }
    return paths;
}

/// Field response of a linear array at a continuous position:
/// h(s) = sum_k b_k exp(j (2pi/lambda) s cos(theta_k)).
inline cxd field_response(const PathSet& paths, double position_m) {
    const double wavenumber = 2.0 * std::numbers::pi / paths.wavelength_m;
    cxd acc{0.0, 0.0};
    for (int k = 0; k < paths.path_count(); ++k)
        acc += paths.gains[k] * std::polar(1.0, wavenumber * position_m * std::cos(paths.aod_rad[k]));
    return acc;
}

/// Evaluates the field response at every sampling point. No error is injected
/// here: estimated and true values start out identical.
inline ChannelMap build_channel_map(const PathSet& paths, const SamplingGrid& grid) {
    ChannelMap map;
    map.grid = grid;
    map.true_values.resize(grid.point_count);
    for (int m = 1; m <= grid.point_count; ++m)
        map.true_values[m - 1] = field_response(paths, grid.position_m(m));
    map.estimated_values = map.true_values;
    return map;
}

/// Elementwise field response at arbitrary positions, for fixed-antenna
/// baselines that do not live on the grid. Positions outside [0, L] are
/// evaluated anyway; a note goes to stderr since the model is only meant for
/// the transmit region.
inline cvec channel_at_positions(const PathSet& paths, const std::vector<double>& positions_m,
                                 double region_length_m = -1.0) {
    cvec values(positions_m.size());
    std::size_t outside = 0;
    for (std::size_t i = 0; i < positions_m.size(); ++i) {
        values[i] = field_response(paths, positions_m[i]);
        if (region_length_m >= 0.0 && (positions_m[i] < 0.0 || positions_m[i] > region_length_m))
            ++outside;
    }
    if (outside > 0)
        std::cerr << "robustma: warning: " << outside
                  << " position(s) outside the transmit region [0, " << region_length_m << "]\n";
    return values;
}

} // namespace robustma
