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
// Antenna placement over the sampling grid. Both robust criteria reduce to
// maximizing the selected channel norm Sum |h_bar_{a_n}|^2 subject to the
// minimum index gap, a fixed-hop shortest-path problem solved exactly by a
// stage-indexed dynamic program in O(N M). An exhaustive-enumeration oracle
// and the two fixed-position-antenna baselines live here as well.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "robustma/channel_model.hpp"
#include "robustma/core.hpp"
#include "robustma/errors.hpp"

namespace robustma {

/// N selected sampling points, strictly increasing 1-based indices with
/// consecutive difference >= a_min.
struct PlacementSelection {
    std::vector<int> indices;
    double objective = 0.0; // sum of |h_bar|^2 over the selected indices
    cvec channel_subvector; // estimated channel at the selected indices
};

namespace detail {

inline void check_placement_inputs(const ChannelMap& map, int count, const char* who) {
    if (count < 1)
        throw invalid_parameter(std::string(who) + ": antenna count must be >= 1");
    const long long need =
        static_cast<long long>(count - 1) * map.grid.min_index_gap + 1;
    if (need > map.grid.point_count)
        throw infeasible_placement(std::string(who) + ": (N-1)*a_min + 1 = " +
                                   std::to_string(need) + " exceeds M = " +
                                   std::to_string(map.grid.point_count));
}

inline PlacementSelection make_selection(const ChannelMap& map, std::vector<int> indices,
                                         double objective) {
    PlacementSelection sel;
    sel.indices = std::move(indices);
    sel.objective = objective;
    sel.channel_subvector.reserve(sel.indices.size());
    for (int idx : sel.indices)
        sel.channel_subvector.push_back(map.estimated_values[static_cast<std::size_t>(idx) - 1]);
    return sel;
}

/// True when a's index sequence precedes b's once both are read from the
/// last antenna down. Matches the DP backtrack, which fixes the last index
/// first and prefers the smallest index at every step.
inline bool reverse_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

} // namespace detail

/// Exact optimum of problem: maximize Sum_n |h_bar_{a_n}|^2 over strictly
/// increasing indices with gap >= a_min. Recurrence
///   best[n][m] = |h_bar_m|^2 + max_{m' <= m - a_min} best[n-1][m'],
/// with a running prefix maximum per stage; ties break toward the smallest
/// index at each backtrack step.
inline PlacementSelection optimize_placement_dp(const ChannelMap& map, int count) {
    detail::check_placement_inputs(map, count, "optimize_placement_dp");
    const int m_total = map.grid.point_count;
    const int gap = map.grid.min_index_gap;
    const double neg_inf = -std::numeric_limits<double>::infinity();

    std::vector<double> value(static_cast<std::size_t>(m_total));
    for (int m = 0; m < m_total; ++m)
        value[static_cast<std::size_t>(m)] = std::norm(map.estimated_values[static_cast<std::size_t>(m)]);

    // prefix_best[n][m] = max over m' <= m of best[n][m'], with the smallest
    // maximizing index in prefix_arg; stage 0 is unused.
    std::vector<std::vector<double>> prefix_best(static_cast<std::size_t>(count) + 1);
    std::vector<std::vector<int>> prefix_arg(static_cast<std::size_t>(count) + 1);
    std::vector<double> best(static_cast<std::size_t>(m_total));

    for (int n = 1; n <= count; ++n) {
        for (int m = 0; m < m_total; ++m) {
            const std::size_t mu = static_cast<std::size_t>(m);
            if (n == 1) {
                best[mu] = value[mu];
            } else if (m - gap < 0) {
                best[mu] = neg_inf;
            } else {
                const double prev = prefix_best[static_cast<std::size_t>(n) - 1]
                                               [static_cast<std::size_t>(m - gap)];
                best[mu] = prev == neg_inf ? neg_inf : value[mu] + prev;
            }
        }
        auto& pb = prefix_best[static_cast<std::size_t>(n)];
        auto& pa = prefix_arg[static_cast<std::size_t>(n)];
        pb.resize(static_cast<std::size_t>(m_total));
        pa.resize(static_cast<std::size_t>(m_total));
        pb[0] = best[0];
        pa[0] = 0;
        for (int m = 1; m < m_total; ++m) {
            const std::size_t mu = static_cast<std::size_t>(m);
            if (best[mu] > pb[mu - 1]) {
                pb[mu] = best[mu];
                pa[mu] = m;
            } else {
                pb[mu] = pb[mu - 1];
                pa[mu] = pa[mu - 1];
            }
        }
    }

    std::vector<int> picked(static_cast<std::size_t>(count));
    int cursor = m_total - 1;
    for (int n = count; n >= 1; --n) {
        const int at = prefix_arg[static_cast<std::size_t>(n)][static_cast<std::size_t>(cursor)];
        picked[static_cast<std::size_t>(n) - 1] = at + 1;
        cursor = at - gap;
    }
    const double objective = prefix_best[static_cast<std::size_t>(count)]
                                        [static_cast<std::size_t>(m_total) - 1];
    return detail::make_selection(map, std::move(picked), objective);
}

/// Exhaustive oracle for the same problem: enumerates every feasible index
/// selection and keeps the best, breaking objective ties exactly like the DP
/// backtrack (smallest last index, then smallest second-to-last, ...).
/// Refuses instances beyond M = 40 unless N <= 4.
inline PlacementSelection optimize_placement_bruteforce(const ChannelMap& map, int count) {
    detail::check_placement_inputs(map, count, "optimize_placement_bruteforce");
    const int m_total = map.grid.point_count;
    const int gap = map.grid.min_index_gap;
    if (m_total > 40 && count > 4)
        throw enumeration_limit("optimize_placement_bruteforce: M = " + std::to_string(m_total) +
                                ", N = " + std::to_string(count) +
                                " exceeds the enumeration guard (M <= 40 or N <= 4)");

    std::vector<double> value(static_cast<std::size_t>(m_total));
    for (int m = 0; m < m_total; ++m)
        value[static_cast<std::size_t>(m)] = std::norm(map.estimated_values[static_cast<std::size_t>(m)]);

    std::vector<int> current(static_cast<std::size_t>(count));
    std::vector<int> best_indices;
    double best_objective = -std::numeric_limits<double>::infinity();

    // Depth-first over 0-based start positions; partial sums accumulate in
    // ascending index order, matching the DP's stage-by-stage addition.
    auto recurse = [&](auto&& self, int depth, int from, double sum) -> void {
        const int remaining = count - depth;
        const int last_start = m_total - 1 - (remaining - 1) * gap;
        for (int m = from; m <= last_start; ++m) {
            current[static_cast<std::size_t>(depth)] = m + 1;
            const double next_sum = sum + value[static_cast<std::size_t>(m)];
            if (depth + 1 == count) {
                if (next_sum > best_objective ||
                    (next_sum == best_objective &&
                     detail::reverse_lex_less(current, best_indices))) {
                    best_objective = next_sum;
                    best_indices = current;
                }
            } else {
                self(self, depth + 1, m + gap, next_sum);
            }
        }
    };
    recurse(recurse, 0, 0, 0.0);
    return detail::make_selection(map, std::move(best_indices), best_objective);
}

/// Fixed positions for the no-selection baseline: N antennas centered on the
/// array at pitch d_min, i.e. L/2 + (n - (N+1)/2) d_min for n = 1..N.
inline std::vector<double> fpa_positions(int count, double length_m, double min_spacing_m) {
    if (count < 1)
        throw invalid_parameter("fpa_positions: antenna count must be >= 1");
    if (!(length_m > 0.0))
        throw invalid_parameter("fpa_positions: array length must be positive");
    if (!(min_spacing_m > 0.0))
        throw invalid_parameter("fpa_positions: minimum spacing must be positive");
    const double span = (count - 1) * min_spacing_m;
    if (span > length_m)
        throw infeasible_placement("fpa_positions: (N-1)*d_min = " + std::to_string(span) +
                                   " m exceeds the array length " + std::to_string(length_m) +
                                   " m");
    std::vector<double> positions(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n)
        positions[static_cast<std::size_t>(n) - 1] =
            0.5 * length_m + (n - 0.5 * (count + 1)) * min_spacing_m;
    return positions;
}

/// Antenna-selection baseline outcome: which comb slots were activated.
struct CombSelection {
    std::vector<int> slots; // 1-based comb slots, strictly increasing
    std::vector<double> positions_m;
    cvec channel_subvector; // field response at the activated positions
    double objective = 0.0; // sum of |h|^2 over the activated slots
};

/// Candidate positions for the antenna-selection baseline: a comb of
/// C = L/d_min antennas at pitch d_min, centered so slot c sits at
/// c d_min - d_min/2. L/d_min must be integral.
inline std::vector<double> comb_positions(double length_m, double min_spacing_m) {
    if (!(length_m > 0.0))
        throw invalid_parameter("comb_positions: array length must be positive");
    if (!(min_spacing_m > 0.0))
        throw invalid_parameter("comb_positions: minimum spacing must be positive");
    const double ratio = length_m / min_spacing_m;
    const long long slots = std::llround(ratio);
    if (slots < 1 || std::abs(ratio - static_cast<double>(slots)) > 1e-9 * ratio)
        throw invalid_parameter("comb_positions: L/d_min = " + std::to_string(ratio) +
                                " is not a positive integer");
    std::vector<double> positions(static_cast<std::size_t>(slots));
    for (long long c = 1; c <= slots; ++c)
        positions[static_cast<std::size_t>(c) - 1] =
            static_cast<double>(c) * min_spacing_m - 0.5 * min_spacing_m;
    return positions;
}

/// Fixed antennas with selection: evaluates the field response on the comb
/// and activates the N slots with the largest |h|^2 (smallest slot on ties).
/// Any comb subset respects the minimum spacing, so no gap check is needed.
inline CombSelection fpa_with_as(const PathSet& paths, int count, double length_m,
                                 double min_spacing_m) {
    if (count < 1)
        throw invalid_parameter("fpa_with_as: antenna count must be >= 1");
    const std::vector<double> comb = comb_positions(length_m, min_spacing_m);
    if (static_cast<std::size_t>(count) > comb.size())
        throw infeasible_placement("fpa_with_as: N = " + std::to_string(count) +
                                   " exceeds the " + std::to_string(comb.size()) +
                                   " comb slots");

    std::vector<int> order(comb.size());
    std::vector<cxd> values(comb.size());
    std::vector<double> powers(comb.size());
    for (std::size_t c = 0; c < comb.size(); ++c) {
        order[c] = static_cast<int>(c);
        values[c] = field_response(paths, comb[c]);
        powers[c] = std::norm(values[c]);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return powers[static_cast<std::size_t>(a)] >
                                                powers[static_cast<std::size_t>(b)]; });
    order.resize(static_cast<std::size_t>(count));
    std::sort(order.begin(), order.end());

    CombSelection sel;
    sel.slots.reserve(order.size());
    sel.positions_m.reserve(order.size());
    sel.channel_subvector.reserve(order.size());
    for (int c : order) {
        const std::size_t cu = static_cast<std::size_t>(c);
        sel.slots.push_back(c + 1);
        sel.positions_m.push_back(comb[cu]);
        sel.channel_subvector.push_back(values[cu]);
        sel.objective += powers[cu];
    }
    return sel;
}

} // namespace robustma
