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
// Monte Carlo estimation of the non-outage received power under Gaussian
// CSI error: draw T error realizations, sort the received powers in
// descending order, read the 100(1-rho)-th percentile. Also validates the
// Bernstein-type bound empirically (violation rate at R0 must stay near or
// below rho, and the empirical percentile must not fall below R0).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "robustma/core.hpp"
#include "robustma/csi_error.hpp"
#include "robustma/errors.hpp"
#include "robustma/robust_analysis.hpp"

namespace robustma {

/// Empirical non-outage summary over one batch of error realizations.
struct OutageEstimate {
    int trials = 0;
    double rho = 0.0;
    double empirical_r = 0.0; // 100(1-rho)-th percentile of received power
    double violation_rate_at_r0 = 0.0; // fraction of trials below the supplied R0
};

/// Received power per trial under h = h_bar + e, e ~ CN(0, sigma2 I), sorted
/// in descending order. Trial i draws from a seed derived from (base_seed, i),
/// so the result does not depend on how trials are scheduled.
inline std::vector<double> trial_powers_descending(const cvec& h_bar, const Beamformer& w,
                                                   double sigma2, int trials,
                                                   std::uint64_t base_seed, int threads = 1) {
    if (trials < 1)
        throw invalid_parameter("trial_powers_descending: trials must be >= 1");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("trial_powers_descending: sigma2 must be nonnegative");
    std::vector<double> powers(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
        const cvec error = sample_gaussian_error(derive_seed(base_seed, i),
                                                 static_cast<int>(h_bar.size()), sigma2);
        cvec h(h_bar.size());
        for (std::size_t k = 0; k < h_bar.size(); ++k) h[k] = h_bar[k] + error[k];
        powers[i] = received_power(w, h);
    });
    std::sort(powers.begin(), powers.end(), std::greater<double>());
    return powers;
}

/// 1-indexed percentile position ceil((1-rho) T) into a descending-sorted
/// sequence, with a small epsilon so exact integer products do not round up.
inline double percentile_descending(const std::vector<double>& sorted_desc, double rho) {
    if (sorted_desc.empty())
        throw invalid_parameter("percentile_descending: empty sample");
    if (!(rho > 0.0) || !(rho < 1.0))
        throw invalid_parameter("percentile_descending: rho must lie in (0, 1)");
    const double t = static_cast<double>(sorted_desc.size());
    const long long raw = static_cast<long long>(std::ceil((1.0 - rho) * t - 1e-9));
    const long long index = std::clamp(raw, 1LL, static_cast<long long>(sorted_desc.size()));
    return sorted_desc[static_cast<std::size_t>(index) - 1];
}

/// Empirical non-outage power for a fixed beamformer. r0_reference feeds the
/// violation-rate diagnostic; the default -inf counts nothing.
inline OutageEstimate simulate_outage(const cvec& h_bar, const Beamformer& w, double sigma2,
                                      double rho, int trials, std::uint64_t base_seed,
                                      double r0_reference =
                                          -std::numeric_limits<double>::infinity(),
                                      int threads = 1) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw invalid_parameter("simulate_outage: rho must lie in (0, 1)");
    const std::vector<double> powers =
        trial_powers_descending(h_bar, w, sigma2, trials, base_seed, threads);
    OutageEstimate out;
    out.trials = trials;
    out.rho = rho;
    out.empirical_r = percentile_descending(powers, rho);
    std::size_t below = 0;
    for (double p : powers)
        if (p < r0_reference) ++below;
    out.violation_rate_at_r0 = static_cast<double>(below) / static_cast<double>(trials);
    return out;
}

/// Side-by-side record of the closed-form bound and the Monte Carlo evidence.
struct BernsteinValidation {
    BernsteinResult bound;
    OutageEstimate estimate;
    double gap = 0.0;   // empirical_r - r0; negative would contradict Lemma-type sufficiency
    double slack = 0.0; // 3 sqrt(rho (1-rho) / trials), binomial three-sigma
    bool within_slack = false; // violation_rate_at_r0 <= rho + slack
};

/// Checks the Bernstein-type bound against simulation under MRT: the
/// violation rate at R0 must not exceed rho by more than three binomial
/// standard deviations, and the empirical percentile should sit above R0.
inline BernsteinValidation validate_bernstein(const cvec& h_bar, double sigma2, double p_max,
                                              double rho, int trials, std::uint64_t base_seed,
                                              int threads = 1) {
    BernsteinValidation report;
    report.bound = bernstein_r0(h_bar, sigma2, p_max, rho);
    const Beamformer w = mrt(h_bar, p_max);
    // Reference shaded by 1e-12 relative: at sigma2 = 0 every trial reproduces
    // the bound value through a different rounding path, and that rounding
    // noise must not count as outage.
    const double reference = report.bound.r0 - 1e-12 * std::abs(report.bound.r0);
    report.estimate =
        simulate_outage(h_bar, w, sigma2, rho, trials, base_seed, reference, threads);
    report.gap = report.estimate.empirical_r - report.bound.r0;
    report.slack = 3.0 * std::sqrt(rho * (1.0 - rho) / static_cast<double>(trials));
    report.within_slack = report.estimate.violation_rate_at_r0 <= rho + report.slack;
    return report;
}

} // namespace robustma
