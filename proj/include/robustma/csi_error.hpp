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
#include <random>
#include <string>

#include "robustma/core.hpp"
#include "robustma/errors.hpp"

namespace robustma {

/// Adversarial error model: the error vector on the selected entries is only
/// known to satisfy ||e|| <= delta.
struct NormBoundedModel {
    double delta = 0.0;

    static NormBoundedModel make(double delta) {
        if (!(delta >= 0.0))
            throw invalid_parameter("NormBoundedModel: delta must be nonnegative");
        return NormBoundedModel{delta};
    }
};

/// Random error model: e ~ CN(0, sigma2 I) on the selected entries. CN(0, s)
/// means total variance s per complex entry, split equally between the real
/// and imaginary parts.
struct GaussianModel {
    double sigma2 = 0.0;

    static GaussianModel make(double sigma2) {
        if (!(sigma2 >= 0.0))
            throw invalid_parameter("GaussianModel: sigma2 must be nonnegative");
        return GaussianModel{sigma2};
    }
};

/// The error direction that minimizes the received power under maximum-ratio
/// transmission: e = -delta * h_bar / ||h_bar||. Anti-parallel to the channel
/// estimate and of norm exactly delta.
inline cvec worst_case_error(const cvec& h_bar, double delta) {
    if (!(delta >= 0.0))
        throw invalid_parameter("worst_case_error: delta must be nonnegative");
    const double nrm = vec_norm(h_bar);
    if (!(nrm > 0.0))
        throw degenerate_channel("worst_case_error: estimated channel has zero norm");
    cvec e(h_bar.size());
    const double scale = -delta / nrm;
    for (std::size_t i = 0; i < h_bar.size(); ++i) e[i] = scale * h_bar[i];
    return e;
}

/// n i.i.d. circularly-symmetric complex Gaussian entries with per-entry
/// variance sigma2. Component draw order is fixed (real then imaginary, entry
/// by entry) so a seed pins the vector.
inline cvec sample_gaussian_error(std::uint64_t rng_seed, int n, double sigma2) {
    if (n < 1)
        throw invalid_parameter("sample_gaussian_error: n must be >= 1, got " + std::to_string(n));
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("sample_gaussian_error: sigma2 must be nonnegative");
    cvec e(n, cxd{0.0, 0.0});
    if (sigma2 == 0.0) return e;
    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> component(0.0, std::sqrt(sigma2 / 2.0));
    for (int i = 0; i < n; ++i) {
        const double re = component(rng);
        const double im = component(rng);
        e[i] = cxd{re, im};
    }
    return e;
}

} // namespace robustma
