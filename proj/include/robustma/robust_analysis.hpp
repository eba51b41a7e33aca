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
// Closed-form robust receive-power analysis for a MISO link whose channel
// estimate carries either a norm-bounded or a complex-Gaussian error:
//
//  * worst case over ||e|| <= delta:  max(||h_bar|| - delta, 0)^2 * P_max,
//    attained by maximum-ratio transmission against e = -delta h/||h||;
//  * non-outage bound under e ~ CN(0, sigma2 I): a Bernstein-type
//    concentration bound turns the chance constraint into a closed-form
//    lower bound R0 with a three-way case split in the beamformer alignment.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "robustma/core.hpp"
#include "robustma/errors.hpp"

namespace robustma {

/// Transmit weight vector plus the power budget it must respect
/// (||weights||^2 <= p_max; equality for maximum-ratio transmission).
struct Beamformer {
    cvec weights;
    double p_max = 0.0;
};

/// Maximum-ratio transmission at full power: omega = sqrt(p_max) h / ||h||.
inline Beamformer mrt(const cvec& h_bar, double p_max) {
    if (!(p_max > 0.0))
        throw invalid_parameter("mrt: p_max must be positive");
    const double nrm = vec_norm(h_bar);
    if (!(nrm > 0.0))
        throw degenerate_channel("mrt: estimated channel has zero norm");
    Beamformer w;
    w.p_max = p_max;
    w.weights.resize(h_bar.size());
    const double scale = std::sqrt(p_max) / nrm;
    for (std::size_t i = 0; i < h_bar.size(); ++i) w.weights[i] = scale * h_bar[i];
    return w;
}

/// Received signal power |w^H h|^2.
inline double received_power(const Beamformer& w, const cvec& h) {
    return std::norm(vdot(w.weights, h));
}

/// Worst case of the received power over the error ball, for a fixed
/// beamformer: zero when |w^H h_bar| <= delta ||w||, else
/// (|w^H h_bar| - delta ||w||)^2.
inline double worst_case_power_fixed_w(const Beamformer& w, const cvec& h_bar, double delta) {
    if (!(delta >= 0.0))
        throw invalid_parameter("worst_case_power_fixed_w: delta must be nonnegative");
    const double aligned = std::abs(vdot(w.weights, h_bar));
    const double spread = delta * vec_norm(w.weights);
    const double margin = aligned - spread;
    return margin <= 0.0 ? 0.0 : margin * margin;
}

/// Worst-case received power after optimizing the beamformer (always MRT).
struct WorstCaseResult {
    double power = 0.0;  // p_max * (||h_bar|| - delta)^2, or 0 when nulled
    bool nulled = false; // ||h_bar|| <= delta: the error can cancel the link
    double margin = 0.0; // ||h_bar|| - delta
};

/// Optimal worst-case received power over ||e|| <= delta for a fixed set of
/// selected positions. Piecewise: nulled when the channel norm does not
/// exceed delta, else p_max (||h_bar|| - delta)^2 under MRT.
inline WorstCaseResult worst_case_power(const cvec& h_bar, double delta, double p_max) {
    if (!(delta >= 0.0))
        throw invalid_parameter("worst_case_power: delta must be nonnegative");
    if (!(p_max > 0.0))
        throw invalid_parameter("worst_case_power: p_max must be positive");
    WorstCaseResult result;
    const double nrm = vec_norm(h_bar);
    result.margin = nrm - delta;
    if (nrm <= delta) {
        result.nulled = true;
        result.power = 0.0;
    } else {
        result.power = p_max * result.margin * result.margin;
    }
    return result;
}

namespace detail {
inline void check_rho(double rho, const char* who) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw invalid_parameter(std::string(who) + ": rho must lie in (0, 1), got " +
                                std::to_string(rho));
}
} // namespace detail

/// Outage probability below which the Bernstein bound objective stops being
/// monotone in the beamformer alignment (exp(-1/2)).
inline double bernstein_monotone_rho_threshold() { return std::exp(-0.5); }

/// Left-hand side of the Bernstein-type sufficient condition for
/// Pr{xi^H Q xi + 2 Re(xi^H r) + s >= 0} >= 1 - rho with PSD Q:
///   Tr(Q) - sqrt(2 ln(1/rho) (||Q||_F^2 + 2 ||r||^2)) + s.
/// The chance constraint holds whenever the returned value is >= 0.
inline double bernstein_lhs(double q_trace, double q_fro2, double r_norm2, double s, double rho) {
    detail::check_rho(rho, "bernstein_lhs");
    if (!(q_fro2 >= 0.0) || !(r_norm2 >= 0.0))
        throw invalid_parameter("bernstein_lhs: squared norms must be nonnegative");
    const double log_term = std::log(1.0 / rho);
    return q_trace - std::sqrt(2.0 * log_term * (q_fro2 + 2.0 * r_norm2)) + s;
}

/// Bound objective as a function of the squared channel alignment
/// y = |h_bar^H w0|^2 of a full-power beamformer:
///   F(y) = sigma2 p - sqrt(2 ln(1/rho)) sqrt(sigma2^2 p^2 + 2 sigma2 p^2 y) + p y.
/// The largest achievable R0 for fixed positions is max_y F(y), y in [0, ||h_bar||^2].
inline double bernstein_bound(double y, double sigma2, double p_max, double rho) {
    detail::check_rho(rho, "bernstein_bound");
    if (!(y >= 0.0))
        throw invalid_parameter("bernstein_bound: y must be nonnegative");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("bernstein_bound: sigma2 must be nonnegative");
    const double log2 = 2.0 * std::log(1.0 / rho);
    const double inner = sigma2 * sigma2 * p_max * p_max + 2.0 * sigma2 * p_max * p_max * y;
    return sigma2 * p_max - std::sqrt(log2) * std::sqrt(inner) + p_max * y;
}

/// dF/dy = p - sqrt(2 ln(1/rho)) sigma2 p^2 / sqrt(sigma2^2 p^2 + 2 sigma2 p^2 y).
/// Monotonically nondecreasing in y; tends to p for large y. The sigma2 = 0
/// limit is exactly p.
inline double bernstein_bound_derivative(double y, double sigma2, double p_max, double rho) {
    detail::check_rho(rho, "bernstein_bound_derivative");
    if (!(y >= 0.0))
        throw invalid_parameter("bernstein_bound_derivative: y must be nonnegative");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("bernstein_bound_derivative: sigma2 must be nonnegative");
    if (sigma2 == 0.0) return p_max;
    const double log2 = 2.0 * std::log(1.0 / rho);
    const double inner = sigma2 * sigma2 * p_max * p_max + 2.0 * sigma2 * p_max * p_max * y;
    return p_max - std::sqrt(log2) * sigma2 * p_max * p_max / std::sqrt(inner);
}

/// Stationary point of F: y0 = (sigma2/2)(2 ln(1/rho) - 1), clamped at zero
/// when rho >= exp(-1/2) (F is then nondecreasing from y = 0 on).
inline double bernstein_extreme_point(double sigma2, double rho) {
    detail::check_rho(rho, "bernstein_extreme_point");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("bernstein_extreme_point: sigma2 must be nonnegative");
    const double y0 = 0.5 * sigma2 * (2.0 * std::log(1.0 / rho) - 1.0);
    return std::max(y0, 0.0);
}

/// Zero point y1 > y0 of F on its increasing branch, via the substitution
/// t = sqrt(sigma2^2 p^2 + 2 sigma2 p^2 y), which turns F = 0 into the
/// quadratic t^2 - 2 sqrt(2L) sigma2 p t + sigma2^2 p^2 = 0 (L = ln(1/rho)).
/// The root t >= sigma2 p sqrt(2L) is the increasing branch. Returns 0 when
/// rho >= exp(-1/2) (F(0) >= 0 there) or when sigma2 = 0 (F = p y).
inline double bernstein_zero_point(double sigma2, double p_max, double rho) {
    detail::check_rho(rho, "bernstein_zero_point");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("bernstein_zero_point: sigma2 must be nonnegative");
    if (!(p_max > 0.0))
        throw invalid_parameter("bernstein_zero_point: p_max must be positive");
    if (rho >= bernstein_monotone_rho_threshold()) return 0.0;
    if (sigma2 == 0.0) return 0.0;
    const double log2 = 2.0 * std::log(1.0 / rho);
    double discriminant = log2 - 1.0;
    if (discriminant < 0.0) {
        if (discriminant < -1e-12)
            throw numeric_error("bernstein_zero_point: negative discriminant " +
                                std::to_string(discriminant));
        discriminant = 0.0;
    }
    const double t = sigma2 * p_max * (std::sqrt(log2) + std::sqrt(discriminant));
    const double y1 = (t * t - sigma2 * sigma2 * p_max * p_max) / (2.0 * sigma2 * p_max * p_max);
    return std::max(y1, 0.0); // rounding may leave -eps just below the threshold
}

enum class BernsteinBranch {
    mrt_monotone, // rho >= exp(-1/2): F nondecreasing, best alignment wins
    mrt_past_zero, // rho < exp(-1/2) and ||h_bar||^2 >= y1: MRT still optimal
    fallback_y2,   // ||h_bar||^2 < y1: best endpoint of {0, ||h_bar||^2}, R0 <= 0
};

/// Bernstein-type lower bound on the non-outage received power, plus the
/// diagnostics of the case analysis that produced it.
struct BernsteinResult {
    double r0 = 0.0;    // F(y_star); may be negative in the fallback branch
    double y_max = 0.0; // ||h_bar||^2
    double y0 = 0.0;    // stationary point of F (clamped at 0)
    std::optional<double> y1; // zero point of F; only set when rho < exp(-1/2)
    double y_star = 0.0;      // alignment at which the bound is evaluated
    BernsteinBranch branch = BernsteinBranch::mrt_monotone;

    /// Reporting helper: the actual received power is never negative, so
    /// plots clamp the bound at zero.
    double r0_clamped() const { return std::max(r0, 0.0); }
};

/// Maximizes the Bernstein bound objective over the feasible alignment
/// interval [0, ||h_bar||^2] for fixed positions.
///   rho >= exp(-1/2):              F nondecreasing, y* = y_max (MRT).
///   rho <  exp(-1/2), y_max >= y1: F(y_max) >= 0 on the increasing branch,
///                                  y* = y_max (MRT).
///   rho <  exp(-1/2), y_max <  y1: F < 0 on the whole interval; the best
///                                  endpoint y2 = argmax{F(0), F(y_max)} is
///                                  reported with its negative value.
inline BernsteinResult bernstein_r0(const cvec& h_bar, double sigma2, double p_max, double rho) {
    detail::check_rho(rho, "bernstein_r0");
    if (!(sigma2 >= 0.0))
        throw invalid_parameter("bernstein_r0: sigma2 must be nonnegative");
    if (!(p_max > 0.0))
        throw invalid_parameter("bernstein_r0: p_max must be positive");
    const double y_max = squared_norm(h_bar);
    if (!(y_max > 0.0))
        throw degenerate_channel("bernstein_r0: estimated channel has zero norm");

    BernsteinResult result;
    result.y_max = y_max;
    result.y0 = bernstein_extreme_point(sigma2, rho);
    if (rho >= bernstein_monotone_rho_threshold()) {
        result.branch = BernsteinBranch::mrt_monotone;
        result.y_star = y_max;
    } else {
        const double y1 = bernstein_zero_point(sigma2, p_max, rho);
        result.y1 = y1;
        if (y_max >= y1) {
            result.branch = BernsteinBranch::mrt_past_zero;
            result.y_star = y_max;
        } else {
            result.branch = BernsteinBranch::fallback_y2;
            const double at_zero = bernstein_bound(0.0, sigma2, p_max, rho);
            const double at_max = bernstein_bound(y_max, sigma2, p_max, rho);
            result.y_star = at_max >= at_zero ? y_max : 0.0;
        }
    }
    result.r0 = bernstein_bound(result.y_star, sigma2, p_max, rho);
    return result;
}

/// Full-power beamformer orthogonal to the channel estimate, realizing zero
/// alignment (y = 0) in the fallback branch. Built by Gram-Schmidt from the
/// first standard basis vector that is not parallel to h_bar; requires
/// dimension >= 2.
inline Beamformer orthogonal_beamformer(const cvec& h_bar, double p_max) {
    if (!(p_max > 0.0))
        throw invalid_parameter("orthogonal_beamformer: p_max must be positive");
    const double h_norm2 = squared_norm(h_bar);
    if (!(h_norm2 > 0.0))
        throw degenerate_channel("orthogonal_beamformer: estimated channel has zero norm");
    if (h_bar.size() < 2)
        throw invalid_parameter("orthogonal_beamformer: no orthogonal direction in dimension 1");

    for (std::size_t i = 0; i < h_bar.size(); ++i) {
        // u = e_i - (h^H e_i / ||h||^2) h; vanishes only when h is parallel to e_i.
        cvec u(h_bar.size(), cxd{0.0, 0.0});
        u[i] = cxd{1.0, 0.0};
        const cxd proj = std::conj(h_bar[i]) / h_norm2;
        for (std::size_t k = 0; k < h_bar.size(); ++k) u[k] -= proj * h_bar[k];
        const double u_norm2 = squared_norm(u);
        if (u_norm2 > 1e-12) {
            const double scale = std::sqrt(p_max / u_norm2);
            for (auto& x : u) x *= scale;
            return Beamformer{std::move(u), p_max};
        }
    }
    throw numeric_error("orthogonal_beamformer: no basis vector yielded an orthogonal direction");
}

} // namespace robustma
