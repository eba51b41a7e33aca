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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace robustma;

TEST_CASE("error model constructors validate") {
    CHECK(NormBoundedModel::make(0.0).delta == 0.0);
    CHECK_THROWS_AS(NormBoundedModel::make(-0.1), invalid_parameter);
    CHECK(GaussianModel::make(2.0).sigma2 == 2.0);
    CHECK_THROWS_AS(GaussianModel::make(-1.0), invalid_parameter);
}

TEST_CASE("worst_case_error basics") {
    SECTION("zero radius gives the zero vector") {
        const cvec e = worst_case_error({cxd{1.0, 1.0}, cxd{2.0, 0.0}}, 0.0);
        for (const auto& x : e) CHECK(std::abs(x) == 0.0);
    }
    SECTION("unit-direction scaling") {
        const cvec e = worst_case_error({cxd{1.0, 0.0}, cxd{0.0, 0.0}}, 0.5);
        CHECK(e[0].real() == Catch::Approx(-0.5));
        CHECK(e[0].imag() == 0.0);
        CHECK(std::abs(e[1]) == 0.0);
    }
    SECTION("rejects degenerate inputs") {
        CHECK_THROWS_AS(worst_case_error(cvec{cxd{0.0, 0.0}}, 0.1), degenerate_channel);
        CHECK_THROWS_AS(worst_case_error(cvec{cxd{1.0, 0.0}}, -0.1), invalid_parameter);
    }
}

TEST_CASE("worst_case_error norm and direction") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const cvec h = testsup::random_cvec(rng, 4);
        const double delta = 0.3 * vec_norm(h);
        const cvec e = worst_case_error(h, delta);
        CHECK(vec_norm(e) == Catch::Approx(delta).epsilon(1e-13));
        const cxd inner = vdot(h, e); // must be the real number -delta ||h||
        CHECK(inner.real() == Catch::Approx(-delta * vec_norm(h)).epsilon(1e-12));
        CHECK(std::abs(inner.imag()) <= 1e-12 * delta * vec_norm(h));
    }
}

TEST_CASE("worst_case_error minimizes the received power over the ball") {
    std::mt19937_64 rng(77);
    const cvec h = testsup::random_cvec(rng, 4);
    const double delta = 0.3 * vec_norm(h);
    const Beamformer w = mrt(h, 1.0);

    cvec sum = h;
    const cvec e_star = worst_case_error(h, delta);
    for (std::size_t i = 0; i < 4; ++i) sum[i] = h[i] + e_star[i];
    const double analytic = received_power(w, sum);

    for (int trial = 0; trial < 100000; ++trial) {
        const cvec e = testsup::random_ball_error(rng, 4, delta, trial % 2 == 0);
        for (std::size_t i = 0; i < 4; ++i) sum[i] = h[i] + e[i];
        REQUIRE(received_power(w, sum) >= analytic * (1.0 - 1e-12));
    }
}

TEST_CASE("sample_gaussian_error basics") {
    SECTION("zero variance gives the zero vector") {
        const cvec e = sample_gaussian_error(5, 3, 0.0);
        for (const auto& x : e) CHECK(std::abs(x) == 0.0);
    }
    SECTION("same seed reproduces the vector bit for bit") {
        CHECK(sample_gaussian_error(9, 6, 0.5) == sample_gaussian_error(9, 6, 0.5));
        CHECK(sample_gaussian_error(9, 6, 0.5) != sample_gaussian_error(10, 6, 0.5));
    }
    SECTION("rejects bad parameters") {
        CHECK_THROWS_AS(sample_gaussian_error(1, 0, 1.0), invalid_parameter);
        CHECK_THROWS_AS(sample_gaussian_error(1, 3, -1.0), invalid_parameter);
    }
}

TEST_CASE("gaussian samples have the declared first and second moments") {
    const int draws = 10000;
    const int n = 10;
    double power_sum = 0.0, re_sum = 0.0, re_sq = 0.0, im_sq = 0.0;
    for (int d = 0; d < draws; ++d) {
        const cvec e = sample_gaussian_error(derive_seed(2024, d), n, 1.0);
        for (const auto& x : e) {
            power_sum += std::norm(x);
            re_sum += x.real();
            re_sq += x.real() * x.real();
            im_sq += x.imag() * x.imag();
        }
    }
    const double count = static_cast<double>(draws) * n;
    // |e|^2 ~ Exp(1): mean 1, variance 1; 1.65 sigma over 1e5 entries
    const double slack = 1.65 / std::sqrt(count);
    CHECK(std::abs(power_sum / count - 1.0) <= slack);
    CHECK(std::abs(re_sum / count) <= slack);
    CHECK(re_sq / count == Catch::Approx(0.5).epsilon(0.03));
    CHECK(im_sq / count == Catch::Approx(0.5).epsilon(0.03));
}
