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
// Command-line front end:
//
//   robustma run --config <file> --sweep {delta2|rho|sigma2} --out <csv>
//                --seed <u64> [--trials T] [--realizations R] [--threads K]
//   robustma validate
//
// Exit code 0 on success; otherwise a single "error: ..." line on stderr
// and a nonzero exit code.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "robustma/robustma.hpp"

namespace {

using namespace robustma;

double rel_err(double actual, double expected) {
    const double scale = std::max({std::abs(actual), std::abs(expected), 1e-300});
    return std::abs(actual - expected) / scale;
}

void check(bool ok, const std::string& name) {
    if (!ok) throw numeric_error("validate: check failed: " + name);
    std::printf("ok: %s\n", name.c_str());
}

cvec random_channel(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    cvec v(n);
    for (auto& x : v) x = cxd{g(rng), g(rng)};
    return v;
}

// Fast self-contained oracle suite: frozen constants, closed forms against
// independent recomputation, and one seeded Monte Carlo certificate check.
int run_validate() {
    std::mt19937_64 rng(424242);

    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const cvec h_bar = random_channel(rng, 4);
            const double delta = 0.4 * vec_norm(h_bar);
            const double closed = worst_case_power(h_bar, delta, 2.0).power;
            const Beamformer w = mrt(h_bar, 2.0);
            const cvec e = worst_case_error(h_bar, delta);
            cvec h = h_bar;
            for (std::size_t k = 0; k < h.size(); ++k) h[k] += e[k];
            ok = rel_err(received_power(w, h), closed) <= 1e-9;
            std::normal_distribution<double> g(0.0, 1.0);
            for (int t = 0; t < 1000 && ok; ++t) {
                cvec probe(h_bar.size());
                for (auto& x : probe) x = cxd{g(rng), g(rng)};
                const double nrm = vec_norm(probe);
                cvec ht = h_bar;
                for (std::size_t k = 0; k < ht.size(); ++k)
                    ht[k] += probe[k] * (delta / nrm);
                ok = received_power(w, ht) >= closed;
            }
        }
        check(ok, "worst-case closed form attained by -delta h/||h||");
    }

    check(rel_err(bernstein_lhs(2.0, 2.0, 0.0, 0.0, 0.1), -1.034854258770293) <= 1e-12,
          "Bernstein left-hand side frozen value");
    check(rel_err(bernstein_bound(2.0, 1.0, 1.0, 0.01), -3.7861404244151124) <= 1e-12,
          "Bernstein bound frozen value");
    check(rel_err(bernstein_extreme_point(2.0, 0.01), 8.210340371976184) <= 1e-12,
          "stationary point frozen value");
    check(rel_err(bernstein_zero_point(1.0, 1.0, 0.01), 16.906318143088424) <= 1e-12,
          "zero crossing frozen value");
    check(rel_err(bernstein_monotone_rho_threshold(), 0.6065306597126334) <= 1e-12,
          "monotonicity threshold exp(-1/2)");

    {
        bool ok = true;
        std::uniform_real_distribution<double> us(0.1, 2.0), up(0.5, 5.0), ur(0.01, 0.55);
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const double sigma2 = us(rng), p = up(rng), rho = ur(rng);
            const double y1 = bernstein_zero_point(sigma2, p, rho);
            ok = std::abs(bernstein_bound(y1, sigma2, p, rho)) <= 1e-9 * sigma2 * p;
        }
        check(ok, "zero crossing solves F(y1) = 0");
    }

    {
        bool ok = true;
        std::uniform_int_distribution<int> um(10, 30), un(1, 4);
        for (int rep = 0; rep < 10 && ok; ++rep) {
            const int m = um(rng);
            const int n = un(rng);
            const int max_gap = n > 1 ? (m - 1) / (n - 1) : m;
            std::uniform_int_distribution<int> ug(1, max_gap);
            ChannelMap map;
            map.grid = SamplingGrid::make(m, static_cast<double>(m),
                                          static_cast<double>(ug(rng)));
            map.estimated_values = random_channel(rng, static_cast<std::size_t>(m));
            map.true_values = map.estimated_values;
            const PlacementSelection dp = optimize_placement_dp(map, n);
            const PlacementSelection bf = optimize_placement_bruteforce(map, n);
            ok = dp.objective == bf.objective && dp.indices == bf.indices;
        }
        check(ok, "placement DP equals exhaustive enumeration");
    }

    {
        const std::vector<double> sorted = {9.0, 7.0, 4.0, 1.0};
        check(percentile_descending(sorted, 0.25) == 4.0 &&
                  percentile_descending(sorted, 0.5) == 7.0 &&
                  percentile_descending(sorted, 0.75) == 9.0,
              "descending percentile convention");
    }

    {
        const cvec h_bar = random_channel(rng, 6);
        const double sigma2 = 0.1 * squared_norm(h_bar) / 6.0;
        const BernsteinValidation v = validate_bernstein(h_bar, sigma2, 2.0, 0.1, 2000, 7);
        check(v.within_slack && v.gap >= 0.0, "Monte Carlo outage stays within the certificate");
    }

    std::printf("validate: all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust movable-antenna placement experiments"};
    app.require_subcommand(1);

    std::string config_path, sweep_name, out_path;
    std::uint64_t seed = 0;
    int trials = 0, realizations = 0, threads = 0;

    CLI::App* run = app.add_subcommand("run", "execute a sweep and write a CSV");
    run->add_option("--config", config_path, "configuration file (sectioned key = value)")
        ->required();
    run->add_option("--sweep", sweep_name, "sweep axis: delta2 | rho | sigma2")->required();
    run->add_option("--out", out_path, "output CSV path")->required();
    run->add_option("--seed", seed, "base seed for channel and error realizations")
        ->required();
    run->add_option("--trials", trials, "override error trials per realization");
    run->add_option("--realizations", realizations, "override channel realizations");
    run->add_option("--threads", threads, "worker threads (results do not depend on this)");

    CLI::App* validate = app.add_subcommand("validate", "run the built-in oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (validate->parsed()) return run_validate();

        robustma::ExperimentConfig cfg = robustma::load_config(config_path);
        cfg.axis = robustma::parse_sweep_axis(sweep_name);
        cfg.base_seed = seed;
        if (run->count("--trials") > 0) cfg.error_trials = trials;
        if (run->count("--realizations") > 0) cfg.channel_realizations = realizations;
        if (run->count("--threads") > 0) cfg.threads = threads;

        const robustma::SweepResult result = robustma::run_sweep(cfg);
        robustma::emit_csv(result, out_path);
        std::printf("wrote %s: axis=%s points=%zu schemes=%zu realizations=%d seed=%llu\n",
                    out_path.c_str(), robustma::axis_name(result.axis), result.rows.size(),
                    result.schemes.size(), cfg.channel_realizations,
                    static_cast<unsigned long long>(cfg.base_seed));
        return 0;
    } catch (const robustma::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
