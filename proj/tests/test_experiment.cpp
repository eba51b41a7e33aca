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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace robustma;

namespace {

constexpr double frozen_reference_gain = 2.2797266319525994e-05; // (0.06 / 4 pi)^2

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

bool rows_identical(const SweepResult& a, const SweepResult& b) {
    if (a.axis != b.axis || a.schemes != b.schemes || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].sweep_value != b.rows[i].sweep_value) return false;
        if (a.rows[i].values_db != b.rows[i].values_db) return false;
        if (a.rows[i].realizations != b.rows[i].realizations) return false;
        if (a.rows[i].seed != b.rows[i].seed) return false;
    }
    return true;
}

std::size_t scheme_index(const SweepResult& r, const std::string& name) {
    for (std::size_t i = 0; i < r.schemes.size(); ++i)
        if (r.schemes[i] == name) return i;
    FAIL("scheme not found: " << name);
    return 0;
}

// Small but real configuration for end-to-end runs.
ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.channel_realizations = 3;
    cfg.error_trials = 200;
    cfg.base_seed = 31;
    return cfg;
}

} // namespace

TEST_CASE("parse_sweep_axis accepts both bare and _db spellings") {
    CHECK(parse_sweep_axis("delta2") == SweepAxis::delta2_db);
    CHECK(parse_sweep_axis("delta2_db") == SweepAxis::delta2_db);
    CHECK(parse_sweep_axis("rho") == SweepAxis::rho);
    CHECK(parse_sweep_axis("sigma2") == SweepAxis::sigma2_db);
    CHECK(parse_sweep_axis("sigma2_db") == SweepAxis::sigma2_db);
    CHECK_THROWS_AS(parse_sweep_axis("delta"), invalid_parameter);
    CHECK(std::string(axis_name(SweepAxis::rho)) == "rho");
}

TEST_CASE("finalize_config fills derived defaults") {
    const ExperimentConfig cfg = finalize_config(ExperimentConfig{});
    CHECK(cfg.min_spacing_m == 0.03); // lambda / 2
    CHECK(cfg.reference_gain == frozen_reference_gain);
    CHECK(cfg.p_max() == Catch::Approx(1e10)); // 100 dB transmit SNR, unit noise
    REQUIRE(cfg.delta2_db_list.size() == 9);
    CHECK(cfg.delta2_db_list.front() == -115.0);
    CHECK(cfg.delta2_db_list.back() == -95.0);
    REQUIRE(cfg.rho_list.size() == 7);
    CHECK(cfg.rho_list.front() == 0.01);
    CHECK(cfg.rho_list.back() == 0.5);
    REQUIRE(cfg.sigma2_db_list.size() == 5);
    CHECK(cfg.sigma2_db_list.front() == -125.0);
    CHECK(cfg.sigma2_db_list.back() == -105.0);
}

TEST_CASE("finalize_config rejects out-of-domain values") {
    ExperimentConfig cfg;
    cfg.antenna_count = 0;
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
    cfg = ExperimentConfig{};
    cfg.noise_power = 0.0;
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
    cfg = ExperimentConfig{};
    cfg.fixed_rho = 1.0;
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
    cfg = ExperimentConfig{};
    cfg.rho_list = {0.05, 1.0};
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
    cfg = ExperimentConfig{};
    cfg.threads = 0;
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
    cfg = ExperimentConfig{};
    cfg.wavelength_m = -0.06;
    CHECK_THROWS_AS(finalize_config(cfg), invalid_parameter);
}

TEST_CASE("load_config parses every section") {
    const TempFile tmp("robustma_test_full.ini");
    write_file(tmp.path,
               "# full-surface configuration\n"
               "[scenario]\n"
               "wavelength_m = 0.05\n"
               "antenna_count = 6\n"
               "region_length_m = 0.3   ; trailing comment\n"
               "min_spacing_m = 0.025\n"
               "grid_points = 60\n"
               "path_count = 4\n"
               "distance_m = 80\n"
               "pathloss_exponent = 2.5\n"
               "transmit_snr_db = 90\n"
               "noise_power = 2.0\n"
               "reference_gain = 1e-5\n"
               "\n"
               "[error]\n"
               "sigma2_db = -120\n"
               "rho = 0.1\n"
               "\n"
               "[sweep]\n"
               "delta2_db = -110, -105, -100\n"
               "rho = 0.05, 0.1\n"
               "sigma2_db = -118, -112\n"
               "\n"
               "[run]\n"
               "realizations = 4\n"
               "trials = 64\n"
               "seed = 42\n"
               "threads = 2\n");

    const ExperimentConfig cfg = load_config(tmp.path);
    CHECK(cfg.wavelength_m == 0.05);
    CHECK(cfg.antenna_count == 6);
    CHECK(cfg.region_length_m == 0.3);
    CHECK(cfg.min_spacing_m == 0.025);
    CHECK(cfg.grid_points == 60);
    CHECK(cfg.path_count == 4);
    CHECK(cfg.distance_m == 80.0);
    CHECK(cfg.pathloss_exponent == 2.5);
    CHECK(cfg.transmit_snr_db == 90.0);
    CHECK(cfg.noise_power == 2.0);
    CHECK(cfg.reference_gain == 1e-5);
    CHECK(cfg.fixed_sigma2_db == -120.0);
    CHECK(cfg.fixed_rho == 0.1);
    CHECK(cfg.delta2_db_list == std::vector<double>{-110.0, -105.0, -100.0});
    CHECK(cfg.rho_list == std::vector<double>{0.05, 0.1});
    CHECK(cfg.sigma2_db_list == std::vector<double>{-118.0, -112.0});
    CHECK(cfg.channel_realizations == 4);
    CHECK(cfg.error_trials == 64);
    CHECK(cfg.base_seed == 42);
    CHECK(cfg.threads == 2);
}

TEST_CASE("load_config reports precise parse errors") {
    SECTION("missing file") {
        CHECK_THROWS_AS(load_config("robustma_no_such_file.ini"), io_error);
    }
    SECTION("unknown key names the line") {
        const TempFile tmp("robustma_test_badkey.ini");
        write_file(tmp.path, "[scenario]\nwavelenght_m = 0.06\n");
        CHECK_THROWS_WITH(load_config(tmp.path),
                          Catch::Matchers::ContainsSubstring("line 2") &&
                              Catch::Matchers::ContainsSubstring("wavelenght_m"));
    }
    SECTION("unknown section") {
        const TempFile tmp("robustma_test_badsection.ini");
        write_file(tmp.path, "[scenari]\n");
        CHECK_THROWS_AS(load_config(tmp.path), invalid_parameter);
    }
    SECTION("key before any section") {
        const TempFile tmp("robustma_test_nosection.ini");
        write_file(tmp.path, "wavelength_m = 0.06\n");
        CHECK_THROWS_AS(load_config(tmp.path), invalid_parameter);
    }
    SECTION("malformed number") {
        const TempFile tmp("robustma_test_badnum.ini");
        write_file(tmp.path, "[scenario]\nwavelength_m = sixty\n");
        CHECK_THROWS_WITH(load_config(tmp.path),
                          Catch::Matchers::ContainsSubstring("line 2"));
    }
    SECTION("missing equals sign") {
        const TempFile tmp("robustma_test_noeq.ini");
        write_file(tmp.path, "[run]\nthreads 2\n");
        CHECK_THROWS_AS(load_config(tmp.path), invalid_parameter);
    }
}

TEST_CASE("realize_scenario is deterministic and correctly sized") {
    const ExperimentConfig cfg = finalize_config(ExperimentConfig{});
    const ScenarioRealization a = realize_scenario(cfg, 3);
    const ScenarioRealization b = realize_scenario(cfg, 3);
    const ScenarioRealization other = realize_scenario(cfg, 4);

    CHECK(a.paths.gains == b.paths.gains);
    CHECK(a.ma.indices == b.ma.indices);
    CHECK(a.ma.objective == b.ma.objective);
    CHECK(a.h_fpa == b.h_fpa);
    CHECK(a.as.slots == b.as.slots);
    CHECK(a.paths.gains != other.paths.gains);

    CHECK(a.ma.indices.size() == 8);
    CHECK(a.h_fpa.size() == 8);
    CHECK(a.as.slots.size() == 8);
    CHECK(a.as.channel_subvector.size() == 8);
}

TEST_CASE("worst-case sweep reproduces the perfect-CSI limit at delta = 0") {
    ExperimentConfig cfg = small_config();
    cfg.delta2_db_list = {-std::numeric_limits<double>::infinity(), -110.0, 10.0};
    const SweepResult res = run_worst_case_sweep(cfg);

    REQUIRE(res.rows.size() == 3);
    REQUIRE(res.schemes == worst_case_schemes());
    const std::size_t ma = scheme_index(res, "ma_robust_db");
    const std::size_t ma_p = scheme_index(res, "ma_perfect_db");
    const std::size_t fpa = scheme_index(res, "fpa_noas_imperfect_db");
    const std::size_t fpa_p = scheme_index(res, "fpa_noas_perfect_db");
    const std::size_t as = scheme_index(res, "fpa_as_imperfect_db");

    // delta^2 = -inf dB means delta = 0: robust and perfect collapse exactly
    CHECK(res.rows[0].values_db[ma] == res.rows[0].values_db[ma_p]);
    CHECK(res.rows[0].values_db[fpa] == res.rows[0].values_db[fpa_p]);

    // +10 dB bound dwarfs every channel: all worst cases null to -inf
    CHECK(std::isinf(res.rows[2].values_db[ma]));
    CHECK(res.rows[2].values_db[ma] < 0.0);
    CHECK(std::isinf(res.rows[2].values_db[fpa]));
    CHECK(std::isinf(res.rows[2].values_db[as]));
    CHECK(std::isfinite(res.rows[2].values_db[ma_p]));

    // worst-case power shrinks as the bound grows
    for (std::size_t s : {ma, fpa, as}) {
        CHECK(res.rows[0].values_db[s] >= res.rows[1].values_db[s]);
        CHECK(res.rows[1].values_db[s] >= res.rows[2].values_db[s]);
    }

    // perfect-CSI columns do not depend on the sweep value
    CHECK(res.rows[0].values_db[ma_p] == res.rows[2].values_db[ma_p]);
    CHECK(res.rows[0].values_db[fpa_p] == res.rows[2].values_db[fpa_p]);
}

TEST_CASE("sweep runners reject a mismatched axis") {
    ExperimentConfig cfg = small_config();
    cfg.axis = SweepAxis::rho;
    CHECK_THROWS_AS(run_worst_case_sweep(cfg), invalid_parameter);
    cfg.axis = SweepAxis::delta2_db;
    CHECK_THROWS_AS(run_outage_sweep(cfg), invalid_parameter);
}

TEST_CASE("outage sweep over rho is monotone and bounded below by the certificate") {
    ExperimentConfig cfg = small_config();
    cfg.axis = SweepAxis::rho;
    cfg.rho_list = {0.05, 0.2, 0.5};
    const SweepResult res = run_outage_sweep(cfg);

    REQUIRE(res.rows.size() == 3);
    REQUIRE(res.schemes == outage_schemes());
    const std::size_t ma = scheme_index(res, "ma_robust_db");
    const std::size_t bern = scheme_index(res, "ma_bernstein_db");

    for (std::size_t v = 1; v < res.rows.size(); ++v) {
        CHECK(res.rows[v].values_db[ma] >= res.rows[v - 1].values_db[ma]);
        CHECK(res.rows[v].values_db[bern] >= res.rows[v - 1].values_db[bern]);
    }
    for (const SweepRow& row : res.rows)
        CHECK(row.values_db[bern] <= row.values_db[ma]);
}

TEST_CASE("vanishing error variance recovers the perfect-CSI curves") {
    ExperimentConfig cfg = small_config();
    cfg.axis = SweepAxis::sigma2_db;
    cfg.sigma2_db_list = {-300.0};
    const SweepResult res = run_outage_sweep(cfg);

    REQUIRE(res.rows.size() == 1);
    const SweepRow& row = res.rows.front();
    const double ma = row.values_db[scheme_index(res, "ma_robust_db")];
    const double ma_p = row.values_db[scheme_index(res, "ma_perfect_db")];
    const double fpa = row.values_db[scheme_index(res, "fpa_noas_imperfect_db")];
    const double fpa_p = row.values_db[scheme_index(res, "fpa_noas_perfect_db")];
    const double bern = row.values_db[scheme_index(res, "ma_bernstein_db")];
    CHECK(ma == Catch::Approx(ma_p).margin(1e-6));
    CHECK(fpa == Catch::Approx(fpa_p).margin(1e-6));
    CHECK(bern == Catch::Approx(ma_p).margin(1e-3)); // certificate tightens to the limit
}

TEST_CASE("sweeps are reproducible and thread-count independent") {
    ExperimentConfig cfg = small_config();
    cfg.axis = SweepAxis::rho;
    cfg.rho_list = {0.1, 0.5};
    const SweepResult once = run_outage_sweep(cfg);
    const SweepResult twice = run_outage_sweep(cfg);
    CHECK(rows_identical(once, twice));

    ExperimentConfig threaded = cfg;
    threaded.threads = 3;
    const SweepResult parallel = run_outage_sweep(threaded);
    CHECK(rows_identical(once, parallel));
}

TEST_CASE("CSV round trip preserves every bit") {
    ExperimentConfig cfg = small_config();
    cfg.channel_realizations = 2;
    cfg.delta2_db_list = {-std::numeric_limits<double>::infinity(), -105.0, 10.0};
    const SweepResult res = run_worst_case_sweep(cfg);

    const TempFile tmp("robustma_test_roundtrip.csv");
    emit_csv(res, tmp.path);
    const SweepResult back = read_sweep_csv(tmp.path);
    CHECK(rows_identical(res, back));

    // a second emission of the parsed result is byte-identical
    const TempFile tmp2("robustma_test_roundtrip2.csv");
    emit_csv(back, tmp2.path);
    CHECK(read_file(tmp.path) == read_file(tmp2.path));

    // header carries the axis and scheme names
    const std::string text = read_file(tmp.path);
    CHECK(text.rfind("delta2_db,", 0) == 0);
    CHECK(text.find("ma_robust_db") != std::string::npos);
    CHECK(text.find("realizations,seed") != std::string::npos);
    CHECK(text.find("-inf") != std::string::npos);
}

TEST_CASE("CSV writer and reader surface I/O failures") {
    SweepResult res;
    res.axis = SweepAxis::rho;
    res.schemes = outage_schemes();
    CHECK_THROWS_AS(emit_csv(res, "/nonexistent_dir/out.csv"), io_error);
    CHECK_THROWS_AS(read_sweep_csv("robustma_no_such.csv"), io_error);

    SECTION("header-only file round trips zero rows") {
        const TempFile tmp("robustma_test_empty.csv");
        emit_csv(res, tmp.path);
        const SweepResult back = read_sweep_csv(tmp.path);
        CHECK(back.rows.empty());
        CHECK(back.schemes == res.schemes);
        CHECK(back.axis == SweepAxis::rho);
    }
    SECTION("bad header is rejected") {
        const TempFile tmp("robustma_test_badheader.csv");
        write_file(tmp.path, "rho,ma_robust_db,realizations\n");
        CHECK_THROWS_AS(read_sweep_csv(tmp.path), io_error);
    }
    SECTION("short row is rejected with its line number") {
        const TempFile tmp("robustma_test_shortrow.csv");
        write_file(tmp.path, "rho,ma_robust_db,realizations,seed\n0.1,3.5,2\n");
        CHECK_THROWS_WITH(read_sweep_csv(tmp.path),
                          Catch::Matchers::ContainsSubstring("row 2"));
    }
}

TEST_CASE("frozen sweep output stays stable") {
    ExperimentConfig cfg;
    cfg.delta2_db_list = {-110.0, -100.0};
    cfg.channel_realizations = 2;
    cfg.error_trials = 30;
    cfg.base_seed = 20240817;
    const SweepResult res = run_worst_case_sweep(cfg);

    const TempFile tmp("robustma_test_golden.csv");
    emit_csv(res, tmp.path);
    const std::string golden_path = std::string(ROBUSTMA_TEST_DATA_DIR) + "/golden_delta2.csv";
    CHECK(read_file(tmp.path) == read_file(golden_path));
}
