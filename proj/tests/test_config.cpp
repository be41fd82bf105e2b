// SPDX-License-Identifier: Apache-2.0
//
// risplan — deployment planning for RIS-assisted wireless links:
// ergodic-capacity bounds over cascade Rician fading and rotation/location
// optimization of the reflecting surface.
// Copyright (C) 2026 The risplan Authors
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

#include <risplan/config.hpp>
#include <risplan/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace risplan;
using Catch::Approx;

TEST_CASE("defaults mirror the reference parameter table") {
    const RunConfig c;
    CHECK(c.scene.R == 1000.0);
    CHECK(c.scene.l == 100.0); // initial location P(100, 200, 100)
    CHECK(c.scene.r == 200.0);
    CHECK(c.scene.h == 100.0);
    CHECK(c.scene.h_min == 100.0);
    CHECK(c.scene.h_max == 600.0);
    CHECK(c.pattern.q_t == 20.0);
    CHECK(c.pattern.q_r == 20.0);
    CHECK(c.pattern.q_u == 4.0);
    CHECK(c.rician.k1 == 5.0);
    CHECK(c.budget.p_t_dbm == 10.0);
    CHECK(c.budget.noise_density_dbm_hz == -174.0);
    CHECK(c.budget.bandwidth_hz == 5e6);
    CHECK(c.budget.rho0_db == -40.0);
    CHECK(c.budget.n_units == 64);
    CHECK(c.budget.wavelength_m == 0.125);
    CHECK(c.budget.reflect_amp == 1.0);
    CHECK(c.trials == 100000);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("parsing keys, sentinels, and comments") {
    const RunConfig c = load_config_string(R"(
# scene
l = 100       # initial offset
r = 200
h = 100
theta_t0_deg = opt
theta_r0_deg = -50
theta_0_deg = 0
k1 = inf
k2 = 2.5
n_units = 32
trials = 5000
seed = 99
gamma_th_db = -inf
)");
    CHECK(c.scene.l == 100.0);
    CHECK(c.scene.r == 200.0);
    CHECK(c.theta_t0_opt);
    CHECK_FALSE(c.theta_r0_opt);
    CHECK(c.theta_r0_deg == -50.0);
    CHECK(std::isinf(c.rician.k1));
    CHECK(c.rician.k2 == 2.5);
    CHECK(c.budget.n_units == 32);
    CHECK(c.trials == 5000);
    CHECK(c.seed == 99);
    CHECK(std::isinf(c.gamma_th_db));
    CHECK(c.gamma_th_db < 0.0);
}

TEST_CASE("unknown keys and malformed lines are rejected") {
    CHECK_THROWS_AS(load_config_string("bogus_key = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_string("r 200\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_string("r = \n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_string("r = 1x\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_string("n_units = 3.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_string("directivity_mode = loud\n"),
                    std::invalid_argument);
}

TEST_CASE("validation failures surface as config errors") {
    RunConfig c = load_config_string("h_min = 500\nh_max = 200\n");
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = load_config_string("r = 5000\n");
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = load_config_string("threads = 0\n");
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = load_config_string("reflect_amp = 0\n");
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("resolved pattern fills in the optimal rotations") {
    RunConfig c = load_config_string(
        "l = 100\nr = 200\nh = 100\n"
        "theta_t0_deg = opt\ntheta_r0_deg = opt\ntheta_0_deg = opt\n");
    const PatternConfig p = c.resolved_pattern();
    const AngleSet a = elevation_angles(c.scene);
    CHECK(p.theta_t0 == a.theta_t_aod);
    CHECK(p.theta_r0 == a.theta_r_aoa);
    CHECK(p.theta_0 == optimal_ris_rotation(a));
}

TEST_CASE("config echo round-trips to the identical run") {
    const RunConfig orig = load_config_string(R"(
l = 100.25
r = 333.3333333333333
h = 147.0001
theta_t0_deg = opt
theta_r0_deg = -82.92944497708275
theta_0_deg = 1.5
k1 = inf
k2 = 0.1
p_t_dbm = 12.75
bandwidth_hz = 5000000
rho0_db = -40
n_units = 96
wavelength_m = 0.125
reflect_amp = 0.9
trials = 12345
seed = 18446744073709551615
threads = 4
delta_r_m = 0.5
delta_h_m = 2
gamma_th_db = 45.5
)");
    std::ostringstream echo1;
    write_config_echo(echo1, orig);
    const RunConfig back = load_config_string(echo1.str());
    std::ostringstream echo2;
    write_config_echo(echo2, back);
    CHECK(echo1.str() == echo2.str());

    CHECK(back.scene.r == orig.scene.r);
    CHECK(back.theta_r0_deg == orig.theta_r0_deg);
    CHECK(back.theta_0_deg == orig.theta_0_deg);
    CHECK(back.theta_t0_opt == orig.theta_t0_opt);
    CHECK(std::isinf(back.rician.k1));
    CHECK(back.rician.k2 == orig.rician.k2);
    CHECK(back.budget.p_t_dbm == orig.budget.p_t_dbm);
    CHECK(back.seed == orig.seed);
    CHECK(back.trials == orig.trials);
    CHECK(back.delta_r_m == orig.delta_r_m);
}

TEST_CASE("sweep and region CSV artifacts carry the config header") {
    RunConfig cfg;
    std::vector<SweepRow> rows;
    SweepRow row;
    row.axis_value = -8.5;
    row.ccg = 2.438e-12;
    row.expected_snr = 4281.0;
    row.capacity_bpshz = 12.06;
    rows.push_back(row);

    std::ostringstream os;
    write_sweep_csv(os, cfg, "theta_0", rows);
    const std::string text = os.str();
    CHECK(text.find("# n_units = 64\n") != std::string::npos);
    CHECK(text.find("axis_value,ccg_db,expected_snr_db,capacity_bpshz\n") !=
          std::string::npos);
    CHECK(text.find("-8.5,") != std::string::npos);

    // region artifact: header plus one line per cell
    const RegionMap map = effective_region(1000.0, 100.0, 100.0, {250.0, 1.0}, 45.0,
                                           cfg.pattern, cfg.rician, cfg.budget);
    std::ostringstream ros;
    write_region_csv(ros, cfg, map);
    const std::string rtext = ros.str();
    CHECK(rtext.find("r_m,h_m,theta0_opt_deg,ccg_db,expected_snr_db,capacity_bpshz,"
                     "effective\n") != std::string::npos);
    CHECK(map.cells.size() == 5);
}
