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

#include <risplan/deployment.hpp>
#include <risplan/rng.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace risplan;
using Catch::Approx;

namespace {

constexpr double rho0 = 1e-4;

SceneGeometry scene_p(double l, double r, double h) {
    SceneGeometry s;
    s.l = l;
    s.r = r;
    s.h = h;
    return s;
}

// full-scan reference: identical grid walk without the interval narrowing
DeploymentResult optimize_full_scan(double R, double h_min, double h_max,
                                    const GridSpec& grid, const PatternConfig& pat,
                                    const RicianSpec& spec, const LinkBudget& budget) {
    const double rho = budget.rho0_linear();
    double best = -1.0, best_r = 0.0, best_h = 0.0;
    const long nh = detail::grid_count(h_min, h_max, grid.delta_h_m);
    for (long ih = 0; ih < nh; ++ih) {
        const double h = h_min + static_cast<double>(ih) * grid.delta_h_m;
        const long nr = detail::grid_count(0.0, 0.5 * R, grid.delta_r_m);
        for (long ir = 0; ir < nr; ++ir) {
            const double r = static_cast<double>(ir) * grid.delta_r_m;
            const double v = ccg_location_approx(r, h, R, pat, rho);
            const bool better =
                v > best || (v == best && (r < best_r || (r == best_r && h < best_h)));
            if (better) {
                best = v;
                best_r = r;
                best_h = h;
            }
        }
    }
    DeploymentResult out;
    out.r_opt_m = best_r;
    out.h_opt_m = best_h;
    out.mirror_r_opt_m = R - best_r;
    out.theta0_opt_rad = optimal_ris_rotation_at(best_r, best_h, R);
    out.ccg_opt = best;
    out.capacity_opt_bpshz = capacity_upper_bound(best, spec, budget);
    return out;
}

} // namespace

TEST_CASE("optimal RIS rotation from scene angles") {
    const AngleSet a = elevation_angles(scene_p(100.0, 200.0, 100.0));
    CHECK(rad2deg(optimal_ris_rotation(a)) == Approx(-8.5121).margin(1e-3));

    const AngleSet mid = elevation_angles(scene_p(0.0, 500.0, 100.0));
    CHECK(optimal_ris_rotation(mid) == 0.0);

    const AngleSet far = elevation_angles(scene_p(100.0, 800.0, 100.0));
    CHECK(rad2deg(optimal_ris_rotation(far)) == Approx(8.5121).margin(1e-3));
}

TEST_CASE("location-dependent optimal rotation") {
    CHECK(rad2deg(optimal_ris_rotation_at(0.0, 100.0, 1000.0)) ==
          Approx(-42.144703).margin(1e-4));
    CHECK(optimal_ris_rotation_at(500.0, 100.0, 1000.0) == 0.0);
    CHECK(optimal_ris_rotation_at(1000.0, 100.0, 1000.0) ==
          -optimal_ris_rotation_at(0.0, 100.0, 1000.0));
    CHECK_THROWS_AS(optimal_ris_rotation_at(0.0, 0.0, 1000.0), std::domain_error);
}

TEST_CASE("exact location CCG reduces as stated") {
    const PatternConfig pat;

    // l = 0 form coded independently
    {
        const double r = 230.0, h = 140.0, h_t = 4.0, h_r = 7.0, R = 1000.0;
        const double a = r * r + (h - h_t) * (h - h_t);
        const double b = (R - r) * (R - r) + (h - h_r) * (h - h_r);
        const double bracket =
            1.0 + ((h - h_t) * (h - h_r) - r * (R - r)) / std::sqrt(a * b);
        const double expect = rho0 * rho0 * directivity_factor(20.0, 20.0, 4.0) /
                              (a * b) * std::pow(bracket, 4.0) / 16.0;
        CHECK(ccg_location_exact(0.0, r, h, h_t, h_r, R, pat, rho0) ==
              Approx(expect).epsilon(1e-12));
    }

    // strictly decreasing in l
    {
        double prev = ccg_location_exact(0.0, 300.0, 150.0, 2.0, 5.0, 1000.0, pat, rho0);
        for (const double l : {10.0, 40.0, 90.0, 160.0, 250.0}) {
            const double v = ccg_location_exact(l, 300.0, 150.0, 2.0, 5.0, 1000.0, pat, rho0);
            CHECK(v < prev);
            prev = v;
        }
    }

    // zero heights, l = 0: equals the approximation formula
    for (const double r : {0.0, 137.0, 500.0, 804.0}) {
        CHECK(ccg_location_exact(0.0, r, 120.0, 0.0, 0.0, 1000.0, pat, rho0) ==
              Approx(ccg_location_approx(r, 120.0, 1000.0, pat, rho0)).epsilon(1e-12));
    }
}

TEST_CASE("exact location CCG is consistent with the rotated-gain route") {
    const PatternConfig pat;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const CounterRng rng(31, i);
        SceneGeometry s;
        s.R = 400.0 + 1200.0 * rng.uniform(0);
        s.r = s.R * rng.uniform(1);
        s.l = 200.0 * rng.uniform(2);
        s.h_t = 8.0 * rng.uniform(3);
        s.h_r = 8.0 * rng.uniform(4);
        s.h_min = 20.0;
        s.h_max = 800.0;
        s.h = 30.0 + 500.0 * rng.uniform(5);
        const AngleSet a = elevation_angles(s);
        const double via_rotation =
            ccg_ris_rotation(s, pat, a, optimal_ris_rotation(a), rho0).rho_cc;
        const double via_location =
            ccg_location_exact(s.l, s.r, s.h, s.h_t, s.h_r, s.R, pat, rho0);
        CHECK(via_location == Approx(via_rotation).epsilon(1e-12));
    }
}

TEST_CASE("approximate location CCG: endpoints, symmetry, positivity") {
    const PatternConfig pat;
    const double R = 1000.0;

    // r = 0 closed form (low-altitude optimum)
    for (const double h : {50.0, 100.0, 200.0}) {
        const double expect = rho0 * rho0 * directivity_factor(20.0, 20.0, 4.0) /
                              (16.0 * h * h * (R * R + h * h)) *
                              std::pow(1.0 + h / std::sqrt(R * R + h * h), 4.0);
        CHECK(ccg_location_approx(0.0, h, R, pat, rho0) == Approx(expect).epsilon(1e-12));
    }

    for (const double r : {11.5, 300.0, 499.0}) {
        CHECK(ccg_location_approx(r, 130.0, R, pat, rho0) ==
              Approx(ccg_location_approx(R - r, 130.0, R, pat, rho0)).epsilon(1e-12));
    }

    // bracket positivity over a large random sample
    const CounterRng rng(17, 0);
    for (std::uint64_t i = 0; i < 1000000; ++i) {
        const double r = R * rng.uniform(2 * i);
        const double h = 1.0 + 999.0 * rng.uniform(2 * i + 1);
        const MuNu mn = mu_nu(r, h, R, 4.0);
        if (!(mn.mu > 0.0)) {
            CHECK(mn.mu > 0.0);
            break;
        }
    }
}

TEST_CASE("mu/nu decomposition and monotonicity") {
    const PatternConfig pat;
    const double R = 1000.0, q_u = 4.0;
    const double pref = rho0 * rho0 * directivity_factor(pat.q_t, pat.q_r, q_u);

    for (std::uint64_t i = 0; i < 100; ++i) {
        const CounterRng rng(53, i);
        const double r = R * rng.uniform(0);
        const double h = 10.0 + 800.0 * rng.uniform(1);
        const MuNu mn = mu_nu(r, h, R, q_u);
        CHECK(pref * mn.mu * mn.nu / 16.0 ==
              Approx(ccg_location_approx(r, h, R, pat, rho0)).epsilon(1e-12));
    }

    // d(mu)/dr < 0 left of R/2, > 0 right of it (central differences)
    const double dh = 1e-4;
    for (const double r : {100.0, 300.0, 480.0}) {
        const double dmu = (mu_nu(r + dh, 200.0, R, q_u).mu -
                            mu_nu(r - dh, 200.0, R, q_u).mu) / (2.0 * dh);
        CHECK(dmu < 0.0);
        const double dmu_right = (mu_nu(R - r + dh, 200.0, R, q_u).mu -
                                  mu_nu(R - r - dh, 200.0, R, q_u).mu) / (2.0 * dh);
        CHECK(dmu_right > 0.0);
    }

    // altitude derivatives against the closed forms
    for (std::uint64_t i = 0; i < 30; ++i) {
        const CounterRng rng(54, i);
        const double r = 20.0 + (R - 40.0) * rng.uniform(0);
        const double h = 50.0 + 500.0 * rng.uniform(1);
        const double a = r * r + h * h;
        const double b = (R - r) * (R - r) + h * h;
        const double bracket = 1.0 + (r * r - R * r + h * h) / std::sqrt(a * b);
        const double dmu_closed = q_u * R * R * h * (h * h + R * r - r * r) /
                                  (std::pow(a, 1.5) * std::pow(b, 1.5)) *
                                  std::pow(bracket, q_u - 1.0);
        const double dnu_closed = -2.0 * h * (2.0 * h * h + r * r + (R - r) * (R - r)) /
                                  (a * a * b * b);
        const double step = 1e-3;
        const MuNu up = mu_nu(r, h + step, R, q_u);
        const MuNu down = mu_nu(r, h - step, R, q_u);
        const double dmu = (up.mu - down.mu) / (2.0 * step);
        const double dnu = (up.nu - down.nu) / (2.0 * step);
        CHECK(dmu > 0.0);
        CHECK(dnu < 0.0);
        CHECK(dmu == Approx(dmu_closed).epsilon(1e-5));
        CHECK(dnu == Approx(dnu_closed).epsilon(1e-5));
    }
}

TEST_CASE("optimal location on the reference scenario") {
    const PatternConfig pat;
    const RicianSpec spec;
    const LinkBudget budget;
    const DeploymentResult res =
        optimize_location(1000.0, 100.0, 600.0, GridSpec{}, pat, spec, budget);
    CHECK(res.r_opt_m == 0.0);
    CHECK(res.h_opt_m == 100.0);
    CHECK(res.mirror_r_opt_m == 1000.0);
    CHECK(res.theta0_opt_rad == optimal_ris_rotation_at(0.0, 100.0, 1000.0));
    CHECK(res.ccg_opt == Approx(ccg_location_approx(0.0, 100.0, 1000.0, pat,
                                                    budget.rho0_linear()))
                             .epsilon(1e-15));
    CHECK(res.capacity_opt_bpshz > 0.0);

    // refinement of the r step leaves the optimum in place
    const DeploymentResult fine =
        optimize_location(1000.0, 100.0, 600.0, {0.5, 1.0}, pat, spec, budget);
    CHECK(fine.r_opt_m == res.r_opt_m);
    CHECK(fine.h_opt_m == res.h_opt_m);
}

TEST_CASE("single-cell grid returns that cell") {
    const DeploymentResult res = optimize_location(100.0, 300.0, 300.0, {1000.0, 1.0},
                                                   PatternConfig{}, RicianSpec{},
                                                   LinkBudget{});
    CHECK(res.r_opt_m == 0.0);
    CHECK(res.h_opt_m == 300.0);
}

TEST_CASE("optimize_location input errors") {
    CHECK_THROWS_AS(optimize_location(1000.0, 600.0, 100.0, GridSpec{}, PatternConfig{},
                                      RicianSpec{}, LinkBudget{}),
                    std::domain_error);
    CHECK_THROWS_AS(optimize_location(1000.0, 100.0, 600.0, {-1.0, 1.0}, PatternConfig{},
                                      RicianSpec{}, LinkBudget{}),
                    std::domain_error);
}

TEST_CASE("interval narrowing never loses the optimum") {
    const PatternConfig pat;
    const RicianSpec spec;
    const LinkBudget budget;

    const DeploymentResult narrowed =
        optimize_location(1000.0, 100.0, 600.0, GridSpec{}, pat, spec, budget);
    const DeploymentResult full =
        optimize_full_scan(1000.0, 100.0, 600.0, GridSpec{}, pat, spec, budget);
    CHECK(narrowed.r_opt_m == full.r_opt_m);
    CHECK(narrowed.h_opt_m == full.h_opt_m);

    for (std::uint64_t i = 0; i < 10; ++i) {
        const CounterRng rng(77, i);
        const double R = 500.0 + 1500.0 * rng.uniform(0);
        const double h_min = 20.0 + (0.45 * R - 20.0) * rng.uniform(1); // R > 2 h_min
        const double h_max = h_min + 400.0 * rng.uniform(2);
        PatternConfig p;
        p.q_u = 2.0 + 2.0 * std::floor(3.0 * rng.uniform(3));
        const DeploymentResult a =
            optimize_location(R, h_min, h_max, GridSpec{}, p, spec, budget);
        const DeploymentResult b =
            optimize_full_scan(R, h_min, h_max, GridSpec{}, p, spec, budget);
        CHECK(a.r_opt_m == b.r_opt_m);
        CHECK(a.h_opt_m == b.h_opt_m);
    }
}

TEST_CASE("effective region marking is exact on the reference scenario") {
    const PatternConfig pat;
    const RicianSpec spec;
    const LinkBudget budget;
    const double gamma_th_db = 45.0;
    const RegionMap map = effective_region(1000.0, 100.0, 600.0, {5.0, 25.0},
                                           gamma_th_db, pat, spec, budget);
    const double gamma_lin = std::pow(10.0, gamma_th_db / 10.0);

    std::size_t marked = 0;
    for (const RegionCell& c : map.cells) {
        if (c.effective) {
            ++marked;
            CHECK(c.expected_snr >= gamma_lin * (1.0 - 1e-12));
        } else {
            CHECK(c.expected_snr < gamma_lin * (1.0 + 1e-12));
        }
    }
    CHECK(marked > 0);
    CHECK(marked < map.cells.size());
}

TEST_CASE("bisection boundary equals a 0.01 m brute-force scan") {
    const PatternConfig pat;
    const RicianSpec spec;
    const LinkBudget budget;
    const double rho = budget.rho0_linear();
    const double gamma_lin = std::pow(10.0, 4.5);
    const double n = budget.n_units;
    const double per_ccg = budget.tx_over_noise() * n * (1.0 + (n - 1.0) * gamma_factor(spec));

    for (const double h : {100.0, 250.0, 400.0}) {
        const RegionMap map =
            effective_region(1000.0, h, h, GridSpec{}, 45.0, pat, spec, budget);
        for (const RegionCell& c : map.cells) {
            const double direct = ccg_location_approx(c.r_m, c.h_m, 1000.0, pat, rho);
            const bool brute = direct * per_ccg >= gamma_lin;
            CHECK(c.effective == brute);
        }
    }
}

TEST_CASE("degenerate thresholds") {
    const PatternConfig pat;
    const RicianSpec spec;
    const LinkBudget budget;
    const GridSpec coarse{50.0, 100.0};

    const RegionMap none =
        effective_region(1000.0, 100.0, 600.0, coarse, 200.0, pat, spec, budget);
    for (const RegionCell& c : none.cells)
        CHECK_FALSE(c.effective);

    const RegionMap all =
        effective_region(1000.0, 100.0, 600.0, coarse, -100.0, pat, spec, budget);
    for (const RegionCell& c : all.cells)
        CHECK(c.effective);
}

TEST_CASE("region map is symmetric about R/2") {
    const RegionMap map = effective_region(1000.0, 100.0, 600.0, {10.0, 50.0}, 45.0,
                                           PatternConfig{}, RicianSpec{}, LinkBudget{});
    const long nr = detail::grid_count(0.0, 1000.0, 10.0);
    const long nh = detail::grid_count(100.0, 600.0, 50.0);
    for (long ih = 0; ih < nh; ++ih) {
        for (long ir = 0; ir < nr; ++ir) {
            const RegionCell& a = map.cells[static_cast<std::size_t>(ih * nr + ir)];
            const RegionCell& b =
                map.cells[static_cast<std::size_t>(ih * nr + (nr - 1 - ir))];
            CHECK(a.effective == b.effective);
        }
    }
}
