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

#ifndef RISPLAN_IO_HPP
#define RISPLAN_IO_HPP

#include "risplan/config.hpp"
#include "risplan/deployment.hpp"
#include "risplan/fading.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace risplan {

using json = nlohmann::ordered_json;

namespace detail {

// Fixed %.10g rendering keeps report artifacts byte-stable across runs.
inline std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }

} // namespace detail

/// Angle/rotation summary of a scene; everything in degrees or meters.
struct AnglesReport {
    double d_tc_m, d_cr_m;
    double alpha_deg, beta_deg;
    double theta_t0_opt_deg, theta_r0_opt_deg, theta_0_opt_deg;
    double theta_0_min_deg, theta_0_max_deg; // admissible RIS rotation interval
    double phi_t_aod_deg, phi_r_aoa_deg;     // azimuth diagnostics
};

inline AnglesReport make_angles_report(const SceneGeometry& scene) {
    const LinkDistances d = link_distances(scene);
    const AngleSet a = elevation_angles(scene);
    AnglesReport rep{};
    rep.d_tc_m = d.d_tc;
    rep.d_cr_m = d.d_cr;
    rep.alpha_deg = rad2deg(a.alpha);
    rep.beta_deg = rad2deg(a.beta);
    rep.theta_t0_opt_deg = rad2deg(a.theta_t_aod);
    rep.theta_r0_opt_deg = rad2deg(a.theta_r_aoa);
    rep.theta_0_opt_deg = rad2deg(optimal_ris_rotation(a));
    rep.theta_0_min_deg = rad2deg(a.alpha - pi / 2.0);
    rep.theta_0_max_deg = rad2deg(pi / 2.0 - a.beta);
    rep.phi_t_aod_deg = rad2deg(a.phi_t_aod);
    rep.phi_r_aoa_deg = rad2deg(a.phi_r_aoa);
    return rep;
}

inline json angles_json(const AnglesReport& r) {
    json j;
    j["d_tc_m"] = r.d_tc_m;
    j["d_cr_m"] = r.d_cr_m;
    j["alpha_deg"] = r.alpha_deg;
    j["beta_deg"] = r.beta_deg;
    j["theta_t0_opt_deg"] = r.theta_t0_opt_deg;
    j["theta_r0_opt_deg"] = r.theta_r0_opt_deg;
    j["theta_0_opt_deg"] = r.theta_0_opt_deg;
    j["theta_0_feasible_deg"] = json::array({r.theta_0_min_deg, r.theta_0_max_deg});
    j["phi_t_aod_deg"] = r.phi_t_aod_deg;
    j["phi_r_aoa_deg"] = r.phi_r_aoa_deg;
    return j;
}

/// Capacity report; MC fields appear only when trials > 0.
inline json capacity_json(const CapacityReport& r, bool with_mc) {
    json j;
    j["upper_bound_bpshz"] = r.upper_bound_bpshz;
    j["expected_snr_db"] = r.expected_snr_db;
    if (with_mc) {
        j["mc_mean_bpshz"] = r.mc_mean_bpshz;
        j["mc_stderr_bpshz"] = r.mc_stderr_bpshz;
        j["trials"] = r.trials;
    }
    return j;
}

inline json deployment_json(const DeploymentResult& r) {
    json j;
    j["r_opt_m"] = r.r_opt_m;
    j["h_opt_m"] = r.h_opt_m;
    j["mirror_r_opt_m"] = r.mirror_r_opt_m;
    j["theta0_opt_deg"] = rad2deg(r.theta0_opt_rad);
    j["ccg_opt"] = r.ccg_opt;
    j["ccg_opt_db"] = detail::to_db(r.ccg_opt);
    j["capacity_opt_bpshz"] = r.capacity_opt_bpshz;
    return j;
}

/// One sweep row: the swept value plus the derived link metrics.
struct SweepRow {
    double axis_value;
    double ccg;
    double expected_snr;
    double capacity_bpshz;
    bool has_mc = false;
    double mc_mean = 0.0;
    double mc_stderr = 0.0;
};

inline void write_sweep_csv(std::ostream& os, const RunConfig& cfg,
                            const std::string& axis, const std::vector<SweepRow>& rows) {
    os << "# risplan sweep axis=" << axis << "\n";
    write_config_echo(os, cfg, "# ");
    const bool with_mc = !rows.empty() && rows.front().has_mc;
    os << "axis_value,ccg_db,expected_snr_db,capacity_bpshz";
    if (with_mc)
        os << ",mc_mean,mc_stderr";
    os << "\n";
    for (const auto& r : rows) {
        os << detail::csv_num(r.axis_value) << ',' << detail::csv_num(detail::to_db(r.ccg))
           << ',' << detail::csv_num(detail::to_db(r.expected_snr)) << ','
           << detail::csv_num(r.capacity_bpshz);
        if (with_mc)
            os << ',' << detail::csv_num(r.mc_mean) << ',' << detail::csv_num(r.mc_stderr);
        os << "\n";
    }
}

inline void write_region_csv(std::ostream& os, const RunConfig& cfg, const RegionMap& map) {
    os << "# risplan effective region, gamma_th_db=" << detail::csv_num(map.gamma_th_db)
       << "\n";
    write_config_echo(os, cfg, "# ");
    os << "r_m,h_m,theta0_opt_deg,ccg_db,expected_snr_db,capacity_bpshz,effective\n";
    for (const auto& c : map.cells) {
        os << detail::csv_num(c.r_m) << ',' << detail::csv_num(c.h_m) << ','
           << detail::csv_num(rad2deg(c.theta0_opt_rad)) << ','
           << detail::csv_num(detail::to_db(c.ccg)) << ','
           << detail::csv_num(detail::to_db(c.expected_snr)) << ','
           << detail::csv_num(c.capacity_bpshz) << ',' << (c.effective ? 1 : 0) << "\n";
    }
}

} // namespace risplan

#endif // RISPLAN_IO_HPP
