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

#ifndef RISPLAN_CONFIG_HPP
#define RISPLAN_CONFIG_HPP

#include "risplan/deployment.hpp"
#include "risplan/fading.hpp"
#include "risplan/geometry.hpp"
#include "risplan/radiometrics.hpp"
#include "risplan/specfun.hpp"

#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace risplan {

/**
 * A full run description, loadable from a flat key-value text file
 * (`key = value`, `#` comments). Degrees/dB/dBm at this boundary only.
 *
 * The rotation keys accept the literal `opt`, which resolves at use time to
 * the scene's optimal angle (antennas aimed at the RIS center, RIS rotated
 * by (alpha - beta)/2), so sweeps that move the scene re-optimize per row.
 * The Rician keys accept `inf` for the pure-LOS sentinel.
 */
struct RunConfig {
    SceneGeometry scene;
    PatternConfig pattern; // q exponents and directivity mode; rotations live below
    RicianSpec rician;
    LinkBudget budget;

    // Rotations are kept in degrees here, exactly as entered, so the config
    // echo round-trips bit-for-bit; they are converted to radians once, in
    // resolved_pattern().
    double theta_t0_deg = 0.0;
    double theta_r0_deg = 0.0;
    double theta_0_deg = 0.0;
    bool theta_t0_opt = false;
    bool theta_r0_opt = false;
    bool theta_0_opt = false;

    long long trials = 100000;
    std::uint64_t seed = 1;
    int threads = 1;
    double delta_r_m = 1.0;
    double delta_h_m = 1.0;
    double gamma_th_db = 45.0;

    void validate() const {
        scene.validate();
        pattern.validate();
        rician.validate();
        budget.validate();
        for (const auto& [deg, opt] :
             {std::pair{theta_t0_deg, theta_t0_opt}, {theta_r0_deg, theta_r0_opt},
              {theta_0_deg, theta_0_opt}}) {
            if (!opt && !(std::abs(deg) <= 90.0))
                throw std::invalid_argument(
                    "config: rotations must lie in [-90, 90] degrees");
        }
        if (trials < 0)
            throw std::invalid_argument("config: trials must be >= 0");
        if (threads < 1)
            throw std::invalid_argument("config: threads must be >= 1");
        if (!(delta_r_m > 0.0) || !(delta_h_m > 0.0))
            throw std::invalid_argument("config: grid steps must be positive");
        if (std::isnan(gamma_th_db))
            throw std::invalid_argument("config: gamma_th_db must not be NaN");
    }

    /// Pattern with the degree-valued and `opt` rotations resolved.
    PatternConfig resolved_pattern() const {
        PatternConfig p = pattern;
        p.theta_t0 = deg2rad(theta_t0_deg);
        p.theta_r0 = deg2rad(theta_r0_deg);
        p.theta_0 = deg2rad(theta_0_deg);
        if (theta_t0_opt || theta_r0_opt || theta_0_opt) {
            const AngleSet a = elevation_angles(scene);
            if (theta_t0_opt)
                p.theta_t0 = a.theta_t_aod;
            if (theta_r0_opt)
                p.theta_r0 = a.theta_r_aoa;
            if (theta_0_opt)
                p.theta_0 = optimal_ris_rotation(a);
        }
        return p;
    }

    GridSpec grid() const { return {delta_r_m, delta_h_m}; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "': bad number '" + v + "'");
    }
}

inline double parse_rician_k(const std::string& key, const std::string& v) {
    if (v == "inf" || v == "infinite" || v == "infinity")
        return std::numeric_limits<double>::infinity();
    return parse_number(key, v);
}

inline long long parse_integer(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "': bad integer '" + v + "'");
    }
}

inline std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size() || v.front() == '-')
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "': bad unsigned integer '" +
                                    v + "'");
    }
}

// Shortest decimal form that round-trips the double exactly.
inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == x) {
        for (int prec = 1; prec <= 16; ++prec) {
            char s[40];
            std::snprintf(s, sizeof(s), "%.*g", prec, x);
            std::sscanf(s, "%lf", &back);
            if (back == x)
                return s;
        }
    }
    return buf;
}

} // namespace detail

/// Applies one key-value assignment; throws std::invalid_argument on
/// unknown keys or malformed values.
inline void config_set(RunConfig& c, const std::string& key, const std::string& value) {
    using detail::parse_integer;
    using detail::parse_number;
    using detail::parse_rician_k;
    using detail::parse_unsigned;

    auto rotation = [&](double& target_deg, bool& opt_flag) {
        if (value == "opt") {
            opt_flag = true;
        } else {
            opt_flag = false;
            target_deg = parse_number(key, value);
        }
    };

    if (key == "h_t") c.scene.h_t = parse_number(key, value);
    else if (key == "h_r") c.scene.h_r = parse_number(key, value);
    else if (key == "R") c.scene.R = parse_number(key, value);
    else if (key == "l") c.scene.l = parse_number(key, value);
    else if (key == "r") c.scene.r = parse_number(key, value);
    else if (key == "h") c.scene.h = parse_number(key, value);
    else if (key == "h_min") c.scene.h_min = parse_number(key, value);
    else if (key == "h_max") c.scene.h_max = parse_number(key, value);
    else if (key == "q_t") c.pattern.q_t = parse_number(key, value);
    else if (key == "q_r") c.pattern.q_r = parse_number(key, value);
    else if (key == "q_u") c.pattern.q_u = parse_number(key, value);
    else if (key == "theta_t0_deg") rotation(c.theta_t0_deg, c.theta_t0_opt);
    else if (key == "theta_r0_deg") rotation(c.theta_r0_deg, c.theta_r0_opt);
    else if (key == "theta_0_deg") rotation(c.theta_0_deg, c.theta_0_opt);
    else if (key == "directivity_mode") {
        if (value == "paper") c.pattern.directivity_mode = DirectivityMode::paper;
        else if (value == "physical") c.pattern.directivity_mode = DirectivityMode::physical;
        else throw std::invalid_argument("config: directivity_mode must be paper|physical");
    }
    else if (key == "k1") c.rician.k1 = parse_rician_k(key, value);
    else if (key == "k2") c.rician.k2 = parse_rician_k(key, value);
    else if (key == "p_t_dbm") c.budget.p_t_dbm = parse_number(key, value);
    else if (key == "noise_density_dbm_hz") c.budget.noise_density_dbm_hz = parse_number(key, value);
    else if (key == "bandwidth_hz") c.budget.bandwidth_hz = parse_number(key, value);
    else if (key == "rho0_db") c.budget.rho0_db = parse_number(key, value);
    else if (key == "n_units") c.budget.n_units = static_cast<int>(parse_integer(key, value));
    else if (key == "wavelength_m") c.budget.wavelength_m = parse_number(key, value);
    else if (key == "reflect_amp") c.budget.reflect_amp = parse_number(key, value);
    else if (key == "trials") c.trials = parse_integer(key, value);
    else if (key == "seed") c.seed = parse_unsigned(key, value);
    else if (key == "threads") c.threads = static_cast<int>(parse_integer(key, value));
    else if (key == "delta_r_m") c.delta_r_m = parse_number(key, value);
    else if (key == "delta_h_m") c.delta_h_m = parse_number(key, value);
    else if (key == "gamma_th_db") {
        if (value == "-inf") c.gamma_th_db = -std::numeric_limits<double>::infinity();
        else c.gamma_th_db = parse_number(key, value);
    }
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

/// Parses a flat key-value stream on top of the Table II defaults.
inline RunConfig load_config(std::istream& in) {
    RunConfig c;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": empty key or value");
        config_set(c, key, value);
    }
    return c;
}

inline RunConfig load_config_string(const std::string& text) {
    std::istringstream in(text);
    return load_config(in);
}

/**
 * Emits every key in a fixed order with round-trip precision; re-parsing the
 * echo reproduces the identical run. Used verbatim (with a `# ` prefix) as
 * the provenance header of every output artifact.
 */
inline void write_config_echo(std::ostream& os, const RunConfig& c,
                              const std::string& prefix = "") {
    using detail::format_full;
    auto kv = [&](const char* key, const std::string& v) {
        os << prefix << key << " = " << v << "\n";
    };
    auto rot = [&](const char* key, bool opt, double deg) {
        kv(key, opt ? "opt" : format_full(deg));
    };
    kv("h_t", format_full(c.scene.h_t));
    kv("h_r", format_full(c.scene.h_r));
    kv("R", format_full(c.scene.R));
    kv("l", format_full(c.scene.l));
    kv("r", format_full(c.scene.r));
    kv("h", format_full(c.scene.h));
    kv("h_min", format_full(c.scene.h_min));
    kv("h_max", format_full(c.scene.h_max));
    kv("q_t", format_full(c.pattern.q_t));
    kv("q_r", format_full(c.pattern.q_r));
    kv("q_u", format_full(c.pattern.q_u));
    rot("theta_t0_deg", c.theta_t0_opt, c.theta_t0_deg);
    rot("theta_r0_deg", c.theta_r0_opt, c.theta_r0_deg);
    rot("theta_0_deg", c.theta_0_opt, c.theta_0_deg);
    kv("directivity_mode",
       c.pattern.directivity_mode == DirectivityMode::paper ? "paper" : "physical");
    kv("k1", std::isinf(c.rician.k1) ? "inf" : format_full(c.rician.k1));
    kv("k2", std::isinf(c.rician.k2) ? "inf" : format_full(c.rician.k2));
    kv("p_t_dbm", format_full(c.budget.p_t_dbm));
    kv("noise_density_dbm_hz", format_full(c.budget.noise_density_dbm_hz));
    kv("bandwidth_hz", format_full(c.budget.bandwidth_hz));
    kv("rho0_db", format_full(c.budget.rho0_db));
    kv("n_units", std::to_string(c.budget.n_units));
    kv("wavelength_m", format_full(c.budget.wavelength_m));
    kv("reflect_amp", format_full(c.budget.reflect_amp));
    // `threads` is deliberately absent: results are worker-count-invariant,
    // so artifacts generated with different thread counts must stay
    // byte-identical.
    kv("trials", std::to_string(c.trials));
    kv("seed", std::to_string(c.seed));
    kv("delta_r_m", format_full(c.delta_r_m));
    kv("delta_h_m", format_full(c.delta_h_m));
    kv("gamma_th_db",
       std::isinf(c.gamma_th_db) && c.gamma_th_db < 0 ? "-inf" : format_full(c.gamma_th_db));
}

} // namespace risplan

#endif // RISPLAN_CONFIG_HPP
