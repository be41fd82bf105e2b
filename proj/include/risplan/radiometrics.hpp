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

#ifndef RISPLAN_RADIOMETRICS_HPP
#define RISPLAN_RADIOMETRICS_HPP

#include "risplan/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace risplan {

/**
 * How the cos^q directivity exponents enter the link budget.
 *
 * `paper` uses the literal prefactor 10^{0.2 (q_t + q_r + 2 q_u + 4)},
 * i.e. D = 2(q+1) read as a dB quantity per aperture with the RIS counted
 * twice. `physical` uses the linear maximum directivities
 * D_t D_r D_u^2 = 16 (q_t+1)(q_r+1)(q_u+1)^2 instead. The two differ by a
 * constant factor only, so rotation/location optima are identical; `paper`
 * is the default and the mode all reference numbers use.
 */
enum class DirectivityMode { paper, physical };

/// cos^q radiation model parameters and boresight rotations (radians).
struct PatternConfig {
    double q_t = 20.0; ///< Tx-Ant directivity exponent
    double q_r = 20.0; ///< Rx-Ant directivity exponent
    double q_u = 4.0;  ///< RIS-unit directivity exponent
    double theta_t0 = 0.0; ///< Tx-Ant rotation about the X axis
    double theta_r0 = 0.0; ///< Rx-Ant rotation about the X axis
    double theta_0 = 0.0;  ///< RIS plane rotation about the X axis
    DirectivityMode directivity_mode = DirectivityMode::paper;

    void validate() const {
        if (!(q_t >= 0.0 && q_r >= 0.0 && q_u >= 0.0))
            throw std::invalid_argument("pattern: directivity exponents must be >= 0");
        const double lim = pi / 2.0 + 1e-12;
        if (std::abs(theta_t0) > lim || std::abs(theta_r0) > lim || std::abs(theta_0) > lim)
            throw std::invalid_argument("pattern: rotations must lie in [-pi/2, pi/2]");
    }
};

/// Composite channel gain rho_cc = rho_tc * rho_cr and its per-hop factors,
/// all linear and dimensionless.
struct CompositeGain {
    double rho_cc;
    double rho_tc;
    double rho_cr;
};

namespace detail {

// cos(x)^q with an explicit zero outside the support; exp(q log cos) keeps
// large exponents (q = 20) away from pow underflow artifacts.
inline double cos_pow(double x, double q) {
    if (!(std::abs(x) < pi / 2.0))
        return 0.0;
    if (q == 0.0)
        return 1.0;
    return std::exp(q * std::log(std::cos(x)));
}

// Single-hop prefactor: the aperture-gain constant of one path-gain factor.
inline double hop_prefactor(double q_ant, double q_u, DirectivityMode mode) {
    if (mode == DirectivityMode::paper)
        return std::pow(10.0, 0.2 * (q_ant + q_u + 2.0));
    return 2.0 * (q_ant + 1.0) * 2.0 * (q_u + 1.0);
}

} // namespace detail

/**
 * Normalized power pattern of a rotated cos^q radiator: cos^q(theta - rot)
 * when the off-boresight angle lies within [-pi/2, pi/2], zero elsewhere.
 * The support is symmetric in the relative angle because the pattern is
 * azimuth-symmetric.
 */
inline double power_pattern(double theta, double theta_rot, double q) {
    return detail::cos_pow(theta - theta_rot, q);
}

/// Combined aperture-gain constant of the two-hop cascade; see DirectivityMode.
inline double directivity_factor(double q_t, double q_r, double q_u,
                                 DirectivityMode mode = DirectivityMode::paper) {
    if (mode == DirectivityMode::paper)
        return std::pow(10.0, 0.2 * (q_t + q_r + 2.0 * q_u + 4.0));
    return 16.0 * (q_t + 1.0) * (q_r + 1.0) * (q_u + 1.0) * (q_u + 1.0);
}

/**
 * Composite channel gain with arbitrary rotations at the Tx-Ant, Rx-Ant and
 * RIS plane. Any pattern factor whose relative angle leaves [-pi/2, pi/2]
 * contributes zero, so blocked geometries yield a zero (not negative, not
 * NaN) gain. rho0 is the linear reference path gain at 1 m.
 */
inline CompositeGain ccg_general(const SceneGeometry& scene, const PatternConfig& pat,
                                 const AngleSet& ang, double rho0) {
    const LinkDistances d = link_distances(scene);
    const double pref_t = detail::hop_prefactor(pat.q_t, pat.q_u, pat.directivity_mode);
    const double pref_r = detail::hop_prefactor(pat.q_r, pat.q_u, pat.directivity_mode);
    const double rho_tc = rho0 * pref_t / (d.d_tc * d.d_tc) *
                          power_pattern(ang.theta_t_aod, pat.theta_t0, pat.q_t) *
                          detail::cos_pow(ang.alpha - pat.theta_0, pat.q_u);
    const double rho_cr = rho0 * pref_r / (d.d_cr * d.d_cr) *
                          power_pattern(ang.theta_r_aoa, pat.theta_r0, pat.q_r) *
                          detail::cos_pow(ang.beta + pat.theta_0, pat.q_u);
    return {rho_tc * rho_cr, rho_tc, rho_cr};
}

/// CCG with rotations at the antennas only (RIS plane unrotated); the
/// pattern's theta_0 is ignored.
inline CompositeGain ccg_antenna_rotations(const SceneGeometry& scene,
                                           const PatternConfig& pat, const AngleSet& ang,
                                           double rho0) {
    PatternConfig p = pat;
    p.theta_0 = 0.0;
    return ccg_general(scene, p, ang, rho0);
}

/// CCG with both antennas aimed at the RIS center (their pattern factors
/// equal 1) and the RIS plane unrotated.
inline CompositeGain ccg_optimal_antennas(const SceneGeometry& scene,
                                          const PatternConfig& pat, const AngleSet& ang,
                                          double rho0) {
    const LinkDistances d = link_distances(scene);
    const double pref_t = detail::hop_prefactor(pat.q_t, pat.q_u, pat.directivity_mode);
    const double pref_r = detail::hop_prefactor(pat.q_r, pat.q_u, pat.directivity_mode);
    const double rho_tc =
        rho0 * pref_t / (d.d_tc * d.d_tc) * detail::cos_pow(ang.alpha, pat.q_u);
    const double rho_cr =
        rho0 * pref_r / (d.d_cr * d.d_cr) * detail::cos_pow(ang.beta, pat.q_u);
    return {rho_tc * rho_cr, rho_tc, rho_cr};
}

/**
 * CCG with optimally aimed antennas and the RIS plane rotated by theta_0.
 * The cos^{q_u}(alpha - theta_0) cos^{q_u}(beta + theta_0) product vanishes
 * exactly outside the admissible rotation interval, so no separate
 * feasibility clamp is needed.
 */
inline CompositeGain ccg_ris_rotation(const SceneGeometry& scene, const PatternConfig& pat,
                                      const AngleSet& ang, double theta_0, double rho0) {
    const LinkDistances d = link_distances(scene);
    const double pref_t = detail::hop_prefactor(pat.q_t, pat.q_u, pat.directivity_mode);
    const double pref_r = detail::hop_prefactor(pat.q_r, pat.q_u, pat.directivity_mode);
    const double rho_tc =
        rho0 * pref_t / (d.d_tc * d.d_tc) * detail::cos_pow(ang.alpha - theta_0, pat.q_u);
    const double rho_cr =
        rho0 * pref_r / (d.d_cr * d.d_cr) * detail::cos_pow(ang.beta + theta_0, pat.q_u);
    return {rho_tc * rho_cr, rho_tc, rho_cr};
}

/**
 * Location-dependent CCG benchmark with optimally aimed antennas and no RIS
 * rotation, terminal heights neglected:
 *
 *   rho0^2 DF / (A B) * [h^2 / sqrt(A B)]^{q_u},
 *   A = r^2 + l^2 + h^2,  B = (R-r)^2 + l^2 + h^2.
 */
inline CompositeGain ccg_no_rotation_location(const SceneGeometry& scene,
                                              const PatternConfig& pat, double rho0) {
    const double a = scene.r * scene.r + scene.l * scene.l + scene.h * scene.h;
    const double b = (scene.R - scene.r) * (scene.R - scene.r) + scene.l * scene.l +
                     scene.h * scene.h;
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ccg_no_rotation_location: degenerate scene");
    const double pref_t = detail::hop_prefactor(pat.q_t, pat.q_u, pat.directivity_mode);
    const double pref_r = detail::hop_prefactor(pat.q_r, pat.q_u, pat.directivity_mode);
    // per-hop angular factor: cos(angle at the RIS) = h / hop length
    const double rho_tc =
        rho0 * pref_t / a * std::pow(scene.h / std::sqrt(a), pat.q_u);
    const double rho_cr =
        rho0 * pref_r / b * std::pow(scene.h / std::sqrt(b), pat.q_u);
    return {rho_tc * rho_cr, rho_tc, rho_cr};
}

} // namespace risplan

#endif // RISPLAN_RADIOMETRICS_HPP
