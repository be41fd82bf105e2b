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

#ifndef RISPLAN_GEOMETRY_HPP
#define RISPLAN_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>

namespace risplan {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double deg2rad(double deg) { return deg * (pi / 180.0); }
inline constexpr double rad2deg(double rad) { return rad * (180.0 / pi); }

/**
 * Cartesian scene model. The Tx-Ant sits at the origin, the Rx-Ant on the
 * Y axis at horizontal range R, and the RIS center at (l, r, h):
 * l is the offset from the YOZ plane, r the offset from the XOZ plane,
 * h the altitude. All lengths in meters, all angles in this library in
 * radians (degrees only at file/CLI interfaces).
 */
struct SceneGeometry {
    double h_t = 0.0;     ///< Tx-Ant height
    double h_r = 0.0;     ///< Rx-Ant height
    double R = 1000.0;    ///< horizontal Tx-Rx distance
    double l = 100.0;     ///< RIS offset from the YOZ plane
    double r = 200.0;     ///< RIS offset from the XOZ plane
    double h = 100.0;     ///< RIS altitude
    double h_min = 100.0; ///< lowest admissible RIS altitude
    double h_max = 600.0; ///< highest admissible RIS altitude

    /// Throws std::invalid_argument when any scene invariant is violated.
    void validate() const {
        if (!(R > 0.0))
            throw std::invalid_argument("scene: R must be positive");
        if (!(l >= 0.0))
            throw std::invalid_argument("scene: l must be non-negative");
        if (!(r >= 0.0 && r <= R))
            throw std::invalid_argument("scene: r must lie in [0, R]");
        if (!(h_min <= h_max))
            throw std::invalid_argument("scene: h_min must not exceed h_max");
        if (!(h >= h_min && h <= h_max))
            throw std::invalid_argument("scene: h must lie in [h_min, h_max]");
        if (!(h > h_t && h > h_r))
            throw std::invalid_argument(
                "scene: RIS altitude must exceed both terminal heights");
    }
};

/**
 * Elevation angles of the Tx -> RIS -> Rx layout.
 *
 * alpha and beta are the unsigned off-vertical angles at the RIS (arrival
 * from the Tx-Ant, departure toward the Rx-Ant). theta_t_aod and
 * theta_r_aoa carry the signed single-axis convention used throughout:
 * rotation about the X axis, clockwise (tilting from +Z toward +Y)
 * positive. The RIS lies at y >= 0, so it is seen at +alpha from the
 * Tx-Ant; from the Rx-Ant it lies toward -Y, hence -beta.
 *
 * The azimuth fields are diagnostics only: all supported power patterns
 * are azimuth-symmetric and never consume them.
 */
struct AngleSet {
    double alpha;       ///< elevation AOA at the RIS from the Tx-Ant
    double beta;        ///< elevation AOD from the RIS toward the Rx-Ant
    double theta_t_aod; ///< signed elevation of the RIS seen from the Tx-Ant (= +alpha)
    double theta_r_aoa; ///< signed elevation of the RIS seen from the Rx-Ant (= -beta)
    double phi_t_aod;   ///< azimuth of the RIS seen from the Tx-Ant (diagnostic)
    double phi_r_aoa;   ///< azimuth of the RIS seen from the Rx-Ant (diagnostic)
};

struct LinkDistances {
    double d_tc; ///< Tx-Ant to RIS center
    double d_cr; ///< RIS center to Rx-Ant
};

/// Euclidean distances of the two hops. Throws std::domain_error when the
/// RIS coincides with a terminal.
inline LinkDistances link_distances(const SceneGeometry& s) {
    const double d_tc = std::sqrt(s.r * s.r + s.l * s.l + (s.h - s.h_t) * (s.h - s.h_t));
    const double d_cr = std::sqrt((s.R - s.r) * (s.R - s.r) + s.l * s.l +
                                  (s.h - s.h_r) * (s.h - s.h_r));
    if (!(d_tc > 0.0) || !(d_cr > 0.0))
        throw std::domain_error("link_distances: degenerate scene, zero hop length");
    return {d_tc, d_cr};
}

/// Elevation AOA/AOD set of the scene. Requires h > max(h_t, h_r), which
/// keeps alpha and beta strictly inside (0, pi/2) whenever r, l do not both
/// vanish on a hop.
inline AngleSet elevation_angles(const SceneGeometry& s) {
    if (!(s.h > s.h_t && s.h > s.h_r))
        throw std::domain_error("elevation_angles: RIS must be above both terminals");
    const LinkDistances d = link_distances(s);
    AngleSet a{};
    a.alpha = std::acos((s.h - s.h_t) / d.d_tc);
    a.beta = std::acos((s.h - s.h_r) / d.d_cr);
    a.theta_t_aod = a.alpha;
    a.theta_r_aoa = -a.beta;
    a.phi_t_aod = std::atan2(s.r, s.l);
    a.phi_r_aoa = std::atan2(s.r - s.R, s.l);
    return a;
}

/// True iff theta_0 lies inside the admissible RIS rotation interval
/// (alpha - pi/2, pi/2 - beta): beyond it one hop falls behind the surface.
inline bool rotation_feasible(double theta_0, const AngleSet& a) {
    return theta_0 > a.alpha - pi / 2.0 && theta_0 < pi / 2.0 - a.beta;
}

} // namespace risplan

#endif // RISPLAN_GEOMETRY_HPP
