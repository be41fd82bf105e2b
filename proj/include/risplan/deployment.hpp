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

#ifndef RISPLAN_DEPLOYMENT_HPP
#define RISPLAN_DEPLOYMENT_HPP

#include "risplan/fading.hpp"
#include "risplan/geometry.hpp"
#include "risplan/radiometrics.hpp"
#include "risplan/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace risplan {

/// Scan resolution of the placement algorithms, meters.
struct GridSpec {
    double delta_r_m = 1.0;
    double delta_h_m = 1.0;

    void validate() const {
        if (!(delta_r_m > 0.0) || !(delta_h_m > 0.0))
            throw std::domain_error("grid: steps must be positive");
    }
};

struct DeploymentResult {
    double r_opt_m = 0.0;
    double h_opt_m = 0.0;
    double mirror_r_opt_m = 0.0;   ///< = R - r_opt (the CCG is symmetric about R/2)
    double theta0_opt_rad = 0.0;   ///< optimal RIS rotation at the optimum
    double ccg_opt = 0.0;          ///< linear composite gain at the optimum
    double capacity_opt_bpshz = 0.0;
};

struct RegionCell {
    double r_m = 0.0;
    double h_m = 0.0;
    double theta0_opt_rad = 0.0;
    double ccg = 0.0;          ///< linear, RIS rotated optimally
    double expected_snr = 0.0; ///< linear
    double capacity_bpshz = 0.0;
    bool effective = false;
};

/// Placement map: cells ordered by altitude row, then by r within the row.
struct RegionMap {
    double gamma_th_db = 45.0;
    GridSpec grid;
    std::vector<RegionCell> cells;
};

/// Optimal RIS rotation for a known angle set: (alpha - beta) / 2, always
/// inside the admissible interval.
inline double optimal_ris_rotation(const AngleSet& a) {
    return 0.5 * (a.alpha - a.beta);
}

/// Location-dependent optimal RIS rotation (terminal heights and the l
/// offset neglected):
/// [arccos(h / sqrt(r^2 + h^2)) - arccos(h / sqrt((R-r)^2 + h^2))] / 2.
inline double optimal_ris_rotation_at(double r, double h, double R) {
    if (!(h > 0.0))
        throw std::domain_error("optimal_ris_rotation_at: h must be positive");
    const double a = std::acos(h / std::sqrt(r * r + h * h));
    const double b = std::acos(h / std::sqrt((R - r) * (R - r) + h * h));
    return 0.5 * (a - b);
}

/**
 * Exact location-dependent CCG with optimal rotations everywhere
 * (antennas aimed at the RIS, RIS rotated by (alpha - beta)/2), including
 * terminal heights and the l offset:
 *
 *   pref / (A B) * [1 + ((h-h_t)(h-h_r) - sqrt((r^2+l^2)((R-r)^2+l^2)))
 *                       / sqrt(A B)]^{q_u} / 2^{q_u},
 *   A = r^2 + l^2 + (h-h_t)^2,  B = (R-r)^2 + l^2 + (h-h_r)^2.
 */
inline double ccg_location_exact(double l, double r, double h, double h_t, double h_r,
                                 double R, const PatternConfig& pat, double rho0) {
    const double a = r * r + l * l + (h - h_t) * (h - h_t);
    const double b = (R - r) * (R - r) + l * l + (h - h_r) * (h - h_r);
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ccg_location_exact: degenerate scene");
    const double cross =
        std::sqrt((r * r + l * l) * ((R - r) * (R - r) + l * l));
    const double bracket = 1.0 + ((h - h_t) * (h - h_r) - cross) / std::sqrt(a * b);
    const double pref = rho0 * rho0 *
                        directivity_factor(pat.q_t, pat.q_r, pat.q_u, pat.directivity_mode);
    return pref / (a * b) * std::pow(bracket, pat.q_u) / std::pow(2.0, pat.q_u);
}

/**
 * The placement objective of Algorithms 1 and 2: the l = 0, zero-height
 * approximation of ccg_location_exact,
 *
 *   pref / (2^{q_u} A B) * [1 + (r^2 - R r + h^2) / sqrt(A B)]^{q_u},
 *   A = r^2 + h^2,  B = (R-r)^2 + h^2.
 *
 * The bracket equals 1 + cos(alpha + beta) and stays strictly positive for
 * every r in [0, R] and h > 0.
 */
inline double ccg_location_approx(double r, double h, double R, const PatternConfig& pat,
                                  double rho0) {
    if (!(h > 0.0))
        throw std::domain_error("ccg_location_approx: h must be positive");
    const double a = r * r + h * h;
    const double b = (R - r) * (R - r) + h * h;
    const double bracket = 1.0 + (r * r - R * r + h * h) / std::sqrt(a * b);
    const double pref = rho0 * rho0 *
                        directivity_factor(pat.q_t, pat.q_r, pat.q_u, pat.directivity_mode);
    return pref / (a * b) * std::pow(bracket, pat.q_u) / std::pow(2.0, pat.q_u);
}

struct MuNu {
    double mu; ///< angular factor [1 + cos(alpha + beta)]^{q_u}
    double nu; ///< path-loss factor 1 / ((r^2 + h^2)((R-r)^2 + h^2))
};

/// The mu/nu decomposition of ccg_location_approx:
/// ccg = pref * mu * nu / 2^{q_u}. mu rises with h while nu falls, which is
/// why the altitude optimum needs a scan.
inline MuNu mu_nu(double r, double h, double R, double q_u) {
    if (!(h > 0.0))
        throw std::domain_error("mu_nu: h must be positive");
    const double a = r * r + h * h;
    const double b = (R - r) * (R - r) + h * h;
    const double bracket = 1.0 + (r * r - R * r + h * h) / std::sqrt(a * b);
    return {std::pow(bracket, q_u), 1.0 / (a * b)};
}

namespace detail {

// Count-based axis grid: value(i) = origin + i * step while <= limit. The
// one-millionth-step slack keeps limits that are exact multiples included
// despite division rounding.
inline long grid_count(double origin, double limit, double step) {
    if (limit < origin)
        return 0;
    const double span = (limit - origin) / step;
    return static_cast<long>(std::floor(span + 1e-6)) + 1;
}

// Largest admissible r of the Algorithm 1/2 half-row scan at altitude h:
// (R - sqrt(R^2 - 4h^2)) / 2 when that discriminant is positive (the CCG is
// monotone decreasing beyond it, up to R/2), else R/2.
inline double scan_r_limit(double R, double h, double* r1_out = nullptr) {
    const double disc = R * R - 4.0 * h * h;
    if (disc > 0.0) {
        const double r1 = 0.5 * (R - std::sqrt(disc));
        if (r1_out)
            *r1_out = r1;
        return r1;
    }
    if (r1_out)
        *r1_out = -1.0;
    return 0.5 * R;
}

} // namespace detail

/**
 * Optimal RIS placement over r in [0, R], h in [h_min, h_max]
 * (exhaustive grid scan, objective ccg_location_approx). For altitudes with
 * R^2 > 4 h^2 the r scan is cut at (R - sqrt(R^2 - 4h^2)) / 2: past that
 * point the objective only decreases until R/2, and the surface is
 * symmetric about R/2. Ties break toward the smallest r, then smallest h.
 */
inline DeploymentResult optimize_location(double R, double h_min, double h_max,
                                          const GridSpec& grid, const PatternConfig& pat,
                                          const RicianSpec& spec, const LinkBudget& budget) {
    grid.validate();
    pat.validate();
    spec.validate();
    budget.validate();
    if (!(R > 0.0) || !(h_min > 0.0) || !(h_min <= h_max))
        throw std::domain_error("optimize_location: need R > 0 and 0 < h_min <= h_max");
    const long nh = detail::grid_count(h_min, h_max, grid.delta_h_m);
    if (nh <= 0)
        throw std::domain_error("optimize_location: empty altitude grid");

    const double rho0 = budget.rho0_linear();
    double best = -1.0, best_r = 0.0, best_h = 0.0;
    for (long ih = 0; ih < nh; ++ih) {
        const double h = h_min + static_cast<double>(ih) * grid.delta_h_m;
        const double r_limit = detail::scan_r_limit(R, h);
        const long nr = detail::grid_count(0.0, r_limit, grid.delta_r_m);
        for (long ir = 0; ir < nr; ++ir) {
            const double r = static_cast<double>(ir) * grid.delta_r_m;
            const double v = ccg_location_approx(r, h, R, pat, rho0);
            const bool better =
                v > best ||
                (v == best && (r < best_r || (r == best_r && h < best_h)));
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

namespace detail {

// Per-altitude boundary state on [r1, R/2]: the CCG is strictly decreasing
// there, so a feasible/infeasible bracket of width <= stop_width locates the
// threshold crossing.
struct RowBoundary {
    bool has_bisection = false; // disc > 0 and the crossing lies inside (r1, R/2)
    bool all_effective = false; // disc > 0 and even R/2 clears the threshold
    double r1 = -1.0;           // < 0: low-discriminant row, test every cell directly
    double lo = 0.0;            // ccg(lo) >= threshold
    double hi = 0.0;            // ccg(hi) <  threshold
};

inline RowBoundary locate_row_boundary(double R, double h, double ccg_thresh,
                                       const PatternConfig& pat, double rho0,
                                       double stop_width) {
    RowBoundary rb;
    double r1 = -1.0;
    scan_r_limit(R, h, &r1);
    rb.r1 = r1;
    if (r1 < 0.0)
        return rb; // low-discriminant row: exhaustive handling only
    if (!(ccg_location_approx(r1, h, R, pat, rho0) >= ccg_thresh))
        return rb; // nothing beyond r1 can clear the threshold
    if (ccg_location_approx(0.5 * R, h, R, pat, rho0) >= ccg_thresh) {
        rb.all_effective = true;
        return rb;
    }
    double lo = r1, hi = 0.5 * R;
    while (hi - lo > stop_width) {
        const double mid = 0.5 * (lo + hi);
        if (ccg_location_approx(mid, h, R, pat, rho0) >= ccg_thresh)
            lo = mid;
        else
            hi = mid;
    }
    rb.has_bisection = true;
    rb.lo = lo;
    rb.hi = hi;
    return rb;
}

// Classification of a half-row coordinate rr in [0, R/2] against the row
// boundary. Direct tests compare the cell's own emitted CCG, and cells
// inside the final bracket are always tested directly, so every marked cell
// survives a direct threshold recheck.
inline bool classify_half(double rr, double cell_ccg, double ccg_thresh,
                          const RowBoundary& rb) {
    if (rb.r1 < 0.0 || rr <= rb.r1)
        return cell_ccg >= ccg_thresh;
    if (rb.all_effective)
        return true;
    if (!rb.has_bisection)
        return false;
    if (rr <= rb.lo)
        return true;
    if (rr >= rb.hi)
        return false;
    return cell_ccg >= ccg_thresh;
}

} // namespace detail

/**
 * Effective-region map: cells whose expected SNR under optimal rotations
 * meets the threshold gamma_th, i.e.
 *
 *   ccg(r, h) >= N_0 gamma_th / (N P_t T^2 [1 + (N-1) gamma]).
 *
 * Rows scan r in [0, R/2] exhaustively up to r1 = (R - sqrt(R^2-4h^2))/2 and
 * locate the boundary on [r1, R/2] by bisection down to a 0.01 m bracket
 * (the CCG is strictly decreasing there); the right half mirrors about R/2.
 */
inline RegionMap effective_region(double R, double h_min, double h_max,
                                  const GridSpec& grid, double gamma_th_db,
                                  const PatternConfig& pat, const RicianSpec& spec,
                                  const LinkBudget& budget) {
    grid.validate();
    pat.validate();
    spec.validate();
    budget.validate();
    if (std::isnan(gamma_th_db))
        throw std::domain_error("effective_region: gamma_th must not be NaN");
    if (!(R > 0.0) || !(h_min > 0.0) || !(h_min <= h_max))
        throw std::domain_error("effective_region: need R > 0 and 0 < h_min <= h_max");

    constexpr double bisect_stop_m = 0.01;
    const double rho0 = budget.rho0_linear();
    const double gamma_th = std::pow(10.0, gamma_th_db / 10.0);
    const double n = static_cast<double>(budget.n_units);
    const double t = budget.reflect_amp;
    const double snr_per_ccg = t * t * budget.tx_over_noise() * n *
                               (1.0 + (n - 1.0) * gamma_factor(spec));
    const double ccg_thresh = gamma_th / snr_per_ccg;

    RegionMap map;
    map.gamma_th_db = gamma_th_db;
    map.grid = grid;
    const long nh = detail::grid_count(h_min, h_max, grid.delta_h_m);
    const long nr = detail::grid_count(0.0, R, grid.delta_r_m);
    map.cells.reserve(static_cast<std::size_t>(nh * nr));

    for (long ih = 0; ih < nh; ++ih) {
        const double h = h_min + static_cast<double>(ih) * grid.delta_h_m;
        const detail::RowBoundary rb =
            detail::locate_row_boundary(R, h, ccg_thresh, pat, rho0, bisect_stop_m);
        for (long ir = 0; ir < nr; ++ir) {
            const double r = static_cast<double>(ir) * grid.delta_r_m;
            const double half_r = r <= 0.5 * R ? r : R - r;
            RegionCell cell;
            cell.r_m = r;
            cell.h_m = h;
            cell.theta0_opt_rad = optimal_ris_rotation_at(r, h, R);
            cell.ccg = ccg_location_approx(r, h, R, pat, rho0);
            cell.expected_snr = expected_snr(cell.ccg, spec, budget);
            cell.capacity_bpshz = std::log2(1.0 + cell.expected_snr);
            cell.effective = detail::classify_half(half_r, cell.ccg, ccg_thresh, rb);
            map.cells.push_back(cell);
        }
    }
    return map;
}

} // namespace risplan

#endif // RISPLAN_DEPLOYMENT_HPP
