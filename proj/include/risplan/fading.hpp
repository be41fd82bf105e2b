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

#ifndef RISPLAN_FADING_HPP
#define RISPLAN_FADING_HPP

#include "risplan/geometry.hpp"
#include "risplan/radiometrics.hpp"
#include "risplan/rng.hpp"
#include "risplan/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace risplan {

/// Link budget; dB/dBm at this boundary, converted to linear once inside.
struct LinkBudget {
    double p_t_dbm = 10.0;              ///< transmit power
    double noise_density_dbm_hz = -174.0;
    double bandwidth_hz = 5e6;
    double rho0_db = -40.0;             ///< reference path gain at 1 m
    int n_units = 64;                   ///< RIS unit count N
    double wavelength_m = 0.125;
    double reflect_amp = 1.0;           ///< per-unit reflection amplitude, (0, 1]

    void validate() const {
        if (n_units < 1)
            throw std::invalid_argument("budget: n_units must be >= 1");
        if (!(reflect_amp > 0.0 && reflect_amp <= 1.0))
            throw std::invalid_argument("budget: reflect_amp must lie in (0, 1]");
        if (!(bandwidth_hz > 0.0))
            throw std::invalid_argument("budget: bandwidth must be positive");
        if (!(wavelength_m > 0.0))
            throw std::invalid_argument("budget: wavelength must be positive");
        if (!std::isfinite(p_t_dbm) || !std::isfinite(noise_density_dbm_hz) ||
            !std::isfinite(rho0_db))
            throw std::invalid_argument("budget: power levels must be finite");
    }

    double noise_power_dbm() const {
        return noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz);
    }
    /// P_t / N_0, linear.
    double tx_over_noise() const {
        return std::pow(10.0, (p_t_dbm - noise_power_dbm()) / 10.0);
    }
    double rho0_linear() const { return std::pow(10.0, rho0_db / 10.0); }
};

/// One fading realization: per-unit channel magnitudes of both hops.
struct ChannelSample {
    std::vector<double> g_mag; ///< |g_n|, Tx-Ant -> unit n
    std::vector<double> z_mag; ///< |z_n|, unit n -> Rx-Ant
};

struct CapacityReport {
    double upper_bound_bpshz = 0.0;
    double mc_mean_bpshz = 0.0;
    double mc_stderr_bpshz = 0.0;
    double expected_snr_db = 0.0;
    long long trials = 0;
};

namespace detail {

// |sqrt(K/(1+K)) e^{j phi} + sqrt(1/(1+K)) CN(0,1)| scaled by sqrt(rho).
// The LOS phase rotates a circularly symmetric term, so it never alters the
// magnitude statistics; it is carried for fidelity of the complex model.
inline double rician_magnitude(double rho, double k, double phi, const CounterRng& rng,
                               std::uint64_t counter) {
    if (std::isinf(k))
        return std::sqrt(rho);
    const double a = std::sqrt(rho * k / (1.0 + k));
    const double b = std::sqrt(rho / (1.0 + k));
    const NormalPair n = rng.normal_pair(counter);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const double re = a * std::cos(phi) + b * n.z0 * inv_sqrt2;
    const double im = a * std::sin(phi) + b * n.z1 * inv_sqrt2;
    return std::hypot(re, im);
}

inline void fill_cascade(std::vector<double>& g, std::vector<double>& z, double rho_tc,
                         double rho_cr, const RicianSpec& spec, int n,
                         std::uint64_t seed, std::uint64_t trial, double phi_g,
                         double phi_z) {
    const CounterRng rng(seed, trial);
    g.resize(static_cast<std::size_t>(n));
    z.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] =
            rician_magnitude(rho_tc, spec.k1, phi_g, rng, static_cast<std::uint64_t>(i));
        z[static_cast<std::size_t>(i)] = rician_magnitude(
            rho_cr, spec.k2, phi_z, rng, static_cast<std::uint64_t>(n + i));
    }
}

} // namespace detail

/**
 * Draws one cascade fading realization of n RIS units under the far-field
 * assumption (every unit shares the center's path gains). Deterministic:
 * the same (seed, trial) always yields the same sample. The deterministic
 * LOS phases are -2 pi d / lambda per hop.
 */
inline ChannelSample sample_cascade(double rho_tc, double rho_cr, const RicianSpec& spec,
                                    int n, std::uint64_t seed, std::uint64_t trial = 0,
                                    double d_tc = 0.0, double d_cr = 0.0,
                                    double wavelength_m = 1.0) {
    spec.validate();
    if (n < 1)
        throw std::invalid_argument("sample_cascade: unit count must be >= 1");
    if (!(rho_tc >= 0.0) || !(rho_cr >= 0.0))
        throw std::domain_error("sample_cascade: path gains must be >= 0");
    if (!(wavelength_m > 0.0))
        throw std::domain_error("sample_cascade: wavelength must be positive");
    ChannelSample s;
    detail::fill_cascade(s.g_mag, s.z_mag, rho_tc, rho_cr, spec, n, seed, trial,
                         -2.0 * pi * d_tc / wavelength_m, -2.0 * pi * d_cr / wavelength_m);
    return s;
}

/// Instantaneous SNR with phase-aligned RIS units:
/// T^2 (P_t/N_0) (sum_n |g_n| |z_n|)^2.
inline double instantaneous_snr(const ChannelSample& s, const LinkBudget& budget) {
    if (s.g_mag.size() != s.z_mag.size())
        throw std::invalid_argument("instantaneous_snr: hop sample sizes differ");
    double amp = 0.0;
    for (std::size_t i = 0; i < s.g_mag.size(); ++i)
        amp += s.g_mag[i] * s.z_mag[i];
    const double t = budget.reflect_amp;
    return t * t * budget.tx_over_noise() * amp * amp;
}

/// Closed-form expected SNR:
/// T^2 (P_t/N_0) rho_cc N [1 + (N-1) gamma], gamma = omega(K1) omega(K2).
inline double expected_snr(double rho_cc, const RicianSpec& spec, const LinkBudget& budget) {
    if (!(rho_cc >= 0.0))
        throw std::domain_error("expected_snr: rho_cc must be >= 0");
    const double n = static_cast<double>(budget.n_units);
    const double t = budget.reflect_amp;
    return t * t * budget.tx_over_noise() * rho_cc * n *
           (1.0 + (n - 1.0) * gamma_factor(spec));
}

/// Jensen upper bound of the ergodic capacity: log2(1 + E{SNR}), bit/s/Hz.
inline double capacity_upper_bound(double rho_cc, const RicianSpec& spec,
                                   const LinkBudget& budget) {
    return std::log2(1.0 + expected_snr(rho_cc, spec, budget));
}

namespace detail {

// Fixed-size trial blocks make the reduction order independent of the
// worker count: each block's partial sums are combined sequentially by
// block index afterwards.
inline constexpr long long mc_block = 4096;

struct McAccum {
    double sum = 0.0;
    double sum_sq = 0.0;
};

} // namespace detail

/**
 * Monte Carlo estimate of the ergodic capacity E{log2(1 + SNR)} together
 * with the closed-form bound at the same composite gain. Output is a pure
 * function of (inputs, seed): bit-identical across runs and thread counts.
 */
inline CapacityReport mc_ergodic_capacity(const SceneGeometry& scene,
                                          const PatternConfig& pat, const RicianSpec& spec,
                                          const LinkBudget& budget, long long trials,
                                          std::uint64_t seed, int threads = 1) {
    scene.validate();
    pat.validate();
    spec.validate();
    budget.validate();
    if (trials < 1)
        throw std::invalid_argument("mc_ergodic_capacity: trials must be >= 1");
    if (threads < 1)
        threads = 1;

    const AngleSet ang = elevation_angles(scene);
    const LinkDistances d = link_distances(scene);
    const CompositeGain g = ccg_general(scene, pat, ang, budget.rho0_linear());
    const double phi_g = -2.0 * pi * d.d_tc / budget.wavelength_m;
    const double phi_z = -2.0 * pi * d.d_cr / budget.wavelength_m;
    const double snr_scale = budget.reflect_amp * budget.reflect_amp * budget.tx_over_noise();
    const int n = budget.n_units;

    const long long n_blocks = (trials + detail::mc_block - 1) / detail::mc_block;
    std::vector<detail::McAccum> blocks(static_cast<std::size_t>(n_blocks));
    std::atomic<long long> next_block{0};

    auto worker = [&]() {
        std::vector<double> gm, zm;
        for (;;) {
            const long long blk = next_block.fetch_add(1);
            if (blk >= n_blocks)
                return;
            const long long first = blk * detail::mc_block;
            const long long last = std::min(trials, first + detail::mc_block);
            detail::McAccum acc;
            for (long long t = first; t < last; ++t) {
                detail::fill_cascade(gm, zm, g.rho_tc, g.rho_cr, spec, n, seed,
                                     static_cast<std::uint64_t>(t), phi_g, phi_z);
                double amp = 0.0;
                for (int i = 0; i < n; ++i)
                    amp += gm[static_cast<std::size_t>(i)] * zm[static_cast<std::size_t>(i)];
                const double c = std::log2(1.0 + snr_scale * amp * amp);
                acc.sum += c;
                acc.sum_sq += c * c;
            }
            blocks[static_cast<std::size_t>(blk)] = acc;
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    const double nt = static_cast<double>(trials);
    const double mean = sum / nt;
    double var = 0.0;
    if (trials > 1) {
        var = (sum_sq - sum * sum / nt) / (nt - 1.0);
        if (!(var > 0.0))
            var = 0.0;
    }

    CapacityReport rep;
    rep.upper_bound_bpshz = capacity_upper_bound(g.rho_cc, spec, budget);
    rep.mc_mean_bpshz = mean;
    rep.mc_stderr_bpshz = std::sqrt(var / nt);
    rep.expected_snr_db = 10.0 * std::log10(expected_snr(g.rho_cc, spec, budget));
    rep.trials = trials;
    return rep;
}

struct AbsMoments {
    double mean;
    double mean_square;
};

/**
 * Closed-form moments of X = |a u + b v| with |u| = 1, v ~ CN(0,1) and
 * noncentrality lambda = (a/b)^2:
 *
 *   E{X}   = (b sqrt(pi) / 2) e^{-lambda} 1F1(3/2; 1; lambda),
 *   E{X^2} = b^2 (lambda + 1).
 *
 * The a weight is carried for the parameterization only; both moments are
 * functions of (b, lambda).
 */
inline AbsMoments moment_abs(double a_los_weight, double b_nlos_weight, double lambda_nc) {
    (void)a_los_weight;
    if (!(b_nlos_weight > 0.0))
        throw std::domain_error("moment_abs: b must be positive");
    if (!(lambda_nc >= 0.0))
        throw std::domain_error("moment_abs: lambda must be >= 0");
    const double half_sqrt_pi = 0.88622692545275801365; // sqrt(pi)/2
    double mean;
    if (lambda_nc > 30.0)
        mean = b_nlos_weight * half_sqrt_pi *
               std::exp(log_kummer_3half_1(lambda_nc) - lambda_nc);
    else
        mean = b_nlos_weight * half_sqrt_pi * std::exp(-lambda_nc) *
               kummer_3half_1(lambda_nc);
    return {mean, b_nlos_weight * b_nlos_weight * (lambda_nc + 1.0)};
}

/// Density of X above: f(x) = (2 x / b^2) e^{-x^2/b^2 - lambda} I0(2 sqrt(lambda) x / b).
inline double pdf_abs(double x, double b, double lambda_nc) {
    if (!(x >= 0.0))
        throw std::domain_error("pdf_abs: x must be >= 0");
    if (!(b > 0.0) || !(lambda_nc >= 0.0))
        throw std::domain_error("pdf_abs: invalid parameters");
    if (x == 0.0)
        return 0.0;
    const double arg = 2.0 * std::sqrt(lambda_nc) * x / b;
    const double log_env = -x * x / (b * b) - lambda_nc + log_bessel_i0(arg);
    return 2.0 * x / (b * b) * std::exp(log_env);
}

} // namespace risplan

#endif // RISPLAN_FADING_HPP
