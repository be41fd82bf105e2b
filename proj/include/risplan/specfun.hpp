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

#ifndef RISPLAN_SPECFUN_HPP
#define RISPLAN_SPECFUN_HPP

#include "risplan/geometry.hpp" // pi

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace risplan {

/**
 * Rician K factors of the two hops, linear scale. +infinity is the
 * distinguished pure-LOS sentinel; the K -> infinity limits are taken as
 * exact branches, never as large-float approximations.
 */
struct RicianSpec {
    double k1 = 5.0; ///< Tx-Ant -> RIS Rician factor
    double k2 = 5.0; ///< RIS -> Rx-Ant Rician factor

    static constexpr double pure_los() { return std::numeric_limits<double>::infinity(); }

    void validate() const {
        if (std::isnan(k1) || std::isnan(k2) || k1 < 0.0 || k2 < 0.0)
            throw std::invalid_argument("rician: K factors must be >= 0 or infinite");
    }
};

namespace detail {

// Relative truncation tolerance of the power series below. Denominators grow
// like (j!)^2, so convergence is fast for any fixed argument; the term cap
// guards pathological inputs.
inline constexpr double series_tol = 1e-14;
inline constexpr int series_max_terms = 500;

inline void require_nonneg_finite(double x, const char* who) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error(std::string(who) + ": argument must be finite and >= 0");
}

// Sums a positive-term series with terms t_{j+1} = t_j * ratio(j), returning
// log(sum). The running sum is rescaled whenever it grows large, so no
// intermediate overflows regardless of how big the true sum is.
template <typename RatioFn>
inline double log_series_sum(RatioFn ratio, long max_terms) {
    double sum = 1.0;   // j = 0 term
    double term = 1.0;
    double log_scale = 0.0;
    constexpr double rescale_at = 1e280;
    for (long j = 0; j < max_terms; ++j) {
        term *= ratio(j);
        sum += term;
        if (term < series_tol * sum)
            break;
        if (sum > rescale_at) {
            sum /= rescale_at;
            term /= rescale_at;
            log_scale += std::log(rescale_at);
        }
    }
    return std::log(sum) + log_scale;
}

} // namespace detail

/**
 * Kummer confluent hypergeometric function 1F1(3/2; 1; k) for k >= 0,
 * summed as sum_j (3/2)_j k^j / (j!)^2. All terms are positive, so no
 * cancellation occurs; the Kummer transformation is deliberately not used
 * (b - a = -1/2 would give an alternating series).
 *
 * Grows like e^k sqrt(k); use log_kummer_3half_1 for k beyond ~700.
 */
inline double kummer_3half_1(double k) {
    detail::require_nonneg_finite(k, "kummer_3half_1");
    double sum = 1.0;
    double term = 1.0;
    for (int j = 0; j < detail::series_max_terms; ++j) {
        term *= (1.5 + j) * k / ((j + 1.0) * (j + 1.0));
        sum += term;
        if (term < detail::series_tol * sum)
            break;
    }
    return sum;
}

/// log of 1F1(3/2; 1; k), overflow-safe for k up to at least 1e6. The term
/// peak sits near j ~ k, so the iteration budget scales with the argument.
inline double log_kummer_3half_1(double k) {
    detail::require_nonneg_finite(k, "log_kummer_3half_1");
    if (k == 0.0)
        return 0.0;
    const long max_terms =
        std::max<long>(detail::series_max_terms, static_cast<long>(3.0 * k) + 100);
    return detail::log_series_sum(
        [k](long j) { return (1.5 + j) * k / ((j + 1.0) * (j + 1.0)); }, max_terms);
}

/// Modified Bessel function of the first kind, order zero:
/// I0(x) = sum_j (x/2)^{2j} / (j!)^2, x >= 0.
inline double bessel_i0(double x) {
    detail::require_nonneg_finite(x, "bessel_i0");
    const double q = 0.25 * x * x;
    double sum = 1.0;
    double term = 1.0;
    for (int j = 0; j < detail::series_max_terms; ++j) {
        term *= q / ((j + 1.0) * (j + 1.0));
        sum += term;
        if (term < detail::series_tol * sum)
            break;
    }
    return sum;
}

/// log I0(x), overflow-safe companion of bessel_i0.
inline double log_bessel_i0(double x) {
    detail::require_nonneg_finite(x, "log_bessel_i0");
    if (x == 0.0)
        return 0.0;
    const double q = 0.25 * x * x;
    const long max_terms =
        std::max<long>(detail::series_max_terms, static_cast<long>(x) + 100);
    return detail::log_series_sum(
        [q](long j) { return q / ((j + 1.0) * (j + 1.0)); }, max_terms);
}

/**
 * omega(k) = pi 1F1^2(3/2; 1; k) / (4 (1+k) e^{2k}).
 *
 * Nondecreasing from pi/4 at k = 0 to 1 as k -> infinity; evaluated in the
 * log domain so that nothing overflows for any representable k. The
 * pure-LOS sentinel maps to exactly 1.
 */
inline double omega(double k) {
    if (std::isnan(k) || k < 0.0)
        throw std::domain_error("omega: argument must be >= 0 or infinite");
    if (std::isinf(k))
        return 1.0;
    if (k == 0.0)
        return pi / 4.0;
    const double log_f1 = log_kummer_3half_1(k);
    return std::exp(std::log(pi / 4.0) + 2.0 * log_f1 - 2.0 * k - std::log1p(k));
}

/// Cross-term coefficient of the expected SNR: gamma = omega(K1) omega(K2),
/// ranging from pi^2/16 (double-Rayleigh) to 1 (double-LOS).
inline double gamma_factor(const RicianSpec& spec) {
    spec.validate();
    return omega(spec.k1) * omega(spec.k2);
}

} // namespace risplan

#endif // RISPLAN_SPECFUN_HPP
