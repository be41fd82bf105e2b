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

#ifndef RISPLAN_RNG_HPP
#define RISPLAN_RNG_HPP

#include "risplan/geometry.hpp" // pi

#include <cmath>
#include <cstdint>

namespace risplan {

/// SplitMix64 finalizer: a strong 64 -> 64 bit mixer.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct NormalPair {
    double z0;
    double z1;
};

/**
 * Counter-based random stream: every draw is a pure function of
 * (seed, stream, counter), so Monte Carlo loops keyed on (seed, trial,
 * unit) produce the same numbers for any execution order or worker count.
 */
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(splitmix64(splitmix64(seed) ^ stream)) {}

    std::uint64_t word(std::uint64_t counter) const {
        return splitmix64(base_ + counter * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform draw in the open interval (0, 1); never 0, so log() is safe.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    /// Independent standard normal pair via Box-Muller, consuming the
    /// counter slots (2n, 2n+1).
    NormalPair normal_pair(std::uint64_t n) const {
        const double u1 = uniform(2 * n);
        const double u2 = uniform(2 * n + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        return {rad * std::cos(2.0 * pi * u2), rad * std::sin(2.0 * pi * u2)};
    }

  private:
    std::uint64_t base_;
};

} // namespace risplan

#endif // RISPLAN_RNG_HPP
