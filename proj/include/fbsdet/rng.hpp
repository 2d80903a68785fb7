// SPDX-License-Identifier: Apache-2.0
//
// fbsdet - link-level simulation and detection library for identifying fake
// base stations during cell selection
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace fbsdet {

// SplitMix64 finalizer.
constexpr std::uint64_t avalanche64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Folds an index into a seed so that trials, links and slots each get their
// own deterministic substream regardless of evaluation order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return avalanche64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Deterministic generator: SplitMix64 core, Box-Muller normals. Cheap to
// construct, so every (trial, link) pair can own a fresh instance.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        return avalanche64(state_ += 0x9e3779b97f4a7c15ULL);
    }

    // Uniform on the open interval (0, 1).
    double uniform01() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal draw.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform01()));
        const double theta = 2.0 * std::numbers::pi * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Circularly-symmetric complex normal with the given average power.
    std::complex<double> complex_normal(double variance) noexcept {
        const double scale = std::sqrt(variance / 2.0);
        const double re = normal();
        const double im = normal();
        return {scale * re, scale * im};
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fbsdet
