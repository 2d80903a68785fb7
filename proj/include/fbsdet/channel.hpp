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

#include <complex>
#include <cstdint>
#include <vector>

#include "fbsdet/rng.hpp"
#include "fbsdet/scene.hpp"

namespace fbsdet {

// One stochastic realization of a station-BS link. Shadowing stays frozen
// over the whole observation window; small-scale gains change per slot.
struct LinkDraw {
    double shadowing_db = 0.0;
    std::vector<std::complex<double>> small_scale;  // one gain per slot
};

struct ChannelDraw {
    std::uint64_t seed = 0;
    std::vector<std::vector<LinkDraw>> links;  // [station][bs]

    const LinkDraw& link(std::size_t station, std::size_t bs) const {
        return links[station][bs];
    }
};

using SsFamily = std::vector<std::vector<std::complex<double>>>;

// Draws shadowing (i.i.d. Gaussian in dB, one value per link) and per-slot
// complex Rayleigh gains for every station-BS link. Each link is keyed by
// (seed, station, bs), so identical seeds reproduce identical draws and
// links are independent of each other's evaluation order.
ChannelDraw draw_channel(const Scene& scene, std::uint64_t seed);

// Deterministic family of mutually orthogonal complex sequences, each with
// squared norm equal to its length.
SsFamily make_ss_family(std::size_t count, std::size_t ss_len);

// Superposition of every BS transmission as received by `station` during one
// slot, plus receiver noise when the scene configures any.
std::vector<std::complex<double>> synthesize_rx_slot(const Scene& scene, const ChannelDraw& draw,
                                                     const SsFamily& ss, int slot, Rng& noise_rng,
                                                     std::size_t station = 0);

}  // namespace fbsdet
