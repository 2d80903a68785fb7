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

#include "fbsdet/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fbsdet/units.hpp"

namespace fbsdet {

ChannelDraw draw_channel(const Scene& scene, std::uint64_t seed) {
    scene.validate();
    const double shadow_std = std::sqrt(scene.sigma_psi_sq);
    ChannelDraw draw;
    draw.seed = seed;
    draw.links.resize(scene.num_stations());
    for (std::size_t s = 0; s < scene.num_stations(); ++s) {
        draw.links[s].resize(scene.num_bs());
        for (std::size_t b = 0; b < scene.num_bs(); ++b) {
            Rng rng(mix_seed(mix_seed(seed, s), b));
            LinkDraw& link = draw.links[s][b];
            link.shadowing_db = shadow_std * rng.normal();
            link.small_scale.resize(scene.slots);
            for (int l = 0; l < scene.slots; ++l)
                link.small_scale[l] = rng.complex_normal(scene.sigma_h_sq);
        }
    }
    return draw;
}

SsFamily make_ss_family(std::size_t count, std::size_t ss_len) {
    if (ss_len < count)
        throw std::invalid_argument("make_ss_family: ss_len must be >= the sequence count");
    // Rows of the DFT basis: unit-modulus entries give squared norm ss_len,
    // distinct rows are orthogonal.
    SsFamily family(count);
    for (std::size_t m = 0; m < count; ++m) {
        family[m].resize(ss_len);
        for (std::size_t k = 0; k < ss_len; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) *
                                 static_cast<double>(k) / static_cast<double>(ss_len);
            family[m][k] = {std::cos(angle), std::sin(angle)};
        }
    }
    return family;
}

std::vector<std::complex<double>> synthesize_rx_slot(const Scene& scene, const ChannelDraw& draw,
                                                     const SsFamily& ss, int slot, Rng& noise_rng,
                                                     std::size_t station) {
    if (slot < 0 || slot >= scene.slots)
        throw std::out_of_range("synthesize_rx_slot: slot index out of range");
    if (ss.size() != scene.num_bs())
        throw std::invalid_argument("synthesize_rx_slot: SS family size does not match the scene");
    if (station >= draw.links.size())
        throw std::invalid_argument("synthesize_rx_slot: station missing from the channel draw");

    const Point rx = scene.station_position(station);
    std::vector<std::complex<double>> y(scene.ss_len, {0.0, 0.0});
    for (std::size_t b = 0; b < scene.num_bs(); ++b) {
        const LinkDraw& link = draw.link(station, b);
        const double rx_power_mw = from_db(scene.bs_power_dbm(b) + link.shadowing_db) *
                                   std::pow(link_distance(rx, scene.bs_position(b)), -scene.alpha);
        const std::complex<double> amplitude = std::sqrt(rx_power_mw) * link.small_scale[slot];
        for (int k = 0; k < scene.ss_len; ++k) y[k] += amplitude * ss[b][k];
    }
    if (scene.noise_power_mw > 0.0) {
        for (int k = 0; k < scene.ss_len; ++k) y[k] += noise_rng.complex_normal(scene.noise_power_mw);
    }
    return y;
}

}  // namespace fbsdet
