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

#include "fbsdet/arsss.hpp"

#include <stdexcept>

#include "fbsdet/units.hpp"

namespace fbsdet {

namespace {

constexpr std::uint64_t kNoiseStreamTag = 0x6e6f697365ULL;

// Per-draw link mean in dB: transmit power, frozen shadowing, path loss.
double draw_link_mean_db(const Scene& scene, const ChannelDraw& draw, std::size_t station,
                         std::size_t bs) {
    const double dist = link_distance(scene.station_position(station), scene.bs_position(bs));
    return scene.bs_power_dbm(bs) + draw.link(station, bs).shadowing_db - scene.alpha * to_db(dist);
}

}  // namespace

double matched_filter_power(std::span<const std::complex<double>> y,
                            std::span<const std::complex<double>> z) {
    if (y.size() != z.size())
        throw std::invalid_argument("matched_filter_power: sequence lengths differ");
    if (y.empty())
        throw std::invalid_argument("matched_filter_power: empty sequences");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < y.size(); ++k) acc += y[k] * std::conj(z[k]);
    const double tau = static_cast<double>(y.size());
    return std::norm(acc) / (tau * tau);
}

double arsss_from_powers(std::span<const double> powers_mw) {
    if (powers_mw.empty())
        throw std::invalid_argument("arsss_from_powers: no slot powers");
    double sum_db = 0.0;
    for (double p : powers_mw) {
        if (!(p > 0.0))
            throw std::domain_error("arsss_from_powers: nonpositive slot power");
        sum_db += to_db(p);
    }
    return sum_db / static_cast<double>(powers_mw.size());
}

double arsss_fast(double u_draw_db, std::span<const std::complex<double>> small_scale) {
    if (small_scale.empty())
        throw std::invalid_argument("arsss_fast: no small-scale gains");
    double sum_db = 0.0;
    for (const auto& h : small_scale) {
        const double power = std::norm(h);
        if (!(power > 0.0))
            throw std::domain_error("arsss_fast: zero-magnitude gain");
        sum_db += to_db(power);
    }
    return u_draw_db + sum_db / static_cast<double>(small_scale.size());
}

ArsssObservation observe(const Scene& scene, const ChannelDraw& draw, ObserveMode mode) {
    scene.validate();
    if (draw.links.size() != scene.num_stations() ||
        (scene.num_stations() > 0 && draw.links[0].size() != scene.num_bs()))
        throw std::invalid_argument("observe: channel draw does not match the scene");

    const std::size_t nbs = scene.num_bs();
    SsFamily ss;
    if (mode == ObserveMode::signal) ss = make_ss_family(nbs, scene.ss_len);

    auto station_values = [&](std::size_t station) {
        std::vector<double> values(nbs);
        if (mode == ObserveMode::fast) {
            for (std::size_t b = 0; b < nbs; ++b)
                values[b] = arsss_fast(draw_link_mean_db(scene, draw, station, b),
                                       draw.link(station, b).small_scale);
            return values;
        }
        Rng noise_rng(mix_seed(mix_seed(draw.seed, kNoiseStreamTag), station));
        std::vector<std::vector<double>> powers(nbs, std::vector<double>(scene.slots));
        for (int l = 0; l < scene.slots; ++l) {
            const auto y = synthesize_rx_slot(scene, draw, ss, l, noise_rng, station);
            for (std::size_t b = 0; b < nbs; ++b) powers[b][l] = matched_filter_power(y, ss[b]);
        }
        for (std::size_t b = 0; b < nbs; ++b) values[b] = arsss_from_powers(powers[b]);
        return values;
    };

    ArsssObservation obs;
    obs.values_db = station_values(0);
    if (scene.has_fbs() && !scene.cn_positions.empty()) {
        obs.per_cn_values_db.reserve(scene.cn_positions.size());
        for (std::size_t station = 1; station < scene.num_stations(); ++station) {
            const auto values = station_values(station);
            obs.per_cn_values_db.push_back({values[0], values[scene.fbs_index()]});
        }
    }
    return obs;
}

}  // namespace fbsdet
