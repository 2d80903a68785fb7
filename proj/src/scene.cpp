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

#include "fbsdet/scene.hpp"

#include <stdexcept>
#include <string>

namespace fbsdet {

Point Scene::bs_position(std::size_t bs) const {
    if (bs < num_lbs()) return lbs_positions[bs];
    if (has_fbs() && bs == fbs_index()) return *fbs_position;
    throw std::out_of_range("scene: BS index " + std::to_string(bs) + " out of range");
}

double Scene::bs_power_dbm(std::size_t bs) const {
    if (bs < num_lbs()) return lbs_power_dbm;
    if (has_fbs() && bs == fbs_index()) return fbs_power_dbm;
    throw std::out_of_range("scene: BS index " + std::to_string(bs) + " out of range");
}

Point Scene::station_position(std::size_t station) const {
    if (station == 0) return ue_position;
    if (station <= cn_positions.size()) return cn_positions[station - 1];
    throw std::out_of_range("scene: station index " + std::to_string(station) + " out of range");
}

void Scene::validate() const {
    if (lbs_positions.empty())
        throw std::invalid_argument("scene: at least one LBS is required");
    if (!(alpha > 0.0))
        throw std::invalid_argument("scene: alpha must be > 0");
    if (!(sigma_psi_sq >= 0.0))
        throw std::invalid_argument("scene: sigma_psi_sq must be >= 0");
    if (!(sigma_h_sq > 0.0))
        throw std::invalid_argument("scene: sigma_h_sq must be > 0");
    if (!(noise_power_mw >= 0.0))
        throw std::invalid_argument("scene: noise_power must be >= 0");
    if (slots < 1)
        throw std::invalid_argument("scene: slots must be >= 1");
    if (ss_len < static_cast<int>(num_bs()))
        throw std::invalid_argument("scene: ss_len must be >= the number of broadcast SSs");
    for (std::size_t s = 0; s < num_stations(); ++s) {
        for (std::size_t b = 0; b < num_bs(); ++b) {
            if (!(link_distance(station_position(s), bs_position(b)) > 0.0))
                throw std::invalid_argument("scene: a station coincides with a BS position");
        }
    }
}

}  // namespace fbsdet
