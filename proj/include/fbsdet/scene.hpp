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

#include <cstddef>
#include <optional>
#include <vector>

#include "fbsdet/geometry.hpp"

namespace fbsdet {

// Radio scene: one UE, M legitimate base stations sharing a transmit power,
// an optional fake base station, and any number of cooperative nodes.
//
// Base stations are indexed with the LBSs first and the FBS, when present,
// last. Receiving stations are indexed with the UE at 0 followed by the CNs.
struct Scene {
    std::vector<Point> lbs_positions;
    double lbs_power_dbm = 40.0;
    std::optional<Point> fbs_position;
    double fbs_power_dbm = 40.0;
    Point ue_position;
    std::vector<Point> cn_positions;

    double alpha = 3.0;           // path-loss exponent
    double sigma_psi_sq = 3.0;    // shadowing variance, dB^2
    double sigma_h_sq = 1.0;      // mean small-scale fading power
    double noise_power_mw = 0.0;  // per-element receiver noise variance
    int slots = 10;               // observation slots per ARSSS
    int ss_len = 16;              // synchronization sequence length

    bool has_fbs() const { return fbs_position.has_value(); }
    std::size_t num_lbs() const { return lbs_positions.size(); }
    std::size_t num_bs() const { return num_lbs() + (has_fbs() ? 1 : 0); }
    std::size_t fbs_index() const { return num_lbs(); }

    Point bs_position(std::size_t bs) const;
    double bs_power_dbm(std::size_t bs) const;

    std::size_t num_stations() const { return 1 + cn_positions.size(); }
    Point station_position(std::size_t station) const;

    // Throws std::invalid_argument on any broken invariant: empty LBS list,
    // nonpositive alpha / fading power, negative variances, fewer sequence
    // symbols than broadcast SSs, or a station placed on top of a BS.
    void validate() const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

}  // namespace fbsdet
