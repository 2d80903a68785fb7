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

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "fbsdet/arsss.hpp"
#include "fbsdet/priors.hpp"

namespace fbsdet {

// Outcome of one SS-selection rule. `chosen` is a 0-based index into the
// observed values; an empty `chosen` means the SAR rule rejected every SS.
// Ties are always broken toward the lowest index.
struct Decision {
    std::optional<std::size_t> chosen;
    std::optional<double> threshold_db;  // SAR only
    std::vector<double> likelihoods;     // ML: f_max per value; cooperative: per-candidate log-likelihood

    bool no_safe_ss() const { return !chosen.has_value(); }
};

// Strongest SS wins.
Decision detect_naive(const ArsssObservation& obs);

// Strongest SS among those at or below the threshold; everything above it is
// treated as suspicious. An empty survivor set yields no safe SS.
Decision detect_sar(const ArsssObservation& obs, double threshold_db);

// SS whose ARSSS maximizes the density of the strongest-legitimate-value
// statistic.
Decision detect_ml(const ArsssObservation& obs, const PriorModel& model);

// Fusion of the UE's own density and the CN-reported densities for the two
// contested SSs. Combined as a sum of log densities; products of many small
// densities would underflow. Returns chosen = 0 or 1.
Decision detect_cooperative(const std::array<double, 2>& ue_values_db,
                            const std::vector<std::array<double, 2>>& cn_values_db,
                            double ue_u_db, const std::vector<double>& cn_u_db,
                            double sigma_s_db);

}  // namespace fbsdet
