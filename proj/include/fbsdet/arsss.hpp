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
#include <complex>
#include <span>
#include <vector>

#include "fbsdet/channel.hpp"
#include "fbsdet/scene.hpp"

namespace fbsdet {

// `signal` synthesizes the received slots and matched-filters them;
// `fast` evaluates the noiseless power-domain decomposition directly.
// Given the same ChannelDraw and zero receiver noise the two agree.
enum class ObserveMode { signal, fast };

// ARSSS values seen by the UE, one per broadcast SS, plus - when cooperative
// nodes and an FBS are both present - the values each CN records for the
// contested pair (SS of the first LBS, SS of the FBS).
struct ArsssObservation {
    std::vector<double> values_db;
    std::vector<std::array<double, 2>> per_cn_values_db;
};

// Matched-filter output power |<y, z>|^2 / tau^2. With a single noiseless
// source this equals the received power through that SS exactly.
double matched_filter_power(std::span<const std::complex<double>> y,
                            std::span<const std::complex<double>> z);

// Mean of the per-slot powers taken in dB. Rejects nonpositive powers: a
// zero-energy slot marks a degenerate observation, not a -inf value.
double arsss_from_powers(std::span<const double> powers_mw);

// Power-domain shortcut: the per-draw link mean plus the slot average of
// lt(|h|^2), skipping signal synthesis.
double arsss_fast(double u_draw_db, std::span<const std::complex<double>> small_scale);

ArsssObservation observe(const Scene& scene, const ChannelDraw& draw, ObserveMode mode);

}  // namespace fbsdet
