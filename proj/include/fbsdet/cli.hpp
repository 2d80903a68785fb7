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

#include <cstdint>
#include <iosfwd>

#include "fbsdet/config.hpp"

namespace fbsdet {

// Overrides the configured seed when set (overridden in turn by --seed).
inline constexpr const char* kSeedEnvVar = "FBSDET_SEED";

// Runs the configured sweep and writes the CSV table to config.output_path.
// Columns: sweep_value, detector, scr, ci95, outage_rate, n, scr_analytic.
// Deterministic bytes for a given config and seed.
void cmd_sweep(const ExperimentConfig& config);

// Built-in calibration checks: fading-moment constants against independent
// sampling, ARSSS moments, SAR false-alarm rate, and analytic-vs-simulated
// cheating rates. Prints one line per check; returns 0 iff all pass.
int cmd_validate(std::ostream& out);

// Prints one trial end to end: the effective config, the drawn channel, all
// ARSSS values, threshold and density diagnostics, and every detector's
// decision.
void cmd_trace(const ExperimentConfig& config, std::uint64_t trial_seed, std::ostream& out);

// Entry point behind the fbsdet binary. Exit codes: 0 success, 1 validation
// failure, 2 config or I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace fbsdet
