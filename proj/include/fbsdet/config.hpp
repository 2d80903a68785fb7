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
#include <stdexcept>
#include <string>
#include <vector>

#include "fbsdet/montecarlo.hpp"
#include "fbsdet/scene.hpp"

namespace fbsdet {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { fig2_sweep, fig3_sweep, custom };

struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> points() const;

    friend bool operator==(const SweepRange&, const SweepRange&) = default;
};

// Fully resolved experiment description. Every field has a documented
// default, so an empty config runs the canonical benchmark sweep.
//
// The sweep variable depends on the scenario: fig2-sweep varies the mean
// FBS ARSSS at the UE (dB, realized through the FBS transmit power at its
// configured position); fig3-sweep and custom vary the FBS transmit power
// (dBm) directly.
struct ExperimentConfig {
    Scenario scenario = Scenario::fig2_sweep;
    std::vector<DetectorKind> detectors = {DetectorKind::naive, DetectorKind::sar,
                                           DetectorKind::ml};
    double delta = 0.01;
    int edge_k = 1;
    long n_trials = 10000;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::fast;
    SweepRange sweep;  // scenario-dependent default
    std::string output_path = "sweep.csv";
    Scene scene;  // base scene; fig2/fig3 generators replace the geometry

    std::vector<DetectorSpec> detector_specs() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig default_config();

// Flat key-value text, one `key = value` pair per line, '#' comments, with
// one nesting level (scene.*, sweep.*) for the structured parts. Unknown
// keys and out-of-range values raise ConfigError naming the key.
ExperimentConfig parse_config(const std::string& text);

// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const ExperimentConfig& config);

std::string scenario_name(Scenario scenario);
std::string mode_name(SampleMode mode);

// Comma-separated detector names, e.g. "naive, sar, ml".
std::vector<DetectorKind> parse_detector_list(const std::string& text);

}  // namespace fbsdet
