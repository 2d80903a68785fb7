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

#include "fbsdet/config.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace fbsdet {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size() || !std::isfinite(parsed))
            throw std::invalid_argument("");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a finite number, got '" + value + "'");
    }
}

long parse_count(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const long parsed = std::stol(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument("");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        if (value.empty() || value[0] == '-') throw std::invalid_argument("");
        std::size_t consumed = 0;
        const unsigned long long parsed = std::stoull(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument("");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects an unsigned 64-bit integer, got '" +
                          value + "'");
    }
}

Point parse_point(const std::string& key, const std::string& value) {
    std::istringstream stream(value);
    Point p;
    if (!(stream >> p.x >> p.y))
        throw ConfigError("config: key '" + key + "' expects 'x y' coordinates, got '" + value +
                          "'");
    std::string rest;
    if (stream >> rest)
        throw ConfigError("config: key '" + key + "' expects 'x y' coordinates, got '" + value +
                          "'");
    return p;
}

std::vector<Point> parse_point_list(const std::string& key, const std::string& value) {
    std::vector<Point> points;
    std::string_view remaining(value);
    while (!remaining.empty()) {
        const auto semi = remaining.find(';');
        const std::string item = trim(remaining.substr(0, semi));
        if (!item.empty()) points.push_back(parse_point(key, item));
        if (semi == std::string_view::npos) break;
        remaining.remove_prefix(semi + 1);
    }
    return points;
}

DetectorKind parse_detector(const std::string& name) {
    for (DetectorKind kind :
         {DetectorKind::naive, DetectorKind::sar, DetectorKind::sar_approx_nearest,
          DetectorKind::sar_approx_edge, DetectorKind::ml, DetectorKind::cooperative}) {
        if (detector_name(kind) == name) return kind;
    }
    throw ConfigError(
        "config: key 'detectors' expects a list drawn from naive, sar, sar-approx-nearest, "
        "sar-approx-edge, ml, cooperative; got '" +
        name + "'");
}

Scenario parse_scenario(const std::string& value) {
    if (value == "fig2-sweep") return Scenario::fig2_sweep;
    if (value == "fig3-sweep") return Scenario::fig3_sweep;
    if (value == "custom") return Scenario::custom;
    throw ConfigError(
        "config: key 'scenario' expects fig2-sweep, fig3-sweep or custom; got '" + value + "'");
}

SampleMode parse_mode(const std::string& value) {
    if (value == "signal") return SampleMode::signal;
    if (value == "fast") return SampleMode::fast;
    if (value == "gaussian") return SampleMode::gaussian;
    throw ConfigError("config: key 'mode' expects signal, fast or gaussian; got '" + value + "'");
}

SweepRange default_sweep_for(Scenario scenario) {
    switch (scenario) {
        case Scenario::fig2_sweep: return {-36.0, -4.0, 2.0};
        case Scenario::fig3_sweep: return {30.0, 60.0, 2.0};
        case Scenario::custom: return {30.0, 60.0, 2.0};
    }
    return {};
}

std::string render_point(Point p) {
    return format_double(p.x) + " " + format_double(p.y);
}

std::string render_point_list(const std::vector<Point>& points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) out += "; ";
        out += render_point(points[i]);
    }
    return out;
}

using KeyValue = std::pair<std::string, std::string>;

std::vector<KeyValue> tokenize(const std::string& text) {
    std::vector<KeyValue> pairs;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value', got '" + stripped + "'");
        pairs.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return pairs;
}

void apply_key(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "scenario") {
        config.scenario = parse_scenario(value);
    } else if (key == "detectors") {
        config.detectors = parse_detector_list(value);
    } else if (key == "delta") {
        const double delta = parse_double(key, value);
        if (!(delta > 0.0 && delta < 1.0))
            throw ConfigError("config: key 'delta' must lie in (0, 1), got '" + value + "'");
        config.delta = delta;
    } else if (key == "edge_k") {
        const long k = parse_count(key, value);
        if (k < 1)
            throw ConfigError("config: key 'edge_k' must be >= 1, got '" + value + "'");
        config.edge_k = static_cast<int>(k);
    } else if (key == "n_trials") {
        const long n = parse_count(key, value);
        if (n < 1)
            throw ConfigError("config: key 'n_trials' must be >= 1, got '" + value + "'");
        config.n_trials = n;
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
    } else if (key == "mode") {
        config.mode = parse_mode(value);
    } else if (key == "output") {
        if (value.empty())
            throw ConfigError("config: key 'output' must not be empty");
        config.output_path = value;
    } else if (key == "sweep.start") {
        config.sweep.start = parse_double(key, value);
    } else if (key == "sweep.stop") {
        config.sweep.stop = parse_double(key, value);
    } else if (key == "sweep.step") {
        const double step = parse_double(key, value);
        if (!(step > 0.0))
            throw ConfigError("config: key 'sweep.step' must be > 0, got '" + value + "'");
        config.sweep.step = step;
    } else if (key == "scene.ue") {
        config.scene.ue_position = parse_point(key, value);
    } else if (key == "scene.lbs") {
        config.scene.lbs_positions = parse_point_list(key, value);
    } else if (key == "scene.fbs") {
        if (value == "none" || value.empty())
            config.scene.fbs_position.reset();
        else
            config.scene.fbs_position = parse_point(key, value);
    } else if (key == "scene.cn") {
        config.scene.cn_positions = (value == "none") ? std::vector<Point>{}
                                                      : parse_point_list(key, value);
    } else if (key == "scene.lbs_power_dbm") {
        config.scene.lbs_power_dbm = parse_double(key, value);
    } else if (key == "scene.fbs_power_dbm") {
        config.scene.fbs_power_dbm = parse_double(key, value);
    } else if (key == "scene.alpha") {
        const double alpha = parse_double(key, value);
        if (!(alpha > 0.0))
            throw ConfigError("config: key 'scene.alpha' must be > 0, got '" + value + "'");
        config.scene.alpha = alpha;
    } else if (key == "scene.sigma_psi_sq") {
        const double var = parse_double(key, value);
        if (!(var >= 0.0))
            throw ConfigError("config: key 'scene.sigma_psi_sq' must be >= 0, got '" + value + "'");
        config.scene.sigma_psi_sq = var;
    } else if (key == "scene.sigma_h_sq") {
        const double power = parse_double(key, value);
        if (!(power > 0.0))
            throw ConfigError("config: key 'scene.sigma_h_sq' must be > 0, got '" + value + "'");
        config.scene.sigma_h_sq = power;
    } else if (key == "scene.noise_power") {
        const double noise = parse_double(key, value);
        if (!(noise >= 0.0))
            throw ConfigError("config: key 'scene.noise_power' must be >= 0, got '" + value + "'");
        config.scene.noise_power_mw = noise;
    } else if (key == "scene.slots") {
        const long slots = parse_count(key, value);
        if (slots < 1)
            throw ConfigError("config: key 'scene.slots' must be >= 1, got '" + value + "'");
        config.scene.slots = static_cast<int>(slots);
    } else if (key == "scene.ss_len") {
        const long len = parse_count(key, value);
        if (len < 1)
            throw ConfigError("config: key 'scene.ss_len' must be >= 1, got '" + value + "'");
        config.scene.ss_len = static_cast<int>(len);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

}  // namespace

std::vector<double> SweepRange::points() const {
    if (!(step > 0.0))
        throw ConfigError("config: key 'sweep.step' must be > 0");
    if (stop < start)
        throw ConfigError("config: key 'sweep.stop' must be >= sweep.start");
    std::vector<double> values;
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    values.reserve(count);
    for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
    return values;
}

std::vector<DetectorSpec> ExperimentConfig::detector_specs() const {
    std::vector<DetectorSpec> specs;
    specs.reserve(detectors.size());
    for (DetectorKind kind : detectors) specs.push_back({kind, delta, edge_k});
    return specs;
}

ExperimentConfig default_config() {
    ExperimentConfig config;
    config.scene = default_fig2_scene();
    config.sweep = default_sweep_for(config.scenario);
    return config;
}

ExperimentConfig parse_config(const std::string& text) {
    const std::vector<KeyValue> pairs = tokenize(text);
    ExperimentConfig config = default_config();
    // The scenario picks the sweep defaults, so resolve it before the rest.
    for (const auto& [key, value] : pairs) {
        if (key == "scenario") {
            config.scenario = parse_scenario(value);
            config.sweep = default_sweep_for(config.scenario);
        }
    }
    for (const auto& [key, value] : pairs) apply_key(config, key, value);
    if (config.sweep.stop < config.sweep.start)
        throw ConfigError("config: key 'sweep.stop' must be >= sweep.start");
    try {
        config.scene.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return config;
}

std::string render_config(const ExperimentConfig& config) {
    std::string detectors;
    for (std::size_t i = 0; i < config.detectors.size(); ++i) {
        if (i > 0) detectors += ", ";
        detectors += detector_name(config.detectors[i]);
    }
    std::ostringstream out;
    out << "scenario = " << scenario_name(config.scenario) << '\n'
        << "detectors = " << detectors << '\n'
        << "delta = " << format_double(config.delta) << '\n'
        << "edge_k = " << config.edge_k << '\n'
        << "n_trials = " << config.n_trials << '\n'
        << "seed = " << config.seed << '\n'
        << "mode = " << mode_name(config.mode) << '\n'
        << "output = " << config.output_path << '\n'
        << "sweep.start = " << format_double(config.sweep.start) << '\n'
        << "sweep.stop = " << format_double(config.sweep.stop) << '\n'
        << "sweep.step = " << format_double(config.sweep.step) << '\n'
        << "scene.ue = " << render_point(config.scene.ue_position) << '\n'
        << "scene.lbs = " << render_point_list(config.scene.lbs_positions) << '\n'
        << "scene.fbs = "
        << (config.scene.fbs_position ? render_point(*config.scene.fbs_position)
                                      : std::string("none"))
        << '\n'
        << "scene.cn = "
        << (config.scene.cn_positions.empty() ? std::string("none")
                                              : render_point_list(config.scene.cn_positions))
        << '\n'
        << "scene.lbs_power_dbm = " << format_double(config.scene.lbs_power_dbm) << '\n'
        << "scene.fbs_power_dbm = " << format_double(config.scene.fbs_power_dbm) << '\n'
        << "scene.alpha = " << format_double(config.scene.alpha) << '\n'
        << "scene.sigma_psi_sq = " << format_double(config.scene.sigma_psi_sq) << '\n'
        << "scene.sigma_h_sq = " << format_double(config.scene.sigma_h_sq) << '\n'
        << "scene.noise_power = " << format_double(config.scene.noise_power_mw) << '\n'
        << "scene.slots = " << config.scene.slots << '\n'
        << "scene.ss_len = " << config.scene.ss_len << '\n';
    return out.str();
}

std::string scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::fig2_sweep: return "fig2-sweep";
        case Scenario::fig3_sweep: return "fig3-sweep";
        case Scenario::custom: return "custom";
    }
    throw std::logic_error("scenario_name: unknown scenario");
}

std::string mode_name(SampleMode mode) {
    switch (mode) {
        case SampleMode::signal: return "signal";
        case SampleMode::fast: return "fast";
        case SampleMode::gaussian: return "gaussian";
    }
    throw std::logic_error("mode_name: unknown mode");
}

std::vector<DetectorKind> parse_detector_list(const std::string& text) {
    std::vector<DetectorKind> kinds;
    std::string_view remaining(text);
    while (!remaining.empty()) {
        const auto comma = remaining.find(',');
        const std::string item = trim(remaining.substr(0, comma));
        if (!item.empty()) kinds.push_back(parse_detector(item));
        if (comma == std::string_view::npos) break;
        remaining.remove_prefix(comma + 1);
    }
    if (kinds.empty())
        throw ConfigError("config: key 'detectors' expects a nonempty list");
    return kinds;
}

}  // namespace fbsdet
