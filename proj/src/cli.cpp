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

#include "fbsdet/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fbsdet/gaussian.hpp"
#include "fbsdet/montecarlo.hpp"
#include "fbsdet/priors.hpp"
#include "fbsdet/scr_analysis.hpp"
#include "fbsdet/units.hpp"

namespace fbsdet {

namespace {

// All dB and probability values are emitted with 6 significant digits.
std::string fmt6(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

PointSceneFactory factory_for(const ExperimentConfig& config) {
    switch (config.scenario) {
        case Scenario::fig2_sweep:
            if (!config.scene.has_fbs())
                throw ConfigError("config: fig2-sweep requires a scene.fbs position");
            return fig2_sweep_factory(config.scene);
        case Scenario::fig3_sweep:
            return fig3_sweep_factory(config.scene);
        case Scenario::custom:
            return power_sweep_factory(config.scene);
    }
    throw std::logic_error("factory_for: unknown scenario");
}

// Model-based cheating rate for the deterministic-scene scenarios; the
// randomized-geometry sweep has no fixed prior to evaluate against.
std::optional<double> analytic_scr(const ExperimentConfig& config, double sweep_value,
                                   DetectorKind kind) {
    if (config.scenario == Scenario::fig3_sweep) return std::nullopt;
    if (kind == DetectorKind::cooperative) return std::nullopt;
    if (!config.scene.has_fbs()) return std::nullopt;

    Scene scene = config.scene;
    double u_fbs = 0.0;
    if (config.scenario == Scenario::fig2_sweep) {
        u_fbs = sweep_value;
    } else {
        scene.fbs_power_dbm = sweep_value;
        u_fbs = arsss_mean(sweep_value, link_distance(scene.ue_position, *scene.fbs_position),
                           scene.alpha, scene.sigma_h_sq);
    }
    const PriorModel prior = prior_from_scene(scene);
    const double strongest_u = *std::max_element(prior.u_db.begin(), prior.u_db.end());
    switch (kind) {
        case DetectorKind::naive:
            return scr_no_check(prior, u_fbs);
        case DetectorKind::sar:
            return scr_sar_bound(prior, u_fbs, sar_threshold(prior, config.delta), config.delta);
        case DetectorKind::sar_approx_nearest:
            return scr_sar_bound(prior, u_fbs,
                                 sar_threshold_nearest(strongest_u, prior.sigma_s_db,
                                                       config.delta),
                                 config.delta);
        case DetectorKind::sar_approx_edge:
            return scr_sar_bound(prior, u_fbs,
                                 sar_threshold_edge(strongest_u, prior.sigma_s_db, config.delta,
                                                    config.edge_k),
                                 config.delta);
        case DetectorKind::ml:
            return scr_ml(prior, u_fbs);
        case DetectorKind::cooperative:
            break;
    }
    return std::nullopt;
}

std::string outcome_word(TrialOutcome outcome) {
    switch (outcome) {
        case TrialOutcome::cheated: return "cheated";
        case TrialOutcome::not_cheated: return "not cheated";
        case TrialOutcome::outage: return "outage (no safe SS)";
    }
    return {};
}

std::uint64_t parse_env_seed(const char* text) {
    try {
        std::size_t consumed = 0;
        const unsigned long long value = std::stoull(text, &consumed);
        if (consumed != std::string(text).size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ConfigError(std::string("environment variable ") + kSeedEnvVar +
                          " expects an unsigned 64-bit integer");
    }
}

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string detectors;
    std::uint64_t seed = 0;
    long n_trials = 0;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file");
    cmd->add_option("--seed", opts.seed, "seed override (beats config and " +
                                             std::string(kSeedEnvVar) + ")");
    cmd->add_option("--out", opts.out_path, "output CSV path override");
    cmd->add_option("--n", opts.n_trials, "trials per sweep point override");
    cmd->add_option("--detectors", opts.detectors, "comma-separated detector list override");
}

ExperimentConfig resolve_config(const CLI::App* cmd, const CommonOptions& opts) {
    ExperimentConfig config = default_config();
    if (!opts.config_path.empty()) config = parse_config(read_file(opts.config_path));
    if (const char* env = std::getenv(kSeedEnvVar)) config.seed = parse_env_seed(env);
    if (cmd->count("--seed") > 0) config.seed = opts.seed;
    if (cmd->count("--out") > 0) {
        if (opts.out_path.empty()) throw ConfigError("--out expects a nonempty path");
        config.output_path = opts.out_path;
    }
    if (cmd->count("--n") > 0) {
        if (opts.n_trials < 1) throw ConfigError("--n must be >= 1");
        config.n_trials = opts.n_trials;
    }
    if (cmd->count("--detectors") > 0) config.detectors = parse_detector_list(opts.detectors);
    return config;
}

}  // namespace

void cmd_sweep(const ExperimentConfig& config) {
    const std::vector<double> points = config.sweep.points();
    const std::vector<DetectorSpec> specs = config.detector_specs();
    const PointSceneFactory factory = factory_for(config);
    const std::vector<SweepRow> rows =
        sweep(points, specs, config.n_trials, config.seed, factory, config.mode);

    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + config.output_path + "'");
    out << "sweep_value,detector,scr,ci95,outage_rate,n,scr_analytic\n";
    for (const SweepRow& row : rows) {
        out << fmt6(row.sweep_value) << ',' << detector_name(row.detector) << ','
            << fmt6(row.estimate.p_hat) << ',' << fmt6(row.estimate.ci_half_width) << ','
            << fmt6(row.estimate.outage_rate) << ',' << row.estimate.n_trials << ',';
        if (const auto analytic = analytic_scr(config, row.sweep_value, row.detector))
            out << fmt6(*analytic);
        out << '\n';
    }
    if (!out)
        throw ConfigError("failed while writing output file '" + config.output_path + "'");
}

void cmd_trace(const ExperimentConfig& config, std::uint64_t trial_seed, std::ostream& out) {
    out << "# effective configuration\n" << render_config(config) << '\n';

    const PointSceneFactory factory = factory_for(config);
    const Scene scene = factory(config.sweep.start, trial_seed);
    const PriorModel prior = prior_from_scene(scene);
    const double threshold = sar_threshold(prior, config.delta);

    out << "# scene (sweep value " << fmt6(config.sweep.start) << ", trial seed " << trial_seed
        << ")\n";
    for (std::size_t b = 0; b < scene.num_bs(); ++b) {
        const bool is_fbs = scene.has_fbs() && b == scene.fbs_index();
        out << (is_fbs ? "fbs" : "lbs") << ' ' << b << ": position (" << fmt6(scene.bs_position(b).x)
            << ", " << fmt6(scene.bs_position(b).y) << "), power " << fmt6(scene.bs_power_dbm(b))
            << " dBm, UE distance "
            << fmt6(link_distance(scene.ue_position, scene.bs_position(b))) << " m, mean ARSSS "
            << fmt6(arsss_mean(scene.bs_power_dbm(b),
                               link_distance(scene.ue_position, scene.bs_position(b)), scene.alpha,
                               scene.sigma_h_sq))
            << " dB\n";
    }
    out << "prior: u = [";
    for (std::size_t m = 0; m < prior.u_db.size(); ++m)
        out << (m ? ", " : "") << fmt6(prior.u_db[m]);
    out << "], sigma_s = " << fmt6(prior.sigma_s_db) << " dB\n";
    out << "sar threshold (delta = " << fmt6(config.delta) << "): " << fmt6(threshold) << " dB\n\n";

    ArsssObservation obs;
    if (config.mode == SampleMode::gaussian) {
        obs = sample_observation(scene, trial_seed, config.mode);
        out << "# observation (gaussian model draw)\n";
    } else {
        const ChannelDraw draw = trial_channel_draw(scene, trial_seed);
        out << "# channel draw\n";
        for (std::size_t s = 0; s < scene.num_stations(); ++s) {
            for (std::size_t b = 0; b < scene.num_bs(); ++b) {
                const LinkDraw& link = draw.link(s, b);
                double mean_power = 0.0;
                for (const auto& h : link.small_scale) mean_power += std::norm(h);
                mean_power /= static_cast<double>(link.small_scale.size());
                out << (s == 0 ? "ue" : "cn") << (s == 0 ? "" : std::to_string(s - 1)) << " <- bs "
                    << b << ": shadowing " << fmt6(link.shadowing_db) << " dB, mean |h|^2 "
                    << fmt6(mean_power) << '\n';
            }
        }
        obs = observe(scene, draw,
                      config.mode == SampleMode::signal ? ObserveMode::signal : ObserveMode::fast);
        out << "\n# observation (" << mode_name(config.mode) << " mode)\n";
    }
    for (std::size_t b = 0; b < obs.values_db.size(); ++b) {
        const bool is_fbs = scene.has_fbs() && b == scene.fbs_index();
        out << "S_" << b << " = " << fmt6(obs.values_db[b]) << " dB" << (is_fbs ? "  [fbs]" : "")
            << '\n';
    }
    for (std::size_t c = 0; c < obs.per_cn_values_db.size(); ++c) {
        out << "cn" << c << ": S(lbs 0) = " << fmt6(obs.per_cn_values_db[c][0]) << " dB, S(fbs) = "
            << fmt6(obs.per_cn_values_db[c][1]) << " dB\n";
    }

    out << "\n# decisions\n";
    for (DetectorKind kind : config.detectors) {
        const DetectorSpec spec{kind, config.delta, config.edge_k};
        out << detector_name(kind) << ": ";
        switch (kind) {
            case DetectorKind::naive: {
                const Decision d = detect_naive(obs);
                out << "chose SS " << *d.chosen;
                break;
            }
            case DetectorKind::sar:
            case DetectorKind::sar_approx_nearest:
            case DetectorKind::sar_approx_edge: {
                double thr = threshold;
                if (kind == DetectorKind::sar_approx_nearest)
                    thr = sar_threshold_nearest(
                        *std::max_element(prior.u_db.begin(), prior.u_db.end()),
                        prior.sigma_s_db, config.delta);
                if (kind == DetectorKind::sar_approx_edge)
                    thr = sar_threshold_edge(
                        *std::max_element(prior.u_db.begin(), prior.u_db.end()),
                        prior.sigma_s_db, config.delta, config.edge_k);
                const Decision d = detect_sar(obs, thr);
                out << "threshold " << fmt6(thr) << " dB, ";
                if (d.no_safe_ss())
                    out << "no safe SS";
                else
                    out << "chose SS " << *d.chosen;
                break;
            }
            case DetectorKind::ml: {
                const Decision d = detect_ml(obs, prior);
                out << "densities [";
                for (std::size_t i = 0; i < d.likelihoods.size(); ++i)
                    out << (i ? ", " : "") << fmt6(d.likelihoods[i]);
                out << "], chose SS " << *d.chosen;
                break;
            }
            case DetectorKind::cooperative: {
                if (!scene.has_fbs() || scene.cn_positions.empty()) {
                    out << "skipped (needs an FBS and at least one CN)";
                    break;
                }
                std::vector<double> cn_u;
                for (const Point& cn : scene.cn_positions)
                    cn_u.push_back(arsss_mean(scene.lbs_power_dbm,
                                              link_distance(cn, scene.lbs_positions[0]),
                                              scene.alpha, scene.sigma_h_sq));
                const double ue_u = arsss_mean(
                    scene.lbs_power_dbm,
                    link_distance(scene.ue_position, scene.lbs_positions[0]), scene.alpha,
                    scene.sigma_h_sq);
                const std::array<double, 2> ue_pair{obs.values_db[0],
                                                    obs.values_db[scene.fbs_index()]};
                const Decision d = detect_cooperative(ue_pair, obs.per_cn_values_db, ue_u, cn_u,
                                                      prior.sigma_s_db);
                out << "log-likelihoods [" << fmt6(d.likelihoods[0]) << ", "
                    << fmt6(d.likelihoods[1]) << "]";
                for (std::size_t c = 0; c < obs.per_cn_values_db.size(); ++c) {
                    out << ", cn" << c << " contributes ["
                        << fmt6(normal_log_pdf(obs.per_cn_values_db[c][0], cn_u[c],
                                               prior.sigma_s_db))
                        << ", "
                        << fmt6(normal_log_pdf(obs.per_cn_values_db[c][1], cn_u[c],
                                               prior.sigma_s_db))
                        << "]";
                }
                out << ", chose contested SS " << *d.chosen;
                break;
            }
        }
        out << " -> " << outcome_word(run_trial(scene, spec, trial_seed, config.mode)) << '\n';
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"link-level experiments for location-based fake base station detection"};
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    CommonOptions trace_opts;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run the configured sweep and write a CSV table");
    add_common_options(sweep_cmd, sweep_opts);
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "run the built-in calibration checks");
    CLI::App* trace_cmd = app.add_subcommand("trace", "print one trial end to end");
    add_common_options(trace_cmd, trace_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            cmd_sweep(resolve_config(sweep_cmd, sweep_opts));
            return 0;
        }
        if (validate_cmd->parsed()) return cmd_validate(std::cout);
        if (trace_cmd->parsed()) {
            const ExperimentConfig config = resolve_config(trace_cmd, trace_opts);
            cmd_trace(config, config.seed, std::cout);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace fbsdet
