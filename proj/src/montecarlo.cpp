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

#include "fbsdet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "fbsdet/priors.hpp"
#include "fbsdet/units.hpp"

namespace fbsdet {

namespace {

// Substream tags: channel draws, Gaussian-model draws, per-trial seeds and
// scene geometry never share a stream.
constexpr std::uint64_t kChannelStream = 0x6368616eULL;
constexpr std::uint64_t kGaussianStream = 0x67617573ULL;
constexpr std::uint64_t kTrialStream = 0x747269616cULL;
constexpr std::uint64_t kGeometryStream = 0x67656f6dULL;

// Everything a detector needs beyond the observation itself. Built once per
// scene so repeated trials do not redo the threshold bisection.
struct DetectorContext {
    DetectorSpec spec;
    PriorModel prior;
    double threshold_db = 0.0;
    double ue_u_db = 0.0;
    std::vector<double> cn_u_db;
};

DetectorContext build_context(const Scene& scene, const DetectorSpec& spec) {
    DetectorContext ctx;
    ctx.spec = spec;
    ctx.prior = prior_from_scene(scene);
    const double strongest_u = *std::max_element(ctx.prior.u_db.begin(), ctx.prior.u_db.end());
    switch (spec.kind) {
        case DetectorKind::sar:
            ctx.threshold_db = sar_threshold(ctx.prior, spec.delta);
            break;
        case DetectorKind::sar_approx_nearest:
            ctx.threshold_db = sar_threshold_nearest(strongest_u, ctx.prior.sigma_s_db, spec.delta);
            break;
        case DetectorKind::sar_approx_edge:
            ctx.threshold_db =
                sar_threshold_edge(strongest_u, ctx.prior.sigma_s_db, spec.delta, spec.edge_k);
            break;
        case DetectorKind::cooperative: {
            if (!scene.has_fbs())
                throw std::invalid_argument("cooperative detector requires an FBS in the scene");
            // The contested pair is judged against the first LBS; scenes for
            // the cooperative scheme carry that LBS alone.
            ctx.ue_u_db = arsss_mean(scene.lbs_power_dbm,
                                     link_distance(scene.ue_position, scene.lbs_positions[0]),
                                     scene.alpha, scene.sigma_h_sq);
            ctx.cn_u_db.reserve(scene.cn_positions.size());
            for (const Point& cn : scene.cn_positions) {
                ctx.cn_u_db.push_back(arsss_mean(scene.lbs_power_dbm,
                                                 link_distance(cn, scene.lbs_positions[0]),
                                                 scene.alpha, scene.sigma_h_sq));
            }
            break;
        }
        default:
            break;
    }
    return ctx;
}

TrialOutcome classify(const Scene& scene, const DetectorContext& ctx,
                      const ArsssObservation& obs) {
    const bool has_fbs = scene.has_fbs();
    const std::size_t fbs_idx = scene.fbs_index();
    Decision decision;
    switch (ctx.spec.kind) {
        case DetectorKind::naive:
            decision = detect_naive(obs);
            break;
        case DetectorKind::sar:
        case DetectorKind::sar_approx_nearest:
        case DetectorKind::sar_approx_edge:
            decision = detect_sar(obs, ctx.threshold_db);
            break;
        case DetectorKind::ml:
            decision = detect_ml(obs, ctx.prior);
            break;
        case DetectorKind::cooperative: {
            if (!has_fbs)
                throw std::invalid_argument("cooperative detector requires an FBS in the scene");
            if (obs.per_cn_values_db.size() != ctx.cn_u_db.size())
                throw std::invalid_argument("cooperative detector: CN report count mismatch");
            const std::array<double, 2> ue_pair{obs.values_db[0], obs.values_db[fbs_idx]};
            decision = detect_cooperative(ue_pair, obs.per_cn_values_db, ctx.ue_u_db, ctx.cn_u_db,
                                          ctx.prior.sigma_s_db);
            return *decision.chosen == 1 ? TrialOutcome::cheated : TrialOutcome::not_cheated;
        }
    }
    if (decision.no_safe_ss()) return TrialOutcome::outage;
    return (has_fbs && *decision.chosen == fbs_idx) ? TrialOutcome::cheated
                                                    : TrialOutcome::not_cheated;
}

struct OutcomeCounts {
    long cheated = 0;
    long outages = 0;

    void add(TrialOutcome outcome) {
        if (outcome == TrialOutcome::cheated) ++cheated;
        if (outcome == TrialOutcome::outage) ++outages;
    }
};

ScrEstimate finalize(const OutcomeCounts& counts, long n) {
    ScrEstimate estimate;
    estimate.n_trials = n;
    estimate.p_hat = static_cast<double>(counts.cheated) / static_cast<double>(n);
    estimate.outage_rate = static_cast<double>(counts.outages) / static_cast<double>(n);
    estimate.ci_half_width =
        1.96 * std::sqrt(estimate.p_hat * (1.0 - estimate.p_hat) / static_cast<double>(n));
    return estimate;
}

std::uint64_t trial_seed_for(std::uint64_t base_seed, long trial) {
    return mix_seed(mix_seed(base_seed, kTrialStream), static_cast<std::uint64_t>(trial));
}

ArsssObservation sample_gaussian_model(const Scene& scene, std::uint64_t trial_seed) {
    scene.validate();
    const double sigma_s = arsss_std(scene.sigma_psi_sq, scene.slots);
    const std::uint64_t stream = mix_seed(trial_seed, kGaussianStream);
    auto link_value = [&](std::size_t station, std::size_t bs) {
        Rng rng(mix_seed(mix_seed(stream, station), bs));
        const double mean =
            arsss_mean(scene.bs_power_dbm(bs),
                       link_distance(scene.station_position(station), scene.bs_position(bs)),
                       scene.alpha, scene.sigma_h_sq);
        return mean + sigma_s * rng.normal();
    };
    ArsssObservation obs;
    obs.values_db.resize(scene.num_bs());
    for (std::size_t b = 0; b < scene.num_bs(); ++b) obs.values_db[b] = link_value(0, b);
    if (scene.has_fbs() && !scene.cn_positions.empty()) {
        obs.per_cn_values_db.reserve(scene.cn_positions.size());
        for (std::size_t station = 1; station < scene.num_stations(); ++station) {
            obs.per_cn_values_db.push_back(
                {link_value(station, 0), link_value(station, scene.fbs_index())});
        }
    }
    return obs;
}

}  // namespace

std::string detector_name(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::naive: return "naive";
        case DetectorKind::sar: return "sar";
        case DetectorKind::sar_approx_nearest: return "sar-approx-nearest";
        case DetectorKind::sar_approx_edge: return "sar-approx-edge";
        case DetectorKind::ml: return "ml";
        case DetectorKind::cooperative: return "cooperative";
    }
    throw std::logic_error("detector_name: unknown kind");
}

ChannelDraw trial_channel_draw(const Scene& scene, std::uint64_t trial_seed) {
    return draw_channel(scene, mix_seed(trial_seed, kChannelStream));
}

ArsssObservation sample_observation(const Scene& scene, std::uint64_t trial_seed,
                                    SampleMode mode) {
    if (mode == SampleMode::gaussian) return sample_gaussian_model(scene, trial_seed);
    const ChannelDraw draw = trial_channel_draw(scene, trial_seed);
    return observe(scene, draw,
                   mode == SampleMode::signal ? ObserveMode::signal : ObserveMode::fast);
}

TrialOutcome run_trial(const Scene& scene, const DetectorSpec& detector, std::uint64_t trial_seed,
                       SampleMode mode) {
    const DetectorContext ctx = build_context(scene, detector);
    return classify(scene, ctx, sample_observation(scene, trial_seed, mode));
}

ScrEstimate estimate_scr(const Scene& scene, const DetectorSpec& detector, long n_trials,
                         std::uint64_t base_seed, SampleMode mode) {
    if (n_trials < 1)
        throw std::invalid_argument("estimate_scr: n_trials must be >= 1");
    const DetectorContext ctx = build_context(scene, detector);
    OutcomeCounts counts;
    for (long t = 0; t < n_trials; ++t)
        counts.add(classify(scene, ctx, sample_observation(scene, trial_seed_for(base_seed, t), mode)));
    return finalize(counts, n_trials);
}

ScrEstimate estimate_scr(const SceneFactory& factory, const DetectorSpec& detector, long n_trials,
                         std::uint64_t base_seed, SampleMode mode) {
    if (n_trials < 1)
        throw std::invalid_argument("estimate_scr: n_trials must be >= 1");
    OutcomeCounts counts;
    for (long t = 0; t < n_trials; ++t) {
        const std::uint64_t trial_seed = trial_seed_for(base_seed, t);
        const Scene scene = factory(trial_seed);
        const DetectorContext ctx = build_context(scene, detector);
        counts.add(classify(scene, ctx, sample_observation(scene, trial_seed, mode)));
    }
    return finalize(counts, n_trials);
}

Scene default_fig2_scene() {
    Scene scene;
    scene.lbs_positions = {{80.0, 0.0}, {0.0, 250.0}, {0.0, -250.0}};
    scene.lbs_power_dbm = 40.0;
    scene.fbs_position = Point{100.0, 0.0};
    scene.fbs_power_dbm = 40.0;
    scene.ue_position = {0.0, 0.0};
    scene.alpha = 3.0;
    scene.sigma_psi_sq = 3.0;
    scene.sigma_h_sq = 1.0;
    scene.noise_power_mw = 0.0;
    scene.slots = 10;
    scene.ss_len = 16;
    return scene;
}

double fbs_power_for_u(double u_fbs_db, double distance_m, double alpha, double sigma_h_sq) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("fbs_power_for_u: distance must be > 0");
    return u_fbs_db - log_fading_mean_db(sigma_h_sq) + alpha * to_db(distance_m);
}

Scene gen_fig2_scene(double u_fbs_db) {
    Scene scene = default_fig2_scene();
    scene.fbs_power_dbm = fbs_power_for_u(
        u_fbs_db, link_distance(scene.ue_position, *scene.fbs_position), scene.alpha,
        scene.sigma_h_sq);
    return scene;
}

Scene gen_fig3_realization(Rng& rng, const Fig3Params& params) {
    if (!(params.lbs_distance_m > 0.0) || !(params.cn_radius_m > 0.0) ||
        !(params.fbs_inner_radius_m > 0.0) ||
        !(params.fbs_outer_radius_m > params.fbs_inner_radius_m) || params.num_cn < 0)
        throw std::invalid_argument("gen_fig3_realization: bad geometry parameters");

    Scene scene;
    scene.ue_position = {0.0, 0.0};
    scene.lbs_positions = {{0.0, params.lbs_distance_m}};
    scene.lbs_power_dbm = 40.0;
    scene.fbs_power_dbm = params.fbs_power_dbm;

    auto polar = [](double radius, double angle) {
        return Point{radius * std::cos(angle), radius * std::sin(angle)};
    };
    scene.cn_positions.reserve(params.num_cn);
    for (int i = 0; i < params.num_cn; ++i) {
        const double radius = params.cn_radius_m * std::sqrt(rng.uniform01());
        scene.cn_positions.push_back(polar(radius, 2.0 * std::numbers::pi * rng.uniform01()));
    }
    const double r_in_sq = params.fbs_inner_radius_m * params.fbs_inner_radius_m;
    const double r_out_sq = params.fbs_outer_radius_m * params.fbs_outer_radius_m;
    const double radius = std::sqrt(r_in_sq + rng.uniform01() * (r_out_sq - r_in_sq));
    scene.fbs_position = polar(radius, 2.0 * std::numbers::pi * rng.uniform01());
    return scene;
}

PointSceneFactory fig2_sweep_factory(const Scene& base) {
    if (!base.has_fbs())
        throw std::invalid_argument("fig2_sweep_factory: the base scene needs an FBS position");
    base.validate();
    return [base](double u_fbs_db, std::uint64_t) {
        Scene scene = base;
        scene.fbs_power_dbm =
            fbs_power_for_u(u_fbs_db, link_distance(scene.ue_position, *scene.fbs_position),
                            scene.alpha, scene.sigma_h_sq);
        return scene;
    };
}

PointSceneFactory fig3_sweep_factory(const Scene& base, const Fig3Params& geometry) {
    return [base, geometry](double fbs_power_dbm, std::uint64_t trial_seed) {
        Rng rng(mix_seed(trial_seed, kGeometryStream));
        Fig3Params params = geometry;
        params.fbs_power_dbm = fbs_power_dbm;
        Scene scene = gen_fig3_realization(rng, params);
        scene.lbs_power_dbm = base.lbs_power_dbm;
        scene.alpha = base.alpha;
        scene.sigma_psi_sq = base.sigma_psi_sq;
        scene.sigma_h_sq = base.sigma_h_sq;
        scene.noise_power_mw = base.noise_power_mw;
        scene.slots = base.slots;
        scene.ss_len = base.ss_len;
        return scene;
    };
}

PointSceneFactory power_sweep_factory(const Scene& base) {
    base.validate();
    return [base](double fbs_power_dbm, std::uint64_t) {
        Scene scene = base;
        if (scene.has_fbs()) scene.fbs_power_dbm = fbs_power_dbm;
        return scene;
    };
}

std::vector<SweepRow> sweep(const std::vector<double>& points,
                            const std::vector<DetectorSpec>& detectors, long n_per_point,
                            std::uint64_t base_seed, const PointSceneFactory& factory,
                            SampleMode mode) {
    if (points.empty())
        throw std::invalid_argument("sweep: no sweep points");
    if (detectors.empty())
        throw std::invalid_argument("sweep: no detectors");
    if (n_per_point < 1)
        throw std::invalid_argument("sweep: n_per_point must be >= 1");

    std::vector<SweepRow> rows;
    rows.reserve(points.size() * detectors.size());
    for (double point : points) {
        std::vector<OutcomeCounts> counts(detectors.size());
        std::optional<Scene> cached_scene;
        std::vector<DetectorContext> contexts;
        for (long t = 0; t < n_per_point; ++t) {
            const std::uint64_t trial_seed = trial_seed_for(base_seed, t);
            Scene scene = factory(point, trial_seed);
            if (!cached_scene || !(scene == *cached_scene)) {
                contexts.clear();
                contexts.reserve(detectors.size());
                for (const DetectorSpec& spec : detectors)
                    contexts.push_back(build_context(scene, spec));
                cached_scene = std::move(scene);
            }
            // One observation per trial, shared by every detector.
            const ArsssObservation obs =
                sample_observation(*cached_scene, trial_seed, mode);
            for (std::size_t d = 0; d < detectors.size(); ++d)
                counts[d].add(classify(*cached_scene, contexts[d], obs));
        }
        for (std::size_t d = 0; d < detectors.size(); ++d)
            rows.push_back({point, detectors[d].kind, finalize(counts[d], n_per_point)});
    }
    return rows;
}

}  // namespace fbsdet
