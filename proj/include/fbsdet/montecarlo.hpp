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
#include <functional>
#include <string>
#include <vector>

#include "fbsdet/arsss.hpp"
#include "fbsdet/detectors.hpp"
#include "fbsdet/rng.hpp"
#include "fbsdet/scene.hpp"

namespace fbsdet {

enum class DetectorKind { naive, sar, sar_approx_nearest, sar_approx_edge, ml, cooperative };

std::string detector_name(DetectorKind kind);

struct DetectorSpec {
    DetectorKind kind = DetectorKind::naive;
    double delta = 0.01;  // SAR false-alarm budget
    int edge_k = 1;       // equally-close LBS count for the edge approximation

    friend bool operator==(const DetectorSpec&, const DetectorSpec&) = default;
};

// `outage` is the SAR detector declining every SS. Outages never count as
// cheated; they are reported separately so the cost of declining is visible.
enum class TrialOutcome { not_cheated, cheated, outage };

// How a trial's observation is produced: full signal synthesis, the
// noiseless power-domain path, or direct draws from the Gaussian model of
// the ARSSS values (one independent normal per station-BS link).
enum class SampleMode { signal, fast, gaussian };

struct ScrEstimate {
    double p_hat = 0.0;
    double ci_half_width = 0.0;  // 95%, normal approximation
    double outage_rate = 0.0;
    long n_trials = 0;
};

// The channel realization behind a trial; exposed so a trial can be traced
// with the exact draw the estimators would use.
ChannelDraw trial_channel_draw(const Scene& scene, std::uint64_t trial_seed);

ArsssObservation sample_observation(const Scene& scene, std::uint64_t trial_seed, SampleMode mode);

TrialOutcome run_trial(const Scene& scene, const DetectorSpec& detector, std::uint64_t trial_seed,
                       SampleMode mode);

using SceneFactory = std::function<Scene(std::uint64_t trial_seed)>;

// Frequency of cheating over n independent trials with per-trial derived
// seeds, plus the 95% confidence half-width and the outage rate.
ScrEstimate estimate_scr(const Scene& scene, const DetectorSpec& detector, long n_trials,
                         std::uint64_t base_seed, SampleMode mode);
ScrEstimate estimate_scr(const SceneFactory& factory, const DetectorSpec& detector, long n_trials,
                         std::uint64_t base_seed, SampleMode mode);

// Canonical three-LBS benchmark scene: LBS distances 80/250/250 m, 40 dBm,
// alpha 3, shadowing variance 3 dB^2, unit fading power, 10 slots. The FBS
// sits at a 100 m reference distance.
Scene default_fig2_scene();

// Transmit power that realizes a requested mean ARSSS at a given distance.
double fbs_power_for_u(double u_fbs_db, double distance_m, double alpha, double sigma_h_sq);

// Benchmark scene with the FBS power chosen so its mean ARSSS at the UE
// equals u_fbs_db.
Scene gen_fig2_scene(double u_fbs_db);

// Randomized single-LBS geometry: the UE at the origin, the LBS at a fixed
// distance, CNs uniform on a disk around the UE, and the FBS area-uniform on
// an annulus (inverse-CDF radius, uniform angle; no rejection loop).
struct Fig3Params {
    double lbs_distance_m = 100.0;
    double cn_radius_m = 50.0;
    double fbs_inner_radius_m = 90.0;
    double fbs_outer_radius_m = 150.0;
    int num_cn = 2;
    double fbs_power_dbm = 40.0;
};

Scene gen_fig3_realization(Rng& rng, const Fig3Params& params = {});

struct SweepRow {
    double sweep_value = 0.0;
    DetectorKind detector = DetectorKind::naive;
    ScrEstimate estimate;
};

using PointSceneFactory = std::function<Scene(double sweep_value, std::uint64_t trial_seed)>;

// One estimate per (point, detector). Every detector at a given point is fed
// the same observation, and trial seeds are shared across points, so curve
// differences are not noise artifacts.
std::vector<SweepRow> sweep(const std::vector<double>& points,
                            const std::vector<DetectorSpec>& detectors, long n_per_point,
                            std::uint64_t base_seed, const PointSceneFactory& factory,
                            SampleMode mode);

// Sweep-value adapters for the three experiment shapes.
//
// fig2: the sweep value is the mean FBS ARSSS at the UE, realized through
// the FBS power at its configured position. Requires base.has_fbs().
PointSceneFactory fig2_sweep_factory(const Scene& base);
// fig3: fresh geometry per trial seed, the sweep value is the FBS power;
// channel parameters are copied from base.
PointSceneFactory fig3_sweep_factory(const Scene& base, const Fig3Params& geometry = {});
// custom: fixed scene, the sweep value is the FBS power (ignored when the
// scene has no FBS).
PointSceneFactory power_sweep_factory(const Scene& base);

}  // namespace fbsdet
