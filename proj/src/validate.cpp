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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "fbsdet/cli.hpp"
#include "fbsdet/montecarlo.hpp"
#include "fbsdet/priors.hpp"
#include "fbsdet/scr_analysis.hpp"

namespace fbsdet {

namespace {

struct CheckLog {
    std::ostream& out;
    int failures = 0;

    void add(const std::string& name, bool pass, const std::string& detail) {
        out << (pass ? "[ ok ] " : "[FAIL] ") << name << ": " << detail << '\n';
        if (!pass) ++failures;
    }
};

std::string num(double value) {
    std::ostringstream s;
    s.precision(6);
    s << value;
    return s.str();
}

// The fading-moment checks sample the standard library's exponential
// distribution so they do not share any code path with the library's own
// generator.
void check_fading_moments(CheckLog& log) {
    std::mt19937_64 gen(7);
    std::exponential_distribution<double> expo(1.0);
    const long n = 2'000'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long i = 0; i < n; ++i) {
        const double x = 10.0 * std::log10(expo(gen));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum_sq / static_cast<double>(n) - mean * mean;
    const double want_mean = log_fading_mean_db(1.0);
    const double want_var = log_fading_var_db();
    const double mean_tol = 3.0 * std::sqrt(want_var / static_cast<double>(n));
    log.add("log-fading mean", std::abs(mean - want_mean) <= mean_tol,
            "sampled " + num(mean) + " dB vs model " + num(want_mean) + " dB (tol " +
                num(mean_tol) + ")");
    log.add("log-fading variance", std::abs(var - want_var) <= 0.2,
            "sampled " + num(var) + " dB^2 vs model " + num(want_var) + " dB^2 (tol 0.2)");
}

void check_arsss_moments(CheckLog& log) {
    Scene scene = default_fig2_scene();
    scene.fbs_position.reset();
    const PriorModel prior = prior_from_scene(scene);
    const long n = 30'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long t = 0; t < n; ++t) {
        const auto obs = sample_observation(scene, mix_seed(11, t), SampleMode::fast);
        sum += obs.values_db[0];
        sum_sq += obs.values_db[0] * obs.values_db[0];
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum_sq / static_cast<double>(n) - mean * mean;
    const double sigma_sq = prior.sigma_s_db * prior.sigma_s_db;
    const double mean_tol = 3.0 * prior.sigma_s_db / std::sqrt(static_cast<double>(n));
    log.add("ARSSS mean", std::abs(mean - prior.u_db[0]) <= mean_tol,
            "sampled " + num(mean) + " dB vs model " + num(prior.u_db[0]) + " dB (tol " +
                num(mean_tol) + ")");
    log.add("ARSSS variance", std::abs(var - sigma_sq) <= 0.2,
            "sampled " + num(var) + " dB^2 vs model " + num(sigma_sq) + " dB^2 (tol 0.2)");
}

void check_false_alarm(CheckLog& log) {
    Scene scene = default_fig2_scene();
    scene.fbs_position.reset();
    const PriorModel prior = prior_from_scene(scene);
    const double threshold = sar_threshold(prior, 0.01);
    const long n = 50'000;
    long alarms = 0;
    for (long t = 0; t < n; ++t) {
        const auto obs = sample_observation(scene, mix_seed(13, t), SampleMode::fast);
        if (*std::max_element(obs.values_db.begin(), obs.values_db.end()) > threshold) ++alarms;
    }
    const double rate = static_cast<double>(alarms) / static_cast<double>(n);
    log.add("SAR false alarm", rate >= 0.005 && rate <= 0.02,
            "measured " + num(rate) + " for delta 0.01 (accepted band [0.005, 0.02])");
}

void check_symmetric_duel(CheckLog& log) {
    // FBS and LBS at the same distance and power: the two ARSSS values are
    // exchangeable, so the naive rule cheats exactly half the time.
    Scene scene;
    scene.lbs_positions = {{0.0, 100.0}};
    scene.fbs_position = Point{100.0, 0.0};
    scene.lbs_power_dbm = 40.0;
    scene.fbs_power_dbm = 40.0;
    const auto est =
        estimate_scr(scene, {DetectorKind::naive, 0.01, 1}, 50'000, 17, SampleMode::fast);
    log.add("symmetric duel (simulated)", std::abs(est.p_hat - 0.5) <= 0.011,
            "naive SCR " + num(est.p_hat) + " vs 0.5 (tol 0.011)");
    const PriorModel prior = prior_from_scene(scene);
    const double analytic = scr_no_check(prior, prior.u_db[0]);
    log.add("symmetric duel (analytic)", std::abs(analytic - 0.5) <= 1e-6,
            "no-check SCR " + num(analytic) + " vs 0.5 (tol 1e-6)");
}

void check_analytic_vs_simulation(CheckLog& log) {
    const Scene base = default_fig2_scene();
    const PriorModel prior = prior_from_scene(base);
    const double u_fbs = prior.u_db[0];
    const Scene scene = gen_fig2_scene(u_fbs);
    const auto est =
        estimate_scr(scene, {DetectorKind::naive, 0.01, 1}, 20'000, 19, SampleMode::gaussian);
    const double analytic = scr_no_check(prior, u_fbs);
    const double tol = 3.0 * est.ci_half_width;
    log.add("no-check analytic vs simulated", std::abs(est.p_hat - analytic) <= tol,
            "simulated " + num(est.p_hat) + " vs analytic " + num(analytic) + " (tol " + num(tol) +
                ")");
}

void check_sar_bound(CheckLog& log) {
    const Scene base = default_fig2_scene();
    const PriorModel prior = prior_from_scene(base);
    const double delta = 0.01;
    const double threshold = sar_threshold(prior, delta);
    const double u_fbs = threshold;
    const Scene scene = gen_fig2_scene(u_fbs);
    const auto est =
        estimate_scr(scene, {DetectorKind::sar, delta, 1}, 20'000, 23, SampleMode::gaussian);
    const double bound = scr_sar_bound(prior, u_fbs, threshold, delta);
    log.add("SAR cheating-rate bound", est.p_hat <= bound + 2.0 * est.ci_half_width,
            "simulated " + num(est.p_hat) + " vs bound " + num(bound) + " (+2 CI " +
                num(2.0 * est.ci_half_width) + ")");
}

}  // namespace

int cmd_validate(std::ostream& out) {
    CheckLog log{out};
    check_fading_moments(log);
    check_arsss_moments(log);
    check_false_alarm(log);
    check_symmetric_duel(log);
    check_analytic_vs_simulation(log);
    check_sar_bound(log);
    out << (log.failures == 0 ? "all checks passed\n"
                              : std::to_string(log.failures) + " check(s) failed\n");
    return log.failures == 0 ? 0 : 1;
}

}  // namespace fbsdet
