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

#include "fbsdet/priors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fbsdet/gaussian.hpp"
#include "fbsdet/units.hpp"

namespace fbsdet {

namespace {

constexpr double k_db_per_nat = 10.0 / std::numbers::ln10;

// Euler-Mascheroni constant in dB. lt(|h|^2) for Rayleigh fading is a
// log-exponential variable whose mean sits this far below lt(sigma_h^2).
constexpr double k_gamma_db = k_db_per_nat * std::numbers::egamma;

double exceed_probability(const PriorModel& model, double threshold_db) {
    double survive = 1.0;
    for (double u : model.u_db)
        survive *= 1.0 - gaussian_q((threshold_db - u) / model.sigma_s_db);
    return 1.0 - survive;
}

}  // namespace

void PriorModel::validate() const {
    if (u_db.empty())
        throw std::invalid_argument("prior model: u_db must not be empty");
    if (!(sigma_s_db > 0.0))
        throw std::invalid_argument("prior model: sigma_s_db must be > 0");
}

double log_fading_mean_db(double sigma_h_sq) {
    if (!(sigma_h_sq > 0.0))
        throw std::invalid_argument("log_fading_mean_db: sigma_h_sq must be > 0");
    return to_db(sigma_h_sq) - k_gamma_db;
}

double log_fading_var_db() {
    return k_db_per_nat * k_db_per_nat * std::numbers::pi * std::numbers::pi / 6.0;
}

double arsss_mean(double power_dbm, double distance_m, double alpha, double sigma_h_sq) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("arsss_mean: distance must be > 0");
    return power_dbm + log_fading_mean_db(sigma_h_sq) - alpha * to_db(distance_m);
}

double arsss_std(double sigma_psi_sq, int slots) {
    if (slots < 1)
        throw std::invalid_argument("arsss_std: slots must be >= 1");
    if (!(sigma_psi_sq >= 0.0))
        throw std::invalid_argument("arsss_std: sigma_psi_sq must be >= 0");
    return std::sqrt(sigma_psi_sq + log_fading_var_db() / static_cast<double>(slots));
}

double f_max_pdf(double x, const PriorModel& model) {
    model.validate();
    const double sigma = model.sigma_s_db;
    const std::size_t m_count = model.u_db.size();
    double total = 0.0;
    for (std::size_t k = 0; k < m_count; ++k) {
        double term = normal_pdf(x, model.u_db[k], sigma);
        for (std::size_t m = 0; m < m_count; ++m) {
            if (m != k) term *= normal_cdf((x - model.u_db[m]) / sigma);
        }
        total += term;
    }
    return total;
}

double sar_threshold(const PriorModel& model, double delta) {
    model.validate();
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("sar_threshold: delta must lie in (0, 1)");
    const auto [u_min, u_max] = std::minmax_element(model.u_db.begin(), model.u_db.end());
    double lo = *u_min - 10.0 * model.sigma_s_db;
    double hi = *u_max + 10.0 * model.sigma_s_db;
    // The exceedance probability decreases in the threshold.
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        const double p = exceed_probability(model, mid);
        if (std::abs(p - delta) <= 1e-9) break;
        (p > delta ? lo : hi) = mid;
    }
    return mid;
}

double sar_threshold_nearest(double u1_db, double sigma_s_db, double delta) {
    if (!(sigma_s_db > 0.0))
        throw std::invalid_argument("sar_threshold_nearest: sigma_s_db must be > 0");
    return u1_db + sigma_s_db * gaussian_q_inv(delta);
}

double sar_threshold_edge(double u1_db, double sigma_s_db, double delta, int num_edge_lbs) {
    if (num_edge_lbs < 1)
        throw std::invalid_argument("sar_threshold_edge: num_edge_lbs must be >= 1");
    if (num_edge_lbs == 1) return sar_threshold_nearest(u1_db, sigma_s_db, delta);
    if (!(sigma_s_db > 0.0))
        throw std::invalid_argument("sar_threshold_edge: sigma_s_db must be > 0");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("sar_threshold_edge: delta must lie in (0, 1)");
    const double per_lbs = 1.0 - std::pow(1.0 - delta, 1.0 / static_cast<double>(num_edge_lbs));
    return u1_db + sigma_s_db * gaussian_q_inv(per_lbs);
}

PriorModel prior_from_scene(const Scene& scene) {
    scene.validate();
    PriorModel model;
    model.u_db.reserve(scene.num_lbs());
    for (const Point& lbs : scene.lbs_positions) {
        model.u_db.push_back(arsss_mean(scene.lbs_power_dbm,
                                        link_distance(scene.ue_position, lbs), scene.alpha,
                                        scene.sigma_h_sq));
    }
    model.sigma_s_db = arsss_std(scene.sigma_psi_sq, scene.slots);
    return model;
}

}  // namespace fbsdet
