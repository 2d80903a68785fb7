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

#include "fbsdet/detectors.hpp"

#include <stdexcept>

#include "fbsdet/gaussian.hpp"

namespace fbsdet {

namespace {

void require_values(const ArsssObservation& obs, const char* who) {
    if (obs.values_db.empty())
        throw std::invalid_argument(std::string(who) + ": observation holds no values");
}

std::size_t argmax_lowest_index(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return best;
}

}  // namespace

Decision detect_naive(const ArsssObservation& obs) {
    require_values(obs, "detect_naive");
    Decision decision;
    decision.chosen = argmax_lowest_index(obs.values_db);
    return decision;
}

Decision detect_sar(const ArsssObservation& obs, double threshold_db) {
    require_values(obs, "detect_sar");
    Decision decision;
    decision.threshold_db = threshold_db;
    for (std::size_t i = 0; i < obs.values_db.size(); ++i) {
        if (obs.values_db[i] > threshold_db) continue;  // suspicious region
        if (!decision.chosen || obs.values_db[i] > obs.values_db[*decision.chosen])
            decision.chosen = i;
    }
    return decision;
}

Decision detect_ml(const ArsssObservation& obs, const PriorModel& model) {
    require_values(obs, "detect_ml");
    model.validate();
    Decision decision;
    decision.likelihoods.reserve(obs.values_db.size());
    for (double value : obs.values_db)
        decision.likelihoods.push_back(f_max_pdf(value, model));
    decision.chosen = argmax_lowest_index(decision.likelihoods);
    return decision;
}

Decision detect_cooperative(const std::array<double, 2>& ue_values_db,
                            const std::vector<std::array<double, 2>>& cn_values_db,
                            double ue_u_db, const std::vector<double>& cn_u_db,
                            double sigma_s_db) {
    if (cn_values_db.size() != cn_u_db.size())
        throw std::invalid_argument("detect_cooperative: CN report count mismatch");
    if (!(sigma_s_db > 0.0))
        throw std::invalid_argument("detect_cooperative: sigma_s_db must be > 0");
    Decision decision;
    decision.likelihoods.resize(2);
    for (std::size_t j = 0; j < 2; ++j) {
        double log_lik = normal_log_pdf(ue_values_db[j], ue_u_db, sigma_s_db);
        for (std::size_t i = 0; i < cn_values_db.size(); ++i)
            log_lik += normal_log_pdf(cn_values_db[i][j], cn_u_db[i], sigma_s_db);
        decision.likelihoods[j] = log_lik;
    }
    decision.chosen = decision.likelihoods[1] > decision.likelihoods[0] ? 1 : 0;
    return decision;
}

}  // namespace fbsdet
