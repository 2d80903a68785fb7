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

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fbsdet/detectors.hpp"
#include "fbsdet/gaussian.hpp"

using namespace fbsdet;

namespace {

ArsssObservation make_obs(std::vector<double> values) {
    ArsssObservation obs;
    obs.values_db = std::move(values);
    return obs;
}

// Benchmark prior: one close LBS, two far ones.
const PriorModel kFig2Prior{{-19.59951539110682, -34.445016041509646, -34.445016041509646},
                            2.470331568475089};

}  // namespace

TEST_SUITE("detectors") {

TEST_CASE("detect_naive picks the strongest value") {
    CHECK(*detect_naive(make_obs({-20.0, -34.0, -34.0, -10.0})).chosen == 3);
    CHECK(*detect_naive(make_obs({-20.0, -20.0})).chosen == 0);  // ties go low
    SUBCASE("argmax is shift invariant") {
        std::mt19937_64 gen(5);
        std::normal_distribution<double> noise(-20.0, 5.0);
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<double> values(4);
            for (double& v : values) v = noise(gen);
            const auto base = detect_naive(make_obs(values));
            for (double& v : values) v += 7.0;
            CHECK(*detect_naive(make_obs(values)).chosen == *base.chosen);
        }
    }
    CHECK_THROWS_AS(detect_naive(ArsssObservation{}), std::invalid_argument);
}

TEST_CASE("detect_sar picks the strongest survivor") {
    SUBCASE("values above the threshold are suspected") {
        const auto decision = detect_sar(make_obs({-15.0, -34.0, -34.0, -5.0}), -13.85);
        CHECK(*decision.chosen == 0);
        CHECK(*decision.threshold_db == -13.85);
    }
    SUBCASE("everything suspected yields no safe SS") {
        const auto decision = detect_sar(make_obs({-5.0, -3.0}), -13.85);
        CHECK(decision.no_safe_ss());
    }
    SUBCASE("a sub-threshold strongest value wins even if it is the FBS") {
        const auto decision = detect_sar(make_obs({-20.0, -34.0, -34.0, -14.0}), -13.85);
        CHECK(*decision.chosen == 3);
    }
    SUBCASE("a value above the threshold never beats a surviving one") {
        std::mt19937_64 gen(6);
        std::normal_distribution<double> noise(-20.0, 5.0);
        for (int rep = 0; rep < 500; ++rep) {
            std::vector<double> values(4);
            for (double& v : values) v = noise(gen);
            const double threshold = noise(gen);
            const auto decision = detect_sar(make_obs(values), threshold);
            if (decision.no_safe_ss()) {
                for (double v : values) CHECK(v > threshold);
            } else {
                CHECK(values[*decision.chosen] <= threshold);
            }
        }
    }
}

TEST_CASE("detect_ml maximizes the strongest-legitimate density") {
    SUBCASE("single-LBS model peaks at its mean") {
        const PriorModel one{{-20.0}, 2.470331568475089};
        CHECK(*detect_ml(make_obs({-20.0, -5.0}), one).chosen == 0);
        // equidistant values tie in density; the tie goes to the lower index
        CHECK(*detect_ml(make_obs({-26.0, -14.0}), one).chosen == 0);
    }
    SUBCASE("benchmark example") {
        const std::vector<double> values{-19.0, -35.1, -33.9, -12.0};
        const auto decision = detect_ml(make_obs(values), kFig2Prior);
        CHECK(*decision.chosen == 0);
        REQUIRE(decision.likelihoods.size() == 4);
        // diagnostics carry f_max at each observed value
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(decision.likelihoods[i] ==
                  doctest::Approx(f_max_pdf(values[i], kFig2Prior)).epsilon(1e-12));
    }
    SUBCASE("joint translation invariance") {
        std::mt19937_64 gen(7);
        std::normal_distribution<double> noise(-25.0, 6.0);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> values(4);
            for (double& v : values) v = noise(gen);
            const auto base = detect_ml(make_obs(values), kFig2Prior);
            PriorModel shifted = kFig2Prior;
            const double c = 11.5;
            for (double& u : shifted.u_db) u += c;
            for (double& v : values) v += c;
            CHECK(*detect_ml(make_obs(values), shifted).chosen == *base.chosen);
        }
    }
}

TEST_CASE("detect_cooperative") {
    const double sigma = 1.0;
    SUBCASE("no CNs compares the UE densities alone") {
        const auto decision = detect_cooperative({-19.0, -12.0}, {}, -20.0, {}, sigma);
        CHECK(*decision.chosen == 0);
        const auto flipped = detect_cooperative({-28.0, -20.5}, {}, -20.0, {}, sigma);
        CHECK(*flipped.chosen == 1);
    }
    SUBCASE("a CN with symmetric evidence does not change the decision") {
        // CN values equidistant from its mean contribute the same factor to
        // both candidates.
        const auto without = detect_cooperative({-19.0, -21.5}, {}, -20.0, {}, sigma);
        const auto with_neutral =
            detect_cooperative({-19.0, -21.5}, {{-31.0, -29.0}}, -20.0, {-30.0}, sigma);
        CHECK(*with_neutral.chosen == *without.chosen);
    }
    SUBCASE("two CNs outvote the UE's small margin") {
        // UE favors the second SS by 0.5 in log density; each CN favors the
        // first by 1.0.
        const std::array<double, 2> ue{1.0, 0.0};  // ue mean 0
        const std::vector<std::array<double, 2>> cn{{0.0, std::sqrt(2.0)},
                                                    {0.0, std::sqrt(2.0)}};  // cn means 0
        const auto decision = detect_cooperative(ue, cn, 0.0, {0.0, 0.0}, sigma);
        CHECK(*decision.chosen == 0);
        CHECK(decision.likelihoods[0] > decision.likelihoods[1]);
        CHECK(decision.likelihoods[0] - decision.likelihoods[1] == doctest::Approx(1.5));
    }
    SUBCASE("report count mismatch is rejected") {
        CHECK_THROWS_AS(detect_cooperative({0.0, 1.0}, {{0.0, 1.0}}, 0.0, {}, sigma),
                        std::invalid_argument);
    }
    SUBCASE("log-domain fusion agrees with the direct product") {
        std::mt19937_64 gen(8);
        std::normal_distribution<double> noise(-20.0, 3.0);
        for (int rep = 0; rep < 10'000; ++rep) {
            const std::array<double, 2> ue{noise(gen), noise(gen)};
            std::vector<std::array<double, 2>> cn(2);
            std::vector<double> cn_u(2);
            for (std::size_t i = 0; i < 2; ++i) {
                cn[i] = {noise(gen), noise(gen)};
                cn_u[i] = noise(gen);
            }
            const double ue_u = noise(gen);
            const auto decision = detect_cooperative(ue, cn, ue_u, cn_u, 2.47);
            double product[2];
            for (std::size_t j = 0; j < 2; ++j) {
                product[j] = normal_pdf(ue[j], ue_u, 2.47);
                for (std::size_t i = 0; i < 2; ++i)
                    product[j] *= normal_pdf(cn[i][j], cn_u[i], 2.47);
            }
            const std::size_t direct = product[1] > product[0] ? 1 : 0;
            CHECK(*decision.chosen == direct);
        }
    }
    SUBCASE("neutral CNs reproduce the single-LBS ML rule") {
        std::mt19937_64 gen(9);
        std::normal_distribution<double> noise(-20.0, 3.0);
        const PriorModel one{{-20.0}, 2.47};
        for (int rep = 0; rep < 1'000; ++rep) {
            const std::array<double, 2> ue{noise(gen), noise(gen)};
            // CN evidence identical for both SSs
            const double v = noise(gen);
            const std::vector<std::array<double, 2>> cn{{v, v}};
            const auto coop = detect_cooperative(ue, cn, -20.0, {-21.0}, 2.47);
            const auto ml = detect_ml(make_obs({ue[0], ue[1]}), one);
            CHECK(*coop.chosen == *ml.chosen);
        }
    }
}

}  // TEST_SUITE
