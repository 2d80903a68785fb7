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
#include <complex>
#include <vector>

#include "doctest.h"
#include "fbsdet/arsss.hpp"
#include "fbsdet/priors.hpp"
#include "fbsdet/units.hpp"

using namespace fbsdet;

namespace {

Scene fig2_like_scene() {
    Scene scene;
    scene.lbs_positions = {{80.0, 0.0}, {0.0, 250.0}, {0.0, -250.0}};
    scene.fbs_position = Point{100.0, 100.0};
    scene.fbs_power_dbm = 44.0;
    scene.ss_len = 16;
    return scene;
}

// Signal-domain ARSSS for one BS, composed from the low-level pieces.
double arsss_via_signal_path(const Scene& scene, const ChannelDraw& draw, std::size_t bs,
                             std::size_t station = 0) {
    const SsFamily ss = make_ss_family(scene.num_bs(), scene.ss_len);
    Rng noise_rng(0);  // unused when the scene is noiseless
    std::vector<double> powers(scene.slots);
    for (int l = 0; l < scene.slots; ++l) {
        const auto y = synthesize_rx_slot(scene, draw, ss, l, noise_rng, station);
        powers[l] = matched_filter_power(y, ss[bs]);
    }
    return arsss_from_powers(powers);
}

}  // namespace

TEST_SUITE("arsss") {

TEST_CASE("matched_filter_power basics") {
    const SsFamily family = make_ss_family(2, 8);
    SUBCASE("own sequence gives unit power") {
        CHECK(matched_filter_power(family[0], family[0]) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("scaling is quadratic") {
        std::vector<std::complex<double>> y(8);
        const std::complex<double> c{0.0, 2.5};
        for (std::size_t k = 0; k < 8; ++k) y[k] = c * family[0][k];
        CHECK(matched_filter_power(y, family[0]) == doctest::Approx(6.25).epsilon(1e-12));
    }
    SUBCASE("orthogonal input gives zero") {
        CHECK(matched_filter_power(family[1], family[0]) <= 1e-12);
    }
    SUBCASE("length mismatch is rejected") {
        std::vector<std::complex<double>> y(7);
        CHECK_THROWS_AS(matched_filter_power(y, family[0]), std::invalid_argument);
    }
}

TEST_CASE("arsss_from_powers") {
    CHECK(arsss_from_powers(std::array{1.0, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(arsss_from_powers(std::array{10.0, 1000.0}) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(std::abs(arsss_from_powers(std::array{0.5, 2.0})) <= 1e-12);
    CHECK_THROWS_AS(arsss_from_powers(std::array{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(arsss_from_powers(std::array{-1.0}), std::domain_error);
    CHECK_THROWS_AS(arsss_from_powers(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("arsss_fast") {
    SUBCASE("unit gains reproduce the link mean") {
        const std::vector<std::complex<double>> gains(5, {1.0, 0.0});
        CHECK(arsss_fast(-7.25, gains) == doctest::Approx(-7.25).epsilon(1e-12));
    }
    SUBCASE("single slot with |h|^2 = 0.1") {
        const std::vector<std::complex<double>> gains{{std::sqrt(0.1), 0.0}};
        CHECK(arsss_fast(-5.0, gains) == doctest::Approx(-15.0).epsilon(1e-12));
    }
    SUBCASE("zero gain is rejected") {
        const std::vector<std::complex<double>> gains{{0.0, 0.0}};
        CHECK_THROWS_AS(arsss_fast(0.0, gains), std::domain_error);
    }
}

TEST_CASE("fast path equals the composed signal path on random draws") {
    Scene scene = fig2_like_scene();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ChannelDraw draw = draw_channel(scene, mix_seed(31, seed));
        const ArsssObservation fast = observe(scene, draw, ObserveMode::fast);
        for (std::size_t b = 0; b < scene.num_bs(); ++b) {
            const double via_signal = arsss_via_signal_path(scene, draw, b);
            CHECK(std::abs(fast.values_db[b] - via_signal) <= 1e-9);

            // arsss_fast applied directly to the draw agrees too
            const double link_mean =
                scene.bs_power_dbm(b) + draw.link(0, b).shadowing_db -
                scene.alpha * to_db(link_distance(scene.ue_position, scene.bs_position(b)));
            CHECK(std::abs(arsss_fast(link_mean, draw.link(0, b).small_scale) - via_signal) <=
                  1e-9);
        }
    }
}

TEST_CASE("observe: signal and fast modes agree without noise, CN values included") {
    Scene scene = fig2_like_scene();
    scene.lbs_positions = {{0.0, 100.0}};
    scene.cn_positions = {{10.0, 0.0}, {0.0, -20.0}};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ChannelDraw draw = draw_channel(scene, mix_seed(32, seed));
        const ArsssObservation fast = observe(scene, draw, ObserveMode::fast);
        const ArsssObservation signal = observe(scene, draw, ObserveMode::signal);
        REQUIRE(fast.values_db.size() == 2);
        REQUIRE(fast.per_cn_values_db.size() == 2);
        for (std::size_t b = 0; b < 2; ++b)
            CHECK(std::abs(fast.values_db[b] - signal.values_db[b]) <= 1e-9);
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK(std::abs(fast.per_cn_values_db[c][0] - signal.per_cn_values_db[c][0]) <= 1e-9);
            CHECK(std::abs(fast.per_cn_values_db[c][1] - signal.per_cn_values_db[c][1]) <= 1e-9);
        }
    }
}

TEST_CASE("observe: receiver noise fades as the sequence grows") {
    Scene scene;
    scene.lbs_positions = {{1.0, 0.0}};
    scene.lbs_power_dbm = 0.0;
    scene.noise_power_mw = 0.05;
    scene.slots = 3;
    std::vector<double> gaps;
    for (int tau : {16, 256, 4096}) {
        scene.ss_len = tau;
        double total_gap = 0.0;
        const int draws = 100;
        for (int seed = 0; seed < draws; ++seed) {
            const ChannelDraw draw = draw_channel(scene, mix_seed(33, seed));
            const ArsssObservation fast = observe(scene, draw, ObserveMode::fast);
            const ArsssObservation signal = observe(scene, draw, ObserveMode::signal);
            total_gap += std::abs(fast.values_db[0] - signal.values_db[0]);
        }
        gaps.push_back(total_gap / draws);
    }
    // the effective noise power falls as 1/tau, the dB gap as 1/sqrt(tau)
    CHECK(gaps[1] < gaps[0]);
    CHECK(gaps[2] < gaps[1]);
    CHECK(gaps[2] < gaps[0] / 8.0);
}

TEST_CASE("observe: CN values only appear with both CNs and an FBS") {
    Scene scene = fig2_like_scene();
    SUBCASE("no CNs") {
        const ChannelDraw draw = draw_channel(scene, 1);
        CHECK(observe(scene, draw, ObserveMode::fast).per_cn_values_db.empty());
    }
    SUBCASE("CNs but no FBS") {
        scene.fbs_position.reset();
        scene.cn_positions = {{5.0, 5.0}};
        const ChannelDraw draw = draw_channel(scene, 1);
        CHECK(observe(scene, draw, ObserveMode::fast).per_cn_values_db.empty());
    }
}

TEST_CASE("sample moments match the location-derived model") {
    Scene scene = fig2_like_scene();
    scene.fbs_position.reset();
    const PriorModel prior = prior_from_scene(scene);
    const long n = 100'000;

    SUBCASE("ten slots") {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (long t = 0; t < n; ++t) {
            const ChannelDraw draw = draw_channel(scene, mix_seed(34, t));
            const double s = observe(scene, draw, ObserveMode::fast).values_db[0];
            sum += s;
            sum_sq += s * s;
        }
        const double mean = sum / n;
        const double var = sum_sq / n - mean * mean;
        const double sigma = prior.sigma_s_db;
        CHECK(std::abs(mean - prior.u_db[0]) <= 3.0 * sigma / std::sqrt(double(n)));
        CHECK(std::abs(var - sigma * sigma) <= 0.09);
    }
    SUBCASE("a single slot: the mean identity is not asymptotic") {
        scene.slots = 1;
        const PriorModel prior_l1 = prior_from_scene(scene);
        double sum = 0.0;
        for (long t = 0; t < n; ++t) {
            const ChannelDraw draw = draw_channel(scene, mix_seed(35, t));
            sum += observe(scene, draw, ObserveMode::fast).values_db[0];
        }
        const double mean = sum / n;
        CHECK(std::abs(mean - prior_l1.u_db[0]) <=
              3.0 * prior_l1.sigma_s_db / std::sqrt(double(n)));
    }
}

TEST_CASE("adding c dB of transmit power shifts the fast-mode value by exactly c") {
    Scene scene = fig2_like_scene();
    Scene boosted = scene;
    boosted.fbs_power_dbm += 7.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ChannelDraw draw = draw_channel(scene, mix_seed(36, seed));
        const auto base = observe(scene, draw, ObserveMode::fast);
        const auto shifted = observe(boosted, draw, ObserveMode::fast);
        const std::size_t fbs = scene.fbs_index();
        CHECK(std::abs((shifted.values_db[fbs] - base.values_db[fbs]) - 7.0) <= 1e-12);
        CHECK(shifted.values_db[0] == base.values_db[0]);
    }
}

}  // TEST_SUITE
