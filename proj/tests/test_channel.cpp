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

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "fbsdet/arsss.hpp"
#include "fbsdet/channel.hpp"
#include "fbsdet/units.hpp"

using namespace fbsdet;

namespace {

Scene single_lbs_scene() {
    Scene scene;
    scene.lbs_positions = {{0.0, 100.0}};
    scene.slots = 10;
    scene.ss_len = 8;
    return scene;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("link_distance basics") {
    CHECK(link_distance({0.0, 0.0}, {0.0, 100.0}) == 100.0);
    CHECK(link_distance({0.0, 0.0}, {3.0, 4.0}) == 5.0);
    CHECK(link_distance({-2.0, 7.0}, {-2.0, 7.0}) == 0.0);
    CHECK(link_distance({1.0, 2.0}, {4.0, -2.0}) == link_distance({4.0, -2.0}, {1.0, 2.0}));
}

TEST_CASE("draw_channel shapes and degenerate shadowing") {
    Scene scene = single_lbs_scene();
    scene.fbs_position = Point{50.0, 50.0};
    scene.cn_positions = {{5.0, 5.0}};
    scene.sigma_psi_sq = 0.0;
    const ChannelDraw draw = draw_channel(scene, 123);
    REQUIRE(draw.links.size() == 2);  // UE + 1 CN
    for (const auto& station : draw.links) {
        REQUIRE(station.size() == 2);  // LBS + FBS
        for (const auto& link : station) {
            CHECK(link.shadowing_db == 0.0);
            CHECK(link.small_scale.size() == 10);
        }
    }
}

TEST_CASE("draw_channel shadowing variance matches the configured value") {
    Scene scene = single_lbs_scene();
    scene.lbs_positions = {{0.0, 100.0}, {100.0, 0.0}};
    scene.sigma_psi_sq = 3.0;
    scene.slots = 1;
    double sum = 0.0;
    double sum_sq = 0.0;
    const long trials = 50'000;
    for (long t = 0; t < trials; ++t) {
        const ChannelDraw draw = draw_channel(scene, mix_seed(1, t));
        for (std::size_t b = 0; b < 2; ++b) {
            const double s = draw.link(0, b).shadowing_db;
            sum += s;
            sum_sq += s * s;
        }
    }
    const double n = 2.0 * static_cast<double>(trials);
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(var - 3.0) <= 0.1);
    CHECK(std::abs(mean) <= 0.05);
}

TEST_CASE("draw_channel small-scale power matches sigma_h_sq") {
    Scene scene = single_lbs_scene();
    scene.sigma_h_sq = 1.0;
    double sum_power = 0.0;
    long count = 0;
    for (long t = 0; t < 10'000; ++t) {
        const ChannelDraw draw = draw_channel(scene, mix_seed(2, t));
        for (const auto& h : draw.link(0, 0).small_scale) {
            sum_power += std::norm(h);
            ++count;
        }
    }
    CHECK(count == 100'000);
    CHECK(std::abs(sum_power / static_cast<double>(count) - 1.0) <= 0.02);
}

TEST_CASE("draw_channel is deterministic in the seed") {
    Scene scene = single_lbs_scene();
    scene.fbs_position = Point{50.0, 50.0};
    const ChannelDraw a = draw_channel(scene, 777);
    const ChannelDraw b = draw_channel(scene, 777);
    const ChannelDraw c = draw_channel(scene, 778);
    bool identical = true;
    bool all_equal_to_c = true;
    for (std::size_t s = 0; s < a.links.size(); ++s) {
        for (std::size_t l = 0; l < a.links[s].size(); ++l) {
            identical = identical && a.link(s, l).shadowing_db == b.link(s, l).shadowing_db;
            all_equal_to_c =
                all_equal_to_c && a.link(s, l).shadowing_db == c.link(s, l).shadowing_db;
            for (std::size_t k = 0; k < a.link(s, l).small_scale.size(); ++k)
                identical = identical && a.link(s, l).small_scale[k] == b.link(s, l).small_scale[k];
        }
    }
    CHECK(identical);
    CHECK_FALSE(all_equal_to_c);
}

TEST_CASE("make_ss_family: orthogonality and norms") {
    SUBCASE("two sequences of length two") {
        const SsFamily family = make_ss_family(2, 2);
        std::complex<double> dot{0.0, 0.0};
        double norm0 = 0.0;
        double norm1 = 0.0;
        for (std::size_t k = 0; k < 2; ++k) {
            dot += family[0][k] * std::conj(family[1][k]);
            norm0 += std::norm(family[0][k]);
            norm1 += std::norm(family[1][k]);
        }
        CHECK(std::abs(dot) <= 1e-12);
        CHECK(norm0 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(norm1 == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("gram matrix is tau times the identity") {
        const std::size_t count = 4;
        const std::size_t tau = 16;
        const SsFamily family = make_ss_family(count, tau);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                std::complex<double> dot{0.0, 0.0};
                for (std::size_t k = 0; k < tau; ++k)
                    dot += family[i][k] * std::conj(family[j][k]);
                const double expected = i == j ? static_cast<double>(tau) : 0.0;
                CHECK(std::abs(dot - expected) <= 1e-9);
            }
        }
    }
    SUBCASE("too few symbols is rejected") {
        CHECK_THROWS_AS(make_ss_family(4, 3), std::invalid_argument);
    }
}

TEST_CASE("synthesize_rx_slot with frozen randomness reproduces sqrt(P) z") {
    Scene scene;
    scene.lbs_positions = {{1.0, 0.0}};  // unit distance
    scene.lbs_power_dbm = 40.0;
    scene.sigma_psi_sq = 0.0;
    scene.slots = 1;
    scene.ss_len = 4;
    ChannelDraw draw;
    draw.links = {{LinkDraw{0.0, {std::complex<double>{1.0, 0.0}}}}};
    const SsFamily ss = make_ss_family(1, 4);
    Rng noise_rng(0);
    const auto y = synthesize_rx_slot(scene, draw, ss, 0, noise_rng);
    const double amplitude = std::sqrt(from_db(40.0));
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(y[k] - amplitude * ss[0][k]) <= 1e-9);
    }
}

TEST_CASE("noiseless received energy decomposes into per-link powers") {
    Scene scene;
    scene.lbs_positions = {{80.0, 0.0}, {0.0, 250.0}, {0.0, -250.0}};
    scene.fbs_position = Point{100.0, 100.0};
    scene.fbs_power_dbm = 47.0;
    scene.slots = 4;
    scene.ss_len = 16;
    const SsFamily ss = make_ss_family(scene.num_bs(), scene.ss_len);
    for (std::uint64_t seed : {11, 12, 13}) {
        const ChannelDraw draw = draw_channel(scene, seed);
        Rng noise_rng(0);
        for (int slot = 0; slot < scene.slots; ++slot) {
            const auto y = synthesize_rx_slot(scene, draw, ss, slot, noise_rng);
            for (std::size_t b = 0; b < scene.num_bs(); ++b) {
                const LinkDraw& link = draw.link(0, b);
                const double expected =
                    from_db(scene.bs_power_dbm(b) + link.shadowing_db) *
                    std::pow(link_distance(scene.ue_position, scene.bs_position(b)),
                             -scene.alpha) *
                    std::norm(link.small_scale[slot]);
                const double measured = matched_filter_power(y, ss[b]);
                CHECK(std::abs(measured - expected) <= 1e-9 * expected);
            }
        }
    }
}

TEST_CASE("single-source norm identity") {
    Scene scene = single_lbs_scene();
    scene.ss_len = 8;
    const SsFamily ss = make_ss_family(1, 8);
    const ChannelDraw draw = draw_channel(scene, 99);
    Rng noise_rng(0);
    const auto y = synthesize_rx_slot(scene, draw, ss, 0, noise_rng);
    double norm_sq = 0.0;
    for (const auto& v : y) norm_sq += std::norm(v);
    const LinkDraw& link = draw.link(0, 0);
    const double expected = from_db(scene.lbs_power_dbm + link.shadowing_db) *
                            std::pow(100.0, -scene.alpha) * std::norm(link.small_scale[0]);
    CHECK(norm_sq / 8.0 == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("scene validation rejects broken inputs") {
    Scene scene = single_lbs_scene();
    CHECK_NOTHROW(scene.validate());
    SUBCASE("no LBS") {
        scene.lbs_positions.clear();
        CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
    }
    SUBCASE("UE on top of a BS") {
        scene.ue_position = scene.lbs_positions[0];
        CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
    }
    SUBCASE("sequence shorter than the SS count") {
        scene.fbs_position = Point{50.0, 0.0};
        scene.ss_len = 1;
        CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
    }
    SUBCASE("nonpositive fading power") {
        scene.sigma_h_sq = 0.0;
        CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
    }
}

}  // TEST_SUITE
