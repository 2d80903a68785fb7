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

#include "fbsdet/scr_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fbsdet/gaussian.hpp"

namespace fbsdet {

namespace {

// Integral of phi(t) * prod_m Phi(t + (u_fbs - u_m)/sigma) over [t_lo, t_hi]:
// the chance that a standardized FBS value in that range beats every
// legitimate value.
double win_probability_integral(const PriorModel& model, double u_fbs_db, double t_lo,
                                double t_hi, const Quadrature& quad) {
    const double sigma = model.sigma_s_db;
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    auto integrand = [&](double t) {
        double value = norm * std::exp(-0.5 * t * t);
        for (double u : model.u_db) value *= normal_cdf(t + (u_fbs_db - u) / sigma);
        return value;
    };
    return integrate(integrand, t_lo, t_hi, quad);
}

// Pieces of the real line ordered by their f_max level, with the exact
// Gaussian mass of each piece per legitimate value. Membership queries for
// the sub-level set {t : f_max(t) < v} then reduce to a binary search over
// prefix sums.
struct LevelSetTable {
    std::vector<double> levels;                   // sorted ascending
    std::vector<std::vector<double>> mass_prefix;  // [m][k]: mass of the k lowest pieces

    double acceptance_product(double level) const {
        const auto it = std::lower_bound(levels.begin(), levels.end(), level);
        const std::size_t k = static_cast<std::size_t>(it - levels.begin());
        double product = 1.0;
        for (const auto& prefix : mass_prefix) product *= prefix[k];
        return product;
    }
};

LevelSetTable build_level_set_table(const PriorModel& model, const Quadrature& quad) {
    const double sigma = model.sigma_s_db;
    const auto [u_min, u_max] = std::minmax_element(model.u_db.begin(), model.u_db.end());
    const double win_lo = *u_min - quad.span_sigmas * sigma;
    const double win_hi = *u_max + quad.span_sigmas * sigma;
    const std::size_t cells = static_cast<std::size_t>(quad.grid_points);
    const double width = (win_hi - win_lo) / static_cast<double>(cells);
    const std::size_t m_count = model.u_db.size();

    // Grid cells classified by the density at their midpoint, plus the two
    // semi-infinite tails classified by the density at the window edges.
    const std::size_t pieces = cells + 2;
    std::vector<double> level(pieces);
    std::vector<std::vector<double>> mass(m_count, std::vector<double>(pieces));
    for (std::size_t c = 0; c < cells; ++c) {
        const double a = win_lo + static_cast<double>(c) * width;
        const double b = a + width;
        level[c] = f_max_pdf(0.5 * (a + b), model);
        for (std::size_t m = 0; m < m_count; ++m) {
            mass[m][c] = normal_cdf((b - model.u_db[m]) / sigma) -
                         normal_cdf((a - model.u_db[m]) / sigma);
        }
    }
    level[cells] = f_max_pdf(win_lo, model);
    level[cells + 1] = f_max_pdf(win_hi, model);
    for (std::size_t m = 0; m < m_count; ++m) {
        mass[m][cells] = normal_cdf((win_lo - model.u_db[m]) / sigma);
        mass[m][cells + 1] = gaussian_q((win_hi - model.u_db[m]) / sigma);
    }

    std::vector<std::size_t> order(pieces);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });

    LevelSetTable table;
    table.levels.resize(pieces);
    table.mass_prefix.assign(m_count, std::vector<double>(pieces + 1, 0.0));
    for (std::size_t k = 0; k < pieces; ++k) {
        table.levels[k] = level[order[k]];
        for (std::size_t m = 0; m < m_count; ++m)
            table.mass_prefix[m][k + 1] = table.mass_prefix[m][k] + mass[m][order[k]];
    }
    return table;
}

}  // namespace

double scr_no_check(const PriorModel& model, double u_fbs_db, const Quadrature& quad) {
    model.validate();
    quad.validate();
    const double value =
        win_probability_integral(model, u_fbs_db, -quad.span_sigmas, quad.span_sigmas, quad);
    return std::clamp(value, 0.0, 1.0);
}

double scr_sar_bound(const PriorModel& model, double u_fbs_db, double threshold_db, double delta,
                     const Quadrature& quad) {
    model.validate();
    quad.validate();
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("scr_sar_bound: delta must lie in (0, 1)");
    const double t_hi =
        std::min((threshold_db - u_fbs_db) / model.sigma_s_db, quad.span_sigmas);
    double integral = 0.0;
    if (t_hi > -quad.span_sigmas)
        integral = win_probability_integral(model, u_fbs_db, -quad.span_sigmas, t_hi, quad);
    return std::clamp(integral + delta, 0.0, 1.0);
}

bool omega_indicator_nearest(double t, double x, double u1_db) {
    const double mirror = 2.0 * u1_db - x;
    if (x < u1_db) return t < x || t > mirror;
    return t < mirror || t > x;
}

double scr_ml(const PriorModel& model, double u_fbs_db, const Quadrature& quad) {
    model.validate();
    quad.validate();
    const double sigma = model.sigma_s_db;
    const LevelSetTable table = build_level_set_table(model, quad);

    // Outer integral against the FBS density: composite Simpson over an even
    // number of intervals. The integrand carries small level-set steps, so a
    // fixed fine grid behaves better than adaptive refinement here.
    const int nodes = quad.grid_points + quad.grid_points % 2;
    const double x_lo = u_fbs_db - quad.span_sigmas * sigma;
    const double x_hi = u_fbs_db + quad.span_sigmas * sigma;
    const double h = (x_hi - x_lo) / static_cast<double>(nodes);
    double acc = 0.0;
    for (int i = 0; i <= nodes; ++i) {
        const double x = x_lo + static_cast<double>(i) * h;
        const double weight = (i == 0 || i == nodes) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += weight * normal_pdf(x, u_fbs_db, sigma) *
               table.acceptance_product(f_max_pdf(x, model));
    }
    return std::clamp(acc * h / 3.0, 0.0, 1.0);
}

double scr_ml_nearest(double u1_db, double sigma_s_db, double u_fbs_db, const Quadrature& quad) {
    if (!(sigma_s_db > 0.0))
        throw std::invalid_argument("scr_ml_nearest: sigma_s_db must be > 0");
    quad.validate();
    auto integrand = [&](double x) {
        // Mass of the legitimate value over the acceptance region of x: the
        // two tails outside the interval between x and its mirror about u1.
        const double mirror = 2.0 * u1_db - x;
        const double lo_end = std::min(x, mirror);
        const double hi_end = std::max(x, mirror);
        const double region_mass = normal_cdf((lo_end - u1_db) / sigma_s_db) +
                                   gaussian_q((hi_end - u1_db) / sigma_s_db);
        return normal_pdf(x, u_fbs_db, sigma_s_db) * region_mass;
    };
    const double x_lo = u_fbs_db - quad.span_sigmas * sigma_s_db;
    const double x_hi = u_fbs_db + quad.span_sigmas * sigma_s_db;
    // The region mass has a kink at u1; split there for the adaptive rule.
    double total = 0.0;
    if (u1_db > x_lo && u1_db < x_hi) {
        total = integrate(integrand, x_lo, u1_db, quad) + integrate(integrand, u1_db, x_hi, quad);
    } else {
        total = integrate(integrand, x_lo, x_hi, quad);
    }
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace fbsdet
