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

#include "fbsdet/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fbsdet {

double normal_pdf(double x, double mean, double sigma) {
    const double z = (x - mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double normal_log_pdf(double x, double mean, double sigma) {
    const double z = (x - mean) / sigma;
    return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double gaussian_q(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double gaussian_q_inv(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("gaussian_q_inv: p must lie in (0, 1)");
    // gaussian_q spans far past double precision inside [-40, 40].
    double lo = -40.0;
    double hi = 40.0;
    for (int i = 0; i < 140; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gaussian_q(mid) > p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace fbsdet
