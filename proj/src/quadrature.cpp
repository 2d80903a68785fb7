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

#include "fbsdet/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fbsdet {

void Quadrature::validate() const {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("quadrature: abs_tol must be > 0");
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("quadrature: rel_tol must be > 0");
    if (!(span_sigmas >= 6.0))
        throw std::invalid_argument("quadrature: span_sigmas must be >= 6");
    if (grid_points < 256)
        throw std::invalid_argument("quadrature: grid_points must be >= 256");
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, double a, double b, double fa, double fm,
              double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw std::runtime_error("integrate: refinement limit reached before convergence");
    return refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Quadrature& quad) {
    quad.validate();
    if (!(lo < hi))
        throw std::invalid_argument("integrate: requires lo < hi");
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = simpson(fa, fm, fb, lo, hi);
    const double tol = std::max(quad.abs_tol, quad.rel_tol * std::abs(whole));
    return refine(f, lo, hi, fa, fm, fb, whole, tol, 48);
}

}  // namespace fbsdet
