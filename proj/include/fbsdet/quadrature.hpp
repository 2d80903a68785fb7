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

#include <functional>

namespace fbsdet {

// Tolerances and discretization controls shared by the SCR integrals.
struct Quadrature {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double span_sigmas = 8.0;  // half-width of integration windows, in units of sigma
    int grid_points = 4096;    // cells used for level-set classification

    void validate() const;
};

// Adaptive-Simpson integral of f over [lo, hi]. Throws std::runtime_error
// if the refinement limit is reached before the tolerance is met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Quadrature& quad = {});

}  // namespace fbsdet
