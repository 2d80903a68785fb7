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

#include "fbsdet/priors.hpp"
#include "fbsdet/quadrature.hpp"

namespace fbsdet {

// All rates below are evaluated under the Gaussian model of the ARSSS
// values: legitimate value m ~ N(u_m, sigma_S^2), FBS value ~ N(u_fbs,
// sigma_S^2), all independent.

// Probability that the FBS value beats every legitimate value when the UE
// applies no check at all. Nondecreasing in u_fbs_db.
double scr_no_check(const PriorModel& model, double u_fbs_db, const Quadrature& quad = {});

// Upper bound on the SAR cheating rate: the mass of the FBS value landing
// above the strongest legitimate value yet below the threshold, plus delta.
double scr_sar_bound(const PriorModel& model, double u_fbs_db, double threshold_db,
                     double delta, const Quadrature& quad = {});

// Single-dominant-LBS acceptance region: true iff the Gaussian density
// around u1 is lower at t than at x, i.e. t lies outside the interval
// between x and its mirror image about u1.
bool omega_indicator_nearest(double t, double x, double u1_db);

// Cheating rate of the ML rule. The sub-level sets of f_max are classified
// numerically: the window [min u - span, max u + span] is cut into
// grid_points cells, a cell belongs to the acceptance region of x iff f_max
// at its midpoint is below f_max(x), and each cell contributes its exact
// Gaussian mass. Sub-level sets can be unions of several intervals once the
// means separate, which rules out simple root-finding on f_max.
double scr_ml(const PriorModel& model, double u_fbs_db, const Quadrature& quad = {});

// Same integral for a single dominant LBS using the closed-form region
// instead of the grid classification.
double scr_ml_nearest(double u1_db, double sigma_s_db, double u_fbs_db,
                      const Quadrature& quad = {});

}  // namespace fbsdet
