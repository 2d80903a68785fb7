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

#include <vector>

#include "fbsdet/scene.hpp"

namespace fbsdet {

// The UE's location-derived Gaussian model of the legitimate ARSSS values:
// one mean per LBS and a deviation shared by every link.
struct PriorModel {
    std::vector<double> u_db;
    double sigma_s_db = 1.0;

    void validate() const;

    friend bool operator==(const PriorModel&, const PriorModel&) = default;
};

// Mean of lt(|h|^2) under Rayleigh fading with average power sigma_h_sq:
// lt(sigma_h_sq) minus the Euler-Mascheroni constant expressed in dB.
double log_fading_mean_db(double sigma_h_sq);

// Variance of lt(|h|^2); independent of the fading power.
double log_fading_var_db();

// Expected ARSSS of one link given transmit power, distance and path loss.
double arsss_mean(double power_dbm, double distance_m, double alpha, double sigma_h_sq);

// Standard deviation of the ARSSS: shadowing plus slot-averaged fading.
double arsss_std(double sigma_psi_sq, int slots);

// Density of the maximum of the M legitimate ARSSS values.
double f_max_pdf(double x, const PriorModel& model);

// Threshold S with P{max_m S_m > S} = delta, found by bisection on the
// exceedance probability. Decreasing in delta.
double sar_threshold(const PriorModel& model, double delta);

// Closed-form approximation when a single LBS dominates.
double sar_threshold_nearest(double u1_db, double sigma_s_db, double delta);

// Closed-form approximation when the UE sits at the shared coverage edge of
// num_edge_lbs equally strong LBSs.
double sar_threshold_edge(double u1_db, double sigma_s_db, double delta, int num_edge_lbs);

// Per-LBS means and the common deviation implied by a scene's geometry.
PriorModel prior_from_scene(const Scene& scene);

}  // namespace fbsdet
