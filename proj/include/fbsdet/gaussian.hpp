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

namespace fbsdet {

double normal_pdf(double x, double mean, double sigma);
double normal_log_pdf(double x, double mean, double sigma);

// Standard normal CDF.
double normal_cdf(double x);

// Upper-tail probability of the standard normal, 1 - Phi(x).
double gaussian_q(double x);

// Inverse of gaussian_q on (0, 1), by bisection.
double gaussian_q_inv(double p);

}  // namespace fbsdet
