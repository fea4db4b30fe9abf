// Copyright 2026 The gfml Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GFML_REFINEMENT_HPP_
#define GFML_REFINEMENT_HPP_

namespace gfml {

// Residuals below this are treated as roundoff; an order estimate whose fine
// residual sits there passes regardless of the measured slope.
inline constexpr double kRoundoffFloor = 1e-12;

struct RefinementEstimate {
  double coarse_step = 0.0;
  double coarse_residual = 0.0;
  double fine_step = 0.0;
  double fine_residual = 0.0;
  double order = 0.0;  // log(r_c / r_f) / log(h_c / h_f); 0 when at_floor
  bool at_floor = false;
};

RefinementEstimate estimate_order(double coarse_step, double coarse_residual,
                                  double fine_step, double fine_residual,
                                  double floor = kRoundoffFloor);

bool meets_order(const RefinementEstimate& e, double min_order);

}  // namespace gfml

#endif  // GFML_REFINEMENT_HPP_
