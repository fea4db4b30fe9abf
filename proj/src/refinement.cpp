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

#include "gfml/refinement.hpp"

#include <cmath>
#include <stdexcept>

namespace gfml {

RefinementEstimate estimate_order(double coarse_step, double coarse_residual,
                                  double fine_step, double fine_residual,
                                  double floor) {
  if (!(coarse_step > fine_step && fine_step > 0.0)) {
    throw std::invalid_argument("estimate_order: need coarse_step > fine_step > 0");
  }
  RefinementEstimate e{coarse_step, coarse_residual, fine_step, fine_residual};
  if (fine_residual <= floor) {
    e.at_floor = true;
    return e;
  }
  e.order = std::log(coarse_residual / fine_residual) /
            std::log(coarse_step / fine_step);
  return e;
}

bool meets_order(const RefinementEstimate& e, double min_order) {
  return e.at_floor || e.order >= min_order;
}

}  // namespace gfml
