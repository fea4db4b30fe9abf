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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gfml/refinement.hpp"

TEST(EstimateOrder, RecoversPowerLaws) {
  for (double p : {1.0, 2.0, 4.0}) {
    const auto e = gfml::estimate_order(0.2, 3.0 * std::pow(0.2, p), 0.1,
                                        3.0 * std::pow(0.1, p));
    EXPECT_NEAR(e.order, p, 1e-12);
    EXPECT_FALSE(e.at_floor);
    EXPECT_TRUE(gfml::meets_order(e, p - 0.01));
    EXPECT_FALSE(gfml::meets_order(e, p + 0.01));
  }
}

TEST(EstimateOrder, RoundoffFloorPasses) {
  const auto e = gfml::estimate_order(0.2, 3e-16, 0.1, 4e-16);
  EXPECT_TRUE(e.at_floor);
  EXPECT_EQ(e.order, 0.0);
  EXPECT_TRUE(gfml::meets_order(e, 2.0));
  const auto g = gfml::estimate_order(0.2, 1e-3, 0.1, 2e-3);
  EXPECT_FALSE(gfml::meets_order(g, 1.5));
}

TEST(EstimateOrder, RejectsBadSteps) {
  EXPECT_THROW(gfml::estimate_order(0.1, 1.0, 0.2, 1.0), std::invalid_argument);
  EXPECT_THROW(gfml::estimate_order(0.1, 1.0, 0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(gfml::estimate_order(0.1, 1.0, 0.0, 1.0), std::invalid_argument);
}
