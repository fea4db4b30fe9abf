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

// Internal helpers for separable linear interpolation.

#ifndef GFML_SRC_INTERP_HPP_
#define GFML_SRC_INTERP_HPP_

#include <cmath>
#include <complex>
#include <cstddef>

#include "gfml/grid.hpp"

namespace gfml::detail {

// Distance (in index units) under which a coordinate snaps to a node.
inline constexpr double kNodeSnap = 1e-9;

// Up to two (index, weight) taps along one axis.
struct Taps {
  std::size_t index[2] = {0, 0};
  double weight[2] = {0.0, 0.0};
  int count = 0;  // 0 = outside the axis range
};

inline Taps locate(const AxisSpec& a, double c) {
  Taps t;
  const double u = (c - a.min) / a.step;
  const double last = static_cast<double>(a.count - 1);
  const double r = std::nearbyint(u);
  if (std::abs(u - r) <= kNodeSnap) {
    if (r < 0.0 || r > last) return t;
    t.index[0] = static_cast<std::size_t>(r);
    t.weight[0] = 1.0;
    t.count = 1;
    return t;
  }
  if (!(u > 0.0 && u < last)) return t;
  const double fl = std::floor(u);
  const double frac = u - fl;
  t.index[0] = static_cast<std::size_t>(fl);
  t.index[1] = t.index[0] + 1;
  t.weight[0] = 1.0 - frac;
  t.weight[1] = frac;
  t.count = 2;
  return t;
}

// Tensor-product combination of per-axis taps over a row-major array with the
// given strides. Returns 0 if any axis is outside.
template <std::size_t D, typename T>
inline T combine_taps(const T* values, const std::size_t* strides,
                      const Taps* taps) {
  for (std::size_t d = 0; d < D; ++d) {
    if (taps[d].count == 0) return T{};
  }
  // Iterative odometer over the tap combinations; order is fixed.
  int pos[D] = {};
  T acc{};
  for (;;) {
    double w = 1.0;
    std::size_t off = 0;
    for (std::size_t d = 0; d < D; ++d) {
      w *= taps[d].weight[pos[d]];
      off += taps[d].index[pos[d]] * strides[d];
    }
    acc += w * values[off];
    std::size_t d = D;
    for (;;) {
      if (d == 0) return acc;
      --d;
      if (++pos[d] < taps[d].count) break;
      pos[d] = 0;
    }
  }
}

}  // namespace gfml::detail

#endif  // GFML_SRC_INTERP_HPP_
