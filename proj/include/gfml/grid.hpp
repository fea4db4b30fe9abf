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

#ifndef GFML_GRID_HPP_
#define GFML_GRID_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "gfml/group.hpp"

namespace gfml {

// Kind codes are part of the GFML container format; do not renumber.
enum class AxisKind : std::uint8_t {
  kLinearN = 0,       // Heisenberg coordinate n_i
  kLogDilation = 1,   // t_i = log a_i
  kFrequencyN = 2,    // xi_i, dual to n_i
  kFrequencyT = 3,    // lambda_i, dual to t_i
};

struct AxisSpec {
  std::size_t count = 2;
  double min = 0.0;
  double step = 1.0;
  AxisKind kind = AxisKind::kLinearN;

  double node(std::size_t j) const { return min + static_cast<double>(j) * step; }
  double max() const { return node(count - 1); }
  // True when the origin is a lattice point of the (infinite) axis lattice,
  // i.e. min / step is an integer.
  bool origin_on_lattice() const;

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

inline constexpr std::size_t kDims = 6;

// Six axes in the fixed order (n3, n2, n1, t1, t2, t3) for spatial grids or
// (xi3, xi2, xi1, lambda1, lambda2, lambda3) for frequency grids. Row-major
// layout with the last axis fastest.
class GridSpec {
 public:
  // Throws GridError on count < 2, non-positive or non-finite step,
  // non-finite min, or a kind pattern that is neither all-spatial nor
  // all-frequency in the fixed order.
  explicit GridSpec(const std::array<AxisSpec, kDims>& axes);

  // Symmetric box [-halfwidth, halfwidth] with `points` nodes on every axis.
  static GridSpec Uniform(std::size_t points, double halfwidth);
  static GridSpec Symmetric(const std::array<std::size_t, kDims>& counts,
                            const std::array<double, kDims>& halfwidths);
  // Nodes min_i + j step_i with min_i = -origin_index_i * step_i so that the
  // chart origin (the group identity) is node origin_index_i.
  static GridSpec Lattice(const std::array<std::size_t, kDims>& counts,
                          const std::array<double, kDims>& steps,
                          const std::array<std::size_t, kDims>& origin_index);

  const std::array<AxisSpec, kDims>& axes() const { return axes_; }
  const AxisSpec& axis(std::size_t i) const { return axes_[i]; }
  std::size_t size() const { return size_; }
  const std::array<std::size_t, kDims>& strides() const { return strides_; }
  bool is_spatial() const { return axes_[0].kind == AxisKind::kLinearN; }
  bool is_frequency() const { return !is_spatial(); }

  // Product of the axis steps: the uniform Haar weight in the chart.
  double cell_volume() const;

  std::array<std::size_t, kDims> unflatten(std::size_t flat) const;
  std::size_t flatten(const std::array<std::size_t, kDims>& idx) const;
  ChartPoint point(std::size_t flat) const;
  bool contains(const ChartPoint& c) const;
  bool origin_on_lattice() const;

  std::string describe() const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.axes_ == b.axes_;
  }

 private:
  std::array<AxisSpec, kDims> axes_;
  std::array<std::size_t, kDims> strides_{};
  std::size_t size_ = 0;
};

// Throws GridError when the grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace gfml

#endif  // GFML_GRID_HPP_
