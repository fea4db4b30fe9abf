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

#include "gfml/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gfml/error.hpp"

namespace gfml {
namespace {

// Largest grid accepted anywhere (values are 16 bytes each).
constexpr std::size_t kMaxPoints = std::size_t{1} << 31;

bool kinds_match(const std::array<AxisSpec, kDims>& axes, AxisKind n_kind,
                 AxisKind t_kind) {
  for (std::size_t i = 0; i < kDims; ++i) {
    if (axes[i].kind != (i < 3 ? n_kind : t_kind)) return false;
  }
  return true;
}

}  // namespace

bool AxisSpec::origin_on_lattice() const {
  const double u = -min / step;
  return std::abs(u - std::nearbyint(u)) <= 1e-9 * std::max(1.0, std::abs(u));
}

GridSpec::GridSpec(const std::array<AxisSpec, kDims>& axes) : axes_(axes) {
  if (!kinds_match(axes_, AxisKind::kLinearN, AxisKind::kLogDilation) &&
      !kinds_match(axes_, AxisKind::kFrequencyN, AxisKind::kFrequencyT)) {
    throw GridError(
        "axis kinds must be (n, n, n, t, t, t) or (xi, xi, xi, lambda, "
        "lambda, lambda)");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < kDims; ++i) {
    const AxisSpec& a = axes_[i];
    if (a.count < 2) {
      throw GridError("axis " + std::to_string(i) + " needs at least 2 points");
    }
    if (!std::isfinite(a.step) || !(a.step > 0.0)) {
      throw GridError("axis " + std::to_string(i) + " step must be > 0");
    }
    if (!std::isfinite(a.min) || !std::isfinite(a.max())) {
      throw GridError("axis " + std::to_string(i) + " bounds must be finite");
    }
    if (total > kMaxPoints / a.count) {
      throw GridError("grid exceeds the maximum supported size");
    }
    total *= a.count;
  }
  size_ = total;
  std::size_t stride = 1;
  for (std::size_t i = kDims; i-- > 0;) {
    strides_[i] = stride;
    stride *= axes_[i].count;
  }
}

GridSpec GridSpec::Uniform(std::size_t points, double halfwidth) {
  std::array<std::size_t, kDims> counts;
  std::array<double, kDims> hw;
  counts.fill(points);
  hw.fill(halfwidth);
  return Symmetric(counts, hw);
}

GridSpec GridSpec::Symmetric(const std::array<std::size_t, kDims>& counts,
                             const std::array<double, kDims>& halfwidths) {
  std::array<AxisSpec, kDims> axes;
  for (std::size_t i = 0; i < kDims; ++i) {
    if (counts[i] < 2) {
      throw GridError("axis " + std::to_string(i) + " needs at least 2 points");
    }
    if (!(halfwidths[i] > 0.0)) {
      throw GridError("half-width must be > 0");
    }
    axes[i].count = counts[i];
    axes[i].min = -halfwidths[i];
    axes[i].step = 2.0 * halfwidths[i] / static_cast<double>(counts[i] - 1);
    axes[i].kind = i < 3 ? AxisKind::kLinearN : AxisKind::kLogDilation;
  }
  return GridSpec(axes);
}

GridSpec GridSpec::Lattice(const std::array<std::size_t, kDims>& counts,
                           const std::array<double, kDims>& steps,
                           const std::array<std::size_t, kDims>& origin_index) {
  std::array<AxisSpec, kDims> axes;
  for (std::size_t i = 0; i < kDims; ++i) {
    axes[i].count = counts[i];
    axes[i].step = steps[i];
    axes[i].min = -static_cast<double>(origin_index[i]) * steps[i];
    axes[i].kind = i < 3 ? AxisKind::kLinearN : AxisKind::kLogDilation;
  }
  return GridSpec(axes);
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.step;
  return v;
}

std::array<std::size_t, kDims> GridSpec::unflatten(std::size_t flat) const {
  std::array<std::size_t, kDims> idx{};
  for (std::size_t i = kDims; i-- > 0;) {
    idx[i] = flat % axes_[i].count;
    flat /= axes_[i].count;
  }
  return idx;
}

std::size_t GridSpec::flatten(const std::array<std::size_t, kDims>& idx) const {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < kDims; ++i) flat += idx[i] * strides_[i];
  return flat;
}

ChartPoint GridSpec::point(std::size_t flat) const {
  const auto idx = unflatten(flat);
  ChartPoint c;
  for (std::size_t i = 0; i < kDims; ++i) c[i] = axes_[i].node(idx[i]);
  return c;
}

bool GridSpec::contains(const ChartPoint& c) const {
  for (std::size_t i = 0; i < kDims; ++i) {
    if (!(c[i] >= axes_[i].min && c[i] <= axes_[i].max())) return false;
  }
  return true;
}

bool GridSpec::origin_on_lattice() const {
  for (const auto& a : axes_) {
    if (!a.origin_on_lattice()) return false;
  }
  return true;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < kDims; ++i) {
    if (i) os << "; ";
    os << axes_[i].count << "@[" << axes_[i].min << ", " << axes_[i].max()
       << "]";
  }
  return os.str();
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) {
    throw GridError(std::string(what) + ": grids differ (" + a.describe() +
                    " vs " + b.describe() + ")");
  }
}

}  // namespace gfml
