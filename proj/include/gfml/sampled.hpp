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

#ifndef GFML_SAMPLED_HPP_
#define GFML_SAMPLED_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gfml/error.hpp"
#include "gfml/grid.hpp"
#include "gfml/group.hpp"

namespace gfml {

using Complex = std::complex<double>;

// Complex samples of a function on G+ over a spatial GridSpec. Immutable once
// constructed.
class SampledFunction {
 public:
  // Zero function.
  explicit SampledFunction(GridSpec grid);
  // Throws GridError if the grid is not spatial or the length mismatches, and
  // std::invalid_argument on non-finite values.
  SampledFunction(GridSpec grid, std::vector<Complex> values);

  // Samples fn at every node (in chart coordinates), in parallel.
  static SampledFunction Generate(
      const GridSpec& grid, const std::function<Complex(const ChartPoint&)>& fn);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  Complex operator[](std::size_t flat) const { return values_[flat]; }
  std::size_t size() const { return values_.size(); }

  // Moves the samples out, leaving this object empty.
  std::vector<Complex> release() && { return std::move(values_); }

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
};

// Two labeled copies of G+ sharing one grid; models the sign components of the
// full dilation group.
class ComponentLabeledFunction {
 public:
  // Throws GridError when the copies are on different grids.
  ComponentLabeledFunction(SampledFunction pos, SampledFunction neg);

  const SampledFunction& pos() const { return pos_; }
  const SampledFunction& neg() const { return neg_; }

 private:
  SampledFunction pos_;
  SampledFunction neg_;
};

// Sum of f over all nodes times the cell volume, with the fixed pairwise tree.
Complex integrate_haar(const SampledFunction& f);
// Haar-quadrature L2 energy  sum |f|^2 * cell volume.
double energy(const SampledFunction& f);
// Haar-quadrature <f, g> = sum conj(f) g * cell volume.
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

// Separable multilinear interpolation in chart coordinates. Coordinates that
// land on a node within 1e-9 of a step use that node alone, so node queries
// return stored values exactly. Zero outside the bounding box.
Complex evaluate_chart(const SampledFunction& f, const ChartPoint& c);
Complex evaluate_interpolated(const SampledFunction& f, const GroupElement& x);

// Fraction of sum |f| carried by nodes within `margin` nodes of the boundary
// on any axis. Zero functions report 0.
double boundary_mass_fraction(const SampledFunction& f, std::size_t margin = 2);

// Containment threshold for boundary mass.
inline constexpr double kContainmentTolerance = 1e-8;

// Adds a "containment" warning when boundary_mass_fraction exceeds the
// tolerance. Returns the fraction.
double check_containment(const SampledFunction& f, Diagnostics* diag,
                         const char* what);

struct RightInvarianceReport {
  double residual = 0.0;          // |int f(Y g) dY - int f dY| / |int f dY|
  double escaped_fraction = 0.0;  // share of sum |f| translated out of the box
  bool contained = true;
};

// Compares the Haar integral of the right translate Y -> f(Y g) against the
// integral of f. contained is false when more than kContainmentTolerance of
// the mass of f would have to come from outside the box.
RightInvarianceReport right_invariance_check(const SampledFunction& f,
                                             const GroupElement& g);

// amplitude * exp(-sum_i (c_i - c0_i)^2 / (2 w_i^2)) in chart coordinates.
// Throws std::invalid_argument for non-positive widths.
SampledFunction make_gaussian(const GridSpec& grid, const GroupElement& center,
                              const std::array<double, kDims>& widths,
                              Complex amplitude);

// Pointwise linear combination alpha f + beta g on a shared grid.
SampledFunction combine(Complex alpha, const SampledFunction& f, Complex beta,
                        const SampledFunction& g);

// Relative discrete L2 distance ||f - g|| / ||g|| (returns ||f - g|| when g
// vanishes).
double relative_l2(std::span<const Complex> f, std::span<const Complex> g);
double max_abs(std::span<const Complex> v);

}  // namespace gfml

#endif  // GFML_SAMPLED_HPP_
