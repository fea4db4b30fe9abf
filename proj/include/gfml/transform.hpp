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

// Fourier-Mellin transform on G+.
//
// With t = log a the Mellin factor a^{-i lambda} becomes e^{-i lambda t} and
// the transform
//
//   F(xi, lambda) = int f(n, a) e^{-i xi.n} a^{-i lambda} dn da/a
//
// is a six-dimensional Fourier integral in the chart (n, t). It is discretized
// as the literal Riemann sum
//
//   F[k] = prod(step) * sum_j f[j] exp(-i omega_k . c_j),
//   omega_k = 2 pi k / (N step),  k in [-floor(N/2), N - floor(N/2)),
//
// stored in centered order, computed with per-axis FFTs plus a phase factor
// for the grid minimum so that the result does not depend on where the box
// starts. The inverse carries (2 pi)^-6 prod(d omega) and undoes the forward
// transform exactly; the same factor makes discrete Parseval exact.

#ifndef GFML_TRANSFORM_HPP_
#define GFML_TRANSFORM_HPP_

#include <array>
#include <span>
#include <vector>

#include "gfml/error.hpp"
#include "gfml/grid.hpp"
#include "gfml/sampled.hpp"

namespace gfml {

// Samples of the transform on the dual grid, together with the spatial grid
// that fixes the phase reference.
class Spectrum {
 public:
  // Throws GridError unless freq is the frequency grid of spatial (matching
  // counts, steps within 1e-12 relative) and values has freq.size() entries.
  Spectrum(GridSpec freq, GridSpec spatial, std::vector<Complex> values);

  const GridSpec& freq() const { return freq_; }
  const GridSpec& spatial() const { return spatial_; }
  std::span<const Complex> values() const { return values_; }
  Complex operator[](std::size_t flat) const { return values_[flat]; }
  std::size_t size() const { return values_.size(); }

 private:
  GridSpec freq_;
  GridSpec spatial_;
  std::vector<Complex> values_;
};

// Dual grid of a spatial grid: count N, step 2 pi / (N step), first node
// -floor(N/2) * that step, kinds (xi, xi, xi, lambda, lambda, lambda).
GridSpec frequency_grid(const GridSpec& spatial);

// Spatial grid with the given minima whose dual is `freq`.
GridSpec spatial_grid_for(const GridSpec& freq,
                          const std::array<double, kDims>& minima);
// Same, centered: min_i = -(N_i - 1) step_i / 2.
GridSpec centered_spatial_grid_for(const GridSpec& freq);

// Adds a containment warning to diag when the input is poorly contained.
Spectrum fourier_mellin_forward(const SampledFunction& f,
                                Diagnostics* diag = nullptr);
SampledFunction fourier_mellin_inverse(const Spectrum& spectrum);
// Inverse onto an explicit spatial grid; throws GridError when the grid is not
// dual to the spectrum's frequency grid.
SampledFunction fourier_mellin_inverse(const Spectrum& spectrum,
                                       const GridSpec& target);

// (2 pi)^-6 * sum |F|^2 * prod(d omega).
double frequency_energy(const Spectrum& spectrum);

// Frequency coordinates of a flat spectrum index.
std::array<double, kDims> frequency_at(const GridSpec& freq, std::size_t flat);

}  // namespace gfml

#endif  // GFML_TRANSFORM_HPP_
