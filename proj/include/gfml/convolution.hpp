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

// Convolutions on G+ and on K = H x (R+*)^3.
//
// The kernel g is always the integration variable:
//
//   (g * f)(X)          = sum_Y f(Y^-1 X) g(Y) w,
//   (g . F)(n, a, x)    = sum_(m,b) F(m^-1 n, b^-1 a, x) g(m, b) w,
//
// with w the cell volume of g's grid and f, F evaluated by multilinear
// interpolation with zero extension. Both are direct O(N^2) quadratures.
// convolve_abelian is the circular lattice convolution of the chart, computed
// with the Fourier-Mellin transform; it serves as an oracle only.

#ifndef GFML_CONVOLUTION_HPP_
#define GFML_CONVOLUTION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfml/error.hpp"
#include "gfml/group.hpp"
#include "gfml/lifting.hpp"
#include "gfml/sampled.hpp"

namespace gfml {

using GroupFunction = std::function<Complex(const GroupElement&)>;

// (g * f)(x) at one point. g and f may live on different grids.
Complex convolve_gplus_at(const SampledFunction& g, const SampledFunction& f,
                          const GroupElement& x);
// Same with f given as an exact evaluator.
Complex convolve_gplus_at(const SampledFunction& g, const GroupFunction& f,
                          const GroupElement& x);

// g * f on every node of the shared grid.
SampledFunction convolve_gplus(const SampledFunction& g,
                               const SampledFunction& f,
                               Diagnostics* diag = nullptr);

// (g . F)(n, a, x) for a lazy tilde lift F.
Complex convolve_k_at(const SampledFunction& g, const LiftedFunction& lift,
                      const HeisenbergElement& n, const DilationVector& a,
                      const DilationVector& x);
// (g . F)(n, a) for F sampled on K; there is no x-slot.
Complex convolve_k_at(const SampledFunction& g, const SampledFunction& k_func,
                      const HeisenbergElement& n, const DilationVector& a);

// (n, a) -> (g . F)(n, a, x) on every node, for a tilde lift F.
SampledFunction convolve_k(const SampledFunction& g, const LiftedFunction& lift,
                           const DilationVector& x,
                           Diagnostics* diag = nullptr);
// (n, a) -> (g . F)(n, a) on every node, for F sampled on K.
SampledFunction convolve_k(const SampledFunction& g,
                           const SampledFunction& k_func,
                           Diagnostics* diag = nullptr);

// Circular convolution on the chart lattice. Throws GridError unless both
// functions share one grid whose origin lies on the lattice (min / step an
// integer on every axis); only then does the spectral product equal the
// lattice sum  w * sum_j g[j] F[(p - j) mod N].
SampledFunction convolve_abelian(const SampledFunction& g,
                                 const SampledFunction& f);

struct ConvolutionReport {
  std::optional<SampledFunction> result;
  std::map<std::string, double> residuals;
  std::map<std::string, double> values;
  std::string grid;
  Diagnostics diagnostics;
};

// Evaluation sets for the pointwise identity checks.
std::vector<GroupElement> node_points(const GridSpec& grid, std::size_t count,
                                      std::uint64_t seed);
// Continuous points in the central `share` of the box.
std::vector<GroupElement> box_points(const GridSpec& grid, std::size_t count,
                                     std::uint64_t seed, double share = 0.5);

// Intertwining check at the points (n, x). Residuals (relative l2 over the
// points):
//   "eq15"           (g . f~)(n, 1, x) against (g * f)(n, x), with f~ the lazy
//                    tilde lift;
//   "chi_pairing"    (g . f~)(n, c, 1) against (g * f)(n, c) at central
//                    dilations c = (e^t1, e^t1, e^t1), where rho(c) is trivial;
//   "eq15_resampled" (with `resampled`) path B with the x-slice
//                    (n', a') -> f~(n', a', x) first sampled on the grid and then
//                    interpolated, which adds slice truncation and a second
//                    interpolation.
ConvolutionReport eq15_check(const SampledFunction& g, const SampledFunction& f,
                             const std::vector<GroupElement>& points,
                             bool resampled = false);

// Transform of g * f against the product of transforms. Requires a
// lattice-origin grid. Residuals:
//   "total"         l2(F(g * f) - F(g) F(f)) / l2(F(g) F(f));
//   "abelian"       same with the circular lattice convolution (DFT identity);
//   "noncommutative" l2(g * f - g (x) f) / l2(g (x) f), the group effect;
//   "interpolation" (with exact_f) relative l2 change of g * f at sample nodes
//                   when f is evaluated exactly instead of interpolated.
ConvolutionReport convolution_theorem_check(
    const SampledFunction& g, const SampledFunction& f,
    const GroupFunction* exact_f = nullptr, std::size_t interp_points = 64);

}  // namespace gfml

#endif  // GFML_CONVOLUTION_HPP_
