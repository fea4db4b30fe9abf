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

// Right-invariant differential operators on G+.
//
// The basis fields are the generators of left translation,
// (Z f)(X) = d/ds f(exp(s Z) X) at s = 0. In the chart (n, t):
//
//   E3 = d/dn3                       E2 = d/dn2
//   E1 = n2 d/dn3 + d/dn1            A1 = n3 d/dn3 + n1 d/dn1 + d/dt1
//   A2 = n2 d/dn2 - n1 d/dn1 + d/dt2 A3 = -n3 d/dn3 - n2 d/dn2 + d/dt3
//
// and A1t, A2t, A3t denote the pure d/dt_i. Chart derivatives use fourth-order
// central differences, switching to fourth-order one-sided stencils on the two
// outermost nodes of each axis.

#ifndef GFML_INVARIANT_OPS_HPP_
#define GFML_INVARIANT_OPS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfml/error.hpp"
#include "gfml/group.hpp"
#include "gfml/sampled.hpp"
#include "gfml/transform.hpp"

namespace gfml {

enum class Generator : std::uint8_t {
  kE3, kE2, kE1, kA1, kA2, kA3, kA1t, kA2t, kA3t
};
inline constexpr std::size_t kGenerators = 9;

std::string_view generator_name(Generator g) noexcept;
// Throws ParseError on an unknown name.
Generator generator_from_name(std::string_view name);
Generator generator_of(Basis b) noexcept;

// Chart derivative along one axis. Throws GridError when the axis has fewer
// than 5 nodes.
SampledFunction chart_derivative(const SampledFunction& f, std::size_t axis);

// 1 at nodes where every derivative taken by `g` used a central stencil.
std::vector<std::uint8_t> stencil_mask(const GridSpec& grid, Generator g);

SampledFunction generator_apply(Generator g, const SampledFunction& f,
                                Diagnostics* diag = nullptr);
inline SampledFunction basis_field_apply(Basis z, const SampledFunction& f,
                                         Diagnostics* diag = nullptr) {
  return generator_apply(generator_of(z), f, diag);
}

// [f(exp(t Z) X) - f(exp(-t Z) X)] / (2 t) for any evaluator of f.
template <typename Eval>
Complex finite_difference_oracle(Basis z, const Eval& f, const GroupElement& x,
                                 double t) {
  return (f(gp_mul(exp_basis(z, t), x)) - f(gp_mul(exp_basis(z, -t), x))) /
         (2.0 * t);
}
// Same with f interpolated from its samples.
Complex finite_difference_oracle(Basis z, const SampledFunction& f,
                                 const GroupElement& x, double t);

// coeff * G1^p1 ... G9^p9 in the fixed generator order E3 E2 E1 A1 A2 A3 A1t
// A2t A3t. As an operator the rightmost factor acts first.
struct Monomial {
  Complex coeff{1.0, 0.0};
  std::array<int, kGenerators> power{};

  int order() const;
};

struct OperatorSpec {
  std::vector<Monomial> terms;

  int order() const;
  bool is_zero() const;
  std::string to_string() const;
};

// Parses `coeff*E3^2 A1t + re+imi*E2 + -4`: terms joined by `+`, factors
// separated by spaces or `*`, coefficients `re`, `imi`, `re+imi` or `re-imi`.
// Factors must follow the fixed generator order, each at most once. Throws
// ParseError.
OperatorSpec parse_operator(std::string_view text);

inline constexpr int kMaxOperatorOrder = 4;

// Sum of the monomials applied to f. Throws std::invalid_argument above
// kMaxOperatorOrder.
SampledFunction operator_apply(const OperatorSpec& p, const SampledFunction& f,
                               Diagnostics* diag = nullptr);

// Multiplier m(xi, lambda) on the frequency grid of `spatial` with
// F(P f) = m F(f): E3 -> i xi3, E2 -> i xi2, Ait -> i lambda_i. Throws
// SymbolError when a term contains E1, A1, A2 or A3.
Spectrum operator_symbol(const OperatorSpec& p, const GridSpec& spatial);

struct SolveResult {
  SampledFunction phi;
  double residual = 0.0;     // |P phi - psi| / |psi| with the stencil operator
  double min_symbol = 0.0;   // min |m| over the frequency grid
  Diagnostics diagnostics;
};

// phi = F^-1[F(psi) conj(m) / (|m|^2 + eps^2)]. Throws SymbolError when the
// operator has no symbol, is zero, or (eps = 0) its symbol vanishes on the
// grid. Warns "ill-posed" when min |m| < 10 eps.
SolveResult solve_invariant_operator(const OperatorSpec& p,
                                     const SampledFunction& psi,
                                     double eps = 0.0);

}  // namespace gfml

#endif  // GFML_INVARIANT_OPS_HPP_
