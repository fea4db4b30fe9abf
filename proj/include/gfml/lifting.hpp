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

// Invariant lifts of sampled functions.
//
// The tilde lift extends f on G+ to L = H x (R+*)^3 x (R+*)^3 by
//
//   f~(n, a, x) = f(rho(a) n, a x),
//
// which is invariant under (n, a, x) -> (rho(b) n, a b^-1, x b). The upsilon
// lift extends psi on K = H x (R+*)^3 to the S-coordinates (n3, n2, n1, n4, x)
// by
//
//   (Y psi)(n3, n2, n1, n4, x) = psi((n3 + n1 n2, n2, n1 + n4), x),
//
// which is invariant under the additive orbit
// (n3 + m n2, n2, n1 - m, n4 + m). Both are evaluation rules over the base
// samples; nothing is materialized on the 9- or 10-dimensional spaces.

#ifndef GFML_LIFTING_HPP_
#define GFML_LIFTING_HPP_

#include <cstddef>
#include <cstdint>

#include "gfml/error.hpp"
#include "gfml/group.hpp"
#include "gfml/sampled.hpp"

namespace gfml {

enum class LiftKind { kTilde, kUpsilon };

struct ExtendedPoint {
  double n3 = 0.0;
  double n2 = 0.0;
  double n1 = 0.0;
  double n4 = 0.0;
  DilationVector x;
};

Complex tilde_evaluate(const SampledFunction& f, const HeisenbergElement& n,
                       const DilationVector& a, const DilationVector& x);
Complex upsilon_evaluate(const SampledFunction& psi, const ExtendedPoint& p);

// Lazy lift of a base function. The base is held by reference and must
// outlive the lift.
class LiftedFunction {
 public:
  LiftedFunction(const SampledFunction& base, LiftKind kind)
      : base_(&base), kind_(kind) {}

  const SampledFunction& base() const { return *base_; }
  LiftKind kind() const { return kind_; }

  // Tilde lift only; throws std::logic_error on an upsilon lift.
  Complex operator()(const HeisenbergElement& n, const DilationVector& a,
                     const DilationVector& x) const;
  // Upsilon lift only; throws std::logic_error on a tilde lift.
  Complex operator()(const ExtendedPoint& p) const;

 private:
  const SampledFunction* base_;
  LiftKind kind_;
};

// How invariance checks draw their orbit pairs.
enum class DrawMode {
  kOffGrid,    // continuous random points
  kNodeExact,  // both evaluations resolve to the same grid node
};

struct InvarianceReport {
  double residual = 0.0;  // max |lhs - rhs| / max |f|
  std::size_t samples = 0;
  double step = 0.0;      // largest grid step, for refinement estimates
};

// max over random (n, a, x, b) of |f~(rho(b) n, a b^-1, x b) - f~(n, a, x)|.
// Evaluation points are drawn in the middle of the box. Identity b when
// `identity_b` is set.
InvarianceReport tilde_invariance_check(const SampledFunction& f,
                                        std::size_t samples,
                                        std::uint64_t seed,
                                        DrawMode mode = DrawMode::kOffGrid,
                                        bool identity_b = false);

// Same for the upsilon orbit parameter m (m = 0 when `zero_m` is set).
InvarianceReport upsilon_invariance_check(const SampledFunction& psi,
                                          std::size_t samples,
                                          std::uint64_t seed,
                                          DrawMode mode = DrawMode::kOffGrid,
                                          bool zero_m = false);

// Restrictions of a tilde lift to the two 6-dimensional slices. Distinct
// types keep the slot role explicit; chi relabels one as the other without
// touching the samples.
struct KRestriction {
  SampledFunction values;  // (n, a) -> F(n, a, 1)
};
struct GPlusRestriction {
  SampledFunction values;  // (n, a) -> F(n, 1, a)
};

GPlusRestriction chi_apply(KRestriction k);
KRestriction chi_inverse(GPlusRestriction g);

// Samples f~(n, a, 1) = f(rho(a) n, a) on f's grid by interpolation.
KRestriction restrict_to_k(const SampledFunction& f);
// f~(n, 1, a) = f(n, a); the samples are copied unchanged.
GPlusRestriction restrict_to_gplus(const SampledFunction& f);

// Grid sampling of X -> conj(f(X^-1)) by interpolation. Warns (code
// "involution-escape") when more than kContainmentTolerance of sum |f| sits at
// nodes whose inverse leaves the box.
SampledFunction involution(const SampledFunction& f,
                           Diagnostics* diag = nullptr);

// Share of sum |f| at nodes Y with Y^-1 outside the box.
double involution_escape_fraction(const SampledFunction& f);

}  // namespace gfml

#endif  // GFML_LIFTING_HPP_
