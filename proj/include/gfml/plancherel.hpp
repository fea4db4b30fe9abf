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

// Energy identities for the Fourier-Mellin transform.

#ifndef GFML_PLANCHEREL_HPP_
#define GFML_PLANCHEREL_HPP_

#include <string_view>

#include "gfml/error.hpp"
#include "gfml/sampled.hpp"
#include "gfml/transform.hpp"

namespace gfml {

// The continuum transform has no prefactor; inverse and Parseval carry
// (2 pi)^-6.
inline constexpr std::string_view kNormalizationNote =
    "forward kernel exp(-i xi.n) a^(-i lambda) without prefactor; inverse and "
    "frequency energy carry (2 pi)^-6";

struct PlancherelReport {
  double space_energy = 0.0;  // sum |f|^2 w
  double freq_energy = 0.0;   // (2 pi)^-6 sum |F|^2 prod(d omega)
  Complex conv_energy;        // (f * f_check~)(identity), lazy lift
  Complex conv_energy_resampled;  // same through involution() samples
  double parseval_residual = 0.0;      // |space - freq| / space
  double conv_residual = 0.0;          // |space - conv| / space
  double conv_freq_residual = 0.0;     // |freq - conv| / freq
  double conv_resampled_residual = 0.0;
  Diagnostics diagnostics;
};

// With `resampled` the O(N) diagnostic through the sampled involution is also
// computed.
PlancherelReport plancherel_check(const SampledFunction& f,
                                  bool resampled = true);

// As above, but the frequency side taken from a given spectrum (for example
// one read from disk). Throws GridError when the spectrum is not the transform
// grid of f.
PlancherelReport plancherel_check(const SampledFunction& f,
                                  const Spectrum& spectrum,
                                  bool resampled = true);

struct TwoComponentReport {
  double pos_energy = 0.0;
  double neg_energy = 0.0;
  double total_energy = 0.0;
  double pos_freq_energy = 0.0;
  double neg_freq_energy = 0.0;
  double total_freq_energy = 0.0;
  double residual = 0.0;  // |total - total_freq| / total
  bool copies_equal = false;
  // |total - 2 pos_freq| / total when the copies are bitwise equal, else 0.
  double factor_two_residual = 0.0;
  Diagnostics diagnostics;
};

TwoComponentReport two_component_plancherel(const ComponentLabeledFunction& f);

}  // namespace gfml

#endif  // GFML_PLANCHEREL_HPP_
