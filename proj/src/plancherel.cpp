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

#include "gfml/plancherel.hpp"

#include <algorithm>
#include <cmath>

#include "gfml/convolution.hpp"
#include "gfml/lifting.hpp"

namespace gfml {
namespace {

double rel(double ref, Complex value) {
  const double d = std::abs(value - ref);
  return ref > 0.0 ? d / ref : d;
}

}  // namespace

PlancherelReport plancherel_check(const SampledFunction& f,
                                  const Spectrum& spectrum, bool resampled) {
  if (!(spectrum.spatial() == f.grid())) {
    throw GridError("plancherel_check: spectrum does not belong to f's grid");
  }
  PlancherelReport r;
  check_containment(f, &r.diagnostics, "plancherel_check");
  r.space_energy = energy(f);
  r.freq_energy = frequency_energy(spectrum);
  // f_check~ evaluated lazily: f_check(Z) = conj f(Z^-1).
  const GroupFunction check = [&f](const GroupElement& z) {
    return std::conj(evaluate_interpolated(f, gp_inv(z)));
  };
  r.conv_energy = convolve_gplus_at(f, check, GroupElement{});
  r.parseval_residual = rel(r.space_energy, r.freq_energy);
  r.conv_residual = rel(r.space_energy, r.conv_energy);
  r.conv_freq_residual = rel(r.freq_energy, r.conv_energy);
  if (resampled) {
    const SampledFunction inv = involution(f, &r.diagnostics);
    r.conv_energy_resampled = convolve_gplus_at(f, inv, GroupElement{});
    r.conv_resampled_residual = rel(r.space_energy, r.conv_energy_resampled);
  }
  return r;
}

PlancherelReport plancherel_check(const SampledFunction& f, bool resampled) {
  return plancherel_check(f, fourier_mellin_forward(f), resampled);
}

TwoComponentReport two_component_plancherel(const ComponentLabeledFunction& f) {
  TwoComponentReport r;
  check_containment(f.pos(), &r.diagnostics, "two_component_plancherel pos");
  check_containment(f.neg(), &r.diagnostics, "two_component_plancherel neg");
  r.pos_energy = energy(f.pos());
  r.neg_energy = energy(f.neg());
  r.total_energy = r.pos_energy + r.neg_energy;
  r.pos_freq_energy = frequency_energy(fourier_mellin_forward(f.pos()));
  r.neg_freq_energy = frequency_energy(fourier_mellin_forward(f.neg()));
  r.total_freq_energy = r.pos_freq_energy + r.neg_freq_energy;
  r.residual = rel(r.total_energy, r.total_freq_energy);
  const auto p = f.pos().values();
  const auto n = f.neg().values();
  r.copies_equal = std::equal(p.begin(), p.end(), n.begin());
  if (r.copies_equal) {
    r.factor_two_residual = rel(r.total_energy, 2.0 * r.pos_freq_energy);
  }
  return r;
}

}  // namespace gfml
