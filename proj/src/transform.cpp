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

#include "gfml/transform.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <string>

#include "gfml/parallel.hpp"

namespace gfml {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool steps_match(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

void require_dual(const GridSpec& freq, const GridSpec& spatial) {
  if (!freq.is_frequency() || !spatial.is_spatial()) {
    throw GridError("spectrum needs a frequency grid and a spatial grid");
  }
  for (std::size_t d = 0; d < kDims; ++d) {
    const AxisSpec& w = freq.axis(d);
    const AxisSpec& x = spatial.axis(d);
    const double n = static_cast<double>(x.count);
    if (w.count != x.count || !steps_match(w.step, kTwoPi / (n * x.step)) ||
        !steps_match(w.min, -std::floor(n / 2.0) * w.step)) {
      throw GridError("frequency grid is not dual to the spatial grid on axis " +
                      std::to_string(d));
    }
  }
}

enum class Direction { kForward, kInverse };

// Transforms every line along `axis`. Forward: centered output with the grid
// minimum phase and the spatial step folded in. Inverse: exact adjoint
// sequence scaled by 1 / (N step).
void transform_axis(std::vector<Complex>& data, const GridSpec& spatial,
                    std::size_t axis, Direction dir) {
  const AxisSpec& ax = spatial.axis(axis);
  const std::size_t n = ax.count;
  const std::size_t half = n / 2;
  const std::size_t stride = spatial.strides()[axis];
  const std::size_t lines = data.size() / n;
  const double dw = kTwoPi / (static_cast<double>(n) * ax.step);

  // phase[p] = exp(-i omega_k min) for centered index p, k = p - half.
  std::vector<Complex> phase(n);
  for (std::size_t p = 0; p < n; ++p) {
    const double k = static_cast<double>(p) - static_cast<double>(half);
    phase[p] = std::polar(1.0, -k * dw * ax.min);
  }
  const double fwd_scale = ax.step;
  const double inv_scale = 1.0 / (static_cast<double>(n) * ax.step);

  parallel_for(lines, [&](std::size_t lo, std::size_t hi) {
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<Complex> in(n), out(n);
    for (std::size_t line = lo; line < hi; ++line) {
      // Offset of element 0 of this line: split line into (outer, inner)
      // around the axis.
      const std::size_t inner = line % stride;
      const std::size_t outer = line / stride;
      const std::size_t base = outer * stride * n + inner;
      if (dir == Direction::kForward) {
        for (std::size_t j = 0; j < n; ++j) in[j] = data[base + j * stride];
        fft.fwd(out, in);
        for (std::size_t p = 0; p < n; ++p) {
          const std::size_t bin = (p + n - half) % n;
          data[base + p * stride] = out[bin] * phase[p] * fwd_scale;
        }
      } else {
        for (std::size_t p = 0; p < n; ++p) {
          const std::size_t bin = (p + n - half) % n;
          in[bin] = data[base + p * stride] * std::conj(phase[p]);
        }
        fft.inv(out, in);
        for (std::size_t j = 0; j < n; ++j) {
          data[base + j * stride] = out[j] * inv_scale;
        }
      }
    }
  });
}

}  // namespace

Spectrum::Spectrum(GridSpec freq, GridSpec spatial, std::vector<Complex> values)
    : freq_(std::move(freq)),
      spatial_(std::move(spatial)),
      values_(std::move(values)) {
  require_dual(freq_, spatial_);
  if (values_.size() != freq_.size()) {
    throw GridError("spectrum value count does not match its grid");
  }
}

GridSpec frequency_grid(const GridSpec& spatial) {
  if (!spatial.is_spatial()) throw GridError("frequency_grid: need spatial grid");
  std::array<AxisSpec, kDims> axes;
  for (std::size_t d = 0; d < kDims; ++d) {
    const AxisSpec& x = spatial.axis(d);
    const double n = static_cast<double>(x.count);
    axes[d].count = x.count;
    axes[d].step = kTwoPi / (n * x.step);
    axes[d].min = -std::floor(n / 2.0) * axes[d].step;
    axes[d].kind = d < 3 ? AxisKind::kFrequencyN : AxisKind::kFrequencyT;
  }
  return GridSpec(axes);
}

GridSpec spatial_grid_for(const GridSpec& freq,
                          const std::array<double, kDims>& minima) {
  if (!freq.is_frequency()) throw GridError("spatial_grid_for: need frequency grid");
  std::array<AxisSpec, kDims> axes;
  for (std::size_t d = 0; d < kDims; ++d) {
    const AxisSpec& w = freq.axis(d);
    axes[d].count = w.count;
    axes[d].step = kTwoPi / (static_cast<double>(w.count) * w.step);
    axes[d].min = minima[d];
    axes[d].kind = d < 3 ? AxisKind::kLinearN : AxisKind::kLogDilation;
  }
  return GridSpec(axes);
}

GridSpec centered_spatial_grid_for(const GridSpec& freq) {
  std::array<double, kDims> minima;
  for (std::size_t d = 0; d < kDims; ++d) {
    const AxisSpec& w = freq.axis(d);
    const double step = kTwoPi / (static_cast<double>(w.count) * w.step);
    minima[d] = -0.5 * static_cast<double>(w.count - 1) * step;
  }
  return spatial_grid_for(freq, minima);
}

Spectrum fourier_mellin_forward(const SampledFunction& f, Diagnostics* diag) {
  check_containment(f, diag, "fourier_mellin_forward");
  std::vector<Complex> data(f.values().begin(), f.values().end());
  for (std::size_t d = 0; d < kDims; ++d) {
    transform_axis(data, f.grid(), d, Direction::kForward);
  }
  return Spectrum(frequency_grid(f.grid()), f.grid(), std::move(data));
}

SampledFunction fourier_mellin_inverse(const Spectrum& spectrum) {
  std::vector<Complex> data(spectrum.values().begin(), spectrum.values().end());
  for (std::size_t d = 0; d < kDims; ++d) {
    transform_axis(data, spectrum.spatial(), d, Direction::kInverse);
  }
  return SampledFunction(spectrum.spatial(), std::move(data));
}

SampledFunction fourier_mellin_inverse(const Spectrum& spectrum,
                                       const GridSpec& target) {
  require_dual(spectrum.freq(), target);
  std::vector<Complex> values(spectrum.values().begin(),
                              spectrum.values().end());
  return fourier_mellin_inverse(
      Spectrum(spectrum.freq(), target, std::move(values)));
}

double frequency_energy(const Spectrum& spectrum) {
  const auto v = spectrum.values();
  double dw = 1.0;
  for (const auto& a : spectrum.freq().axes()) dw *= a.step / kTwoPi;
  return pairwise_sum_of(v.size(),
                         [&](std::size_t i) { return std::norm(v[i]); }) *
         dw;
}

std::array<double, kDims> frequency_at(const GridSpec& freq, std::size_t flat) {
  return freq.point(flat);
}

}  // namespace gfml
