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

#include "gfml/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gfml/parallel.hpp"
#include "interp.hpp"

namespace gfml {

SampledFunction::SampledFunction(GridSpec grid)
    : grid_(std::move(grid)), values_(grid_.size()) {
  if (!grid_.is_spatial()) {
    throw GridError("sampled functions need a spatial grid");
  }
}

SampledFunction::SampledFunction(GridSpec grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_.is_spatial()) {
    throw GridError("sampled functions need a spatial grid");
  }
  if (values_.size() != grid_.size()) {
    throw GridError("value count " + std::to_string(values_.size()) +
                    " does not match grid size " +
                    std::to_string(grid_.size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("sampled values must be finite");
    }
  }
}

SampledFunction SampledFunction::Generate(
    const GridSpec& grid, const std::function<Complex(const ChartPoint&)>& fn) {
  std::vector<Complex> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) values[i] = fn(grid.point(i));
  });
  return SampledFunction(grid, std::move(values));
}

ComponentLabeledFunction::ComponentLabeledFunction(SampledFunction pos,
                                                   SampledFunction neg)
    : pos_(std::move(pos)), neg_(std::move(neg)) {
  require_same_grid(pos_.grid(), neg_.grid(), "two-component function");
}

Complex integrate_haar(const SampledFunction& f) {
  return pairwise_sum(f.values()) * f.grid().cell_volume();
}

double energy(const SampledFunction& f) {
  const auto v = f.values();
  return pairwise_sum_of(v.size(),
                         [&](std::size_t i) { return std::norm(v[i]); }) *
         f.grid().cell_volume();
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  const auto u = f.values();
  const auto v = g.values();
  return pairwise_sum_of(
             u.size(),
             [&](std::size_t i) -> Complex { return std::conj(u[i]) * v[i]; }) *
         f.grid().cell_volume();
}

Complex evaluate_chart(const SampledFunction& f, const ChartPoint& c) {
  const GridSpec& g = f.grid();
  detail::Taps taps[kDims];
  for (std::size_t d = 0; d < kDims; ++d) {
    taps[d] = detail::locate(g.axis(d), c[d]);
    if (taps[d].count == 0) return {};
  }
  return detail::combine_taps<kDims>(f.values().data(), g.strides().data(),
                                     taps);
}

Complex evaluate_interpolated(const SampledFunction& f, const GroupElement& x) {
  return evaluate_chart(f, to_chart(x));
}

double boundary_mass_fraction(const SampledFunction& f, std::size_t margin) {
  const GridSpec& g = f.grid();
  const auto v = f.values();
  const double total = pairwise_sum_of(
      v.size(), [&](std::size_t i) { return std::abs(v[i]); });
  if (total == 0.0) return 0.0;
  const double edge = pairwise_sum_of(v.size(), [&](std::size_t i) {
    const auto idx = g.unflatten(i);
    for (std::size_t d = 0; d < kDims; ++d) {
      const std::size_t n = g.axis(d).count;
      if (idx[d] < margin || idx[d] + margin >= n) return std::abs(v[i]);
    }
    return 0.0;
  });
  return edge / total;
}

double check_containment(const SampledFunction& f, Diagnostics* diag,
                         const char* what) {
  const double frac = boundary_mass_fraction(f);
  if (diag != nullptr && frac > kContainmentTolerance) {
    diag->warn("containment",
               std::string(what) + ": boundary mass fraction exceeds 1e-8",
               frac);
  }
  return frac;
}

RightInvarianceReport right_invariance_check(const SampledFunction& f,
                                             const GroupElement& g) {
  RightInvarianceReport report;
  const GridSpec& grid = f.grid();
  const auto v = f.values();
  const Complex base = integrate_haar(f);

  // Mass of f at nodes Z whose preimage Z g^-1 lies outside the box is never
  // sampled by the translate.
  const GroupElement ginv = gp_inv(g);
  const double total = pairwise_sum_of(
      v.size(), [&](std::size_t i) { return std::abs(v[i]); });
  const double lost = pairwise_sum_of(v.size(), [&](std::size_t i) {
    const GroupElement z = from_chart(grid.point(i));
    return grid.contains(to_chart(gp_mul(z, ginv))) ? 0.0 : std::abs(v[i]);
  });
  report.escaped_fraction = total > 0.0 ? lost / total : 0.0;
  report.contained = report.escaped_fraction <= kContainmentTolerance;

  const Complex shifted =
      pairwise_sum_of(v.size(),
                      [&](std::size_t i) {
                        const GroupElement y = from_chart(grid.point(i));
                        return evaluate_interpolated(f, gp_mul(y, g));
                      }) *
      grid.cell_volume();
  const double scale = std::abs(base);
  report.residual = scale > 0.0 ? std::abs(shifted - base) / scale
                                : std::abs(shifted - base);
  return report;
}

SampledFunction make_gaussian(const GridSpec& grid, const GroupElement& center,
                              const std::array<double, kDims>& widths,
                              Complex amplitude) {
  for (double w : widths) {
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw std::invalid_argument("gaussian widths must be > 0");
    }
  }
  const ChartPoint c0 = to_chart(center);
  return SampledFunction::Generate(grid, [&](const ChartPoint& c) {
    double q = 0.0;
    for (std::size_t d = 0; d < kDims; ++d) {
      const double z = (c[d] - c0[d]) / widths[d];
      q += z * z;
    }
    return amplitude * std::exp(-0.5 * q);
  });
}

SampledFunction combine(Complex alpha, const SampledFunction& f, Complex beta,
                        const SampledFunction& g) {
  require_same_grid(f.grid(), g.grid(), "combine");
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * f[i] + beta * g[i];
  return SampledFunction(f.grid(), std::move(out));
}

double relative_l2(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("relative_l2: length mismatch");
  }
  const double diff = pairwise_sum_of(
      f.size(), [&](std::size_t i) { return std::norm(f[i] - g[i]); });
  const double ref = pairwise_sum_of(
      g.size(), [&](std::size_t i) { return std::norm(g[i]); });
  return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace gfml
