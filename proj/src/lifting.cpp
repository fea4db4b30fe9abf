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

#include "gfml/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gfml/parallel.hpp"

namespace gfml {
namespace {

// Half-range of log(a) and log(b) draws in the invariance checks.
constexpr double kLogDraw = 0.5;
// Evaluation targets are drawn from the central share of each axis.
constexpr double kCentralShare = 0.6;

double largest_step(const GridSpec& g) {
  double h = 0.0;
  for (const auto& a : g.axes()) h = std::max(h, a.step);
  return h;
}

class Sampler {
 public:
  Sampler(const GridSpec& grid, std::uint64_t seed) : grid_(grid), rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  DilationVector dilation() {
    return {std::exp(uniform(-kLogDraw, kLogDraw)),
            std::exp(uniform(-kLogDraw, kLogDraw)),
            std::exp(uniform(-kLogDraw, kLogDraw))};
  }

  // A chart point in the central part of the box, or a node there.
  ChartPoint target(DrawMode mode) {
    ChartPoint c;
    for (std::size_t d = 0; d < kDims; ++d) {
      const AxisSpec& ax = grid_.axis(d);
      const double mid = 0.5 * (ax.min + ax.max());
      const double half = 0.5 * kCentralShare * (ax.max() - ax.min);
      if (mode == DrawMode::kOffGrid) {
        c[d] = uniform(mid - half, mid + half);
      } else {
        const auto lo = static_cast<long>(std::ceil((mid - half - ax.min) / ax.step));
        const auto hi = static_cast<long>(std::floor((mid + half - ax.min) / ax.step));
        const long j = std::uniform_int_distribution<long>(lo, std::max(lo, hi))(rng_);
        c[d] = ax.node(static_cast<std::size_t>(j));
      }
    }
    return c;
  }

 private:
  const GridSpec& grid_;
  std::mt19937_64 rng_;
};

InvarianceReport finish(double worst, const SampledFunction& f,
                        std::size_t samples) {
  InvarianceReport r;
  const double scale = max_abs(f.values());
  r.residual = scale > 0.0 ? worst / scale : 0.0;
  r.samples = samples;
  r.step = largest_step(f.grid());
  return r;
}

}  // namespace

Complex tilde_evaluate(const SampledFunction& f, const HeisenbergElement& n,
                       const DilationVector& a, const DilationVector& x) {
  return evaluate_interpolated(f, {rho_apply(a, n), dil_mul(a, x)});
}

Complex upsilon_evaluate(const SampledFunction& psi, const ExtendedPoint& p) {
  return evaluate_interpolated(
      psi, {{p.n3 + p.n1 * p.n2, p.n2, p.n1 + p.n4}, p.x});
}

Complex LiftedFunction::operator()(const HeisenbergElement& n,
                                   const DilationVector& a,
                                   const DilationVector& x) const {
  if (kind_ != LiftKind::kTilde) {
    throw std::logic_error("LiftedFunction: not a tilde lift");
  }
  return tilde_evaluate(*base_, n, a, x);
}

Complex LiftedFunction::operator()(const ExtendedPoint& p) const {
  if (kind_ != LiftKind::kUpsilon) {
    throw std::logic_error("LiftedFunction: not an upsilon lift");
  }
  return upsilon_evaluate(*base_, p);
}

InvarianceReport tilde_invariance_check(const SampledFunction& f,
                                        std::size_t samples,
                                        std::uint64_t seed, DrawMode mode,
                                        bool identity_b) {
  Sampler s(f.grid(), seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupElement y = from_chart(s.target(mode));
    const DilationVector a = s.dilation();
    const DilationVector b = identity_b ? DilationVector{} : s.dilation();
    // (n, a, x) chosen so that f~(n, a, x) = f(y).
    const HeisenbergElement n = rho_apply(dil_inv(a), y.n);
    const DilationVector x = dil_mul(dil_inv(a), y.a);
    const Complex rhs = tilde_evaluate(f, n, a, x);
    const Complex lhs =
        tilde_evaluate(f, rho_apply(b, n), dil_mul(a, dil_inv(b)), dil_mul(x, b));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return finish(worst, f, samples);
}

InvarianceReport upsilon_invariance_check(const SampledFunction& psi,
                                          std::size_t samples,
                                          std::uint64_t seed, DrawMode mode,
                                          bool zero_m) {
  Sampler s(psi.grid(), seed);
  const double span = psi.grid().axis(2).max() - psi.grid().axis(2).min;
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupElement y = from_chart(s.target(mode));
    const double m = zero_m ? 0.0 : s.uniform(-0.25 * span, 0.25 * span);
    ExtendedPoint p;
    p.n1 = s.uniform(-0.25 * span, 0.25 * span);
    p.n2 = y.n.n2;
    p.n4 = y.n.n1 - p.n1;
    p.n3 = y.n.n3 - p.n1 * p.n2;
    p.x = y.a;
    ExtendedPoint q = p;
    q.n3 = p.n3 + m * p.n2;
    q.n1 = p.n1 - m;
    q.n4 = p.n4 + m;
    worst = std::max(worst,
                     std::abs(upsilon_evaluate(psi, q) - upsilon_evaluate(psi, p)));
  }
  return finish(worst, psi, samples);
}

GPlusRestriction chi_apply(KRestriction k) { return {std::move(k.values)}; }

KRestriction chi_inverse(GPlusRestriction g) { return {std::move(g.values)}; }

KRestriction restrict_to_k(const SampledFunction& f) {
  return {SampledFunction::Generate(f.grid(), [&](const ChartPoint& c) {
    const GroupElement y = from_chart(c);
    return evaluate_interpolated(f, {rho_apply(y.a, y.n), y.a});
  })};
}

GPlusRestriction restrict_to_gplus(const SampledFunction& f) { return {f}; }

double involution_escape_fraction(const SampledFunction& f) {
  const GridSpec& grid = f.grid();
  const auto v = f.values();
  const double total =
      pairwise_sum_of(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
  if (total == 0.0) return 0.0;
  const double escaped = pairwise_sum_of(v.size(), [&](std::size_t i) {
    if (v[i] == Complex{}) return 0.0;
    const ChartPoint c = to_chart(gp_inv(from_chart(grid.point(i))));
    return grid.contains(c) ? 0.0 : std::abs(v[i]);
  });
  return escaped / total;
}

SampledFunction involution(const SampledFunction& f, Diagnostics* diag) {
  if (diag) {
    const double escaped = involution_escape_fraction(f);
    if (escaped > kContainmentTolerance) {
      diag->warn("involution-escape",
                 "mass of f maps outside the box under inversion", escaped);
    }
  }
  return SampledFunction::Generate(f.grid(), [&](const ChartPoint& c) {
    return std::conj(evaluate_interpolated(f, gp_inv(from_chart(c))));
  });
}

}  // namespace gfml
