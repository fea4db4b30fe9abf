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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gfml/error.hpp"
#include "gfml/refinement.hpp"
#include "gfml/sampled.hpp"

namespace {

using gfml::ChartPoint;
using gfml::Complex;
using gfml::GridSpec;
using gfml::SampledFunction;

constexpr std::array<double, gfml::kDims> kUnitWidths = {1, 1, 1, 1, 1, 1};
constexpr double kPi = std::numbers::pi;

SampledFunction unit_gaussian(const GridSpec& g) {
  return gfml::make_gaussian(g, gfml::kIdentity, kUnitWidths, 1.0);
}

// Distinct value at every node, linear in no direction.
SampledFunction ramp(const GridSpec& g) {
  return SampledFunction::Generate(g, [](const ChartPoint& c) {
    double s = 0.0;
    for (std::size_t d = 0; d < gfml::kDims; ++d) {
      s += (1.0 + d) * c[d] + 0.1 * c[d] * c[d];
    }
    return Complex(s, -0.5 * s);
  });
}

}  // namespace

TEST(Sampled, ConstructionChecks) {
  const GridSpec g = GridSpec::Uniform(2, 1.0);
  EXPECT_EQ(SampledFunction(g).size(), 64u);
  EXPECT_THROW(SampledFunction(g, std::vector<Complex>(63)), gfml::GridError);
  std::vector<Complex> bad(64);
  bad[3] = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  EXPECT_THROW(SampledFunction(g, bad), std::invalid_argument);
}

TEST(IntegrateHaar, ZeroAndGaussian) {
  const GridSpec g = GridSpec::Uniform(16, 8.0);
  EXPECT_EQ(gfml::integrate_haar(SampledFunction(g)), Complex{});
  const Complex integral = gfml::integrate_haar(unit_gaussian(g));
  const double exact = std::pow(2.0 * kPi, 3);
  EXPECT_LE(std::abs(integral - exact) / exact, 1e-6);
  EXPECT_NEAR(exact, 248.0502, 1e-4);
}

TEST(IntegrateHaar, Linearity) {
  const GridSpec g = GridSpec::Uniform(8, 4.0);
  const SampledFunction f = unit_gaussian(g);
  const Complex c{2.5, -1.25};
  const SampledFunction scaled =
      gfml::make_gaussian(g, gfml::kIdentity, kUnitWidths, c);
  EXPECT_LE(std::abs(gfml::integrate_haar(scaled) -
                     c * gfml::integrate_haar(f)),
            1e-12 * std::abs(c * gfml::integrate_haar(f)));
}

TEST(Energy, GaussianIsPiCubed) {
  const GridSpec g = GridSpec::Uniform(16, 5.5);
  const double e = gfml::energy(unit_gaussian(g));
  EXPECT_LE(std::abs(e - std::pow(kPi, 3)) / std::pow(kPi, 3), 1e-6);
  EXPECT_NEAR(std::pow(kPi, 3), 31.0063, 1e-4);
}

TEST(Energy, InnerProductConsistency) {
  const GridSpec g = GridSpec::Uniform(4, 1.0);
  const SampledFunction f = ramp(g);
  EXPECT_NEAR(gfml::inner_product(f, f).real(), gfml::energy(f),
              1e-12 * gfml::energy(f));
  EXPECT_NEAR(gfml::inner_product(f, f).imag(), 0.0, 1e-12);
}

TEST(MakeGaussian, Basics) {
  const GridSpec g = GridSpec::Uniform(5, 2.0);
  const SampledFunction zero =
      gfml::make_gaussian(g, gfml::kIdentity, kUnitWidths, 0.0);
  EXPECT_EQ(gfml::max_abs(zero.values()), 0.0);
  const SampledFunction f = unit_gaussian(g);
  EXPECT_EQ(f[g.flatten({2, 2, 2, 2, 2, 2})], Complex(1.0));
  auto widths = kUnitWidths;
  widths[4] = 0.0;
  EXPECT_THROW(gfml::make_gaussian(g, gfml::kIdentity, widths, 1.0),
               std::invalid_argument);
}

TEST(Interpolation, NodesMidpointsAndOutside) {
  const GridSpec g = GridSpec::Uniform(5, 2.0);
  const SampledFunction f = ramp(g);
  for (std::size_t i = 0; i < g.size(); i += 97) {
    EXPECT_EQ(gfml::evaluate_chart(f, g.point(i)), f[i]);
    EXPECT_EQ(gfml::evaluate_interpolated(f, gfml::from_chart(g.point(i))),
              f[i]);
  }
  for (std::size_t d = 0; d < gfml::kDims; ++d) {
    std::array<std::size_t, gfml::kDims> idx = {1, 2, 3, 1, 2, 3};
    const std::size_t lo = g.flatten(idx);
    ++idx[d];
    const std::size_t hi = g.flatten(idx);
    ChartPoint c = g.point(lo);
    c[d] += 0.5 * g.axis(d).step;
    EXPECT_NEAR(std::abs(gfml::evaluate_chart(f, c) - 0.5 * (f[lo] + f[hi])),
                0.0, 1e-13);
  }
  EXPECT_EQ(gfml::evaluate_chart(f, {2.5, 0, 0, 0, 0, 0}), Complex{});
  EXPECT_EQ(gfml::evaluate_chart(f, {0, 0, 0, 0, 0, -3}), Complex{});
}

TEST(Interpolation, ReproducesMultilinearFunctions) {
  const GridSpec g = GridSpec::Uniform(4, 1.5);
  const auto bilinear = [](const ChartPoint& c) {
    return Complex(1.0 + c[0] * c[3] - 2.0 * c[1] + c[2] * c[4] * c[5],
                   c[0] - c[5]);
  };
  const SampledFunction f = SampledFunction::Generate(g, bilinear);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    ChartPoint c;
    for (auto& x : c) x = u(rng);
    ASSERT_NEAR(std::abs(gfml::evaluate_chart(f, c) - bilinear(c)), 0.0,
                1e-12);
  }
}

TEST(Containment, BoundaryMassAndWarning) {
  const GridSpec g = GridSpec::Uniform(16, 8.0);
  EXPECT_LT(gfml::boundary_mass_fraction(unit_gaussian(g)), 1e-8);
  EXPECT_EQ(gfml::boundary_mass_fraction(SampledFunction(g)), 0.0);
  const SampledFunction wide = gfml::make_gaussian(
      g, gfml::kIdentity, {4, 4, 4, 4, 4, 4}, 1.0);
  gfml::Diagnostics diag;
  EXPECT_GT(gfml::check_containment(wide, &diag, "wide"), 1e-8);
  EXPECT_TRUE(diag.has("containment"));
}

TEST(RightInvariance, IdentityIsExact) {
  const GridSpec g = GridSpec::Uniform(8, 6.0);
  const auto r = gfml::right_invariance_check(unit_gaussian(g), gfml::kIdentity);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.contained);
}

TEST(RightInvariance, TranslatesConvergeAtSecondOrder) {
  const gfml::GroupElement shifts[] = {{{0.1, 0, 0}, {}},
                                       {{}, {1.05, 1, 1}}};
  // Narrow in t so that the n3 translate rho(a) m stays inside the box.
  const std::array<double, gfml::kDims> widths = {1, 1, 1, 0.5, 0.5, 0.5};
  const GridSpec coarse = GridSpec::Uniform(12, 8.0);
  const GridSpec fine = GridSpec::Uniform(16, 8.0);
  const SampledFunction fc =
      gfml::make_gaussian(coarse, gfml::kIdentity, widths, 1.0);
  const SampledFunction ff =
      gfml::make_gaussian(fine, gfml::kIdentity, widths, 1.0);
  for (const auto& s : shifts) {
    const auto rc = gfml::right_invariance_check(fc, s);
    const auto rf = gfml::right_invariance_check(ff, s);
    EXPECT_LE(rf.residual, 1e-3);
    EXPECT_TRUE(rf.contained);
    const auto e = gfml::estimate_order(coarse.axis(0).step, rc.residual,
                                        fine.axis(0).step, rf.residual);
    EXPECT_TRUE(gfml::meets_order(e, 2.0))
        << rc.residual << " -> " << rf.residual << " order " << e.order;
  }
}

TEST(RightInvariance, WideDilationSpreadLeavesTheBox) {
  const GridSpec g = GridSpec::Uniform(10, 8.0);
  const auto r = gfml::right_invariance_check(
      gfml::make_gaussian(g, gfml::kIdentity, kUnitWidths, 1.0),
      {{0.1, 0, 0}, {}});
  EXPECT_FALSE(r.contained);
  EXPECT_GT(r.residual, 1e-5);
}

TEST(RightInvariance, FlagsEscapedSupport) {
  const GridSpec g = GridSpec::Uniform(8, 3.0);
  const auto r = gfml::right_invariance_check(unit_gaussian(g),
                                              {{2.5, 0, 0}, {}});
  EXPECT_FALSE(r.contained);
  EXPECT_GT(r.escaped_fraction, 1e-8);
}

TEST(Combine, LinearCombinationAndRelativeL2) {
  const GridSpec g = GridSpec::Uniform(3, 1.0);
  const SampledFunction f = ramp(g);
  const SampledFunction h = gfml::combine(2.0, f, -1.0, f);
  EXPECT_EQ(gfml::relative_l2(h.values(), f.values()), 0.0);
  const SampledFunction z = gfml::combine(1.0, f, -1.0, f);
  EXPECT_EQ(gfml::max_abs(z.values()), 0.0);
  EXPECT_NEAR(gfml::relative_l2(z.values(), f.values()), 1.0, 1e-15);
  EXPECT_THROW(gfml::combine(1.0, f, 1.0, SampledFunction(GridSpec::Uniform(3, 2.0))),
               gfml::GridError);
}

TEST(ComponentLabeled, RequiresSharedGrid) {
  const SampledFunction a(GridSpec::Uniform(3, 1.0));
  const SampledFunction b(GridSpec::Uniform(3, 2.0));
  EXPECT_NO_THROW(gfml::ComponentLabeledFunction(a, a));
  EXPECT_THROW(gfml::ComponentLabeledFunction(a, b), gfml::GridError);
}
