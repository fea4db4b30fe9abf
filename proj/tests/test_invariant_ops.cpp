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
#include <random>
#include <stdexcept>

#include "gfml/invariant_ops.hpp"
#include "gfml/refinement.hpp"

namespace {

using gfml::Basis;
using gfml::ChartPoint;
using gfml::Complex;
using gfml::Generator;
using gfml::GridSpec;
using gfml::GroupElement;
using gfml::SampledFunction;

// Cubic polynomial in the chart; fourth-order stencils differentiate it
// exactly, boundary nodes included.
Complex cubic(const ChartPoint& c) {
  return Complex(1.0 + 2.0 * c[0] - c[1] * c[2] + 0.5 * c[0] * c[1] * c[2] +
                     c[2] * c[2] * c[1] - 0.25 * c[0] * c[0] * c[0],
                 c[1] - c[0] * c[2] + 0.3 * c[3] * c[4] - c[5] * c[5] * c[5]);
}

// Smooth complex function with analytic chart derivatives.
struct Smooth {
  Complex operator()(const ChartPoint& c) const {
    return std::exp(Complex(-0.5 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) -
                                (c[3] * c[3] + c[4] * c[4] + c[5] * c[5]),
                            0.4 * c[0] + 0.3 * c[1] * c[2] - 0.5 * c[3]));
  }
  Complex operator()(const GroupElement& x) const {
    return (*this)(gfml::to_chart(x));
  }
  // d/dc_axis in closed form.
  Complex d(const ChartPoint& c, std::size_t axis) const {
    Complex e;
    switch (axis) {
      case 0: e = Complex(-c[0], 0.4); break;
      case 1: e = Complex(-c[1], 0.3 * c[2]); break;
      case 2: e = Complex(-c[2], 0.3 * c[1]); break;
      case 3: e = Complex(-2 * c[3], -0.5); break;
      default: e = Complex(-2 * c[axis], 0.0); break;
    }
    return e * (*this)(c);
  }
  // Right-invariant fields in the chart.
  Complex field(Basis z, const ChartPoint& c) const {
    switch (z) {
      case Basis::kE3: return d(c, 0);
      case Basis::kE2: return d(c, 1);
      case Basis::kE1: return c[1] * d(c, 0) + d(c, 2);
      case Basis::kA1: return c[0] * d(c, 0) + c[2] * d(c, 2) + d(c, 3);
      case Basis::kA2: return c[1] * d(c, 1) - c[2] * d(c, 2) + d(c, 4);
      case Basis::kA3: return -c[0] * d(c, 0) - c[1] * d(c, 1) + d(c, 5);
    }
    return {};
  }
};

GridSpec field_grid(std::size_t points) {
  return GridSpec::Symmetric({points, points, points, points, points, points},
                             {2, 2, 2, 1, 1, 1});
}

// Interior nodes where every stencil is central, on a thinned sample.
std::vector<std::size_t> interior(const GridSpec& g, Generator z,
                                  std::size_t stride = 1) {
  const auto mask = gfml::stencil_mask(g, z);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); i += stride) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(Generators, Names) {
  for (std::size_t k = 0; k < gfml::kGenerators; ++k) {
    const auto g = static_cast<Generator>(k);
    EXPECT_EQ(gfml::generator_from_name(gfml::generator_name(g)), g);
  }
  EXPECT_EQ(gfml::generator_name(Generator::kA2t), "A2t");
  EXPECT_EQ(gfml::generator_of(Basis::kA3), Generator::kA3);
  EXPECT_THROW(gfml::generator_from_name("A4t"), gfml::ParseError);
}

TEST(BasisFields, Examples) {
  const GridSpec g = field_grid(6);
  const SampledFunction n3 = SampledFunction::Generate(
      g, [](const ChartPoint& c) { return Complex(c[0], 0); });
  const SampledFunction e1 = gfml::basis_field_apply(Basis::kE1, n3);
  for (std::size_t i = 0; i < g.size(); ++i) {
    ASSERT_NEAR(std::abs(e1[i] - g.point(i)[1]), 0.0, 1e-12);
  }
  const SampledFunction one = SampledFunction::Generate(
      g, [](const ChartPoint&) { return Complex(1, 0); });
  EXPECT_LE(gfml::max_abs(gfml::basis_field_apply(Basis::kE2, one).values()),
            1e-12);

  const GridSpec fine = GridSpec::Symmetric({5, 5, 5, 41, 5, 5}, {1, 1, 1, 1, 1, 1});
  const SampledFunction a1 = SampledFunction::Generate(
      fine, [](const ChartPoint& c) { return Complex(std::exp(c[3]), 0); });
  const SampledFunction da1 = gfml::basis_field_apply(Basis::kA1, a1);
  EXPECT_LE(gfml::relative_l2(da1.values(), a1.values()), 1e-6);
}

TEST(BasisFields, ExactOnCubicsIncludingBoundaries) {
  const GridSpec g = field_grid(6);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  // Chart derivatives of the cubic.
  const auto d = [](const ChartPoint& c, std::size_t axis) -> Complex {
    switch (axis) {
      case 0: return {2.0 + 0.5 * c[1] * c[2] - 0.75 * c[0] * c[0], -c[2]};
      case 1: return {-c[2] + 0.5 * c[0] * c[2] + c[2] * c[2], 1.0};
      case 2: return {-c[1] + 0.5 * c[0] * c[1] + 2 * c[2] * c[1], -c[0]};
      case 3: return {0.0, 0.3 * c[4]};
      case 4: return {0.0, 0.3 * c[3]};
      default: return {0.0, -3 * c[5] * c[5]};
    }
  };
  for (std::size_t axis = 0; axis < gfml::kDims; ++axis) {
    const SampledFunction df = gfml::chart_derivative(f, axis);
    for (std::size_t i = 0; i < g.size(); i += 7) {
      ASSERT_NEAR(std::abs(df[i] - d(g.point(i), axis)), 0.0, 1e-11) << axis;
    }
  }
}

TEST(BasisFields, LieBracketOfE1AndE2) {
  // [E1, E2] = E1 E2 - E2 E1 = -E3.
  const GridSpec g = field_grid(7);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const auto e1 = [](const SampledFunction& h) {
    return gfml::generator_apply(Generator::kE1, h);
  };
  const auto e2 = [](const SampledFunction& h) {
    return gfml::generator_apply(Generator::kE2, h);
  };
  const SampledFunction bracket = gfml::combine(1.0, e1(e2(f)), -1.0, e2(e1(f)));
  const SampledFunction e3 = gfml::generator_apply(Generator::kE3, f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    ASSERT_NEAR(std::abs(bracket[i] + e3[i]), 0.0, 1e-10);
  }
}

TEST(BasisFields, AgreeWithAnalyticFields) {
  const Smooth s;
  for (Basis z : gfml::kAllBases) {
    double previous = 0.0, previous_h = 0.0;
    for (std::size_t points : {9u, 13u}) {
      const GridSpec g = field_grid(points);
      const SampledFunction f = SampledFunction::Generate(
          g, [&](const ChartPoint& c) { return s(c); });
      const SampledFunction zf = gfml::basis_field_apply(z, f);
      double worst = 0.0;
      for (std::size_t i : interior(g, gfml::generator_of(z), 3)) {
        worst = std::max(worst, std::abs(zf[i] - s.field(z, g.point(i))));
      }
      if (previous > 0.0) {
        const auto e = gfml::estimate_order(previous_h, previous,
                                            g.axis(0).step, worst);
        EXPECT_GE(e.order, 3.0) << gfml::basis_name(z);
      }
      previous = worst;
      previous_h = g.axis(0).step;
    }
  }
}

TEST(FiniteDifferenceOracle, ExactForLinearFunctions) {
  const auto linear = [](const GroupElement& x) { return Complex(3 * x.n.n3 - 1, 0); };
  const GroupElement x{{0.3, -0.4, 0.2}, {1.2, 0.8, 1.1}};
  for (double t : {1e-3, 0.1, 1.0}) {
    EXPECT_NEAR(std::abs(gfml::finite_difference_oracle(Basis::kE3, linear, x, t) -
                         3.0),
                0.0, 1e-12);
  }
}

TEST(FiniteDifferenceOracle, ConvergesInTAndStep) {
  const Smooth s;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<GroupElement> pts(32);
  for (auto& p : pts) {
    p = gfml::from_chart({u(rng), u(rng), u(rng), 0.4 * u(rng), 0.4 * u(rng),
                          0.4 * u(rng)});
  }
  for (Basis z : gfml::kAllBases) {
    // Exact field against the oracle: O(t^2).
    const auto t_error = [&](double t) {
      double worst = 0.0;
      for (const auto& p : pts) {
        worst = std::max(worst,
                         std::abs(gfml::finite_difference_oracle(z, s, p, t) -
                                  s.field(z, gfml::to_chart(p))));
      }
      return worst;
    };
    const double ec = t_error(0.02), ef = t_error(0.01);
    EXPECT_GE(gfml::estimate_order(0.02, ec, 0.01, ef).order, 1.9)
        << gfml::basis_name(z);

    // Stencil field against the oracle with small t: O(step^4).
    double previous = 0.0, previous_h = 0.0;
    for (std::size_t points : {9u, 13u}) {
      const GridSpec g = field_grid(points);
      const SampledFunction f = SampledFunction::Generate(
          g, [&](const ChartPoint& c) { return s(c); });
      const SampledFunction zf = gfml::basis_field_apply(z, f);
      double worst = 0.0;
      for (std::size_t i : interior(g, gfml::generator_of(z), 5)) {
        const GroupElement x = gfml::from_chart(g.point(i));
        worst = std::max(worst,
                         std::abs(zf[i] - gfml::finite_difference_oracle(z, s, x, 1e-4)));
      }
      if (previous > 0.0) {
        EXPECT_GE(gfml::estimate_order(previous_h, previous, g.axis(0).step, worst)
                      .order,
                  2.0)
            << gfml::basis_name(z);
      }
      previous = worst;
      previous_h = g.axis(0).step;
    }
  }
}

TEST(FiniteDifferenceOracle, SampledOverloadInterpolates) {
  const GridSpec g = field_grid(7);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const GroupElement x = gfml::from_chart(g.point(g.flatten({3, 3, 3, 3, 3, 3})));
  const Complex direct = gfml::finite_difference_oracle(
      Basis::kE3, [&](const GroupElement& y) { return gfml::evaluate_interpolated(f, y); },
      x, g.axis(0).step);
  EXPECT_EQ(gfml::finite_difference_oracle(Basis::kE3, f, x, g.axis(0).step), direct);
}

TEST(BasisFields, CommuteWithRightTranslation) {
  // Z(f o R_g) = (Z f) o R_g. The left side is the stencil field of the sampled
  // translate; the right side is the oracle derivative of f at Y g, and also
  // the interpolated stencil field of f.
  const Smooth s;
  const GroupElement shift{{0.15, -0.1, 0.2}, {1.05, 0.97, 1.02}};
  for (Basis z : gfml::kAllBases) {
    double prev_exact = 0.0, prev_interp = 0.0, prev_h = 0.0;
    for (std::size_t points : {7u, 13u}) {
      const GridSpec g = field_grid(points);
      const SampledFunction f = SampledFunction::Generate(
          g, [&](const ChartPoint& c) { return s(c); });
      const SampledFunction translated = SampledFunction::Generate(
          g, [&](const ChartPoint& c) {
            return s(gfml::gp_mul(gfml::from_chart(c), shift));
          });
      const SampledFunction lhs = gfml::basis_field_apply(z, translated);
      const SampledFunction zf = gfml::basis_field_apply(z, f);
      double exact = 0.0, interp = 0.0;
      for (std::size_t i : interior(g, gfml::generator_of(z), 3)) {
        const GroupElement moved = gfml::gp_mul(gfml::from_chart(g.point(i)), shift);
        if (!g.contains(gfml::to_chart(moved))) continue;
        exact = std::max(exact, std::abs(lhs[i] - gfml::finite_difference_oracle(
                                                      z, s, moved, 1e-4)));
        interp = std::max(interp,
                          std::abs(lhs[i] - gfml::evaluate_interpolated(zf, moved)));
      }
      if (prev_h > 0.0) {
        EXPECT_GE(gfml::estimate_order(prev_h, prev_exact, g.axis(0).step, exact)
                      .order,
                  2.0)
            << gfml::basis_name(z) << " " << prev_exact << " -> " << exact;
        EXPECT_LT(interp, 0.7 * prev_interp) << gfml::basis_name(z);
      }
      prev_exact = exact;
      prev_interp = interp;
      prev_h = g.axis(0).step;
    }
  }
}

TEST(ChartDerivative, NeedsFiveNodes) {
  const GridSpec g = GridSpec::Symmetric({4, 5, 5, 5, 5, 5}, {1, 1, 1, 1, 1, 1});
  const SampledFunction f(g);
  EXPECT_THROW(gfml::chart_derivative(f, 0), gfml::GridError);
  EXPECT_NO_THROW(gfml::chart_derivative(f, 1));
  EXPECT_THROW(gfml::generator_apply(Generator::kE3, f), gfml::GridError);
}

TEST(StencilMask, MarksBoundaryNodes) {
  const GridSpec g = field_grid(6);
  const auto e3 = gfml::stencil_mask(g, Generator::kE3);
  const auto e1 = gfml::stencil_mask(g, Generator::kE1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto idx = g.unflatten(i);
    const auto central = [](std::size_t j) { return j >= 2 && j <= 3; };
    ASSERT_EQ(e3[i], central(idx[0]) ? 1 : 0);
    ASSERT_EQ(e1[i], central(idx[0]) && central(idx[2]) ? 1 : 0);
  }
}

TEST(Parser, AcceptedForms) {
  auto p = gfml::parse_operator("1*E3^2 + 1*A1t^2 + -4");
  ASSERT_EQ(p.terms.size(), 3u);
  EXPECT_EQ(p.terms[0].power[0], 2);
  EXPECT_EQ(p.terms[1].power[6], 2);
  EXPECT_EQ(p.terms[2].coeff, Complex(-4.0));
  EXPECT_EQ(p.terms[2].order(), 0);
  EXPECT_EQ(p.order(), 2);

  p = gfml::parse_operator("2.5-0.5i*E3 E2^2 A3t + 3i*E1 + E2*A1");
  ASSERT_EQ(p.terms.size(), 3u);
  EXPECT_EQ(p.terms[0].coeff, Complex(2.5, -0.5));
  EXPECT_EQ(p.terms[0].order(), 4);
  EXPECT_EQ(p.terms[1].coeff, Complex(0.0, 3.0));
  EXPECT_EQ(p.terms[2].coeff, Complex(1.0));
  EXPECT_EQ(p.terms[2].power[1], 1);
  EXPECT_EQ(p.terms[2].power[3], 1);

  p = gfml::parse_operator("-E3 + 1+2i");
  EXPECT_EQ(p.terms[0].coeff, Complex(-1.0));
  EXPECT_EQ(p.terms[1].coeff, Complex(1.0, 2.0));

  EXPECT_TRUE(gfml::parse_operator("0").is_zero());
  EXPECT_TRUE(gfml::parse_operator("0*E3 + 0").is_zero());
  EXPECT_FALSE(gfml::parse_operator("E3").is_zero());
}

TEST(Parser, RoundTripThroughText) {
  for (const char* text : {"1*E3^2 + 1*A1t^2 + -4", "2.5-0.5i*E3 E2^2 A3t",
                           "0.125+3i*E1 A2 + -E2", "7"}) {
    const auto p = gfml::parse_operator(text);
    const auto q = gfml::parse_operator(p.to_string());
    ASSERT_EQ(p.terms.size(), q.terms.size()) << text;
    for (std::size_t t = 0; t < p.terms.size(); ++t) {
      EXPECT_EQ(p.terms[t].coeff, q.terms[t].coeff) << text;
      EXPECT_EQ(p.terms[t].power, q.terms[t].power) << text;
    }
  }
}

TEST(Parser, Rejections) {
  for (const char* text : {"", "   ", "E4", "E2 E3", "E3 E3", "1*", "1 + ",
                           "+E3", "abc", "1*E3^", "1*E3^-1", "E3 / E2",
                           "1*E3 2"}) {
    EXPECT_THROW(gfml::parse_operator(text), gfml::ParseError) << text;
  }
}

TEST(OperatorApply, IdentityAndOrderLimit) {
  const GridSpec g = field_grid(6);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const SampledFunction id = gfml::operator_apply(gfml::parse_operator("1"), f);
  EXPECT_EQ(gfml::relative_l2(id.values(), f.values()), 0.0);
  EXPECT_THROW(gfml::operator_apply(gfml::parse_operator("E3^3 E2^2"), f),
               std::invalid_argument);
}

TEST(OperatorApply, RightmostFactorActsFirst) {
  const GridSpec g = field_grid(6);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const SampledFunction p = gfml::operator_apply(gfml::parse_operator("E2 E1"), f);
  const SampledFunction q = gfml::generator_apply(
      Generator::kE2, gfml::generator_apply(Generator::kE1, f));
  EXPECT_LE(gfml::relative_l2(p.values(), q.values()), 1e-14);
}

TEST(OperatorApply, LewyForm) {
  // E1 + i E2 = n2 d/dn3 + d/dn1 + i d/dn2.
  const GridSpec g = field_grid(6);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const SampledFunction p = gfml::operator_apply(gfml::parse_operator("E1 + 1i*E2"), f);
  const SampledFunction d3 = gfml::chart_derivative(f, 0);
  const SampledFunction d2 = gfml::chart_derivative(f, 1);
  const SampledFunction d1 = gfml::chart_derivative(f, 2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Complex expected =
        g.point(i)[1] * d3[i] + d1[i] + Complex(0, 1) * d2[i];
    ASSERT_NEAR(std::abs(p[i] - expected), 0.0, 1e-12);
  }
}

TEST(OperatorApply, SecondDerivativeOfGaussian) {
  // E3^2 exp(-n3^2 / 2) = (n3^2 - 1) exp(-n3^2 / 2); fourth-order convergence.
  double previous = 0.0, previous_h = 0.0;
  for (std::size_t points : {32u, 64u, 128u}) {
    const GridSpec g = GridSpec::Symmetric({points, 2, 2, 2, 2, 2},
                                           {6, 1, 1, 1, 1, 1});
    const SampledFunction f = SampledFunction::Generate(g, [](const ChartPoint& c) {
      return Complex(std::exp(-0.5 * c[0] * c[0]), 0);
    });
    const SampledFunction exact = SampledFunction::Generate(g, [](const ChartPoint& c) {
      return Complex((c[0] * c[0] - 1) * std::exp(-0.5 * c[0] * c[0]), 0);
    });
    const SampledFunction d2 = gfml::operator_apply(gfml::parse_operator("E3^2"), f);
    const double err = gfml::relative_l2(d2.values(), exact.values());
    if (points == 128) {
      EXPECT_LE(err, 1e-4);
    }
    if (previous > 0.0) {
      EXPECT_GE(gfml::estimate_order(previous_h, previous, g.axis(0).step, err).order,
                3.5)
          << previous << " -> " << err;
    }
    previous = err;
    previous_h = g.axis(0).step;
  }
}

TEST(OperatorApply, Linearity) {
  const GridSpec g = field_grid(6);
  const SampledFunction f = SampledFunction::Generate(g, cubic);
  const SampledFunction h = SampledFunction::Generate(g, [](const ChartPoint& c) {
    return Complex(std::sin(c[0] - c[3]), std::cos(c[1] * c[2]));
  });
  const auto p = gfml::parse_operator("2*E3 E1 + 0.5i*A2 A3t");
  const auto q = gfml::parse_operator("-1*E2^2 + 1+1i*A1");
  const Complex alpha(0.7, -0.2), beta(-1.3, 0.4);
  const SampledFunction lhs = gfml::operator_apply(p, gfml::combine(alpha, f, beta, h));
  const SampledFunction rhs = gfml::combine(alpha, gfml::operator_apply(p, f), beta,
                                            gfml::operator_apply(p, h));
  EXPECT_LE(gfml::relative_l2(lhs.values(), rhs.values()), 1e-13);

  gfml::OperatorSpec sum = p;
  for (auto m : q.terms) {
    m.coeff *= beta;
    sum.terms.push_back(m);
  }
  const SampledFunction combined = gfml::operator_apply(sum, f);
  const SampledFunction separate = gfml::combine(1.0, gfml::operator_apply(p, f), beta,
                                                 gfml::operator_apply(q, f));
  EXPECT_LE(gfml::relative_l2(combined.values(), separate.values()), 1e-13);
}

TEST(Symbol, Examples) {
  const GridSpec g = field_grid(6);
  const auto one = gfml::operator_symbol(gfml::parse_operator("1"), g);
  for (std::size_t k = 0; k < one.size(); ++k) ASSERT_EQ(one[k], Complex(1.0));
  const auto e3 = gfml::operator_symbol(gfml::parse_operator("E3^2"), g);
  const auto mix = gfml::operator_symbol(gfml::parse_operator("0.5*E2 + A3t"), g);
  for (std::size_t k = 0; k < e3.size(); ++k) {
    const auto w = gfml::frequency_at(e3.freq(), k);
    ASSERT_NEAR(std::abs(e3[k] + w[0] * w[0]), 0.0, 1e-12);
    ASSERT_NEAR(std::abs(mix[k] - Complex(0, 0.5 * w[1] + w[5])), 0.0, 1e-12);
  }
  for (const char* text : {"E1", "A1", "1 + A2", "A3 A1t"}) {
    EXPECT_THROW(gfml::operator_symbol(gfml::parse_operator(text), g),
                 gfml::SymbolError)
        << text;
  }
}

TEST(Symbol, DiagonalizesTheStencilOperatorAtLowFrequency) {
  const GridSpec g = GridSpec::Symmetric({64, 2, 2, 64, 2, 2}, {12, 1, 1, 12, 1, 1});
  const SampledFunction f = gfml::make_gaussian(g, gfml::kIdentity,
                                                {2, 1, 1, 2, 1, 1}, 1.0);
  const auto p = gfml::parse_operator("E3^2 + 2i*A1t + -1");
  const gfml::Spectrum lhs = gfml::fourier_mellin_forward(gfml::operator_apply(p, f));
  const gfml::Spectrum fs = gfml::fourier_mellin_forward(f);
  const gfml::Spectrum m = gfml::operator_symbol(p, g);
  std::vector<Complex> rhs(fs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = m[k] * fs[k];
  EXPECT_LE(gfml::relative_l2(lhs.values(), rhs), 1e-3);
}

TEST(Solver, IdentityReturnsInput) {
  const GridSpec g = field_grid(6);
  const SampledFunction psi = SampledFunction::Generate(g, cubic);
  const auto r = gfml::solve_invariant_operator(gfml::parse_operator("1"), psi);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    worst = std::max(worst, std::abs(r.phi[i] - psi[i]));
  }
  EXPECT_LE(worst, 1e-12);
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_DOUBLE_EQ(r.min_symbol, 1.0);
}

TEST(Solver, Refusals) {
  const GridSpec g = field_grid(6);
  const SampledFunction psi = SampledFunction::Generate(g, cubic);
  for (const char* text : {"1*E1", "0", "0*E3 + 0", "E3", "A2 + 1"}) {
    EXPECT_THROW(gfml::solve_invariant_operator(gfml::parse_operator(text), psi),
                 gfml::SymbolError)
        << text;
  }
  EXPECT_THROW(gfml::solve_invariant_operator(gfml::OperatorSpec{}, psi),
               gfml::SymbolError);
}

TEST(Solver, RegularizedVanishingSymbolWarns) {
  const GridSpec g = field_grid(6);
  const SampledFunction psi = SampledFunction::Generate(g, cubic);
  const auto r = gfml::solve_invariant_operator(gfml::parse_operator("E3"), psi, 1e-3);
  EXPECT_TRUE(r.diagnostics.has("ill-posed"));
  EXPECT_EQ(r.min_symbol, 0.0);
}

TEST(Solver, ManufacturedSolutionAndTikhonovBound) {
  const GridSpec g = GridSpec::Symmetric({24, 2, 2, 24, 2, 2},
                                         {6 * 8, 1, 1, 6 * 8, 1, 1});
  const SampledFunction phi0 = gfml::make_gaussian(g, gfml::kIdentity,
                                                   {8, 1, 1, 8, 1, 1}, 1.0);
  const auto p = gfml::parse_operator("1*E3^2 + 1*A1t^2 + -4");
  const SampledFunction psi = gfml::operator_apply(p, phi0);
  const auto exact = gfml::solve_invariant_operator(p, psi);
  EXPECT_LE(gfml::relative_l2(exact.phi.values(), phi0.values()), 1e-3);
  EXPECT_DOUBLE_EQ(exact.min_symbol, 4.0);
  const auto reg = gfml::solve_invariant_operator(p, psi, 1e-6);
  EXPECT_LE(reg.residual - exact.residual, 1e-5 * std::max(exact.residual, 1.0));
  // ||d phi|| <= (eps^2 / min|m|^2) ||phi||.
  EXPECT_LE(gfml::relative_l2(reg.phi.values(), exact.phi.values()),
            1e-12 / 16.0 * 1.0001);
}

TEST(Solver, ResidualConvergesAtStencilOrder) {
  const auto p = gfml::parse_operator("E3^2 + -4");
  double previous = 0.0, previous_h = 0.0;
  for (std::size_t points : {24u, 48u}) {
    const GridSpec g = GridSpec::Symmetric({points, 2, 2, 2, 2, 2},
                                           {7, 1, 1, 1, 1, 1});
    const SampledFunction psi = gfml::make_gaussian(g, gfml::kIdentity,
                                                    {1, 1, 1, 1, 1, 1}, 1.0);
    const auto r = gfml::solve_invariant_operator(p, psi);
    if (previous > 0.0) {
      EXPECT_GE(gfml::estimate_order(previous_h, previous, g.axis(0).step,
                                     r.residual)
                    .order,
                3.5)
          << previous << " -> " << r.residual;
    }
    previous = r.residual;
    previous_h = g.axis(0).step;
  }
}
