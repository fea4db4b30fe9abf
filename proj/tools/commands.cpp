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

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gfml/container.hpp"
#include "gfml/convolution.hpp"
#include "gfml/error.hpp"
#include "gfml/grid.hpp"
#include "gfml/group.hpp"
#include "gfml/invariant_ops.hpp"
#include "gfml/lifting.hpp"
#include "gfml/parallel.hpp"
#include "gfml/plancherel.hpp"
#include "gfml/refinement.hpp"
#include "gfml/sampled.hpp"
#include "gfml/transform.hpp"
#include "gfml/version.hpp"
#include "report.hpp"

namespace gfml::cli {
namespace {

using Widths = std::array<double, kDims>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Usage errors detected after flag parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalArgs {
  int threads = 0;
  std::string format = "json";
  bool reproducible = false;
};

struct GenArgs {
  std::string preset = "unit-gaussian";
  std::size_t points = 16;
  double halfwidth = 8.0;
  std::vector<double> widths = {1, 1, 1, 1, 1, 1};
  std::vector<double> center = {0, 0, 0, 0, 0, 0};
  double amplitude = 1.0;
  std::string output;
};

struct TransformArgs {
  std::string input;
  std::string output;
  std::string grid_from;
  double tolerance = 1e-10;
  double roundtrip_tolerance = 1e-12;
};

struct PlancherelArgs {
  std::string input;
  std::string neg;
  std::string freq_energy_from;
  bool two_copy = false;
  bool resampled = false;
  double parseval_tolerance = 1e-10;
  double conv_tolerance = 2e-2;
  double factor_two_tolerance = 1e-12;
};

struct CheckArgs {
  std::string which;
  std::uint64_t seed = 0;
  std::optional<std::size_t> points;
  std::optional<std::size_t> coarse_points;
  std::optional<double> halfwidth;
  std::optional<std::size_t> samples;
  std::optional<double> tolerance;
  double min_order = 1.5;
  std::string shift = "0.1,0,0,0,0,0";
  bool resampled = false;
};

struct SolveArgs {
  std::string op;
  std::string input;
  std::string output;
  std::string manufactured;
  std::size_t points = 16;
  double eps = 0.0;
  double tolerance = 1e-4;
};

Widths to_widths(const std::vector<double>& v, const char* what) {
  if (v.size() != kDims) {
    throw UsageError(std::string(what) + " needs 6 comma-separated values");
  }
  Widths w;
  std::copy(v.begin(), v.end(), w.begin());
  return w;
}

// "identity" or six comma-separated chart coordinates (n3,n2,n1,t1,t2,t3).
GroupElement parse_shift(const std::string& text) {
  if (text == "identity") return kIdentity;
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(x)) {
      throw UsageError("--shift: bad value '" + item + "'");
    }
    v.push_back(x);
  }
  ChartPoint c;
  const Widths w = to_widths(v, "--shift");
  std::copy(w.begin(), w.end(), c.begin());
  return from_chart(c);
}

Json json_vector(const auto& v) { return Json(std::vector<double>(v.begin(), v.end())); }

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Spectrum read_spectrum(const std::string& path, const GridSpec& spatial) {
  Container c = read_container_file(path);
  if (!c.grid.is_frequency()) {
    throw FormatError(path + ": holds a function, not a spectrum");
  }
  return Spectrum(c.grid, spatial, std::move(c.values));
}

// gen -----------------------------------------------------------------------

RunReport cmd_gen(const GenArgs& a) {
  RunReport r("gen");
  r.param("preset", a.preset);
  r.param("points", a.points);
  r.param("halfwidth", a.halfwidth);
  const GridSpec grid = GridSpec::Uniform(a.points, a.halfwidth);
  std::optional<SampledFunction> f;
  if (a.preset == "zero") {
    f.emplace(grid);
  } else if (a.preset == "unit-gaussian") {
    f.emplace(make_gaussian(grid, kIdentity, {1, 1, 1, 1, 1, 1}, 1.0));
  } else {
    const Widths w = to_widths(a.widths, "--widths");
    const Widths c = to_widths(a.center, "--center");
    r.param("widths", json_vector(w));
    r.param("center", json_vector(c));
    r.param("amplitude", a.amplitude);
    f.emplace(make_gaussian(grid, from_chart(c), w, a.amplitude));
  }
  r.grid(grid);
  const Complex integral = integrate_haar(*f);
  r.result("haar_integral_re", integral.real());
  r.result("haar_integral_im", integral.imag());
  r.result("energy", energy(*f));
  r.result("max_abs", max_abs(f->values()));
  r.result("boundary_mass_fraction", boundary_mass_fraction(*f));
  if (a.preset == "unit-gaussian") {
    const double exact = std::pow(kTwoPi, 3.0);
    r.result("haar_integral_exact", exact);
    r.result("haar_integral_relative_error",
             std::abs(integral - exact) / exact);
  }
  Diagnostics diag;
  check_containment(*f, &diag, "generated function");
  r.warnings(diag);
  if (!a.output.empty()) {
    save(*f, a.output);
    r.param("output", a.output);
  }
  return r;
}

// transform / itransform ----------------------------------------------------

RunReport cmd_transform(const TransformArgs& a) {
  RunReport r("transform");
  r.param("input", a.input);
  const SampledFunction f = load(a.input);
  r.grid(f.grid());
  Diagnostics diag;
  const Spectrum s = fourier_mellin_forward(f, &diag);
  r.warnings(diag);
  const double space = energy(f);
  const double freq = frequency_energy(s);
  r.result("space_energy", space);
  r.result("freq_energy", freq);
  r.residual("parseval", relative_gap(space, freq), a.tolerance);
  const SampledFunction back = fourier_mellin_inverse(s);
  std::vector<Complex> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = back[i] - f[i];
  const double scale = max_abs(f.values());
  const double dev = max_abs(diff);
  r.residual("roundtrip_max_abs", scale > 0.0 ? dev / scale : dev,
             a.roundtrip_tolerance);
  if (!a.output.empty()) {
    write_container_file(a.output, s.freq(), s.values());
    r.param("output", a.output);
  }
  return r;
}

RunReport cmd_itransform(const TransformArgs& a) {
  RunReport r("itransform");
  r.param("input", a.input);
  Container c = read_container_file(a.input);
  if (!c.grid.is_frequency()) {
    throw FormatError(a.input + ": holds a function, not a spectrum");
  }
  GridSpec spatial = centered_spatial_grid_for(c.grid);
  if (!a.grid_from.empty()) {
    r.param("grid_from", a.grid_from);
    spatial = read_container_file(a.grid_from).grid;
  }
  const Spectrum s(c.grid, spatial, std::move(c.values));
  const SampledFunction f = fourier_mellin_inverse(s, spatial);
  r.grid(f.grid());
  const double space = energy(f);
  const double freq = frequency_energy(s);
  r.result("space_energy", space);
  r.result("freq_energy", freq);
  r.residual("parseval", relative_gap(space, freq), a.tolerance);
  if (!a.output.empty()) {
    save(f, a.output);
    r.param("output", a.output);
  }
  return r;
}

// plancherel ----------------------------------------------------------------

RunReport cmd_plancherel(const PlancherelArgs& a) {
  RunReport r("plancherel");
  r.param("input", a.input);
  r.param("two_copy", a.two_copy);
  r.param("normalization", std::string(kNormalizationNote));
  const SampledFunction f = load(a.input);
  r.grid(f.grid());
  std::optional<PlancherelReport> p;
  if (!a.freq_energy_from.empty()) {
    r.param("freq_energy_from", a.freq_energy_from);
    p = plancherel_check(f, read_spectrum(a.freq_energy_from, f.grid()),
                         a.resampled);
  } else {
    p = plancherel_check(f, a.resampled);
  }
  r.warnings(p->diagnostics);
  r.result("space_energy", p->space_energy);
  r.result("freq_energy", p->freq_energy);
  r.result("conv_energy_re", p->conv_energy.real());
  r.result("conv_energy_im", p->conv_energy.imag());
  r.residual("parseval", p->parseval_residual, a.parseval_tolerance);
  r.residual("conv", p->conv_residual, a.conv_tolerance);
  r.residual("conv_freq", p->conv_freq_residual, a.conv_tolerance);
  if (a.resampled) {
    r.result("conv_energy_resampled_re", p->conv_energy_resampled.real());
    r.result("conv_resampled_residual", p->conv_resampled_residual);
  }
  if (a.two_copy) {
    std::optional<SampledFunction> neg;
    if (!a.neg.empty()) {
      r.param("neg", a.neg);
      neg.emplace(load(a.neg));
    } else {
      neg.emplace(f);
    }
    const TwoComponentReport t =
        two_component_plancherel(ComponentLabeledFunction(f, *neg));
    r.warnings(t.diagnostics);
    r.result("pos_energy", t.pos_energy);
    r.result("neg_energy", t.neg_energy);
    r.result("total_energy", t.total_energy);
    r.result("total_freq_energy", t.total_freq_energy);
    r.result("copies_equal", t.copies_equal ? 1.0 : 0.0);
    r.residual("two_copy_parseval", t.residual, a.parseval_tolerance);
    if (t.copies_equal) {
      r.residual("factor_two", t.factor_two_residual, a.factor_two_tolerance);
    }
  }
  return r;
}

// check ---------------------------------------------------------------------

struct Resolution {
  std::size_t coarse;
  std::size_t fine;
};

Resolution resolution(const CheckArgs& a, std::size_t coarse, std::size_t fine) {
  Resolution res{a.coarse_points.value_or(coarse), a.points.value_or(fine)};
  if (res.coarse >= res.fine) {
    throw UsageError("--coarse-points must be below --points");
  }
  return res;
}

// Off-center complex Gaussian used by the lifting checks.
SampledFunction lift_test_function(const GridSpec& g) {
  return make_gaussian(g, from_chart({0.2, -0.1, 0.1, 0.1, -0.1, 0.05}),
                       {1, 1, 1, 0.5, 0.5, 0.5}, Complex(1.0, 0.5));
}

void check_lift(const CheckArgs& a, RunReport& r, LiftKind kind) {
  const Resolution res = resolution(a, 10, 16);
  const double h = a.halfwidth.value_or(4.0);
  const std::size_t samples = a.samples.value_or(2000);
  const double tol = a.tolerance.value_or(1e-2);
  r.param("coarse_points", res.coarse);
  r.param("points", res.fine);
  r.param("halfwidth", h);
  r.param("samples", samples);
  const auto run = [&](const SampledFunction& f, DrawMode mode) {
    return kind == LiftKind::kTilde
               ? tilde_invariance_check(f, samples, a.seed, mode)
               : upsilon_invariance_check(f, samples, a.seed, mode);
  };
  const GridSpec coarse = GridSpec::Uniform(res.coarse, h);
  const GridSpec fine = GridSpec::Uniform(res.fine, h);
  const InvarianceReport rc = run(lift_test_function(coarse), DrawMode::kOffGrid);
  const SampledFunction ff = lift_test_function(fine);
  const InvarianceReport rf = run(ff, DrawMode::kOffGrid);
  const InvarianceReport rn = run(ff, DrawMode::kNodeExact);
  r.grid(fine);
  r.result("offgrid_coarse", rc.residual);
  r.residual("offgrid", rf.residual, tol);
  r.residual("node_exact", rn.residual, 1e-12);
  r.order("offgrid", estimate_order(rc.step, rc.residual, rf.step, rf.residual),
          a.min_order);
}

void check_haar(const CheckArgs& a, RunReport& r) {
  const Resolution res = resolution(a, 12, 16);
  const double h = a.halfwidth.value_or(8.0);
  const double tol = a.tolerance.value_or(1e-3);
  const GroupElement shift = parse_shift(a.shift);
  const Widths widths = {1, 1, 1, 0.5, 0.5, 0.5};
  r.param("coarse_points", res.coarse);
  r.param("points", res.fine);
  r.param("halfwidth", h);
  r.param("shift", a.shift);
  r.param("widths", json_vector(widths));
  const GridSpec coarse = GridSpec::Uniform(res.coarse, h);
  const GridSpec fine = GridSpec::Uniform(res.fine, h);
  r.grid(fine);
  {
    const SampledFunction unit =
        make_gaussian(fine, kIdentity, {1, 1, 1, 1, 1, 1}, 1.0);
    const double exact = std::pow(kTwoPi, 3.0);
    r.result("unit_gaussian_integral", integrate_haar(unit).real());
    r.residual("unit_gaussian_integral",
               std::abs(integrate_haar(unit) - exact) / exact, 1e-6);
  }
  const RightInvarianceReport rc =
      right_invariance_check(make_gaussian(coarse, kIdentity, widths, 1.0), shift);
  const RightInvarianceReport rf =
      right_invariance_check(make_gaussian(fine, kIdentity, widths, 1.0), shift);
  r.result("right_invariance_coarse", rc.residual);
  r.result("escaped_fraction", rf.escaped_fraction);
  if (!rf.contained) r.warn("containment: translate leaves the box");
  r.residual("right_invariance", rf.residual, tol);
  r.order("right_invariance",
          estimate_order(coarse.axis(0).step, rc.residual, fine.axis(0).step,
                         rf.residual),
          a.min_order);
}

GridSpec node_lattice(std::size_t points, double n_step, double t_step) {
  std::array<std::size_t, kDims> counts, origin;
  counts.fill(points);
  origin.fill(points / 2);
  return GridSpec::Lattice(counts, {n_step, n_step, n_step, t_step, t_step, t_step},
                           origin);
}

void check_eq15(const CheckArgs& a, RunReport& r) {
  const Resolution res = resolution(a, 5, 6);
  const double h = a.halfwidth.value_or(2.5);
  const std::size_t samples = a.samples.value_or(64);
  const double tol = a.tolerance.value_or(2e-2);
  r.param("coarse_points", res.coarse);
  r.param("points", res.fine);
  r.param("halfwidth", h);
  r.param("samples", samples);
  const auto run = [&](std::size_t points, bool resampled) {
    const GridSpec grid = GridSpec::Uniform(points, h);
    const SampledFunction f =
        make_gaussian(grid, {{0.1, -0.2, 0.1}, {1.05, 1, 0.95}},
                      {0.8, 0.8, 0.8, 0.4, 0.4, 0.4}, Complex(1.0, 0.3));
    const SampledFunction g =
        make_gaussian(grid, kIdentity, {0.6, 0.6, 0.6, 0.3, 0.3, 0.3}, 1.0);
    return std::make_pair(
        grid, eq15_check(g, f, box_points(grid, samples, a.seed), resampled));
  };
  const auto [coarse, rc] = run(res.coarse, false);
  const auto [fine, rf] = run(res.fine, a.resampled);
  r.grid(fine);
  r.warnings(rf.diagnostics);
  r.result("eq15_coarse", rc.residuals.at("eq15"));
  r.residual("eq15", rf.residuals.at("eq15"), tol);
  r.residual("chi_pairing", rf.residuals.at("chi_pairing"), tol);
  if (a.resampled) {
    r.result("eq15_resampled", rf.residuals.at("eq15_resampled"));
  }
  r.order("eq15",
          estimate_order(coarse.axis(0).step, rc.residuals.at("eq15"),
                         fine.axis(0).step, rf.residuals.at("eq15")),
          a.min_order);
  const GridSpec lattice = node_lattice(7, 1.0, 0.5);
  const SampledFunction f = make_gaussian(lattice, {{0.5, 0, -0.5}, {1, 1, 1}},
                                          {1, 1, 1, 0.6, 0.6, 0.6}, 1.0);
  const SampledFunction g = make_gaussian(lattice, kIdentity,
                                          {0.7, 0.7, 0.7, 0.4, 0.4, 0.4}, 1.0);
  const ConvolutionReport rn =
      eq15_check(g, f, node_points(lattice, 48, a.seed));
  r.residual("eq15_nodes", rn.residuals.at("eq15"), 1e-10);
}

void check_convtheorem(const CheckArgs& a, RunReport& r) {
  const Resolution res = resolution(a, 5, 6);
  const double tol = a.tolerance.value_or(5e-2);
  const std::size_t samples = a.samples.value_or(16);
  // Reference steps at 6 points; the box stays fixed under refinement.
  const Widths h6 = {1.0, 0.2, 0.2, 0.05, 0.05, 0.05};
  Widths w;
  ChartPoint center;
  for (std::size_t d = 0; d < kDims; ++d) {
    w[d] = d < 3 ? 0.7 * h6[d] : 0.02;
    center[d] = -0.5 * h6[d];
  }
  r.param("coarse_points", res.coarse);
  r.param("points", res.fine);
  r.param("reference_steps", json_vector(h6));
  r.param("widths", json_vector(w));
  r.param("interpolation_samples", samples);
  const GroupFunction exact = [&](const GroupElement& x) {
    const ChartPoint c = to_chart(x);
    double q = 0.0;
    for (std::size_t d = 0; d < kDims; ++d) q += std::pow((c[d] - center[d]) / w[d], 2);
    return Complex(std::exp(-0.5 * q), 0.0);
  };
  const auto run = [&](std::size_t points) {
    std::array<std::size_t, kDims> counts, origin;
    counts.fill(points);
    origin.fill(points / 2);
    Widths steps;
    for (std::size_t d = 0; d < kDims; ++d) {
      steps[d] = h6[d] * 5.0 / static_cast<double>(points - 1);
    }
    const GridSpec grid = GridSpec::Lattice(counts, steps, origin);
    const SampledFunction f = make_gaussian(grid, from_chart(center), w, 1.0);
    const SampledFunction g = make_gaussian(grid, kIdentity, w, 1.0);
    return std::make_pair(grid, convolution_theorem_check(g, f, &exact, samples));
  };
  const auto [coarse, rc] = run(res.coarse);
  const auto [fine, rf] = run(res.fine);
  r.grid(fine);
  r.warnings(rf.diagnostics);
  r.result("total_coarse", rc.residuals.at("total"));
  r.result("noncommutative", rf.residuals.at("noncommutative"));
  r.result("interpolation", rf.residuals.at("interpolation"));
  r.residual("total", rf.residuals.at("total"), tol);
  r.residual("abelian", rf.residuals.at("abelian"), 1e-12);
  r.order("total",
          estimate_order(coarse.axis(0).step, rc.residuals.at("total"),
                         fine.axis(0).step, rf.residuals.at("total")),
          a.min_order);
}

// Smooth complex test function for the field checks.
Complex field_test_function(const ChartPoint& c) {
  return std::exp(Complex(-0.5 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) -
                              (c[3] * c[3] + c[4] * c[4] + c[5] * c[5]),
                          0.4 * c[0] + 0.3 * c[1] * c[2] - 0.5 * c[3]));
}

struct FieldErrors {
  double step = 0.0;
  double oracle = 0.0;       // stencil field against the oracle at X
  double translation = 0.0;  // Z(f o R_g)(X) against the oracle at X g
};

FieldErrors field_errors(std::size_t points, const GroupElement& shift) {
  const GridSpec g = GridSpec::Symmetric(
      {points, points, points, points, points, points}, {2, 2, 2, 1, 1, 1});
  const auto exact = [](const GroupElement& x) {
    return field_test_function(to_chart(x));
  };
  const SampledFunction f = SampledFunction::Generate(g, field_test_function);
  const SampledFunction translated =
      SampledFunction::Generate(g, [&](const ChartPoint& c) {
        return exact(gp_mul(from_chart(c), shift));
      });
  FieldErrors e;
  e.step = g.axis(0).step;
  for (Basis z : kAllBases) {
    const auto mask = stencil_mask(g, generator_of(z));
    const SampledFunction zf = basis_field_apply(z, f);
    const SampledFunction zt = basis_field_apply(z, translated);
    for (std::size_t i = 0; i < g.size(); i += 3) {
      if (!mask[i]) continue;
      const GroupElement x = from_chart(g.point(i));
      e.oracle = std::max(
          e.oracle, std::abs(zf[i] - finite_difference_oracle(z, exact, x, 1e-4)));
      const GroupElement moved = gp_mul(x, shift);
      if (!g.contains(to_chart(moved))) continue;
      e.translation = std::max(
          e.translation,
          std::abs(zt[i] - finite_difference_oracle(z, exact, moved, 1e-4)));
    }
  }
  return e;
}

void check_fields(const CheckArgs& a, RunReport& r) {
  const Resolution res = resolution(a, 7, 13);
  const GroupElement shift = parse_shift(
      a.shift == CheckArgs{}.shift ? "0.15,-0.1,0.2,0.05,-0.03,0.02" : a.shift);
  r.param("coarse_points", res.coarse);
  r.param("points", res.fine);
  r.param("halfwidths", json_vector(Widths{2, 2, 2, 1, 1, 1}));
  r.param("shift", json_vector(to_chart(shift)));
  const FieldErrors c = field_errors(res.coarse, shift);
  const FieldErrors f = field_errors(res.fine, shift);
  const double tol = a.tolerance.value_or(f.step * f.step);
  r.grid(GridSpec::Symmetric({res.fine, res.fine, res.fine, res.fine, res.fine,
                              res.fine},
                             {2, 2, 2, 1, 1, 1}));
  r.result("oracle_coarse", c.oracle);
  r.result("translation_coarse", c.translation);
  r.residual("oracle", f.oracle, tol);
  r.residual("translation", f.translation, tol);
  r.order("oracle", estimate_order(c.step, c.oracle, f.step, f.oracle),
          a.min_order);
  r.order("translation",
          estimate_order(c.step, c.translation, f.step, f.translation),
          a.min_order);
}

RunReport cmd_check(const CheckArgs& a) {
  RunReport r("check " + a.which);
  r.param("which", a.which);
  r.param("seed", a.seed);
  r.param("min_order", a.min_order);
  if (a.which == "tilde") {
    check_lift(a, r, LiftKind::kTilde);
  } else if (a.which == "upsilon") {
    check_lift(a, r, LiftKind::kUpsilon);
  } else if (a.which == "haar") {
    check_haar(a, r);
  } else if (a.which == "eq15") {
    check_eq15(a, r);
  } else if (a.which == "convtheorem") {
    check_convtheorem(a, r);
  } else {
    check_fields(a, r);
  }
  return r;
}

// solve ---------------------------------------------------------------------

// Chart axis differentiated by a symbol-carrying generator.
std::optional<std::size_t> symbol_axis(std::size_t generator) {
  switch (static_cast<Generator>(generator)) {
    case Generator::kE3: return 0;
    case Generator::kE2: return 1;
    case Generator::kA1t: return 3;
    case Generator::kA2t: return 4;
    case Generator::kA3t: return 5;
    default: return std::nullopt;
  }
}

RunReport cmd_solve(const SolveArgs& a) {
  RunReport r("solve");
  const OperatorSpec p = parse_operator(a.op);
  r.param("op", p.to_string());
  r.param("eps", a.eps);
  if (p.is_zero()) throw SymbolError("zero operator has no inverse");
  operator_symbol(p, GridSpec::Uniform(2, 1.0));
  if (a.input.empty() == a.manufactured.empty()) {
    throw UsageError("solve needs exactly one of -i and --manufactured");
  }
  std::optional<SampledFunction> phi0;
  std::optional<SampledFunction> psi;
  if (!a.manufactured.empty()) {
    if (a.manufactured != "gaussian") {
      throw UsageError("--manufactured: unknown preset '" + a.manufactured + "'");
    }
    // Wide along differentiated axes so that the stencil operator and the
    // spectral symbol agree at this resolution.
    Widths widths = {1, 1, 1, 1, 1, 1};
    for (const Monomial& m : p.terms) {
      for (std::size_t k = 0; k < kGenerators; ++k) {
        if (m.power[k] == 0) continue;
        if (const auto axis = symbol_axis(k)) widths[*axis] = 32.0;
      }
    }
    Widths half;
    std::array<std::size_t, kDims> counts;
    for (std::size_t d = 0; d < kDims; ++d) {
      half[d] = 6.0 * widths[d];
      counts[d] = a.points;
    }
    r.param("manufactured", a.manufactured);
    r.param("points", a.points);
    r.param("widths", json_vector(widths));
    const GridSpec grid = GridSpec::Symmetric(counts, half);
    phi0.emplace(make_gaussian(grid, kIdentity, widths, 1.0));
    psi.emplace(operator_apply(p, *phi0));
  } else {
    r.param("input", a.input);
    psi.emplace(load(a.input));
  }
  r.grid(psi->grid());
  const SolveResult s = solve_invariant_operator(p, *psi, a.eps);
  r.warnings(s.diagnostics);
  r.result("min_symbol", s.min_symbol);
  r.residual("forward", s.residual, a.tolerance);
  if (phi0) {
    r.residual("recovery", relative_l2(s.phi.values(), phi0->values()),
               a.tolerance);
  }
  if (!a.output.empty()) {
    save(s.phi, a.output);
    r.param("output", a.output);
  }
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"gfml: harmonic analysis on the group G+", "gfml"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs global;
  app.add_option("--threads", global.threads,
                 "worker cap (overrides GFML_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--reproducible", global.reproducible,
               "omit wall time so reports are byte-identical across runs");

  GenArgs gen;
  CLI::App* sc_gen = app.add_subcommand("gen", "generate a test function");
  sc_gen->add_option("--preset", gen.preset)
      ->check(CLI::IsMember({"unit-gaussian", "gaussian", "zero"}));
  sc_gen->add_option("--points", gen.points, "nodes per axis");
  sc_gen->add_option("--halfwidth", gen.halfwidth, "box [-h, h] on every axis");
  sc_gen->add_option("--widths", gen.widths, "six chart widths (gaussian)")
      ->delimiter(',');
  sc_gen->add_option("--center", gen.center, "six chart coordinates (gaussian)")
      ->delimiter(',');
  sc_gen->add_option("--amplitude", gen.amplitude);
  sc_gen->add_option("-o,--output", gen.output, "GFML file to write");

  TransformArgs tr;
  CLI::App* sc_tr = app.add_subcommand("transform", "Fourier-Mellin transform");
  sc_tr->add_option("-i,--input", tr.input)->required();
  sc_tr->add_option("-o,--output", tr.output);
  sc_tr->add_option("--tolerance", tr.tolerance, "Parseval tolerance");

  TransformArgs itr;
  CLI::App* sc_itr = app.add_subcommand("itransform", "inverse transform");
  sc_itr->add_option("-i,--input", itr.input)->required();
  sc_itr->add_option("-o,--output", itr.output);
  sc_itr->add_option("--grid-from", itr.grid_from,
                     "GFML function file whose grid is the target");
  sc_itr->add_option("--tolerance", itr.tolerance, "Parseval tolerance");

  PlancherelArgs pl;
  CLI::App* sc_pl = app.add_subcommand("plancherel", "energy identities");
  sc_pl->add_option("-i,--input", pl.input)->required();
  sc_pl->add_flag("--two-copy", pl.two_copy, "two-component energy report");
  sc_pl->add_option("--neg", pl.neg, "second component (default: the input)");
  sc_pl->add_option("--freq-energy-from", pl.freq_energy_from,
                    "spectrum file for the frequency side");
  sc_pl->add_flag("--resampled", pl.resampled,
                  "also report the resampled-involution variant");
  sc_pl->add_option("--parseval-tolerance", pl.parseval_tolerance);
  sc_pl->add_option("--conv-tolerance", pl.conv_tolerance);

  CheckArgs ck;
  CLI::App* sc_ck = app.add_subcommand("check", "identity check with refinement");
  sc_ck->add_option("which", ck.which)
      ->required()
      ->check(CLI::IsMember(
          {"tilde", "upsilon", "haar", "eq15", "convtheorem", "fields"}));
  sc_ck->add_option("--seed", ck.seed);
  sc_ck->add_option("--points", ck.points, "fine resolution (judged)");
  sc_ck->add_option("--coarse-points", ck.coarse_points,
                    "coarse resolution for the order estimate");
  sc_ck->add_option("--halfwidth", ck.halfwidth);
  sc_ck->add_option("--samples", ck.samples);
  sc_ck->add_option("--tolerance", ck.tolerance);
  sc_ck->add_option("--min-order", ck.min_order);
  sc_ck->add_option("--shift", ck.shift,
                    "'identity' or n3,n2,n1,t1,t2,t3 (haar, fields)");
  sc_ck->add_flag("--resampled", ck.resampled, "eq15 resampled diagnostic");

  SolveArgs so;
  CLI::App* sc_so = app.add_subcommand("solve", "invert an invariant operator");
  sc_so->add_option("--op", so.op, "operator text")->required();
  sc_so->add_option("-i,--input", so.input, "right-hand side");
  sc_so->add_option("--manufactured", so.manufactured, "manufactured solution")
      ->check(CLI::IsMember({"gaussian"}));
  sc_so->add_option("--points", so.points);
  sc_so->add_option("--eps", so.eps, "Tikhonov parameter")
      ->check(CLI::NonNegativeNumber);
  sc_so->add_option("--tolerance", so.tolerance);
  sc_so->add_option("-o,--output", so.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (global.threads > 0) set_max_threads(global.threads);
    const auto start = std::chrono::steady_clock::now();
    std::optional<RunReport> report;
    if (sc_gen->parsed()) {
      report = cmd_gen(gen);
    } else if (sc_tr->parsed()) {
      report = cmd_transform(tr);
    } else if (sc_itr->parsed()) {
      report = cmd_itransform(itr);
    } else if (sc_pl->parsed()) {
      report = cmd_plancherel(pl);
    } else if (sc_ck->parsed()) {
      report = cmd_check(ck);
    } else {
      report = cmd_solve(so);
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    report->set_wall_time(global.reproducible
                              ? std::nullopt
                              : std::optional<double>(elapsed.count()));
    out << report->render(global.format == "csv" ? Format::kCsv : Format::kJson);
    out.flush();
    return report->pass() ? kExitPass : kExitTolerance;
  } catch (const SymbolError& e) {
    err << "gfml: refused: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "gfml: error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace gfml::cli
