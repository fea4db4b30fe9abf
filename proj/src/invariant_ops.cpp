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

#include "gfml/invariant_ops.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gfml/parallel.hpp"

namespace gfml {
namespace {

constexpr std::array<std::string_view, kGenerators> kNames = {
    "E3", "E2", "E1", "A1", "A2", "A3", "A1t", "A2t", "A3t"};

// One term coeff(c) * d/dc_axis of a field; coeff is sign * c[coord], or
// sign when coord < 0.
struct FieldTerm {
  std::size_t axis;
  int coord;
  double sign;
};

std::vector<FieldTerm> field_terms(Generator g) {
  switch (g) {
    case Generator::kE3: return {{0, -1, 1.0}};
    case Generator::kE2: return {{1, -1, 1.0}};
    case Generator::kE1: return {{0, 1, 1.0}, {2, -1, 1.0}};
    case Generator::kA1: return {{0, 0, 1.0}, {2, 2, 1.0}, {3, -1, 1.0}};
    case Generator::kA2: return {{1, 1, 1.0}, {2, 2, -1.0}, {4, -1, 1.0}};
    case Generator::kA3: return {{0, 0, -1.0}, {1, 1, -1.0}, {5, -1, 1.0}};
    case Generator::kA1t: return {{3, -1, 1.0}};
    case Generator::kA2t: return {{4, -1, 1.0}};
    case Generator::kA3t: return {{5, -1, 1.0}};
  }
  return {};
}

void derivative_into(const SampledFunction& f, std::size_t axis,
                     std::vector<Complex>& out) {
  const GridSpec& grid = f.grid();
  const AxisSpec& ax = grid.axis(axis);
  const std::size_t n = ax.count;
  if (n < 5) {
    throw GridError("derivative needs at least 5 nodes on axis " +
                    std::to_string(axis));
  }
  const std::size_t stride = grid.strides()[axis];
  const std::size_t lines = grid.size() / n;
  const double inv = 1.0 / (12.0 * ax.step);
  const auto v = f.values();
  out.resize(grid.size());
  parallel_for(lines, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t line = lo; line < hi; ++line) {
      const std::size_t base = (line / stride) * stride * n + line % stride;
      auto at = [&](std::size_t j) { return v[base + j * stride]; };
      for (std::size_t j = 0; j < n; ++j) {
        Complex d;
        if (j >= 2 && j + 2 < n) {
          d = at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2);
        } else if (j == 0) {
          d = -25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) -
              3.0 * at(4);
        } else if (j == 1) {
          d = -3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4);
        } else if (j == n - 2) {
          d = 3.0 * at(n - 1) + 10.0 * at(n - 2) - 18.0 * at(n - 3) +
              6.0 * at(n - 4) - at(n - 5);
        } else {
          d = 25.0 * at(n - 1) - 48.0 * at(n - 2) + 36.0 * at(n - 3) -
              16.0 * at(n - 4) + 3.0 * at(n - 5);
        }
        out[base + j * stride] = d * inv;
      }
    }
  });
}

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Reads a real number at s[i]; returns false without consuming otherwise.
bool read_real(std::string_view s, std::size_t& i, double& out) {
  const char* begin = s.data() + i;
  const char* end = s.data() + s.size();
  if (begin < end && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc()) return false;
  i = static_cast<std::size_t>(res.ptr - s.data());
  return std::isfinite(out);
}

bool read_generator(std::string_view s, std::size_t& i, Generator& g) {
  // Longest match first so that "A1t" is not read as "A1".
  for (std::size_t k = kGenerators; k-- > 0;) {
    const std::string_view name = kNames[k];
    if (s.substr(i, name.size()) == name) {
      const std::size_t next = i + name.size();
      if (next < s.size() && std::isalnum(static_cast<unsigned char>(s[next]))) {
        continue;
      }
      g = static_cast<Generator>(k);
      i = next;
      return true;
    }
  }
  return false;
}

[[noreturn]] void parse_fail(std::string_view s, std::size_t i,
                             const std::string& what) {
  throw ParseError("operator: " + what + " at position " + std::to_string(i) +
                   " in \"" + std::string(s) + "\"");
}

// coeff := real | real 'i' | real ('+'|'-') real 'i'
bool read_coefficient(std::string_view s, std::size_t& i, Complex& c) {
  double re = 0.0;
  std::size_t j = i;
  if (!read_real(s, j, re)) return false;
  if (j < s.size() && s[j] == 'i') {
    c = {0.0, re};
    i = j + 1;
    return true;
  }
  c = {re, 0.0};
  i = j;
  // Optional imaginary part, only if a number directly followed by 'i'.
  if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
    std::size_t k = j;
    double im = 0.0;
    if (read_real(s, k, im) && k < s.size() && s[k] == 'i') {
      c = {re, im};
      i = k + 1;
    }
  }
  return true;
}

Monomial parse_term(std::string_view s, std::size_t& i) {
  Monomial m;
  skip_space(s, i);
  Complex c;
  const bool has_coeff = read_coefficient(s, i, c);
  if (has_coeff) m.coeff = c;
  skip_space(s, i);
  bool need_factor = false;
  if (has_coeff && i < s.size() && s[i] == '*') {
    ++i;
    need_factor = true;
  } else if (!has_coeff && i < s.size() && s[i] == '-') {
    // Leading sign on a bare monomial.
    m.coeff = -1.0;
    ++i;
    need_factor = true;
  }
  int last = -1;
  bool any = false;
  for (;;) {
    skip_space(s, i);
    Generator g;
    const std::size_t start = i;
    if (i >= s.size() || !read_generator(s, i, g)) {
      if (need_factor && !any) parse_fail(s, start, "expected a generator");
      break;
    }
    int p = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      const auto res = std::from_chars(s.data() + i, s.data() + s.size(), p);
      if (res.ec != std::errc() || p < 0) parse_fail(s, i, "bad exponent");
      i = static_cast<std::size_t>(res.ptr - s.data());
    }
    const int k = static_cast<int>(g);
    if (k <= last) {
      parse_fail(s, start,
                 "factors must appear once each in the order E3 E2 E1 A1 A2 "
                 "A3 A1t A2t A3t");
    }
    last = k;
    m.power[static_cast<std::size_t>(k)] = p;
    any = true;
    skip_space(s, i);
    if (i < s.size() && s[i] == '*') {
      ++i;
      need_factor = true;
      any = false;
    }
  }
  if (!has_coeff && last < 0) parse_fail(s, i, "expected a term");
  return m;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view generator_name(Generator g) noexcept {
  return kNames[static_cast<std::size_t>(g)];
}

Generator generator_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kGenerators; ++k) {
    if (kNames[k] == name) return static_cast<Generator>(k);
  }
  throw ParseError("unknown generator \"" + std::string(name) + "\"");
}

Generator generator_of(Basis b) noexcept {
  return static_cast<Generator>(static_cast<std::uint8_t>(b));
}

SampledFunction chart_derivative(const SampledFunction& f, std::size_t axis) {
  std::vector<Complex> out;
  derivative_into(f, axis, out);
  return SampledFunction(f.grid(), std::move(out));
}

std::vector<std::uint8_t> stencil_mask(const GridSpec& grid, Generator g) {
  const auto terms = field_terms(g);
  std::vector<std::uint8_t> mask(grid.size(), 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto idx = grid.unflatten(i);
    for (const FieldTerm& t : terms) {
      const std::size_t n = grid.axis(t.axis).count;
      if (idx[t.axis] < 2 || idx[t.axis] + 2 >= n) mask[i] = 0;
    }
  }
  return mask;
}

SampledFunction generator_apply(Generator g, const SampledFunction& f,
                                Diagnostics* diag) {
  check_containment(f, diag, "generator_apply");
  const GridSpec& grid = f.grid();
  std::vector<Complex> acc(grid.size());
  std::vector<Complex> d;
  for (const FieldTerm& t : field_terms(g)) {
    derivative_into(f, t.axis, d);
    parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        double c = t.sign;
        if (t.coord >= 0) {
          const std::size_t j = (i / grid.strides()[t.coord]) %
                                grid.axis(t.coord).count;
          c *= grid.axis(t.coord).node(j);
        }
        acc[i] += c * d[i];
      }
    });
  }
  return SampledFunction(grid, std::move(acc));
}

Complex finite_difference_oracle(Basis z, const SampledFunction& f,
                                 const GroupElement& x, double t) {
  return finite_difference_oracle(
      z, [&](const GroupElement& y) { return evaluate_interpolated(f, y); }, x,
      t);
}

int Monomial::order() const {
  int s = 0;
  for (int p : power) s += p;
  return s;
}

int OperatorSpec::order() const {
  int s = 0;
  for (const Monomial& m : terms) s = std::max(s, m.order());
  return s;
}

bool OperatorSpec::is_zero() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const Monomial& m) { return m.coeff == Complex{}; });
}

std::string OperatorSpec::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Monomial& m = terms[t];
    if (t) out += " + ";
    out += format_double(m.coeff.real());
    if (m.coeff.imag() != 0.0) {
      if (m.coeff.imag() >= 0.0) out += "+";
      out += format_double(m.coeff.imag()) + "i";
    }
    bool first = true;
    for (std::size_t k = 0; k < kGenerators; ++k) {
      if (m.power[k] == 0) continue;
      out += first ? "*" : " ";
      first = false;
      out += kNames[k];
      if (m.power[k] != 1) out += "^" + std::to_string(m.power[k]);
    }
  }
  return out;
}

OperatorSpec parse_operator(std::string_view text) {
  OperatorSpec spec;
  std::size_t i = 0;
  skip_space(text, i);
  if (i == text.size()) throw ParseError("operator: empty");
  for (;;) {
    spec.terms.push_back(parse_term(text, i));
    skip_space(text, i);
    if (i == text.size()) break;
    if (text[i] != '+') parse_fail(text, i, "expected '+'");
    ++i;
  }
  return spec;
}

SampledFunction operator_apply(const OperatorSpec& p, const SampledFunction& f,
                               Diagnostics* diag) {
  if (p.order() > kMaxOperatorOrder) {
    throw std::invalid_argument("operator order " + std::to_string(p.order()) +
                                " exceeds the stencil limit of 4");
  }
  check_containment(f, diag, "operator_apply");
  std::vector<Complex> acc(f.size());
  for (const Monomial& m : p.terms) {
    if (m.coeff == Complex{}) continue;
    SampledFunction term = f;
    for (std::size_t k = kGenerators; k-- > 0;) {
      for (int r = 0; r < m.power[k]; ++r) {
        term = generator_apply(static_cast<Generator>(k), term);
      }
    }
    const auto tv = term.values();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += m.coeff * tv[i];
  }
  return SampledFunction(f.grid(), std::move(acc));
}

Spectrum operator_symbol(const OperatorSpec& p, const GridSpec& spatial) {
  for (const Monomial& m : p.terms) {
    for (Generator g : {Generator::kE1, Generator::kA1, Generator::kA2,
                        Generator::kA3}) {
      if (m.coeff != Complex{} && m.power[static_cast<std::size_t>(g)] > 0) {
        throw SymbolError(
            "operator has no symbol: " + std::string(generator_name(g)) +
            " has chart-dependent coefficients (use A1t, A2t, A3t for pure "
            "dilation derivatives)");
      }
    }
  }
  const GridSpec freq = frequency_grid(spatial);
  // Generator k differentiates chart axis kAxis[k].
  constexpr std::array<int, kGenerators> kAxis = {0, 1, -1, -1, -1, -1, 3, 4, 5};
  std::vector<Complex> m(freq.size());
  parallel_for(freq.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const ChartPoint w = freq.point(i);
      Complex sum;
      for (const Monomial& mono : p.terms) {
        Complex term = mono.coeff;
        for (std::size_t k = 0; k < kGenerators; ++k) {
          for (int r = 0; r < mono.power[k]; ++r) {
            term *= Complex(0.0, w[static_cast<std::size_t>(kAxis[k])]);
          }
        }
        sum += term;
      }
      m[i] = sum;
    }
  });
  return Spectrum(freq, spatial, std::move(m));
}

SolveResult solve_invariant_operator(const OperatorSpec& p,
                                     const SampledFunction& psi, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("regularization must be finite and >= 0");
  }
  if (p.terms.empty() || p.is_zero()) {
    throw SymbolError("zero operator cannot be inverted");
  }
  const Spectrum sym = operator_symbol(p, psi.grid());
  double min_m = std::abs(sym[0]);
  double max_m = 0.0;
  for (const Complex& z : sym.values()) {
    min_m = std::min(min_m, std::abs(z));
    max_m = std::max(max_m, std::abs(z));
  }
  if (eps == 0.0 && min_m <= 1e-12 * max_m) {
    throw SymbolError("symbol vanishes on the frequency grid (min |m| = " +
                      format_double(min_m) + "); use eps > 0");
  }
  SolveResult out{SampledFunction(psi.grid()), 0.0, 0.0, {}};
  out.min_symbol = min_m;
  if (eps > 0.0 && min_m < 10.0 * eps) {
    out.diagnostics.warn("ill-posed", "min |m| on the grid is below 10 eps",
                         min_m);
  }
  check_containment(psi, &out.diagnostics, "solve_invariant_operator");
  const Spectrum rhs = fourier_mellin_forward(psi);
  std::vector<Complex> q(rhs.size());
  const double e2 = eps * eps;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Complex m = sym[i];
    q[i] = rhs[i] * std::conj(m) / (std::norm(m) + e2);
  }
  out.phi = fourier_mellin_inverse(Spectrum(rhs.freq(), rhs.spatial(), std::move(q)));
  const SampledFunction applied = operator_apply(p, out.phi);
  out.residual = relative_l2(applied.values(), psi.values());
  return out;
}

}  // namespace gfml
