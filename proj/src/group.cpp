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

#include "gfml/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gfml {

DilationVector DilationVector::Checked(double a1, double a2, double a3) {
  for (double v : {a1, a2, a3}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("dilation components must be finite and > 0");
    }
  }
  return {a1, a2, a3};
}

HeisenbergElement heis_mul(const HeisenbergElement& n,
                           const HeisenbergElement& m) noexcept {
  return {n.n3 + m.n3 + n.n1 * m.n2, n.n2 + m.n2, n.n1 + m.n1};
}

HeisenbergElement heis_inv(const HeisenbergElement& n) noexcept {
  return {-n.n3 + n.n1 * n.n2, -n.n2, -n.n1};
}

DilationVector dil_mul(const DilationVector& a,
                       const DilationVector& b) noexcept {
  return {a.a1 * b.a1, a.a2 * b.a2, a.a3 * b.a3};
}

DilationVector dil_inv(const DilationVector& a) noexcept {
  return {1.0 / a.a1, 1.0 / a.a2, 1.0 / a.a3};
}

HeisenbergElement rho_apply(const DilationVector& a,
                            const HeisenbergElement& n) noexcept {
  return {a.a1 / a.a3 * n.n3, a.a2 / a.a3 * n.n2, a.a1 / a.a2 * n.n1};
}

GroupElement gp_mul(const GroupElement& x, const GroupElement& y) noexcept {
  return {heis_mul(x.n, rho_apply(x.a, y.n)), dil_mul(x.a, y.a)};
}

GroupElement gp_inv(const GroupElement& x) noexcept {
  const DilationVector ainv = dil_inv(x.a);
  return {rho_apply(ainv, heis_inv(x.n)), ainv};
}

MatrixForm to_matrix(const GroupElement& x) noexcept {
  const auto& [n3, n2, n1] = x.n;
  const auto& [a1, a2, a3] = x.a;
  return {{{a1, n1 * a2, n3 * a3}, {0.0, a2, n2 * a3}, {0.0, 0.0, a3}}};
}

GroupElement from_matrix(const MatrixForm& m) {
  if (m[1][0] != 0.0 || m[2][0] != 0.0 || m[2][1] != 0.0) {
    throw std::invalid_argument("matrix is not upper triangular");
  }
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(m[i][i]) || !(m[i][i] > 0.0)) {
      throw std::invalid_argument("matrix diagonal must be strictly positive");
    }
  }
  const double a1 = m[0][0], a2 = m[1][1], a3 = m[2][2];
  return {{m[0][2] / a3, m[1][2] / a3, m[0][1] / a2}, {a1, a2, a3}};
}

MatrixForm mat_mul(const MatrixForm& x, const MatrixForm& y) noexcept {
  MatrixForm r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += x[i][k] * y[k][j];
      r[i][j] = s;
    }
  }
  return r;
}

MatrixForm mat_inv_upper(const MatrixForm& m) noexcept {
  MatrixForm r{};
  for (int i = 0; i < 3; ++i) r[i][i] = 1.0 / m[i][i];
  r[0][1] = -m[0][1] * r[1][1] * r[0][0];
  r[1][2] = -m[1][2] * r[2][2] * r[1][1];
  r[0][2] = -(m[0][1] * r[1][2] + m[0][2] * r[2][2]) * r[0][0];
  return r;
}

std::string_view basis_name(Basis b) noexcept {
  switch (b) {
    case Basis::kE3: return "E3";
    case Basis::kE2: return "E2";
    case Basis::kE1: return "E1";
    case Basis::kA1: return "A1";
    case Basis::kA2: return "A2";
    case Basis::kA3: return "A3";
  }
  return "?";
}

Basis basis_from_name(std::string_view name) {
  for (Basis b : kAllBases) {
    if (basis_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown basis field: " + std::string(name));
}

Basis basis_from_index(int index) {
  if (index < 1 || index > 6) {
    throw std::invalid_argument("basis index must be in 1..6");
  }
  return kAllBases[static_cast<std::size_t>(index - 1)];
}

GroupElement exp_basis(Basis b, double t) noexcept {
  GroupElement g = kIdentity;
  switch (b) {
    case Basis::kE3: g.n.n3 = t; break;
    case Basis::kE2: g.n.n2 = t; break;
    case Basis::kE1: g.n.n1 = t; break;
    case Basis::kA1: g.a.a1 = std::exp(t); break;
    case Basis::kA2: g.a.a2 = std::exp(t); break;
    case Basis::kA3: g.a.a3 = std::exp(t); break;
  }
  return g;
}

ChartPoint to_chart(const GroupElement& x) noexcept {
  return {x.n.n3, x.n.n2, x.n.n1,
          std::log(x.a.a1), std::log(x.a.a2), std::log(x.a.a3)};
}

GroupElement from_chart(const ChartPoint& c) noexcept {
  return {{c[0], c[1], c[2]}, {std::exp(c[3]), std::exp(c[4]), std::exp(c[5])}};
}

double relative_distance(const GroupElement& x,
                         const GroupElement& y) noexcept {
  const std::array<double, 6> u = {x.n.n3, x.n.n2, x.n.n1,
                                   x.a.a1, x.a.a2, x.a.a3};
  const std::array<double, 6> v = {y.n.n3, y.n.n2, y.n.n1,
                                   y.a.a1, y.a.a2, y.a.a3};
  double worst = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double scale = 1.0 + std::max(std::abs(u[i]), std::abs(v[i]));
    worst = std::max(worst, std::abs(u[i] - v[i]) / scale);
  }
  return worst;
}

}  // namespace gfml
