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

#ifndef GFML_GROUP_HPP_
#define GFML_GROUP_HPP_

#include <array>
#include <string_view>

namespace gfml {

// Point of the Heisenberg group H, stored in the order (n3, n2, n1).
// Product: (n3 + m3 + n1*m2, n2 + m2, n1 + m1).
struct HeisenbergElement {
  double n3 = 0.0;
  double n2 = 0.0;
  double n1 = 0.0;

  friend bool operator==(const HeisenbergElement&,
                         const HeisenbergElement&) = default;
};

// Point of the dilation group (R_+^*)^3 under componentwise multiplication.
// Components are expected to be strictly positive; use Checked() at trust
// boundaries.
struct DilationVector {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;

  // Throws std::invalid_argument unless all components are finite and > 0.
  static DilationVector Checked(double a1, double a2, double a3);

  friend bool operator==(const DilationVector&,
                         const DilationVector&) = default;
};

// Point (n, a) of G+ = H x_rho (R_+^*)^3.
struct GroupElement {
  HeisenbergElement n;
  DilationVector a;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Upper triangular 3x3 matrix with positive diagonal; row-major.
using MatrixForm = std::array<std::array<double, 3>, 3>;

// Chart coordinates (n3, n2, n1, t1, t2, t3) with t_i = log a_i. In this chart
// the right Haar measure dn da/a is Lebesgue measure.
using ChartPoint = std::array<double, 6>;

inline constexpr GroupElement kIdentity{};

HeisenbergElement heis_mul(const HeisenbergElement& n,
                           const HeisenbergElement& m) noexcept;
HeisenbergElement heis_inv(const HeisenbergElement& n) noexcept;

DilationVector dil_mul(const DilationVector& a,
                       const DilationVector& b) noexcept;
DilationVector dil_inv(const DilationVector& a) noexcept;

// rho(a)n = (a1/a3 n3, a2/a3 n2, a1/a2 n1).
HeisenbergElement rho_apply(const DilationVector& a,
                            const HeisenbergElement& n) noexcept;

// (n, a)(m, b) = (n . rho(a)m, a b).
GroupElement gp_mul(const GroupElement& x, const GroupElement& y) noexcept;
// (n, a)^-1 = (rho(a^-1) n^-1, a^-1).
GroupElement gp_inv(const GroupElement& x) noexcept;

// Faithful embedding [[a1, n1 a2, n3 a3], [0, a2, n2 a3], [0, 0, a3]].
MatrixForm to_matrix(const GroupElement& x) noexcept;
// Throws std::invalid_argument for a non-positive diagonal or a nonzero lower
// triangle.
GroupElement from_matrix(const MatrixForm& m);
MatrixForm mat_mul(const MatrixForm& x, const MatrixForm& y) noexcept;
// Inverse of an upper triangular matrix by back substitution.
MatrixForm mat_inv_upper(const MatrixForm& m) noexcept;

enum class Basis { kE3 = 0, kE2, kE1, kA1, kA2, kA3 };

inline constexpr std::array<Basis, 6> kAllBases = {
    Basis::kE3, Basis::kE2, Basis::kE1, Basis::kA1, Basis::kA2, Basis::kA3};

std::string_view basis_name(Basis b) noexcept;
// Accepts "E3", "E2", "E1", "A1", "A2", "A3"; throws std::invalid_argument
// otherwise.
Basis basis_from_name(std::string_view name);
// Index form 1..6 in the order E3, E2, E1, A1, A2, A3.
Basis basis_from_index(int index);

// One-parameter subgroup t -> exp(t Z).
GroupElement exp_basis(Basis b, double t) noexcept;

ChartPoint to_chart(const GroupElement& x) noexcept;
GroupElement from_chart(const ChartPoint& c) noexcept;

// max_i |x_i - y_i| / (1 + max(|x_i|, |y_i|)) over (n3, n2, n1, a1, a2, a3).
double relative_distance(const GroupElement& x, const GroupElement& y) noexcept;

}  // namespace gfml

#endif  // GFML_GROUP_HPP_
