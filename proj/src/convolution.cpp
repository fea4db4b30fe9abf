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

#include "gfml/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gfml/parallel.hpp"
#include "gfml/transform.hpp"
#include "interp.hpp"

namespace gfml {
namespace {

// How the dilation slot of the integrand depends on the output t and the
// kernel s (both logarithmic).
enum class ScaleMode {
  kGPlus,  // f(rho(e^-s)(m^-1 n), e^(t-s))
  kLift,   // f(rho(e^(t-s))(m^-1 n), e^(t-s+x))
  kNone,   // F(m^-1 n, e^(t-s))
};

// Full-grid quadrature shared by convolve_gplus and convolve_k. For each
// output t-node T and kernel t-node S the integrand's t-argument and the
// rho-scaling are fixed, so f is blended once over its t-taps into an n-slice
// and the n2 and n1 taps are tabulated; only n3 is located per pair.
SampledFunction structured_convolve(const SampledFunction& g,
                                    const SampledFunction& f, ScaleMode mode,
                                    const std::array<double, 3>& xlog) {
  const GridSpec& grid = f.grid();
  const std::array<std::size_t, kDims> cnt = {
      grid.axis(0).count, grid.axis(1).count, grid.axis(2).count,
      grid.axis(3).count, grid.axis(4).count, grid.axis(5).count};
  const std::size_t nn = cnt[0] * cnt[1] * cnt[2];
  const std::size_t nt = cnt[3] * cnt[4] * cnt[5];
  const std::size_t nstride[3] = {cnt[1] * cnt[2], cnt[2], 1};
  const std::size_t tstride[3] = {cnt[4] * cnt[5], cnt[5], 1};
  const double w = g.grid().cell_volume();
  const auto fv = f.values();
  const auto gv = g.values();

  auto t_nodes = [&](std::size_t flat) {
    std::array<double, 3> t;
    for (std::size_t d = 0; d < 3; ++d) {
      t[d] = grid.axis(3 + d).node((flat / tstride[d]) % cnt[3 + d]);
    }
    return t;
  };
  std::vector<std::vector<double>> node(3);
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t j = 0; j < cnt[d]; ++j) node[d].push_back(grid.axis(d).node(j));
  }

  std::vector<Complex> out(grid.size());
  parallel_for(nt, [&](std::size_t t_lo, std::size_t t_hi) {
    std::vector<Complex> acc(nn), slice(nn), gw(nn);
    std::vector<detail::Taps> tab2(cnt[1] * cnt[1]), tab1(cnt[2] * cnt[2]);
    for (std::size_t tf = t_lo; tf < t_hi; ++tf) {
      std::fill(acc.begin(), acc.end(), Complex{});
      const auto t = t_nodes(tf);
      for (std::size_t sf = 0; sf < nt; ++sf) {
        bool any = false;
        for (std::size_t m = 0; m < nn; ++m) {
          gw[m] = gv[m * nt + sf] * w;
          any = any || gw[m] != Complex{};
        }
        if (!any) continue;
        const auto s = t_nodes(sf);
        std::array<double, 3> sigma{}, tau{};
        for (std::size_t d = 0; d < 3; ++d) {
          tau[d] = t[d] - s[d] + (mode == ScaleMode::kLift ? xlog[d] : 0.0);
          sigma[d] = mode == ScaleMode::kGPlus  ? -s[d]
                     : mode == ScaleMode::kLift ? t[d] - s[d]
                                                : 0.0;
        }
        detail::Taps tt[3];
        bool inside = true;
        for (std::size_t d = 0; d < 3; ++d) {
          tt[d] = detail::locate(grid.axis(3 + d), tau[d]);
          inside = inside && tt[d].count > 0;
        }
        if (!inside) continue;
        // Blend f over the t-taps into an n-slice.
        std::fill(slice.begin(), slice.end(), Complex{});
        for (int c0 = 0; c0 < tt[0].count; ++c0) {
          for (int c1 = 0; c1 < tt[1].count; ++c1) {
            for (int c2 = 0; c2 < tt[2].count; ++c2) {
              const double wt =
                  tt[0].weight[c0] * tt[1].weight[c1] * tt[2].weight[c2];
              const std::size_t toff = tt[0].index[c0] * tstride[0] +
                                       tt[1].index[c1] * tstride[1] +
                                       tt[2].index[c2];
              for (std::size_t k = 0; k < nn; ++k) {
                slice[k] += wt * fv[k * nt + toff];
              }
            }
          }
        }
        // rho(e^sigma) = (e^(s1-s3) n3, e^(s2-s3) n2, e^(s1-s2) n1).
        const double r3 = std::exp(sigma[0] - sigma[2]);
        const double r2 = std::exp(sigma[1] - sigma[2]);
        const double r1 = std::exp(sigma[0] - sigma[1]);
        for (std::size_t i = 0; i < cnt[1]; ++i) {
          for (std::size_t j = 0; j < cnt[1]; ++j) {
            tab2[i * cnt[1] + j] =
                detail::locate(grid.axis(1), r2 * (node[1][i] - node[1][j]));
          }
        }
        for (std::size_t i = 0; i < cnt[2]; ++i) {
          for (std::size_t j = 0; j < cnt[2]; ++j) {
            tab1[i * cnt[2] + j] =
                detail::locate(grid.axis(2), r1 * (node[2][i] - node[2][j]));
          }
        }
        for (std::size_t m = 0; m < nn; ++m) {
          if (gw[m] == Complex{}) continue;
          const std::size_t j0 = m / nstride[0];
          const std::size_t j1 = (m / nstride[1]) % cnt[1];
          const std::size_t j2 = m % cnt[2];
          const double m3 = node[0][j0], m2 = node[1][j1], m1 = node[2][j2];
          for (std::size_t n = 0; n < nn; ++n) {
            const std::size_t i1 = (n / nstride[1]) % cnt[1];
            const detail::Taps& a2 = tab2[i1 * cnt[1] + j1];
            if (a2.count == 0) continue;
            const std::size_t i2 = n % cnt[2];
            const detail::Taps& a1 = tab1[i2 * cnt[2] + j2];
            if (a1.count == 0) continue;
            const std::size_t i0 = n / nstride[0];
            const double n3 =
                r3 * (node[0][i0] - m3 - m1 * (node[1][i1] - m2));
            detail::Taps taps[3] = {detail::locate(grid.axis(0), n3), a2, a1};
            if (taps[0].count == 0) continue;
            acc[n] += gw[m] * detail::combine_taps<3>(slice.data(), nstride, taps);
          }
        }
      }
      for (std::size_t n = 0; n < nn; ++n) out[n * nt + tf] = acc[n];
    }
  });
  return SampledFunction(grid, std::move(out));
}

template <typename Integrand>
Complex kernel_sum(const SampledFunction& g, const Integrand& integrand) {
  const auto gv = g.values();
  const GridSpec& grid = g.grid();
  return pairwise_sum_of(gv.size(),
                         [&](std::size_t i) {
                           if (gv[i] == Complex{}) return Complex{};
                           return integrand(from_chart(grid.point(i))) * gv[i];
                         }) *
         grid.cell_volume();
}

}  // namespace

Complex convolve_gplus_at(const SampledFunction& g, const SampledFunction& f,
                          const GroupElement& x) {
  return kernel_sum(g, [&](const GroupElement& y) {
    return evaluate_interpolated(f, gp_mul(gp_inv(y), x));
  });
}

Complex convolve_gplus_at(const SampledFunction& g, const GroupFunction& f,
                          const GroupElement& x) {
  return kernel_sum(g,
                    [&](const GroupElement& y) { return f(gp_mul(gp_inv(y), x)); });
}

SampledFunction convolve_gplus(const SampledFunction& g,
                               const SampledFunction& f, Diagnostics* diag) {
  require_same_grid(g.grid(), f.grid(), "convolve_gplus");
  check_containment(g, diag, "convolve_gplus kernel");
  check_containment(f, diag, "convolve_gplus operand");
  return structured_convolve(g, f, ScaleMode::kGPlus, {});
}

Complex convolve_k_at(const SampledFunction& g, const LiftedFunction& lift,
                      const HeisenbergElement& n, const DilationVector& a,
                      const DilationVector& x) {
  return kernel_sum(g, [&](const GroupElement& y) {
    return lift(heis_mul(heis_inv(y.n), n), dil_mul(dil_inv(y.a), a), x);
  });
}

Complex convolve_k_at(const SampledFunction& g, const SampledFunction& k_func,
                      const HeisenbergElement& n, const DilationVector& a) {
  return kernel_sum(g, [&](const GroupElement& y) {
    return evaluate_interpolated(
        k_func, {heis_mul(heis_inv(y.n), n), dil_mul(dil_inv(y.a), a)});
  });
}

SampledFunction convolve_k(const SampledFunction& g, const LiftedFunction& lift,
                           const DilationVector& x, Diagnostics* diag) {
  if (lift.kind() != LiftKind::kTilde) {
    throw std::logic_error("convolve_k: needs a tilde lift");
  }
  require_same_grid(g.grid(), lift.base().grid(), "convolve_k");
  check_containment(g, diag, "convolve_k kernel");
  check_containment(lift.base(), diag, "convolve_k operand");
  return structured_convolve(g, lift.base(), ScaleMode::kLift,
                             {std::log(x.a1), std::log(x.a2), std::log(x.a3)});
}

SampledFunction convolve_k(const SampledFunction& g,
                           const SampledFunction& k_func, Diagnostics* diag) {
  require_same_grid(g.grid(), k_func.grid(), "convolve_k");
  check_containment(g, diag, "convolve_k kernel");
  check_containment(k_func, diag, "convolve_k operand");
  return structured_convolve(g, k_func, ScaleMode::kNone, {});
}

SampledFunction convolve_abelian(const SampledFunction& g,
                                 const SampledFunction& f) {
  require_same_grid(g.grid(), f.grid(), "convolve_abelian");
  if (!g.grid().origin_on_lattice()) {
    throw GridError(
        "convolve_abelian: grid origin must lie on the lattice (min / step "
        "integral on every axis)");
  }
  const Spectrum gs = fourier_mellin_forward(g);
  const Spectrum fs = fourier_mellin_forward(f);
  std::vector<Complex> prod(gs.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = gs[i] * fs[i];
  return fourier_mellin_inverse(Spectrum(gs.freq(), gs.spatial(), std::move(prod)));
}

std::vector<GroupElement> node_points(const GridSpec& grid, std::size_t count,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ChartPoint c;
    for (std::size_t d = 0; d < kDims; ++d) {
      const AxisSpec& ax = grid.axis(d);
      const std::size_t lo = ax.count / 5;
      const std::size_t hi = ax.count - 1 - ax.count / 5;
      c[d] = ax.node(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
    }
    pts.push_back(from_chart(c));
  }
  return pts;
}

std::vector<GroupElement> box_points(const GridSpec& grid, std::size_t count,
                                     std::uint64_t seed, double share) {
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ChartPoint c;
    for (std::size_t d = 0; d < kDims; ++d) {
      const AxisSpec& ax = grid.axis(d);
      const double mid = 0.5 * (ax.min + ax.max());
      const double half = 0.5 * share * (ax.max() - ax.min);
      c[d] = std::uniform_real_distribution<double>(mid - half, mid + half)(rng);
    }
    pts.push_back(from_chart(c));
  }
  return pts;
}

ConvolutionReport eq15_check(const SampledFunction& g, const SampledFunction& f,
                             const std::vector<GroupElement>& points,
                             bool resampled) {
  ConvolutionReport rep;
  rep.grid = f.grid().describe();
  check_containment(g, &rep.diagnostics, "eq15_check kernel");
  check_containment(f, &rep.diagnostics, "eq15_check operand");
  const LiftedFunction lift(f, LiftKind::kTilde);
  const std::size_t np = points.size();
  std::vector<Complex> path_a(np), path_b(np), path_s(np);
  std::vector<Complex> chi_k(np), chi_g(np);
  for (std::size_t i = 0; i < np; ++i) {
    const GroupElement& p = points[i];
    path_a[i] = convolve_gplus_at(g, f, p);
    path_b[i] = convolve_k_at(g, lift, p.n, DilationVector{}, p.a);
    if (resampled) {
      const SampledFunction slice =
          SampledFunction::Generate(f.grid(), [&](const ChartPoint& c) {
            const GroupElement y = from_chart(c);
            return lift(y.n, y.a, p.a);
          });
      path_s[i] = convolve_k_at(g, slice, p.n, DilationVector{});
    }
    const DilationVector central{p.a.a1, p.a.a1, p.a.a1};
    chi_k[i] = convolve_k_at(g, lift, p.n, central, DilationVector{});
    chi_g[i] = convolve_gplus_at(g, f, {p.n, central});
  }
  rep.residuals["eq15"] = relative_l2(path_b, path_a);
  rep.residuals["chi_pairing"] = relative_l2(chi_k, chi_g);
  if (resampled) rep.residuals["eq15_resampled"] = relative_l2(path_s, path_a);
  double norm = 0.0;
  for (const Complex& z : path_a) norm += std::norm(z);
  rep.values["path_a_l2"] = std::sqrt(norm);
  rep.values["points"] = static_cast<double>(np);
  return rep;
}

ConvolutionReport convolution_theorem_check(const SampledFunction& g,
                                            const SampledFunction& f,
                                            const GroupFunction* exact_f,
                                            std::size_t interp_points) {
  ConvolutionReport rep;
  rep.grid = f.grid().describe();
  const SampledFunction group = convolve_gplus(g, f, &rep.diagnostics);
  const SampledFunction abelian = convolve_abelian(g, f);
  const Spectrum gs = fourier_mellin_forward(g);
  const Spectrum fs = fourier_mellin_forward(f);
  const Spectrum cs = fourier_mellin_forward(group);
  const Spectrum as = fourier_mellin_forward(abelian);
  std::vector<Complex> prod(gs.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = gs[i] * fs[i];
  rep.residuals["total"] = relative_l2(cs.values(), prod);
  rep.residuals["abelian"] = relative_l2(as.values(), prod);
  rep.residuals["noncommutative"] = relative_l2(group.values(), abelian.values());
  if (exact_f != nullptr) {
    const auto pts = node_points(f.grid(), interp_points, 0);
    std::vector<Complex> sampled(pts.size()), exact(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      sampled[i] = convolve_gplus_at(g, f, pts[i]);
      exact[i] = convolve_gplus_at(g, *exact_f, pts[i]);
    }
    rep.residuals["interpolation"] = relative_l2(sampled, exact);
  }
  rep.result = group;
  return rep;
}

}  // namespace gfml
