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

// Python bindings for gfml.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "gfml/container.hpp"
#include "gfml/convolution.hpp"
#include "gfml/error.hpp"
#include "gfml/grid.hpp"
#include "gfml/group.hpp"
#include "gfml/invariant_ops.hpp"
#include "gfml/lifting.hpp"
#include "gfml/parallel.hpp"
#include "gfml/plancherel.hpp"
#include "gfml/sampled.hpp"
#include "gfml/transform.hpp"
#include "gfml/version.hpp"

namespace py = pybind11;

namespace {

using gfml::Complex;
using gfml::GridSpec;
using gfml::GroupElement;
using gfml::SampledFunction;
using Six = std::array<double, gfml::kDims>;
using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

// Group elements cross the boundary as (n3, n2, n1, a1, a2, a3).
GroupElement to_element(const Six& v) {
  return {{v[0], v[1], v[2]},
          gfml::DilationVector::Checked(v[3], v[4], v[5])};
}

Six from_element(const GroupElement& x) {
  return {x.n.n3, x.n.n2, x.n.n1, x.a.a1, x.a.a2, x.a.a3};
}

std::vector<py::ssize_t> shape_of(const GridSpec& g) {
  std::vector<py::ssize_t> shape;
  for (const auto& a : g.axes()) shape.push_back(static_cast<py::ssize_t>(a.count));
  return shape;
}

ComplexArray to_array(const GridSpec& g, std::span<const Complex> v) {
  ComplexArray out(shape_of(g));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

SampledFunction from_array(const GridSpec& g, const ComplexArray& a) {
  if (static_cast<std::size_t>(a.size()) != g.size()) {
    throw gfml::GridError("array has " + std::to_string(a.size()) +
                          " entries, grid has " + std::to_string(g.size()));
  }
  return SampledFunction(g, std::vector<Complex>(a.data(), a.data() + a.size()));
}

py::dict plancherel_dict(const gfml::PlancherelReport& r) {
  py::dict d;
  d["space_energy"] = r.space_energy;
  d["freq_energy"] = r.freq_energy;
  d["conv_energy"] = r.conv_energy;
  d["parseval_residual"] = r.parseval_residual;
  d["conv_residual"] = r.conv_residual;
  d["conv_freq_residual"] = r.conv_freq_residual;
  d["conv_resampled_residual"] = r.conv_resampled_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gfml, m) {
  m.doc() = "Harmonic analysis on the group G+";
  m.attr("__version__") = gfml::kVersion;

  auto base = py::register_exception<gfml::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<gfml::GridError>(m, "GridError", base.ptr());
  py::register_exception<gfml::FormatError>(m, "FormatError", base.ptr());
  py::register_exception<gfml::SymbolError>(m, "SymbolError", base.ptr());
  py::register_exception<gfml::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<gfml::ContainmentError>(m, "ContainmentError", base.ptr());

  m.def("set_max_threads", &gfml::set_max_threads, py::arg("n"));
  m.def("max_threads", &gfml::max_threads);

  m.def("gp_mul", [](const Six& x, const Six& y) {
    return from_element(gfml::gp_mul(to_element(x), to_element(y)));
  }, py::arg("x"), py::arg("y"), "Group product of (n3, n2, n1, a1, a2, a3) tuples.");
  m.def("gp_inv", [](const Six& x) { return from_element(gfml::gp_inv(to_element(x))); },
        py::arg("x"));
  m.def("to_matrix", [](const Six& x) { return gfml::to_matrix(to_element(x)); },
        py::arg("x"));
  m.def("to_chart", [](const Six& x) { return gfml::to_chart(to_element(x)); },
        py::arg("x"));
  m.def("from_chart", [](const Six& c) { return from_element(gfml::from_chart(c)); },
        py::arg("c"));

  py::class_<GridSpec>(m, "Grid")
      .def_static("uniform", &GridSpec::Uniform, py::arg("points"), py::arg("halfwidth"))
      .def_static("symmetric", &GridSpec::Symmetric, py::arg("counts"),
                  py::arg("halfwidths"))
      .def_static("lattice", &GridSpec::Lattice, py::arg("counts"), py::arg("steps"),
                  py::arg("origin_index"))
      .def_property_readonly("shape", [](const GridSpec& g) { return shape_of(g); })
      .def_property_readonly("size", &GridSpec::size)
      .def_property_readonly("cell_volume", &GridSpec::cell_volume)
      .def_property_readonly("minima", [](const GridSpec& g) {
        Six v;
        for (std::size_t d = 0; d < gfml::kDims; ++d) v[d] = g.axis(d).min;
        return v;
      })
      .def_property_readonly("steps", [](const GridSpec& g) {
        Six v;
        for (std::size_t d = 0; d < gfml::kDims; ++d) v[d] = g.axis(d).step;
        return v;
      })
      .def_property_readonly("is_frequency", &GridSpec::is_frequency)
      .def("__eq__", [](const GridSpec& a, const GridSpec& b) { return a == b; })
      .def("__repr__", &GridSpec::describe);

  py::class_<SampledFunction>(m, "SampledFunction")
      .def(py::init(&from_array), py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &SampledFunction::grid)
      .def_property_readonly("values", [](const SampledFunction& f) {
        return to_array(f.grid(), f.values());
      });

  py::class_<gfml::Spectrum>(m, "Spectrum")
      .def_property_readonly("freq_grid", &gfml::Spectrum::freq)
      .def_property_readonly("spatial_grid", &gfml::Spectrum::spatial)
      .def_property_readonly("values", [](const gfml::Spectrum& s) {
        return to_array(s.freq(), s.values());
      });

  m.def("gaussian", [](const GridSpec& g, const Six& center, const Six& widths,
                       Complex amplitude) {
    return gfml::make_gaussian(g, gfml::from_chart(center), widths, amplitude);
  }, py::arg("grid"), py::arg("center") = Six{}, py::arg("widths") = Six{1, 1, 1, 1, 1, 1},
     py::arg("amplitude") = Complex(1.0), "Gaussian in chart coordinates.");
  m.def("integrate_haar", &gfml::integrate_haar, py::arg("f"));
  m.def("energy", &gfml::energy, py::arg("f"));
  m.def("evaluate", [](const SampledFunction& f, const Six& x) {
    return gfml::evaluate_interpolated(f, to_element(x));
  }, py::arg("f"), py::arg("x"));
  m.def("right_invariance_residual", [](const SampledFunction& f, const Six& g) {
    return gfml::right_invariance_check(f, to_element(g)).residual;
  }, py::arg("f"), py::arg("g"));

  m.def("transform", [](const SampledFunction& f) {
    return gfml::fourier_mellin_forward(f);
  }, py::arg("f"));
  m.def("inverse_transform",
        py::overload_cast<const gfml::Spectrum&>(&gfml::fourier_mellin_inverse),
        py::arg("spectrum"));
  m.def("frequency_energy", &gfml::frequency_energy, py::arg("spectrum"));
  m.def("plancherel", [](const SampledFunction& f, bool resampled) {
    return plancherel_dict(gfml::plancherel_check(f, resampled));
  }, py::arg("f"), py::arg("resampled") = false);
  m.def("two_copy_plancherel", [](const SampledFunction& pos, const SampledFunction& neg) {
    const auto r = gfml::two_component_plancherel(gfml::ComponentLabeledFunction(pos, neg));
    py::dict d;
    d["total_energy"] = r.total_energy;
    d["total_freq_energy"] = r.total_freq_energy;
    d["residual"] = r.residual;
    d["copies_equal"] = r.copies_equal;
    d["factor_two_residual"] = r.factor_two_residual;
    return d;
  }, py::arg("pos"), py::arg("neg"));

  m.def("tilde_invariance_residual", [](const SampledFunction& f, std::size_t samples,
                                        std::uint64_t seed) {
    return gfml::tilde_invariance_check(f, samples, seed).residual;
  }, py::arg("f"), py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def("upsilon_invariance_residual", [](const SampledFunction& f, std::size_t samples,
                                          std::uint64_t seed) {
    return gfml::upsilon_invariance_check(f, samples, seed).residual;
  }, py::arg("f"), py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def("involution", [](const SampledFunction& f) { return gfml::involution(f); },
        py::arg("f"));

  m.def("convolve", [](const SampledFunction& g, const SampledFunction& f) {
    return gfml::convolve_gplus(g, f);
  }, py::arg("kernel"), py::arg("f"), "Group convolution g * f on f's grid.");
  m.def("convolve_abelian", &gfml::convolve_abelian, py::arg("kernel"), py::arg("f"));
  m.def("eq15_residuals", [](const SampledFunction& g, const SampledFunction& f,
                             std::size_t points, std::uint64_t seed) {
    return gfml::eq15_check(g, f, gfml::box_points(f.grid(), points, seed)).residuals;
  }, py::arg("kernel"), py::arg("f"), py::arg("points") = 32, py::arg("seed") = 0);

  m.def("basis_field", [](const std::string& name, const SampledFunction& f) {
    return gfml::basis_field_apply(gfml::basis_from_name(name), f);
  }, py::arg("name"), py::arg("f"));
  m.def("normalize_operator", [](const std::string& text) {
    return gfml::parse_operator(text).to_string();
  }, py::arg("text"));
  m.def("apply_operator", [](const std::string& op, const SampledFunction& f) {
    return gfml::operator_apply(gfml::parse_operator(op), f);
  }, py::arg("op"), py::arg("f"));
  m.def("solve", [](const std::string& op, const SampledFunction& psi, double eps) {
    gfml::SolveResult r = gfml::solve_invariant_operator(gfml::parse_operator(op), psi, eps);
    return py::make_tuple(std::move(r.phi), r.residual);
  }, py::arg("op"), py::arg("psi"), py::arg("eps") = 0.0,
     "Returns (phi, forward residual).");

  m.def("save", &gfml::save, py::arg("f"), py::arg("path"));
  m.def("load", &gfml::load, py::arg("path"));
}
