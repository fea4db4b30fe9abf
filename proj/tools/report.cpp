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

#include "report.hpp"

#include <cmath>
#include <sstream>

#include "gfml/version.hpp"

namespace gfml::cli {
namespace {

const char* kind_name(AxisKind k) {
  switch (k) {
    case AxisKind::kLinearN: return "n";
    case AxisKind::kLogDilation: return "t";
    case AxisKind::kFrequencyN: return "xi";
    case AxisKind::kFrequencyT: return "lambda";
  }
  return "?";
}

// Finite doubles as numbers, anything else as null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Json grid_json(const GridSpec& g) {
  Json axes = Json::array();
  for (const AxisSpec& a : g.axes()) {
    axes.push_back({{"kind", kind_name(a.kind)},
                    {"count", a.count},
                    {"min", a.min},
                    {"step", a.step}});
  }
  return {{"points", g.size()}, {"cell_volume", g.cell_volume()}, {"axes", axes}};
}

void RunReport::grid(const GridSpec& g) { grid_ = grid_json(g); }

void RunReport::warnings(const Diagnostics& d) {
  for (const auto& w : d.warnings) notes_.push_back(w.code + ": " + w.message);
}

void RunReport::result(const std::string& name, double value) {
  results_.emplace_back(name, value);
}

void RunReport::residual(const std::string& name, double value,
                         double tolerance) {
  residuals_.push_back({name, value, tolerance, value <= tolerance});
}

void RunReport::order(const std::string& name, const RefinementEstimate& e,
                      double min_order) {
  orders_.push_back({name, e, min_order, meets_order(e, min_order)});
}

bool RunReport::pass() const {
  for (const auto& r : residuals_) {
    if (!r.pass) return false;
  }
  for (const auto& o : orders_) {
    if (!o.pass) return false;
  }
  return true;
}

Json RunReport::to_json() const {
  Json j;
  j["artifact_version"] = kVersion;
  j["command"] = command_;
  j["parameters"] = params_;
  j["grid"] = grid_;
  Json results = Json::object();
  for (const auto& [name, value] : results_) results[name] = number(value);
  j["results"] = results;
  Json residuals = Json::array();
  for (const auto& r : residuals_) {
    residuals.push_back({{"name", r.name},
                         {"value", number(r.value)},
                         {"tolerance", r.tolerance},
                         {"pass", r.pass}});
  }
  j["residuals"] = residuals;
  Json orders = Json::array();
  for (const auto& o : orders_) {
    orders.push_back({{"name", o.name},
                      {"coarse_step", o.estimate.coarse_step},
                      {"coarse_residual", number(o.estimate.coarse_residual)},
                      {"fine_step", o.estimate.fine_step},
                      {"fine_residual", number(o.estimate.fine_residual)},
                      {"order", number(o.estimate.order)},
                      {"at_roundoff_floor", o.estimate.at_floor},
                      {"min_order", o.min_order},
                      {"pass", o.pass}});
  }
  j["orders"] = orders;
  j["warnings"] = notes_;
  j["pass"] = pass();
  j["wall_time_s"] = wall_time_ ? Json(*wall_time_) : Json(nullptr);
  return j;
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  const auto row = [&](const std::string& section, const std::string& name,
                       const std::string& value, const std::string& tolerance,
                       const std::string& pass) {
    os << csv_field(section) << ',' << csv_field(name) << ',' << csv_field(value)
       << ',' << csv_field(tolerance) << ',' << csv_field(pass) << "\r\n";
  };
  const Json j = to_json();
  row("section", "name", "value", "tolerance", "pass");
  row("meta", "artifact_version", kVersion, "", "");
  row("meta", "command", command_, "", "");
  for (const auto& [k, v] : params_.items()) row("parameter", k, csv_value(v), "", "");
  if (!grid_.is_null()) {
    row("grid", "points", csv_value(grid_["points"]), "", "");
    const auto& axes = grid_["axes"];
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const std::string axis = "axis" + std::to_string(i);
      row("grid", axis + ".count", csv_value(axes[i]["count"]), "", "");
      row("grid", axis + ".min", csv_value(axes[i]["min"]), "", "");
      row("grid", axis + ".step", csv_value(axes[i]["step"]), "", "");
    }
  }
  for (const auto& [name, value] : j["results"].items()) {
    row("result", name, csv_value(value), "", "");
  }
  for (const auto& r : j["residuals"]) {
    row("residual", r["name"].get<std::string>(), csv_value(r["value"]),
        csv_value(r["tolerance"]), csv_value(r["pass"]));
  }
  for (const auto& o : j["orders"]) {
    row("order", o["name"].get<std::string>(), csv_value(o["order"]),
        csv_value(o["min_order"]), csv_value(o["pass"]));
  }
  for (const auto& n : notes_) row("warning", "", n, "", "");
  row("meta", "pass", csv_value(j["pass"]), "", "");
  row("meta", "wall_time_s", csv_value(j["wall_time_s"]), "", "");
  return os.str();
}

std::string RunReport::render(Format format) const {
  return format == Format::kJson ? to_json().dump(2) + "\n" : to_csv();
}

}  // namespace gfml::cli
