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

// Run reports for the gfml command-line tool.

#ifndef GFML_TOOLS_REPORT_HPP_
#define GFML_TOOLS_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfml/error.hpp"
#include "gfml/grid.hpp"
#include "gfml/refinement.hpp"

namespace gfml::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OrderEntry {
  std::string name;
  RefinementEstimate estimate;
  double min_order = 0.0;
  bool pass = false;
};

class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, Json value) { params_[key] = std::move(value); }
  void grid(const GridSpec& g);
  void result(const std::string& name, double value);
  // pass = value <= tolerance (a NaN value fails).
  void residual(const std::string& name, double value, double tolerance);
  void order(const std::string& name, const RefinementEstimate& e,
             double min_order);
  void warn(const std::string& text) { notes_.push_back(text); }
  void warnings(const Diagnostics& d);
  void set_wall_time(std::optional<double> seconds) { wall_time_ = seconds; }

  bool pass() const;
  Json to_json() const;
  std::string to_csv() const;
  std::string render(Format format) const;

 private:
  std::string command_;
  Json params_ = Json::object();
  Json grid_ = nullptr;
  std::vector<std::pair<std::string, double>> results_;
  std::vector<ResidualEntry> residuals_;
  std::vector<OrderEntry> orders_;
  std::vector<std::string> notes_;
  std::optional<double> wall_time_;
};

Json grid_json(const GridSpec& g);

}  // namespace gfml::cli

#endif  // GFML_TOOLS_REPORT_HPP_
