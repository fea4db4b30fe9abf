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

#ifndef GFML_ERROR_HPP_
#define GFML_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfml {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or mismatched grid specifications.
class GridError : public Error {
 public:
  using Error::Error;
};

// Malformed GFML containers: bad magic, header, truncation, checksum.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A function's support leaves the truncation box where the caller required
// it to stay inside.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// Operator has no frequency symbol, or the symbol vanishes on the grid.
class SymbolError : public Error {
 public:
  using Error::Error;
};

// Unparseable operator text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Non-fatal findings (containment, boundary stencils, ill-posedness) collected
// alongside a result.
struct Diagnostics {
  struct Warning {
    std::string code;
    std::string message;
    double value = 0.0;
  };
  std::vector<Warning> warnings;

  void warn(std::string code, std::string message, double value = 0.0) {
    warnings.push_back({std::move(code), std::move(message), value});
  }
  bool has(const std::string& code) const {
    for (const auto& w : warnings) {
      if (w.code == code) return true;
    }
    return false;
  }
};

}  // namespace gfml

#endif  // GFML_ERROR_HPP_
