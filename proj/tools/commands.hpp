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

// Command implementations of the gfml command-line tool.

#ifndef GFML_TOOLS_COMMANDS_HPP_
#define GFML_TOOLS_COMMANDS_HPP_

#include <iosfwd>

namespace gfml::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitUsage = 2;

// Parses argv, runs one subcommand, writes the report to out and messages to
// err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gfml::cli

#endif  // GFML_TOOLS_COMMANDS_HPP_
