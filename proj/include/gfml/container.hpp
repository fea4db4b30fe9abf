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

// GFML container, little-endian throughout:
//
//   offset  size  field
//   0       4     magic "GFML"
//   4       4     format version (uint32, currently 1)
//   8       150   6 axis records: count (uint64), min (float64),
//                 step (float64), kind (uint8)
//   158     16 N  values as interleaved (re, im) float64, row-major, last
//                 axis fastest; N = product of counts
//   ...     4     CRC-32 (IEEE, as zlib crc32) of the value bytes
//
// Spatial files use kinds (0,0,0,1,1,1); spectra use (2,2,2,3,3,3).

#ifndef GFML_CONTAINER_HPP_
#define GFML_CONTAINER_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfml/grid.hpp"
#include "gfml/sampled.hpp"

namespace gfml {

inline constexpr char kMagic[4] = {'G', 'F', 'M', 'L'};
inline constexpr std::uint32_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 4 + 4 + 6 * (8 + 8 + 8 + 1);

struct Container {
  GridSpec grid;
  std::vector<Complex> values;
};

// Serialization. Writers throw std::runtime_error on I/O failure; readers
// throw FormatError on bad magic, unsupported version, malformed header,
// truncated payload, checksum mismatch, or non-finite values.
void write_container(std::ostream& os, const GridSpec& grid,
                     std::span<const Complex> values);
Container read_container(std::istream& is);

void write_container_file(const std::string& path, const GridSpec& grid,
                          std::span<const Complex> values);
Container read_container_file(const std::string& path);

void save(const SampledFunction& f, const std::string& path);
// Throws FormatError if the file holds a spectrum rather than a function.
SampledFunction load(const std::string& path);

std::uint32_t crc32_of(std::span<const unsigned char> bytes);

}  // namespace gfml

#endif  // GFML_CONTAINER_HPP_
