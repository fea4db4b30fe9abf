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

#include "gfml/container.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>

#include "gfml/error.hpp"

namespace gfml {
namespace {

void put_u32(unsigned char* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

void put_u64(unsigned char* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

void put_f64(unsigned char* p, double v) {
  put_u64(p, std::bit_cast<std::uint64_t>(v));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{p[i]} << (8 * i);
  return v;
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{p[i]} << (8 * i);
  return v;
}

double get_f64(const unsigned char* p) {
  return std::bit_cast<double>(get_u64(p));
}

std::vector<unsigned char> encode_values(std::span<const Complex> values) {
  std::vector<unsigned char> bytes(values.size() * 16);
  unsigned char* p = bytes.data();
  for (const Complex& z : values) {
    put_f64(p, z.real());
    put_f64(p + 8, z.imag());
    p += 16;
  }
  return bytes;
}

}  // namespace

std::uint32_t crc32_of(std::span<const unsigned char> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  const unsigned char* p = bytes.data();
  std::size_t left = bytes.size();
  while (left > 0) {
    const uInt chunk = static_cast<uInt>(
        std::min<std::size_t>(left, std::numeric_limits<uInt>::max()));
    crc = crc32(crc, p, chunk);
    p += chunk;
    left -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

void write_container(std::ostream& os, const GridSpec& grid,
                     std::span<const Complex> values) {
  if (values.size() != grid.size()) {
    throw GridError("write_container: value count does not match grid");
  }
  std::array<unsigned char, kHeaderBytes> header{};
  std::memcpy(header.data(), kMagic, 4);
  put_u32(header.data() + 4, kFormatVersion);
  unsigned char* p = header.data() + 8;
  for (const AxisSpec& a : grid.axes()) {
    put_u64(p, a.count);
    put_f64(p + 8, a.min);
    put_f64(p + 16, a.step);
    p[24] = static_cast<unsigned char>(a.kind);
    p += 25;
  }
  const std::vector<unsigned char> payload = encode_values(values);
  std::array<unsigned char, 4> trailer{};
  put_u32(trailer.data(), crc32_of(payload));
  os.write(reinterpret_cast<const char*>(header.data()), header.size());
  os.write(reinterpret_cast<const char*>(payload.data()),
           static_cast<std::streamsize>(payload.size()));
  os.write(reinterpret_cast<const char*>(trailer.data()), trailer.size());
  if (!os) throw std::runtime_error("write_container: stream write failed");
}

Container read_container(std::istream& is) {
  std::array<unsigned char, kHeaderBytes> header{};
  is.read(reinterpret_cast<char*>(header.data()), header.size());
  if (is.gcount() < 4 || std::memcmp(header.data(), kMagic, 4) != 0) {
    throw FormatError("bad magic: not a GFML file");
  }
  if (static_cast<std::size_t>(is.gcount()) != header.size()) {
    throw FormatError("malformed header: file shorter than the header");
  }
  const std::uint32_t version = get_u32(header.data() + 4);
  if (version != kFormatVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  std::array<AxisSpec, kDims> axes;
  const unsigned char* p = header.data() + 8;
  for (std::size_t i = 0; i < kDims; ++i, p += 25) {
    const std::uint64_t count = get_u64(p);
    if (p[24] > static_cast<unsigned char>(AxisKind::kFrequencyT)) {
      throw FormatError("malformed header: unknown axis kind");
    }
    axes[i].count = static_cast<std::size_t>(count);
    axes[i].min = get_f64(p + 8);
    axes[i].step = get_f64(p + 16);
    axes[i].kind = static_cast<AxisKind>(p[24]);
  }
  std::optional<GridSpec> grid;
  try {
    grid.emplace(axes);
  } catch (const GridError& e) {
    throw FormatError(std::string("malformed header: ") + e.what());
  }

  const std::size_t n = grid->size();
  // Grow in chunks so a lying header cannot force a huge allocation before
  // the stream runs dry.
  const std::size_t want = n * 16;
  constexpr std::size_t kChunk = std::size_t{1} << 24;
  std::vector<unsigned char> payload;
  payload.reserve(std::min(want, kChunk));
  while (payload.size() < want) {
    const std::size_t have = payload.size();
    const std::size_t take = std::min(kChunk, want - have);
    payload.resize(have + take);
    is.read(reinterpret_cast<char*>(payload.data() + have),
            static_cast<std::streamsize>(take));
    if (static_cast<std::size_t>(is.gcount()) != take) {
      throw FormatError("truncated payload");
    }
  }
  std::array<unsigned char, 4> trailer{};
  is.read(reinterpret_cast<char*>(trailer.data()), trailer.size());
  if (is.gcount() != 4) throw FormatError("truncated payload: missing CRC-32");
  if (get_u32(trailer.data()) != crc32_of(payload)) {
    throw FormatError("checksum mismatch");
  }

  std::vector<Complex> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = get_f64(payload.data() + 16 * i);
    const double im = get_f64(payload.data() + 16 * i + 8);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw FormatError("non-finite value in payload");
    }
    values[i] = {re, im};
  }
  return {*grid, std::move(values)};
}

void write_container_file(const std::string& path, const GridSpec& grid,
                          std::span<const Complex> values) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_container(os, grid, values);
}

Container read_container_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_container(is);
}

void save(const SampledFunction& f, const std::string& path) {
  write_container_file(path, f.grid(), f.values());
}

SampledFunction load(const std::string& path) {
  Container c = read_container_file(path);
  if (!c.grid.is_spatial()) {
    throw FormatError("file holds a spectrum, not a sampled function");
  }
  return SampledFunction(c.grid, std::move(c.values));
}

}  // namespace gfml
