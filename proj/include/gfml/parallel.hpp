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

#ifndef GFML_PARALLEL_HPP_
#define GFML_PARALLEL_HPP_

#include <algorithm>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

namespace gfml {

// Worker cap for library loops. Defaults to GFML_THREADS when set, else the
// hardware concurrency. Values < 1 are clamped to 1.
int max_threads();
void set_max_threads(int n);

// Runs body(begin, end) over a partition of [0, count). Every index is
// visited exactly once; callers must make per-index work independent so the
// result does not depend on the partition. Calls made from inside a worker
// run inline on that worker.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

// Fixed-tree pairwise sums. The tree depends only on the input length: leaves
// are blocks of kReduceBlock elements summed by recursive halving, then block
// sums are combined the same way. Results are bitwise identical for any
// thread count.
inline constexpr std::size_t kReduceBlock = 4096;

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);
double pairwise_sum(std::span<const double> v);

namespace detail {

template <typename T, typename Term>
T tree_sum(std::size_t lo, std::size_t hi, const Term& term) {
  if (hi - lo <= 8) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum<T>(lo, mid, term) + tree_sum<T>(mid, hi, term);
}

}  // namespace detail

// Pairwise sum of term(i) for i in [0, count), using the same fixed tree.
template <typename Term>
auto pairwise_sum_of(std::size_t count, const Term& term)
    -> std::decay_t<decltype(term(std::size_t{}))> {
  using T = std::decay_t<decltype(term(std::size_t{}))>;
  if (count == 0) return T{};
  const std::size_t blocks = (count + kReduceBlock - 1) / kReduceBlock;
  std::vector<T> partial(blocks);
  parallel_for(blocks, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      const std::size_t lo = b * kReduceBlock;
      const std::size_t hi = std::min(count, lo + kReduceBlock);
      partial[b] = detail::tree_sum<T>(lo, hi, term);
    }
  });
  return detail::tree_sum<T>(0, blocks,
                             [&](std::size_t i) { return partial[i]; });
}

}  // namespace gfml

#endif  // GFML_PARALLEL_HPP_
