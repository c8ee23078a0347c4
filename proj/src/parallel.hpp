// Copyright 2026 The bellsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLSIM_SRC_PARALLEL_HPP
#define BELLSIM_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <vector>

namespace bellsim::detail {

// Splits [0, trials) into contiguous chunks, evaluates range_fn(begin, end)
// per chunk (concurrently when threads > 1), and merges the partial sums
// with operator+=. Partial sums are integer-valued in all callers, so the
// merged total does not depend on chunking or scheduling.
template <typename Sums, typename RangeFn>
Sums reduce_trials(std::uint64_t trials, unsigned threads, RangeFn range_fn) {
  const std::uint64_t chunks =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1));
  if (chunks <= 1) {
    return range_fn(std::uint64_t{0}, trials);
  }
  std::vector<std::future<Sums>> partials;
  partials.reserve(chunks);
  const std::uint64_t per_chunk = trials / chunks;
  const std::uint64_t remainder = trials % chunks;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    const std::uint64_t end = begin + per_chunk + (i < remainder ? 1 : 0);
    partials.push_back(
        std::async(std::launch::async, range_fn, begin, end));
    begin = end;
  }
  Sums total{};
  for (auto& partial : partials) {
    total += partial.get();
  }
  return total;
}

}  // namespace bellsim::detail

#endif  // BELLSIM_SRC_PARALLEL_HPP
