// Copyright 2026 The minsym Authors
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

#ifndef MINSYM_SRC_PARALLEL_HPP_
#define MINSYM_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace minsym::internal {

// Runs fn(worker, begin, end) over contiguous slices of [0, count). The
// first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_ranges(std::int64_t count, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    fn(0, std::int64_t{0}, count);
    return;
  }
  const auto w = static_cast<std::int64_t>(workers);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t i = 0; i < w; ++i) {
      const std::int64_t begin = count * i / w;
      const std::int64_t end = count * (i + 1) / w;
      threads.emplace_back([&, i, begin, end] {
        try {
          fn(static_cast<int>(i), begin, end);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace minsym::internal

#endif  // MINSYM_SRC_PARALLEL_HPP_
