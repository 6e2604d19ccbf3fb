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

#ifndef MINSYM_PROBABILITY_HPP_
#define MINSYM_PROBABILITY_HPP_

#include <cstdint>

namespace minsym {

// n labels drawn with replacement from `num_classes` equiprobable classes;
// the event of interest is "some class occurs at least m times".
struct CollisionQuery {
  std::int64_t n = 1;
  std::int64_t m = 0;
  std::int64_t num_classes = 1;

  void Validate() const;
};

// P(X >= m) for the count X of one fixed class: the upper binomial tail
// with p = 1 / num_classes. Evaluated term by term in the log domain with
// compensated summation. Exactly 1 for m == 0 and exactly 0 for m > n.
double p_class_at_least(const CollisionQuery& query);

// 1 - (1 - P(X >= m))^num_classes. Treats the per-class counts as
// independent, so it is an approximation of the true probability; see
// monte_carlo_exists for the exact value.
double p_exists_class_at_least(const CollisionQuery& query);

struct MonteCarloEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
  std::int64_t trials = 0;
  std::int64_t hits = 0;
};

// Direct simulation of the exact event. Trial t draws from its own RNG
// stream, so the estimate depends only on (query, trials, seed), not on
// `workers`.
MonteCarloEstimate monte_carlo_exists(const CollisionQuery& query,
                                      std::int64_t trials, std::uint64_t seed,
                                      int workers = 1);

}  // namespace minsym

#endif  // MINSYM_PROBABILITY_HPP_
