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

#include "minsym/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "minsym/errors.hpp"
#include "minsym/random.hpp"
#include "parallel.hpp"

namespace minsym {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double log_binomial(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

bool some_class_reaches(std::vector<std::uint32_t>& counts,
                        std::vector<std::uint64_t>& labels,
                        const CollisionQuery& q, Rng& rng) {
  const auto classes = static_cast<std::uint64_t>(q.num_classes);
  const auto m = static_cast<std::uint64_t>(q.m);
  if (!counts.empty()) {
    bool hit = false;
    for (std::int64_t i = 0; i < q.n; ++i) {
      const auto label = rng.Below(classes);
      labels[static_cast<std::size_t>(i)] = label;
      if (++counts[label] >= m) hit = true;
    }
    for (auto label : labels) counts[label] = 0;
    return hit;
  }
  for (auto& label : labels) label = rng.Below(classes);
  std::sort(labels.begin(), labels.end());
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    run = (i > 0 && labels[i] == labels[i - 1]) ? run + 1 : 1;
    if (run >= m) return true;
  }
  return false;
}

}  // namespace

void CollisionQuery::Validate() const {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  if (m < 0) throw InvalidArgument("m must be >= 0, got " + std::to_string(m));
  if (num_classes < 1) {
    throw InvalidArgument("num_classes must be >= 1, got " +
                          std::to_string(num_classes));
  }
}

double p_class_at_least(const CollisionQuery& query) {
  query.Validate();
  if (query.m == 0) return 1.0;
  if (query.m > query.n) return 0.0;
  if (query.num_classes == 1) return 1.0;
  const double p = 1.0 / static_cast<double>(query.num_classes);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  CompensatedSum sum;
  for (std::int64_t k = query.m; k <= query.n; ++k) {
    sum.Add(std::exp(log_binomial(query.n, k) + static_cast<double>(k) * log_p +
                     static_cast<double>(query.n - k) * log_q));
  }
  return std::clamp(sum.Value(), 0.0, 1.0);
}

double p_exists_class_at_least(const CollisionQuery& query) {
  const double single = p_class_at_least(query);
  if (single >= 1.0) return 1.0;
  // 1 - (1 - P)^c, written to keep precision when P is tiny.
  const double value =
      -std::expm1(static_cast<double>(query.num_classes) * std::log1p(-single));
  return std::clamp(value, 0.0, 1.0);
}

MonteCarloEstimate monte_carlo_exists(const CollisionQuery& query,
                                      std::int64_t trials, std::uint64_t seed,
                                      int workers) {
  query.Validate();
  if (trials < 1) throw InvalidArgument("trials must be >= 1");

  constexpr std::int64_t kDenseClassLimit = std::int64_t{1} << 20;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(std::max(1, workers)), 0);
  internal::parallel_ranges(trials, workers, [&](int worker, std::int64_t begin,
                                                 std::int64_t end) {
    std::vector<std::uint32_t> counts;
    if (query.num_classes <= kDenseClassLimit) {
      counts.assign(static_cast<std::size_t>(query.num_classes), 0);
    }
    std::vector<std::uint64_t> labels(static_cast<std::size_t>(query.n));
    std::int64_t local = 0;
    for (std::int64_t t = begin; t < end; ++t) {
      if (query.m == 0) {
        ++local;
        continue;
      }
      Rng rng = Rng::ForStream(seed, static_cast<std::uint64_t>(t));
      if (some_class_reaches(counts, labels, query, rng)) ++local;
    }
    hits[static_cast<std::size_t>(worker)] = local;
  });

  MonteCarloEstimate estimate;
  estimate.trials = trials;
  for (auto h : hits) estimate.hits += h;
  estimate.probability =
      static_cast<double>(estimate.hits) / static_cast<double>(trials);
  estimate.standard_error =
      std::sqrt(estimate.probability * (1.0 - estimate.probability) /
                static_cast<double>(trials));
  return estimate;
}

}  // namespace minsym
