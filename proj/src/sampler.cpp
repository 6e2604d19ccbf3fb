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

#include "minsym/sampler.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "minsym/sms.hpp"
#include "parallel.hpp"

namespace minsym {

namespace {

constexpr std::int64_t kDrawsPerWorkerBatch = 2048;

struct Draw {
  std::optional<int> min_m;
  std::optional<GameInstance> instance;  // kept only for tracked outcomes
};

}  // namespace

GameInstance sample_instance(const AttributeSpace& space, int num_distractors,
                             Rng& rng) {
  if (num_distractors < 1) {
    throw InvalidArgument("num_distractors must be >= 1");
  }
  const auto num_objects = static_cast<std::size_t>(num_distractors) + 1;
  std::vector<Value> values(num_objects *
                            static_cast<std::size_t>(space.num_attributes()));
  const auto bound = static_cast<std::uint64_t>(space.num_values());
  for (auto& v : values) v = static_cast<Value>(rng.Below(bound));
  const auto target = static_cast<int>(rng.Below(num_objects));
  return GameInstance(space, std::move(values), target);
}

GameInstance sample_draw(const AttributeSpace& space, int num_distractors,
                         std::uint64_t seed, std::uint64_t draw_index) {
  Rng rng = Rng::ForStream(seed, draw_index);
  return sample_instance(space, num_distractors, rng);
}

std::int64_t MinMHistogram::total() const {
  std::int64_t sum = unsolvable;
  for (const auto& [k, c] : counts) sum += c;
  return sum;
}

double MinMHistogram::frequency(int min_m) const {
  const auto it = counts.find(min_m);
  const auto t = total();
  if (it == counts.end() || t == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(t);
}

double MinMHistogram::unsolvable_frequency() const {
  const auto t = total();
  return t == 0 ? 0.0 : static_cast<double>(unsolvable) / static_cast<double>(t);
}

MinMHistogram min_m_histogram(const AttributeSpace& space, int num_distractors,
                              std::int64_t trials, std::uint64_t seed,
                              int workers) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (num_distractors < 1) throw InvalidArgument("num_distractors must be >= 1");
  std::vector<MinMHistogram> partial(static_cast<std::size_t>(std::max(1, workers)));
  internal::parallel_ranges(trials, workers, [&](int worker, std::int64_t begin,
                                                 std::int64_t end) {
    auto& h = partial[static_cast<std::size_t>(worker)];
    for (std::int64_t t = begin; t < end; ++t) {
      const auto result = solve_min_sym(
          sample_draw(space, num_distractors, seed, static_cast<std::uint64_t>(t)));
      if (result.min_symbols) {
        ++h.counts[*result.min_symbols];
      } else {
        ++h.unsolvable;
      }
    }
  });
  MinMHistogram merged;
  for (const auto& h : partial) {
    merged.unsolvable += h.unsolvable;
    for (const auto& [k, c] : h.counts) merged.counts[k] += c;
  }
  return merged;
}

void SamplerConfig::Validate() const {
  if (num_distractors < 1) throw InvalidArgument("num_distractors must be >= 1");
  if (per_bucket_target < 1) {
    throw InvalidArgument("per_bucket_target must be >= 1");
  }
  if (tracked_buckets.empty()) {
    throw InvalidArgument("at least one bucket must be tracked");
  }
  for (int b : tracked_buckets) {
    if (b < 1 || b > space.num_attributes()) {
      throw InvalidArgument("tracked bucket " + std::to_string(b) +
                            " outside [1, |A|]");
    }
  }
  if (max_attempts != 0 && max_attempts < per_bucket_target) {
    throw InvalidArgument("max_attempts must be >= per_bucket_target");
  }
  if (max_attempts < 0) throw InvalidArgument("max_attempts must be >= 0");
  if (workers < 1) throw InvalidArgument("workers must be >= 1");
}

std::int64_t SamplerConfig::EffectiveMaxAttempts() const {
  if (max_attempts > 0) return max_attempts;
  const std::set<int> unique(tracked_buckets.begin(), tracked_buckets.end());
  return std::int64_t{10000} * per_bucket_target *
         static_cast<std::int64_t>(unique.size());
}

std::size_t LabeledDataset::size() const {
  std::size_t n = 0;
  for (const auto& [k, bucket] : buckets) n += bucket.size();
  return n;
}

std::vector<const LabeledInstance*> LabeledDataset::all() const {
  std::vector<const LabeledInstance*> out;
  out.reserve(size());
  for (const auto& [k, bucket] : buckets) {
    for (const auto& inst : bucket) out.push_back(&inst);
  }
  return out;
}

LabeledDataset controlled_sample(const SamplerConfig& config) {
  config.Validate();
  const std::set<int> tracked(config.tracked_buckets.begin(),
                              config.tracked_buckets.end());
  LabeledDataset dataset;
  dataset.space = config.space;
  dataset.num_distractors = config.num_distractors;
  dataset.per_bucket_target = config.per_bucket_target;
  dataset.tracked_buckets.assign(tracked.begin(), tracked.end());
  dataset.seed = config.seed;
  dataset.max_attempts = config.EffectiveMaxAttempts();
  for (int b : tracked) dataset.buckets[b];

  const auto target = static_cast<std::size_t>(config.per_bucket_target);
  std::size_t open_buckets = tracked.size();
  const std::int64_t batch = kDrawsPerWorkerBatch * config.workers;
  std::vector<Draw> draws;

  std::int64_t next = 0;
  while (open_buckets > 0 && next < dataset.max_attempts) {
    const std::int64_t count = std::min(batch, dataset.max_attempts - next);
    draws.assign(static_cast<std::size_t>(count), Draw{});
    internal::parallel_ranges(count, config.workers, [&](int, std::int64_t begin,
                                                         std::int64_t end) {
      for (std::int64_t i = begin; i < end; ++i) {
        auto instance = sample_draw(config.space, config.num_distractors,
                                    config.seed,
                                    static_cast<std::uint64_t>(next + i));
        auto& d = draws[static_cast<std::size_t>(i)];
        d.min_m = solve_min_sym(instance).min_symbols;
        if (d.min_m && tracked.count(*d.min_m)) d.instance = std::move(instance);
      }
    });
    // Serial collection in draw order; stops at the draw that fills the
    // last open bucket so the result does not depend on the batch size.
    for (std::int64_t i = 0; i < count && open_buckets > 0; ++i) {
      auto& d = draws[static_cast<std::size_t>(i)];
      ++dataset.attempts;
      if (!d.min_m) {
        ++dataset.histogram.unsolvable;
        continue;
      }
      ++dataset.histogram.counts[*d.min_m];
      if (!d.instance) continue;
      auto& bucket = dataset.buckets[*d.min_m];
      if (bucket.size() >= target) continue;
      bucket.push_back({next + i, *d.min_m, std::move(*d.instance)});
      if (bucket.size() == target) --open_buckets;
    }
    next += count;
  }

  dataset.complete = open_buckets == 0;
  if (!dataset.complete) {
    std::string detail;
    for (const auto& [k, bucket] : dataset.buckets) {
      detail += " " + std::to_string(k) + ":" + std::to_string(bucket.size()) +
                "/" + std::to_string(target);
    }
    throw PartialResultError(
        "max_attempts (" + std::to_string(dataset.max_attempts) +
            ") exhausted before all tracked buckets filled; bucket fill:" + detail,
        std::make_shared<const LabeledDataset>(std::move(dataset)));
  }
  return dataset;
}

}  // namespace minsym
