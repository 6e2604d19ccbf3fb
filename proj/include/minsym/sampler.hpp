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

#ifndef MINSYM_SAMPLER_HPP_
#define MINSYM_SAMPLER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "minsym/attributes.hpp"
#include "minsym/errors.hpp"
#include "minsym/random.hpp"

namespace minsym {

// Draws N_d + 1 objects i.i.d. uniform over the |V|^|A| universe, then a
// uniform target index among them.
GameInstance sample_instance(const AttributeSpace& space, int num_distractors,
                             Rng& rng);

// The instance for draw `draw_index` under `seed`. Every pipeline draws
// through this so results are independent of worker count.
GameInstance sample_draw(const AttributeSpace& space, int num_distractors,
                         std::uint64_t seed, std::uint64_t draw_index);

// Observed min(|M|) outcomes. Unsolvable draws (a distractor duplicates the
// target) are counted separately.
struct MinMHistogram {
  std::map<int, std::int64_t> counts;
  std::int64_t unsolvable = 0;

  std::int64_t total() const;
  double frequency(int min_m) const;
  double unsolvable_frequency() const;

  bool operator==(const MinMHistogram&) const = default;
};

MinMHistogram min_m_histogram(const AttributeSpace& space, int num_distractors,
                              std::int64_t trials, std::uint64_t seed,
                              int workers = 1);

struct SamplerConfig {
  AttributeSpace space{20, 4};
  int num_distractors = 63;
  int per_bucket_target = 10000;
  std::vector<int> tracked_buckets{2, 3};
  std::uint64_t seed = 0;
  // 0 selects the default of 10^4 * N_g per tracked bucket.
  std::int64_t max_attempts = 0;
  int workers = 1;

  void Validate() const;
  std::int64_t EffectiveMaxAttempts() const;
};

struct LabeledInstance {
  std::int64_t id = 0;  // draw index
  int min_m = 0;
  GameInstance instance;

  bool operator==(const LabeledInstance&) const = default;
};

struct LabeledDataset {
  AttributeSpace space{20, 4};
  int num_distractors = 0;
  int per_bucket_target = 0;
  std::vector<int> tracked_buckets;
  std::uint64_t seed = 0;
  std::int64_t max_attempts = 0;
  std::int64_t attempts = 0;
  bool complete = false;
  // Bucket key min(|M|) -> instances in draw order.
  std::map<int, std::vector<LabeledInstance>> buckets;
  MinMHistogram histogram;

  std::size_t size() const;
  // Instances of every bucket, in (bucket, draw index) order.
  std::vector<const LabeledInstance*> all() const;

  bool operator==(const LabeledDataset&) const = default;
};

// Thrown when max_attempts runs out before every tracked bucket is full.
// Carries what was collected, including the histogram.
class PartialResultError : public Error {
 public:
  PartialResultError(const std::string& what,
                     std::shared_ptr<const LabeledDataset> partial)
      : Error(ErrorKind::kPartialResult, what), partial_(std::move(partial)) {}

  const LabeledDataset& partial() const { return *partial_; }

 private:
  std::shared_ptr<const LabeledDataset> partial_;
};

// min(|M|)-controlled rejection sampling: draw, solve, file under the solved
// value if that bucket is tracked and not yet full; stop when every tracked
// bucket holds per_bucket_target instances.
LabeledDataset controlled_sample(const SamplerConfig& config);

}  // namespace minsym

#endif  // MINSYM_SAMPLER_HPP_
