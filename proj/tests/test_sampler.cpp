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


#include <array>
#include <cmath>

#include "doctest.h"
#include "minsym/errors.hpp"
#include "minsym/sampler.hpp"
#include "minsym/sms.hpp"

namespace minsym {
namespace {

TEST_CASE("degenerate universe draws the target's duplicates") {
  Rng rng(1);
  const auto g = sample_instance(AttributeSpace(1, 1), 5, rng);
  CHECK(g.num_objects() == 6);
  for (int i = 0; i < g.num_objects(); ++i) CHECK(g.object(i)[0] == 0);
  CHECK_FALSE(solve_min_sym(g).solvable());
}

TEST_CASE("draws are reproducible") {
  const AttributeSpace space(20, 4);
  CHECK(sample_draw(space, 63, 9, 123) == sample_draw(space, 63, 9, 123));
  CHECK_FALSE(sample_draw(space, 63, 9, 123) == sample_draw(space, 63, 9, 124));
  CHECK_FALSE(sample_draw(space, 63, 9, 123) == sample_draw(space, 63, 10, 123));
  Rng a(4), b(4);
  CHECK(sample_instance(space, 63, a) == sample_instance(space, 63, b));
}

TEST_CASE("values and target index are uniform (chi-square, 3 dof)") {
  const AttributeSpace space(20, 4);
  constexpr int kDraws = 400;
  std::vector<std::array<double, 4>> counts(20, {0, 0, 0, 0});
  std::array<double, 4> target_quarter{0, 0, 0, 0};
  for (int d = 0; d < kDraws; ++d) {
    const auto g = sample_draw(space, 63, 31, static_cast<std::uint64_t>(d));
    REQUIRE(g.num_objects() == 64);
    for (int i = 0; i < 64; ++i) {
      for (int a = 0; a < 20; ++a) counts[static_cast<std::size_t>(a)][g.object(i)[a]] += 1;
    }
    target_quarter[static_cast<std::size_t>(g.target_index() / 16)] += 1;
  }
  // 99.9th percentile of chi-square with 3 degrees of freedom.
  constexpr double kCritical = 16.27;
  auto chi2 = [](const std::array<double, 4>& c) {
    const double expected = (c[0] + c[1] + c[2] + c[3]) / 4;
    double s = 0;
    for (double x : c) s += (x - expected) * (x - expected) / expected;
    return s;
  };
  for (int a = 0; a < 20; ++a) CHECK(chi2(counts[static_cast<std::size_t>(a)]) < kCritical);
  CHECK(chi2(target_quarter) < kCritical);
}

TEST_CASE("histogram of a two-object, one-attribute game") {
  // (target, distractor) over {0,1}^2: equal in 2 of 4 cases.
  const auto h = min_m_histogram(AttributeSpace(1, 2), 1, 100000, 3);
  CHECK(h.total() == 100000);
  const double se = std::sqrt(0.25 / 100000);
  CHECK(std::abs(h.frequency(1) - 0.5) < 3 * se);
  CHECK(std::abs(h.unsolvable_frequency() - 0.5) < 3 * se);
  CHECK(h.counts.size() == 1);
}

TEST_CASE("histogram basics") {
  const AttributeSpace space(20, 4);
  const auto one = min_m_histogram(space, 63, 1, 0);
  CHECK(one.total() == 1);
  CHECK(one.counts.size() + (one.unsolvable > 0 ? 1 : 0) == 1);
  const auto a = min_m_histogram(space, 63, 500, 8, 1);
  const auto b = min_m_histogram(space, 63, 500, 8, 3);
  CHECK(a == b);
  CHECK_THROWS_AS(min_m_histogram(space, 63, 0, 0), InvalidArgument);
}

TEST_CASE("full-size histogram concentrates on two adjacent values") {
  const auto h = min_m_histogram(AttributeSpace(20, 4), 63, 2000, 0, 2);
  double best = 0;
  for (const auto& [k, c] : h.counts) best = std::max(best, h.frequency(k) + h.frequency(k + 1));
  CHECK(best > 0.5);
}

TEST_CASE("controlled sampling fills small buckets purely") {
  SamplerConfig cfg;
  cfg.space = AttributeSpace(2, 4);
  cfg.num_distractors = 1;
  cfg.per_bucket_target = 10;
  cfg.tracked_buckets = {1};
  cfg.seed = 1;
  const auto ds = controlled_sample(cfg);
  CHECK(ds.complete);
  REQUIRE(ds.buckets.at(1).size() == 10);
  std::int64_t last_id = -1;
  for (const auto& li : ds.buckets.at(1)) {
    CHECK(li.min_m == 1);
    CHECK(solve_min_sym_enum(li.instance).min_symbols == 1);
    CHECK(li.id > last_id);
    CHECK(li.instance == sample_draw(cfg.space, 1, cfg.seed, static_cast<std::uint64_t>(li.id)));
    last_id = li.id;
  }
  CHECK(ds.histogram.total() == ds.attempts);
  CHECK(ds.attempts == last_id + 1);
}

TEST_CASE("controlled sampling at full size, independent of workers") {
  SamplerConfig cfg;
  cfg.per_bucket_target = 100;
  cfg.seed = 7;
  cfg.workers = 1;
  const auto one = controlled_sample(cfg);
  cfg.workers = 3;
  const auto three = controlled_sample(cfg);
  CHECK(one == three);
  REQUIRE(one.complete);
  for (int k : {2, 3}) {
    REQUIRE(one.buckets.at(k).size() == 100);
    for (const auto& li : one.buckets.at(k)) {
      CHECK(solve_min_sym_enum(li.instance).min_symbols == k);
    }
  }
  const auto h = one.histogram;
  CHECK(h.frequency(2) + h.frequency(3) > 0.5);
}

TEST_CASE("unreachable bucket gives a partial result") {
  SamplerConfig cfg;
  cfg.per_bucket_target = 5;
  cfg.tracked_buckets = {20};
  cfg.max_attempts = 200;
  try {
    controlled_sample(cfg);
    FAIL("expected a partial result");
  } catch (const PartialResultError& e) {
    CHECK(e.kind() == ErrorKind::kPartialResult);
    CHECK_FALSE(e.partial().complete);
    CHECK(e.partial().attempts == 200);
    CHECK(e.partial().histogram.total() == 200);
    CHECK(e.partial().size() == 0);
  }
}

TEST_CASE("config validation") {
  SamplerConfig cfg;
  cfg.tracked_buckets = {};
  CHECK_THROWS_AS(controlled_sample(cfg), InvalidArgument);
  cfg.tracked_buckets = {2};
  cfg.per_bucket_target = 0;
  CHECK_THROWS_AS(controlled_sample(cfg), InvalidArgument);
  cfg.per_bucket_target = 10;
  cfg.max_attempts = 5;
  CHECK_THROWS_AS(controlled_sample(cfg), InvalidArgument);
  cfg.max_attempts = 0;
  CHECK(cfg.EffectiveMaxAttempts() == 10 * 10000);
}

}  // namespace
}  // namespace minsym
