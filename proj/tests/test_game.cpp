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


#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "minsym/errors.hpp"
#include "minsym/game.hpp"
#include "minsym/sampler.hpp"
#include "minsym/sms.hpp"
#include "oracles.hpp"

namespace minsym {
namespace {

std::vector<int> Codes(const Message& m) {
  std::vector<int> out;
  for (Symbol s : m.symbols) out.push_back(s.code);
  return out;
}

// red triangle, red circle, blue triangle (color then shape, values 0..2)
GameInstance TwoSymbolScene() {
  return GameInstance(AttributeSpace(2, 3), std::vector<Value>{0, 0, 0, 1, 1, 0}, 0);
}

TEST_CASE("oracle sender on the two-symbol scene") {
  const auto g = TwoSymbolScene();
  // red = a0=0 -> code 0, triangle = a1=0 -> code 3
  CHECK(Codes(oracle_sender(g, 2)) == std::vector<int>{0, 3});
  CHECK(Codes(oracle_sender(g, 5)) == std::vector<int>{0, 3});
  const auto one = oracle_sender(g, 1);
  CHECK(one.length() == 1);
  CHECK(surviving_candidates(g, one).size() == 2);
  CHECK(expected_success(g, one) == 0.5);
  CHECK(surviving_candidates(g, Message{{Symbol{0}}}) == std::vector<int>{0, 1});
}

TEST_CASE("greedy truncation picks the largest elimination, lower attribute on ties") {
  const AttributeSpace space(3, 2);
  const GameInstance g(space, std::vector<Value>{0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0}, 0);
  REQUIRE(solve_min_sym(g).min_symbols == 3);
  // a0 and a1 each remove two distractors, a2 removes one.
  CHECK(Codes(oracle_sender(g, 1)) == std::vector<int>{0});
  // After a0, a1 and a2 each remove one more; a1 wins the tie.
  CHECK(Codes(oracle_sender(g, 2)) == std::vector<int>{0, 2});
  CHECK(Codes(oracle_sender(g, 3)) == std::vector<int>{0, 2, 4});
}

TEST_CASE("min symbols 1 needs no padding") {
  const GameInstance g(AttributeSpace(2, 3), std::vector<Value>{0, 0, 1, 1, 2, 2, 1, 2}, 0);
  CHECK(oracle_sender(g, 5).length() == 1);
}

TEST_CASE("oracle sender errors") {
  const GameInstance dup(AttributeSpace(2, 3), std::vector<Value>{0, 0, 0, 0}, 0);
  CHECK_THROWS_AS(oracle_sender(dup, 3), DomainError);
  CHECK_THROWS_AS(oracle_sender(TwoSymbolScene(), 0), InvalidArgument);
}

TEST_CASE("oracle receiver") {
  const auto g = TwoSymbolScene();
  Rng rng(0);
  const auto unique = oracle_receiver(g, Message{{Symbol{0}, Symbol{3}}}, rng);
  CHECK(unique.success);
  CHECK(unique.survivors == 1);
  CHECK(unique.chosen_index == 0);
  // green square is not in the scene
  const auto foreign = oracle_receiver(g, Message{{Symbol{2}, Symbol{5}}}, rng);
  CHECK_FALSE(foreign.success);
  CHECK(foreign.survivors == 0);
  CHECK(foreign.chosen_index == -1);
  // two survivors: success rate near 1/2
  int wins = 0;
  for (int i = 0; i < 4000; ++i) wins += oracle_receiver(g, Message{{Symbol{0}}}, rng).success;
  CHECK(std::abs(wins / 4000.0 - 0.5) < 3 * std::sqrt(0.25 / 4000));
}

TEST_CASE("short messages never identify the target") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_instance(gen, 6, 3, 8);
    const auto k = solve_min_sym(g).min_symbols;
    if (!k) continue;
    const int na = g.space().num_attributes();
    for (AttributeMask m = 0; m < (AttributeMask{1} << na); ++m) {
      const auto set = SymbolSet::FromMask(g.target(), m);
      Message msg;
      for (const auto& p : set.pairs()) {
        msg.symbols.push_back(encode_pair(g.space(), p.attribute, p.value));
      }
      const auto survivors = surviving_candidates(g, msg);
      // The truthful receiver never loses the target.
      CHECK(std::find(survivors.begin(), survivors.end(), g.target_index()) !=
            survivors.end());
      if (std::popcount(m) < *k) CHECK(survivors.size() >= 2);
    }
    for (int L = *k; L <= na; ++L) CHECK(expected_success(g, oracle_sender(g, L)) == 1.0);
  }
}

std::vector<LabeledInstance> Bucket(int k, int n, std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.per_bucket_target = n;
  cfg.tracked_buckets = {k};
  cfg.seed = seed;
  return controlled_sample(cfg).buckets.at(k);
}

std::vector<const LabeledInstance*> Pointers(const std::vector<LabeledInstance>& v) {
  std::vector<const LabeledInstance*> out;
  for (const auto& x : v) out.push_back(&x);
  return out;
}

TEST_CASE("oracle pair is exact at and above the bucket's min symbols") {
  const auto bucket = Bucket(2, 60, 4);
  const auto ptrs = Pointers(bucket);
  for (int L = 1; L <= 4; ++L) {
    EvaluationOptions opts;
    opts.max_length = L;
    opts.episodes_per_instance = 3;
    const auto r = evaluate(ptrs, oracle_sender, oracle_receiver, opts);
    CHECK(r.episodes == 180);
    if (L >= 2) {
      CHECK(r.expected_accuracy == 1.0);
      CHECK(r.accuracy == 1.0);
    } else {
      CHECK(r.expected_accuracy < 1.0);
    }
  }
}

TEST_CASE("empty messages give a uniform guess") {
  const auto bucket = Bucket(2, 40, 5);
  EvaluationOptions opts;
  opts.max_length = 3;
  const auto r = evaluate(Pointers(bucket), empty_sender, oracle_receiver, opts);
  CHECK(r.expected_accuracy == doctest::Approx(1.0 / 64).epsilon(1e-15));
}

TEST_CASE("evaluation is deterministic and independent of workers") {
  const auto bucket = Bucket(3, 30, 6);
  const auto ptrs = Pointers(bucket);
  EvaluationOptions opts;
  opts.max_length = 1;
  opts.episodes_per_instance = 4;
  opts.seed = 9;
  std::vector<EpisodeLogRecord> a, b;
  const auto ra = evaluate(ptrs, oracle_sender, oracle_receiver, opts, &a);
  opts.workers = 3;
  const auto rb = evaluate(ptrs, oracle_sender, oracle_receiver, opts, &b);
  CHECK(a == b);
  CHECK(ra.accuracy == rb.accuracy);
  REQUIRE(a.size() == 120);
  CHECK(a[0].instance_id == bucket[0].id);
  CHECK(a[4].instance_id == bucket[1].id);
  CHECK_THROWS_AS(evaluate({}, oracle_sender, oracle_receiver, opts), InvalidArgument);
  SenderPolicy liar = [](const GameInstance&, int) { return Message{{Symbol{0}, Symbol{4}}}; };
  CHECK_THROWS_AS(evaluate(ptrs, liar, oracle_receiver, opts), DomainError);
}

TEST_CASE("episode log lines") {
  const std::vector<EpisodeLogRecord> recs{{12, 3, {5, 9}, 0, true}, {13, 2, {}, 4, false}};
  std::ostringstream out;
  write_episode_log(out, recs);
  CHECK(out.str() ==
        "{\"chosen\":0,\"id\":12,\"max_len\":3,\"success\":true,\"symbols\":[5,9]}\n"
        "{\"chosen\":4,\"id\":13,\"max_len\":2,\"success\":false,\"symbols\":[]}\n");
  std::istringstream in(out.str());
  std::string line;
  std::vector<EpisodeLogRecord> back;
  while (std::getline(in, line)) back.push_back(parse_episode_log_line(line));
  CHECK(back == recs);
  CHECK_THROWS_AS(parse_episode_log_line("{"), FormatError);
  CHECK_THROWS_AS(parse_episode_log_line(R"({"id":1})"), FormatError);
  CHECK_THROWS_AS(
      parse_episode_log_line(R"({"chosen":0,"id":1,"max_len":1,"success":true,"symbols":[1,2]})"),
      FormatError);
}

}  // namespace
}  // namespace minsym
