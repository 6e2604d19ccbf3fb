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


#include <random>
#include <sstream>

#include "doctest.h"
#include "minsym/analysis.hpp"
#include "minsym/errors.hpp"
#include "minsym/game.hpp"
#include "minsym/sampler.hpp"

namespace minsym {
namespace {

TEST_CASE("effective_symbols") {
  const AccuracyCurve knee({{1, 0.60}, {2, 0.95}, {3, 0.96}, {4, 0.96}});
  CHECK(effective_symbols(knee, 0.02) == 2);
  CHECK(effective_symbols(knee) == 2);
  CHECK(effective_symbols(knee, 0.0) == 3);
  CHECK(effective_symbols(AccuracyCurve({{1, 0.5}, {2, 0.5}, {3, 0.5}}), 0.0) == 1);
  CHECK(effective_symbols(AccuracyCurve({{1, 0.1}, {2, 0.2}, {5, 0.3}}), 0.0) == 5);
  // A difference of exactly epsilon counts as insignificant.
  CHECK(effective_symbols(AccuracyCurve({{1, 0.94}, {2, 0.96}}), 0.02) == 1);
  CHECK_THROWS_AS(effective_symbols(AccuracyCurve()), DomainError);
  CHECK_THROWS_AS(effective_symbols(knee, 1.0), DomainError);
  CHECK_THROWS_AS(effective_symbols(knee, -0.1), DomainError);
}

TEST_CASE("effective_symbols properties on random curves") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> acc(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<int, double> pts;
    const int n = std::uniform_int_distribution<int>(1, 8)(gen);
    for (int i = 0; i < n; ++i) pts[std::uniform_int_distribution<int>(1, 12)(gen)] = acc(gen);
    const AccuracyCurve c(pts);
    int argmax = 0;
    double best = -1;
    for (const auto& [L, a] : pts) {
      if (a > best) {
        best = a;
        argmax = L;
      }
      CHECK(accuracy_gap(c, L) >= 0.0);
    }
    CHECK(effective_symbols(c, 0.0) == argmax);
    CHECK(accuracy_gap(c, argmax) == 0.0);
    int last = effective_symbols(c, 0.0);
    for (double eps : {0.01, 0.05, 0.1, 0.3, 0.6, 0.99}) {
      const int e = effective_symbols(c, eps);
      CHECK(e <= last);
      last = e;
    }
  }
}

TEST_CASE("accuracy_gap") {
  const AccuracyCurve c({{2, 0.45}, {5, 0.95}});
  CHECK(accuracy_gap(c, 2) == doctest::Approx(0.50));
  CHECK(accuracy_gap(c, 5) == 0.0);
  CHECK_THROWS_AS(accuracy_gap(c, 3), DomainError);
  CHECK_THROWS_AS(AccuracyCurve({{0, 0.5}}), DomainError);
  CHECK_THROWS_AS(AccuracyCurve({{1, 1.5}}), DomainError);
}

TEST_CASE("curve table round-trip and epoch selection") {
  CurveTable t;
  t.source = "trained";
  t.rows = {{1, 0.25, 0, 0.01, std::nullopt, 100},
            {2, 0.5, 0, 0.02, std::nullopt, 100},
            {1, 0.375, 3, 0.01, std::nullopt, 100},
            {2, 0.875, 3, 0.02, std::nullopt, 100}};
  std::ostringstream out;
  write_curve_table(out, t);
  CHECK(out.str().rfind("# source=trained\nepoch,max_len,accuracy,stderr,episodes\n0,1,0.25,", 0) == 0);
  std::istringstream in(out.str());
  const auto back = read_curve_table(in);
  CHECK(back.source == "trained");
  REQUIRE(back.rows.size() == 4);
  CHECK(back.rows[3].accuracy == 0.875);
  CHECK(back.rows[3].epoch == 3);
  CHECK(back.rows[3].episodes == 100);
  CHECK(to_curve(back).points() == std::map<int, double>{{1, 0.375}, {2, 0.875}});
  CHECK(to_curve(back, {"accuracy", 0}).points() == std::map<int, double>{{1, 0.25}, {2, 0.5}});
  CHECK_THROWS_AS(to_curve(back, {"expected_accuracy", std::nullopt}), FormatError);
  CHECK_THROWS_AS(to_curve(back, {"bogus", std::nullopt}), InvalidArgument);
}

TEST_CASE("malformed curve tables") {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_curve_table(in);
  };
  CHECK_THROWS_AS(read(""), FormatError);
  CHECK_THROWS_AS(read("L,acc\n1,0.5\n"), FormatError);
  CHECK_THROWS_AS(read("max_len,accuracy\n1\n"), FormatError);
  CHECK_THROWS_AS(read("max_len,accuracy\nx,0.5\n"), FormatError);
  CHECK_THROWS_AS(read("max_len,accuracy\n0,0.5\n"), FormatError);
  CHECK_THROWS_AS(to_curve(read("max_len,accuracy\n1,0.5\n1,0.6\n")), FormatError);
  CHECK(read("max_len,accuracy,extra\n1,0.5,zzz\n").rows.size() == 1);
}

TEST_CASE("message statistics") {
  std::istringstream empty("");
  const auto none = message_length_stats(empty);
  CHECK(none.total == 0);
  CHECK(none.length_histogram.empty());
  CHECK(none.symbol_histogram.empty());
  CHECK_FALSE(none.modal_length());

  std::ostringstream log;
  for (int i = 0; i < 7; ++i) {
    log << R"({"chosen":0,"id":)" << i << R"(,"max_len":5,"success":true,"symbols":[1,6]})" << '\n';
  }
  std::istringstream in(log.str());
  const auto s = message_length_stats(in);
  CHECK(s.total == 7);
  CHECK(s.successes == 7);
  CHECK(s.length_histogram == std::map<int, std::int64_t>{{2, 7}});
  CHECK(s.symbol_histogram == std::map<int, std::int64_t>{{1, 7}, {6, 7}});

  std::istringstream bad(log.str() + "{\"id\":1}\n");
  try {
    message_length_stats(bad);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).rfind("log line 8:", 0) == 0);
  }
}

TEST_CASE("oracle curves and logs on sampled buckets") {
  SamplerConfig cfg;
  cfg.per_bucket_target = 40;
  cfg.seed = 21;
  const auto ds = controlled_sample(cfg);
  auto pointers = [](const std::vector<LabeledInstance>& v) {
    std::vector<const LabeledInstance*> out;
    for (const auto& x : v) out.push_back(&x);
    return out;
  };

  std::map<int, double> curve3;
  for (int L = 1; L <= 5; ++L) {
    EvaluationOptions opts;
    opts.max_length = L;
    curve3[L] = evaluate(pointers(ds.buckets.at(3)), oracle_sender, oracle_receiver, opts)
                    .expected_accuracy;
  }
  const AccuracyCurve c(curve3, "oracle");
  CHECK(accuracy_gap(c, 2) > 0.0);
  CHECK(effective_symbols(c) == 3);

  std::vector<EpisodeLogRecord> records;
  EvaluationOptions opts;
  opts.max_length = 5;
  evaluate(pointers(ds.buckets.at(2)), oracle_sender, oracle_receiver, opts, &records);
  std::ostringstream log;
  write_episode_log(log, records);
  std::istringstream in(log.str());
  const auto s = message_length_stats(in);
  CHECK(s.total == 40);
  CHECK(s.modal_length() == 2);
}

}  // namespace
}  // namespace minsym
