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


#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "minsym/dataset_io.hpp"
#include "minsym/errors.hpp"
#include "minsym/sampler.hpp"

namespace fs = std::filesystem;

namespace minsym {
namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("minsym_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

LabeledDataset SmallDataset(int per_bucket, std::uint64_t seed = 3) {
  SamplerConfig cfg;
  cfg.space = AttributeSpace(4, 3);
  cfg.num_distractors = 5;
  cfg.per_bucket_target = per_bucket;
  cfg.tracked_buckets = {1, 2};
  cfg.seed = seed;
  return controlled_sample(cfg);
}

TEST_CASE("dataset round-trip") {
  TempDir tmp;
  const auto ds = SmallDataset(10);
  const auto manifest = write_dataset(ds, tmp.path());
  CHECK(manifest.record_count == 20);
  CHECK(manifest.bucket_counts == std::map<int, std::int64_t>{{1, 10}, {2, 10}});
  CHECK(manifest.split.at(1) == SplitSizes{8, 2});
  const auto text = Slurp(tmp.path() / "records.jsonl");
  CHECK(std::count(text.begin(), text.end(), '\n') == 20);
  CHECK(read_dataset(tmp.path()) == ds);
  CHECK(read_dataset(tmp.path(), {.verify = true}) == ds);
  CHECK(read_manifest(tmp.path()) == manifest);
}

TEST_CASE("writes are byte-stable and refuse to overwrite") {
  TempDir a, b;
  const auto ds = SmallDataset(6);
  write_dataset(ds, a.path());
  write_dataset(SmallDataset(6), b.path());
  CHECK(Slurp(a.path() / "records.jsonl") == Slurp(b.path() / "records.jsonl"));
  CHECK(Slurp(a.path() / "manifest.json") == Slurp(b.path() / "manifest.json"));
  try {
    write_dataset(ds, a.path());
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAlreadyExists);
  }
  CHECK_NOTHROW(write_dataset(ds, a.path(), {.overwrite = true}));
}

TEST_CASE("record layout") {
  TempDir tmp;
  LabeledDataset ds;
  ds.space = AttributeSpace(2, 3);
  ds.num_distractors = 2;
  ds.per_bucket_target = 1;
  ds.tracked_buckets = {2};
  ds.complete = true;
  ds.attempts = 1;
  ds.histogram.counts[2] = 1;
  ds.buckets[2].push_back(
      {0, 2, GameInstance(ds.space, std::vector<Value>{0, 0, 0, 1, 1, 0}, 0)});
  write_dataset(ds, tmp.path());
  CHECK(Slurp(tmp.path() / "records.jsonl") ==
        "{\"id\":0,\"min_m\":2,\"objects\":[[0,0],[0,1],[1,0]],\"target_index\":0}\n");
}

TEST_CASE("an empty tracked bucket writes zero records") {
  TempDir tmp;
  LabeledDataset ds;
  ds.space = AttributeSpace(3, 2);
  ds.num_distractors = 4;
  ds.tracked_buckets = {3};
  ds.buckets[3];
  const auto manifest = write_dataset(ds, tmp.path());
  CHECK(manifest.bucket_counts.at(3) == 0);
  CHECK(Slurp(tmp.path() / "records.jsonl").empty());
  CHECK(read_dataset(tmp.path()) == ds);
}

TEST_CASE("truncated records are a count mismatch") {
  TempDir tmp;
  write_dataset(SmallDataset(5), tmp.path());
  auto text = Slurp(tmp.path() / "records.jsonl");
  text.erase(text.rfind('\n', text.size() - 2) + 1);  // drop the last line
  Spit(tmp.path() / "records.jsonl", text);
  try {
    read_dataset(tmp.path());
    FAIL("expected a count mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCountMismatch);
    const std::string what = e.what();
    CHECK(what.find("expects 5") != std::string::npos);
    CHECK(what.find("has 4") != std::string::npos);
  }
}

TEST_CASE("a swapped min_m label fails verification") {
  TempDir tmp;
  write_dataset(SmallDataset(5), tmp.path());
  auto text = Slurp(tmp.path() / "records.jsonl");
  // Relabel the first bucket-1 record as bucket 2 and the first bucket-2
  // record as bucket 1, keeping the per-bucket counts intact.
  const auto one = text.find("\"min_m\":1");
  const auto two = text.find("\"min_m\":2");
  REQUIRE(one != std::string::npos);
  REQUIRE(two != std::string::npos);
  text[one + 8] = '2';
  text[two + 8] = '1';
  Spit(tmp.path() / "records.jsonl", text);
  CHECK_NOTHROW(read_dataset(tmp.path()));
  try {
    read_dataset(tmp.path(), {.verify = true});
    FAIL("expected a purity violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPurityViolation);
  }
}

TEST_CASE("malformed input names the line") {
  TempDir tmp;
  write_dataset(SmallDataset(3), tmp.path());
  auto text = Slurp(tmp.path() / "records.jsonl");
  const auto second = text.find('\n') + 1;
  text.insert(second, "{oops\n");
  Spit(tmp.path() / "records.jsonl", text);
  try {
    read_dataset(tmp.path());
    FAIL("expected a format error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    CHECK(std::string(e.what()).find("records.jsonl:2:") != std::string::npos);
  }
}

TEST_CASE("unsupported manifest version") {
  TempDir tmp;
  write_dataset(SmallDataset(2), tmp.path());
  auto text = Slurp(tmp.path() / "manifest.json");
  const auto at = text.find("\"format_version\": 1");
  REQUIRE(at != std::string::npos);
  text.replace(at, 19, "\"format_version\": 9");
  Spit(tmp.path() / "manifest.json", text);
  try {
    read_dataset(tmp.path());
    FAIL("expected a version error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupportedVersion);
  }
}

TEST_CASE("missing directory is an I/O error") {
  try {
    read_dataset("/nonexistent/minsym/dataset");
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("instance JSON") {
  const auto g = parse_instance_json(
      R"({"num_attributes":2,"num_values":3,"target_index":0,"objects":[[0,0],[0,1],[1,0]]})");
  CHECK(g.num_objects() == 3);
  CHECK(parse_instance_json(instance_to_json(g)) == g);
  CHECK_THROWS_AS(parse_instance_json(R"({"num_attributes":2})"), FormatError);
  CHECK_THROWS_AS(
      parse_instance_json(
          R"({"num_attributes":2,"num_values":3,"target_index":0,"objects":[[0,3],[0,1]]})"),
      FormatError);
  CHECK_THROWS_AS(parse_instance_json("not json"), FormatError);
}

TEST_CASE("split is deterministic, disjoint and exhaustive") {
  SamplerConfig cfg;
  cfg.space = AttributeSpace(2, 4);
  cfg.num_distractors = 1;
  cfg.per_bucket_target = 10000;
  cfg.tracked_buckets = {1};
  const auto ds = controlled_sample(cfg);
  const auto s1 = split_dataset(ds, 5);
  const auto s2 = split_dataset(ds, 5);
  const auto s3 = split_dataset(ds, 6);
  CHECK(s1.train.size() == 8000);
  CHECK(s1.eval.size() == 2000);
  CHECK(s1.train == s2.train);
  CHECK(s1.eval == s2.eval);
  CHECK(s1.train != s3.train);
  std::set<std::int64_t> ids;
  for (auto* p : s1.train) ids.insert(p->id);
  for (auto* p : s1.eval) ids.insert(p->id);
  CHECK(ids.size() == 10000);
  CHECK(train_count(10, 0.8) == 8);
  CHECK(train_count(7, 0.5) == 4);
  CHECK(train_count(0, 0.8) == 0);
}

TEST_CASE("one-hot export round-trip") {
  TempDir tmp;
  const auto ds = SmallDataset(10);
  const auto header = export_one_hot(ds, tmp.path(), 11);
  CHECK(header.row_width == 12);
  CHECK(header.candidates_per_instance == 6);
  CHECK(header.RecordBytes() == 8 + 4 + 4 + 6 * 12);
  CHECK(header.train_instances == 16);
  CHECK(header.eval_instances == 4);
  CHECK(fs::file_size(tmp.path() / "train.bin") == 16 * header.RecordBytes());

  const auto back = read_one_hot(tmp.path());
  CHECK(back.header == header);
  const auto split = split_dataset(ds, 11);
  REQUIRE(back.train.size() == split.train.size());
  for (std::size_t i = 0; i < split.train.size(); ++i) CHECK(back.train[i] == *split.train[i]);
  REQUIRE(back.eval.size() == split.eval.size());
  for (std::size_t i = 0; i < split.eval.size(); ++i) CHECK(back.eval[i] == *split.eval[i]);

  // Every candidate row has exactly |A| ones, one per block.
  const auto bytes = Slurp(tmp.path() / "train.bin");
  for (std::size_t r = 0; r < 16; ++r) {
    const std::size_t base = r * header.RecordBytes() + 16;
    for (int c = 0; c < 6; ++c) {
      int ones = 0;
      for (int b = 0; b < 12; ++b) {
        ones += static_cast<unsigned char>(bytes[base + static_cast<std::size_t>(c * 12 + b)]);
      }
      CHECK(ones == 4);
    }
  }
  CHECK_THROWS(export_one_hot(ds, tmp.path(), 11));
  CHECK_NOTHROW(export_one_hot(ds, tmp.path(), 11, kDefaultTrainFraction, true));
}

TEST_CASE("one-hot record header fields are little-endian") {
  TempDir tmp;
  LabeledDataset ds;
  ds.space = AttributeSpace(2, 2);
  ds.num_distractors = 1;
  ds.tracked_buckets = {1};
  ds.buckets[1].push_back(
      {258, 1, GameInstance(ds.space, std::vector<Value>{1, 0, 0, 0}, 0)});
  export_one_hot(ds, tmp.path(), 0, 1.0);
  const auto bytes = Slurp(tmp.path() / "train.bin");
  const std::string expected{
      "\x02\x01\x00\x00\x00\x00\x00\x00"  // id 258
      "\x01\x00\x00\x00"                  // min_m 1
      "\x00\x00\x00\x00"                  // target_index 0
      "\x00\x01\x01\x00"                  // object (1, 0)
      "\x01\x00\x01\x00",                 // object (0, 0)
      24};
  CHECK(bytes == expected);
  CHECK(fs::file_size(tmp.path() / "eval.bin") == 0);
}

}  // namespace
}  // namespace minsym
