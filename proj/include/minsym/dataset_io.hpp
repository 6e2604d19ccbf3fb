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

#ifndef MINSYM_DATASET_IO_HPP_
#define MINSYM_DATASET_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "minsym/attributes.hpp"
#include "minsym/sampler.hpp"

namespace minsym {

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kOneHotFormatVersion = 1;
inline constexpr double kDefaultTrainFraction = 0.8;

inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kRecordsFile = "records.jsonl";
inline constexpr std::string_view kOneHotHeaderFile = "onehot.json";
inline constexpr std::string_view kOneHotTrainFile = "train.bin";
inline constexpr std::string_view kOneHotEvalFile = "eval.bin";

struct SplitSizes {
  std::int64_t train = 0;
  std::int64_t eval = 0;

  bool operator==(const SplitSizes&) const = default;
};

struct DatasetManifest {
  int format_version = kDatasetFormatVersion;
  int num_attributes = 0;
  int num_values = 0;
  int num_distractors = 0;
  std::uint64_t seed = 0;
  int per_bucket_target = 0;
  std::vector<int> tracked_buckets;
  std::int64_t max_attempts = 0;
  std::int64_t attempts = 0;
  bool complete = false;
  std::int64_t record_count = 0;
  std::map<int, std::int64_t> bucket_counts;
  double train_fraction = kDefaultTrainFraction;
  std::map<int, SplitSizes> split;
  MinMHistogram histogram;

  bool operator==(const DatasetManifest&) const = default;
};

// Rounded train share of a bucket of `count` instances.
std::int64_t train_count(std::int64_t count, double train_fraction);

DatasetManifest make_manifest(const LabeledDataset& dataset,
                              double train_fraction = kDefaultTrainFraction);

struct WriteOptions {
  bool overwrite = false;
  double train_fraction = kDefaultTrainFraction;
};

// Writes <dir>/records.jsonl (one instance per line, buckets ascending, draw
// order within a bucket) and <dir>/manifest.json. Output bytes depend only
// on the dataset.
DatasetManifest write_dataset(const LabeledDataset& dataset,
                              const std::filesystem::path& dir,
                              const WriteOptions& options = {});

struct ReadOptions {
  // Re-solve every record with the enumeration solver and require the
  // result to equal the stored min_m.
  bool verify = false;
};

LabeledDataset read_dataset(const std::filesystem::path& dir,
                            const ReadOptions& options = {});
DatasetManifest read_manifest(const std::filesystem::path& dir);

// Standalone instance document used by `solve`:
// {"num_attributes", "num_values", "target_index", "objects": [[...], ...]}.
GameInstance parse_instance_json(std::string_view text);
std::string instance_to_json(const GameInstance& instance);

struct DatasetSplit {
  // Pointers into the dataset, in (bucket, shuffled) order.
  std::vector<const LabeledInstance*> train;
  std::vector<const LabeledInstance*> eval;
};

// Per bucket: seeded Fisher-Yates shuffle, first train_count() go to train.
DatasetSplit split_dataset(const LabeledDataset& dataset,
                           std::uint64_t split_seed,
                           double train_fraction = kDefaultTrainFraction);

struct OneHotHeader {
  int format_version = kOneHotFormatVersion;
  int num_attributes = 0;
  int num_values = 0;
  int row_width = 0;
  int candidates_per_instance = 0;
  std::uint64_t split_seed = 0;
  double train_fraction = kDefaultTrainFraction;
  std::int64_t train_instances = 0;
  std::int64_t eval_instances = 0;

  std::size_t RecordBytes() const;
  bool operator==(const OneHotHeader&) const = default;
};

struct OneHotExport {
  OneHotHeader header;
  std::vector<LabeledInstance> train;
  std::vector<LabeledInstance> eval;
};

// Writes onehot.json plus train.bin / eval.bin. Each binary record is
//   int64 id | int32 min_m | int32 target_index | candidates x row_width u8
// little-endian, rows in candidate order.
OneHotHeader export_one_hot(const LabeledDataset& dataset,
                            const std::filesystem::path& dir,
                            std::uint64_t split_seed,
                            double train_fraction = kDefaultTrainFraction,
                            bool overwrite = false);

OneHotExport read_one_hot(const std::filesystem::path& dir);

}  // namespace minsym

#endif  // MINSYM_DATASET_IO_HPP_
