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

#include "minsym/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "minsym/errors.hpp"
#include "minsym/random.hpp"
#include "minsym/sms.hpp"

namespace minsym {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json histogram_to_json(const MinMHistogram& h) {
  json counts = json::object();
  for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = c;
  return {{"counts", counts}, {"unsolvable", h.unsolvable}};
}

int parse_key(const std::string& key) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) {
    throw FormatError("expected an integer key, got \"" + key + "\"");
  }
  return value;
}

void check_writable(const fs::path& file, bool overwrite) {
  if (!overwrite && fs::exists(file)) {
    throw IoError(file.string() + " already exists (pass overwrite to replace)",
                  ErrorKind::kAlreadyExists);
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + file.string() + " for writing");
  return out;
}

std::ifstream open_in(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  return in;
}

json read_json_file(const fs::path& file) {
  auto in = open_in(file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(file.string() + ": " + e.what());
  }
}

void finish(std::ofstream& out, const fs::path& file) {
  out.flush();
  if (!out) throw IoError("write to " + file.string() + " failed");
}

json objects_to_json(const GameInstance& instance) {
  json objects = json::array();
  for (int i = 0; i < instance.num_objects(); ++i) {
    json row = json::array();
    for (Value v : instance.object(i)) row.push_back(static_cast<int>(v));
    objects.push_back(std::move(row));
  }
  return objects;
}

GameInstance objects_from_json(const AttributeSpace& space, const json& objects,
                               int target_index,
                               std::optional<int> expected_objects) {
  if (!objects.is_array()) throw FormatError("\"objects\" must be an array");
  if (expected_objects && static_cast<int>(objects.size()) != *expected_objects) {
    throw FormatError("expected " + std::to_string(*expected_objects) +
                      " objects, found " + std::to_string(objects.size()));
  }
  std::vector<Value> flat;
  flat.reserve(objects.size() * static_cast<std::size_t>(space.num_attributes()));
  for (const auto& row : objects) {
    if (!row.is_array() ||
        static_cast<int>(row.size()) != space.num_attributes()) {
      throw FormatError("every object needs exactly " +
                        std::to_string(space.num_attributes()) + " values");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw FormatError("values must be integers");
      const auto value = v.get<std::int64_t>();
      if (value < 0 || value >= space.num_values()) {
        throw FormatError("value " + std::to_string(value) + " outside [0, " +
                          std::to_string(space.num_values()) + ")");
      }
      flat.push_back(static_cast<Value>(value));
    }
  }
  try {
    return GameInstance(space, std::move(flat), target_index);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

template <typename T>
T field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field \"") + name + "\" has the wrong type");
  }
}

void put_le(std::string& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

std::uint64_t get_le(const unsigned char* in, int bytes) {
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) {
    value |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  }
  return value;
}

void write_one_hot_file(const fs::path& file, const AttributeSpace& space,
                        const std::vector<const LabeledInstance*>& records) {
  auto out = open_out(file);
  const auto width = static_cast<std::size_t>(space.vocabulary_size());
  std::string buffer;
  std::vector<std::uint8_t> row(width);
  for (const auto* rec : records) {
    buffer.clear();
    put_le(buffer, static_cast<std::uint64_t>(rec->id), 8);
    put_le(buffer, static_cast<std::uint32_t>(rec->min_m), 4);
    put_le(buffer, static_cast<std::uint32_t>(rec->instance.target_index()), 4);
    for (int i = 0; i < rec->instance.num_objects(); ++i) {
      one_hot_into(space, rec->instance.object(i), row);
      buffer.append(row.begin(), row.end());
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  }
  finish(out, file);
}

std::vector<LabeledInstance> read_one_hot_file(const fs::path& file,
                                               const OneHotHeader& header,
                                               std::int64_t expected) {
  auto in = open_in(file);
  const AttributeSpace space(header.num_attributes, header.num_values);
  const std::size_t record_bytes = header.RecordBytes();
  const auto width = static_cast<std::size_t>(header.row_width);
  std::vector<unsigned char> record(record_bytes);
  std::vector<LabeledInstance> out;
  out.reserve(static_cast<std::size_t>(expected));
  while (in.read(reinterpret_cast<char*>(record.data()),
                 static_cast<std::streamsize>(record_bytes))) {
    const auto id = static_cast<std::int64_t>(get_le(record.data(), 8));
    const auto min_m = static_cast<std::int32_t>(get_le(record.data() + 8, 4));
    const auto target = static_cast<std::int32_t>(get_le(record.data() + 12, 4));
    std::vector<Value> flat;
    flat.reserve(static_cast<std::size_t>(header.candidates_per_instance) *
                 static_cast<std::size_t>(header.num_attributes));
    for (int c = 0; c < header.candidates_per_instance; ++c) {
      const std::span<const std::uint8_t> row(
          record.data() + 16 + static_cast<std::size_t>(c) * width, width);
      try {
        const auto object = from_one_hot(space, row);
        flat.insert(flat.end(), object.values().begin(), object.values().end());
      } catch (const DomainError& e) {
        throw FormatError(file.string() + ": record " +
                          std::to_string(out.size()) + ": " + e.what());
      }
    }
    out.push_back({id, min_m, GameInstance(space, std::move(flat), target)});
  }
  if (in.gcount() != 0) {
    throw FormatError(file.string() + ": trailing partial record");
  }
  if (static_cast<std::int64_t>(out.size()) != expected) {
    throw FormatError(file.string() + ": header says " + std::to_string(expected) +
                          " instances, file has " + std::to_string(out.size()),
                      ErrorKind::kCountMismatch);
  }
  return out;
}

}  // namespace

std::int64_t train_count(std::int64_t count, double train_fraction) {
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0)) {
    throw InvalidArgument("train fraction must be in [0, 1]");
  }
  return std::clamp<std::int64_t>(
      std::llround(static_cast<double>(count) * train_fraction), 0, count);
}

DatasetManifest make_manifest(const LabeledDataset& dataset,
                              double train_fraction) {
  DatasetManifest m;
  m.num_attributes = dataset.space.num_attributes();
  m.num_values = dataset.space.num_values();
  m.num_distractors = dataset.num_distractors;
  m.seed = dataset.seed;
  m.per_bucket_target = dataset.per_bucket_target;
  m.tracked_buckets = dataset.tracked_buckets;
  m.max_attempts = dataset.max_attempts;
  m.attempts = dataset.attempts;
  m.complete = dataset.complete;
  m.train_fraction = train_fraction;
  m.histogram = dataset.histogram;
  for (const auto& [k, bucket] : dataset.buckets) {
    const auto n = static_cast<std::int64_t>(bucket.size());
    m.bucket_counts[k] = n;
    m.record_count += n;
    const auto train = train_count(n, train_fraction);
    m.split[k] = {train, n - train};
  }
  return m;
}

DatasetManifest write_dataset(const LabeledDataset& dataset, const fs::path& dir,
                              const WriteOptions& options) {
  const auto manifest = make_manifest(dataset, options.train_fraction);
  ensure_dir(dir);
  const fs::path records_path = dir / kRecordsFile;
  const fs::path manifest_path = dir / kManifestFile;
  check_writable(records_path, options.overwrite);
  check_writable(manifest_path, options.overwrite);

  auto records = open_out(records_path);
  for (const auto* rec : dataset.all()) {
    const json line = {{"id", rec->id},
                       {"min_m", rec->min_m},
                       {"target_index", rec->instance.target_index()},
                       {"objects", objects_to_json(rec->instance)}};
    records << line.dump() << '\n';
  }
  finish(records, records_path);

  json counts = json::object();
  json split = json::object();
  for (const auto& [k, n] : manifest.bucket_counts) {
    counts[std::to_string(k)] = n;
    const auto& s = manifest.split.at(k);
    split[std::to_string(k)] = {{"train", s.train}, {"eval", s.eval}};
  }
  const json doc = {
      {"format_version", manifest.format_version},
      {"num_attributes", manifest.num_attributes},
      {"num_values", manifest.num_values},
      {"num_distractors", manifest.num_distractors},
      {"seed", manifest.seed},
      {"per_bucket_target", manifest.per_bucket_target},
      {"tracked_buckets", manifest.tracked_buckets},
      {"max_attempts", manifest.max_attempts},
      {"attempts", manifest.attempts},
      {"complete", manifest.complete},
      {"records_file", std::string(kRecordsFile)},
      {"record_count", manifest.record_count},
      {"bucket_counts", counts},
      {"split", {{"train_fraction", manifest.train_fraction}, {"buckets", split}}},
      {"histogram", histogram_to_json(manifest.histogram)},
  };
  auto out = open_out(manifest_path);
  out << doc.dump(2) << '\n';
  finish(out, manifest_path);
  return manifest;
}

DatasetManifest read_manifest(const fs::path& dir) {
  const json doc = read_json_file(dir / kManifestFile);
  DatasetManifest m;
  m.format_version = field<int>(doc, "format_version");
  if (m.format_version != kDatasetFormatVersion) {
    throw FormatError("unsupported dataset format version " +
                          std::to_string(m.format_version) + " (supported: " +
                          std::to_string(kDatasetFormatVersion) + ")",
                      ErrorKind::kUnsupportedVersion);
  }
  m.num_attributes = field<int>(doc, "num_attributes");
  m.num_values = field<int>(doc, "num_values");
  m.num_distractors = field<int>(doc, "num_distractors");
  m.seed = field<std::uint64_t>(doc, "seed");
  m.per_bucket_target = field<int>(doc, "per_bucket_target");
  m.tracked_buckets = field<std::vector<int>>(doc, "tracked_buckets");
  m.max_attempts = field<std::int64_t>(doc, "max_attempts");
  m.attempts = field<std::int64_t>(doc, "attempts");
  m.complete = field<bool>(doc, "complete");
  m.record_count = field<std::int64_t>(doc, "record_count");
  const auto bucket_counts = field<json>(doc, "bucket_counts");
  for (const auto& [k, v] : bucket_counts.items()) {
    m.bucket_counts[parse_key(k)] = v.get<std::int64_t>();
  }
  const auto split = field<json>(doc, "split");
  m.train_fraction = field<double>(split, "train_fraction");
  const auto split_buckets = field<json>(split, "buckets");
  for (const auto& [k, v] : split_buckets.items()) {
    m.split[parse_key(k)] = {field<std::int64_t>(v, "train"),
                             field<std::int64_t>(v, "eval")};
  }
  const auto hist = field<json>(doc, "histogram");
  const auto hist_counts = field<json>(hist, "counts");
  for (const auto& [k, v] : hist_counts.items()) {
    m.histogram.counts[parse_key(k)] = v.get<std::int64_t>();
  }
  m.histogram.unsolvable = field<std::int64_t>(hist, "unsolvable");
  for (const auto& [k, s] : m.split) {
    const auto it = m.bucket_counts.find(k);
    if (it == m.bucket_counts.end() || s.train + s.eval != it->second) {
      throw FormatError("manifest split for bucket " + std::to_string(k) +
                        " does not sum to its bucket count");
    }
  }
  return m;
}

LabeledDataset read_dataset(const fs::path& dir, const ReadOptions& options) {
  const auto manifest = read_manifest(dir);
  LabeledDataset dataset;
  try {
    dataset.space = AttributeSpace(manifest.num_attributes, manifest.num_values);
  } catch (const DomainError& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  dataset.num_distractors = manifest.num_distractors;
  dataset.per_bucket_target = manifest.per_bucket_target;
  dataset.tracked_buckets = manifest.tracked_buckets;
  dataset.seed = manifest.seed;
  dataset.max_attempts = manifest.max_attempts;
  dataset.attempts = manifest.attempts;
  dataset.complete = manifest.complete;
  dataset.histogram = manifest.histogram;
  for (const auto& [k, n] : manifest.bucket_counts) dataset.buckets[k];

  const fs::path records_path = dir / kRecordsFile;
  auto in = open_in(records_path);
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where =
        records_path.string() + ":" + std::to_string(line_no) + ": ";
    if (line.empty()) throw FormatError(where + "empty line");
    try {
      const json rec = json::parse(line);
      const auto min_m = field<int>(rec, "min_m");
      const auto it = dataset.buckets.find(min_m);
      if (it == dataset.buckets.end()) {
        throw FormatError("min_m " + std::to_string(min_m) +
                          " is not a bucket in the manifest");
      }
      auto instance = objects_from_json(dataset.space, field<json>(rec, "objects"),
                                        field<int>(rec, "target_index"),
                                        manifest.num_distractors + 1);
      const auto id = field<std::int64_t>(rec, "id");
      if (options.verify) {
        const auto solved = solve_min_sym_enum(instance);
        if (!solved.min_symbols || *solved.min_symbols != min_m) {
          throw FormatError(
              "bucket purity violation: record id " + std::to_string(id) +
                  " stored with min_m " + std::to_string(min_m) + ", re-solved " +
                  (solved.min_symbols ? std::to_string(*solved.min_symbols)
                                      : std::string("unsolvable")),
              ErrorKind::kPurityViolation);
        }
      }
      it->second.push_back({id, min_m, std::move(instance)});
    } catch (const json::exception& e) {
      throw FormatError(where + "malformed record: " + e.what());
    } catch (const FormatError& e) {
      throw FormatError(where + e.what(), e.kind());
    }
  }

  std::int64_t total = 0;
  for (const auto& [k, expected] : manifest.bucket_counts) {
    const auto actual = static_cast<std::int64_t>(dataset.buckets.at(k).size());
    total += actual;
    if (actual != expected) {
      throw FormatError("record count mismatch for bucket " + std::to_string(k) +
                            ": manifest expects " + std::to_string(expected) +
                            ", " + records_path.string() + " has " +
                            std::to_string(actual),
                        ErrorKind::kCountMismatch);
    }
  }
  if (total != manifest.record_count) {
    throw FormatError("record count mismatch: manifest expects " +
                          std::to_string(manifest.record_count) + ", found " +
                          std::to_string(total),
                      ErrorKind::kCountMismatch);
  }
  return dataset;
}

GameInstance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
  AttributeSpace space(1, 1);
  try {
    space = AttributeSpace(field<int>(doc, "num_attributes"),
                           field<int>(doc, "num_values"));
  } catch (const DomainError& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
  return objects_from_json(space, field<json>(doc, "objects"),
                           field<int>(doc, "target_index"), std::nullopt);
}

std::string instance_to_json(const GameInstance& instance) {
  const json doc = {{"num_attributes", instance.space().num_attributes()},
                    {"num_values", instance.space().num_values()},
                    {"target_index", instance.target_index()},
                    {"objects", objects_to_json(instance)}};
  return doc.dump();
}

DatasetSplit split_dataset(const LabeledDataset& dataset, std::uint64_t split_seed,
                           double train_fraction) {
  DatasetSplit split;
  for (const auto& [k, bucket] : dataset.buckets) {
    std::vector<std::size_t> order(bucket.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng = Rng::ForStream(split_seed, static_cast<std::uint64_t>(k));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.Below(i)]);
    }
    const auto train = static_cast<std::size_t>(
        train_count(static_cast<std::int64_t>(bucket.size()), train_fraction));
    for (std::size_t i = 0; i < order.size(); ++i) {
      (i < train ? split.train : split.eval).push_back(&bucket[order[i]]);
    }
  }
  return split;
}

std::size_t OneHotHeader::RecordBytes() const {
  return 16 + static_cast<std::size_t>(candidates_per_instance) *
                  static_cast<std::size_t>(row_width);
}

OneHotHeader export_one_hot(const LabeledDataset& dataset, const fs::path& dir,
                            std::uint64_t split_seed, double train_fraction,
                            bool overwrite) {
  const auto split = split_dataset(dataset, split_seed, train_fraction);
  OneHotHeader header;
  header.num_attributes = dataset.space.num_attributes();
  header.num_values = dataset.space.num_values();
  header.row_width = dataset.space.vocabulary_size();
  header.candidates_per_instance = dataset.num_distractors + 1;
  header.split_seed = split_seed;
  header.train_fraction = train_fraction;
  header.train_instances = static_cast<std::int64_t>(split.train.size());
  header.eval_instances = static_cast<std::int64_t>(split.eval.size());

  ensure_dir(dir);
  for (auto name : {kOneHotHeaderFile, kOneHotTrainFile, kOneHotEvalFile}) {
    check_writable(dir / name, overwrite);
  }
  write_one_hot_file(dir / kOneHotTrainFile, dataset.space, split.train);
  write_one_hot_file(dir / kOneHotEvalFile, dataset.space, split.eval);

  const json doc = {
      {"format_version", header.format_version},
      {"num_attributes", header.num_attributes},
      {"num_values", header.num_values},
      {"row_width", header.row_width},
      {"candidates_per_instance", header.candidates_per_instance},
      {"split_seed", header.split_seed},
      {"train_fraction", header.train_fraction},
      {"record_bytes", header.RecordBytes()},
      {"record_layout",
       "int64le id, int32le min_m, int32le target_index, "
       "candidates_per_instance x row_width uint8 one-hot rows"},
      {"train", {{"file", std::string(kOneHotTrainFile)},
                 {"instances", header.train_instances}}},
      {"eval", {{"file", std::string(kOneHotEvalFile)},
                {"instances", header.eval_instances}}},
  };
  auto out = open_out(dir / kOneHotHeaderFile);
  out << doc.dump(2) << '\n';
  finish(out, dir / kOneHotHeaderFile);
  return header;
}

OneHotExport read_one_hot(const fs::path& dir) {
  const json doc = read_json_file(dir / kOneHotHeaderFile);
  OneHotExport result;
  auto& h = result.header;
  h.format_version = field<int>(doc, "format_version");
  if (h.format_version != kOneHotFormatVersion) {
    throw FormatError("unsupported one-hot format version " +
                          std::to_string(h.format_version),
                      ErrorKind::kUnsupportedVersion);
  }
  h.num_attributes = field<int>(doc, "num_attributes");
  h.num_values = field<int>(doc, "num_values");
  h.row_width = field<int>(doc, "row_width");
  h.candidates_per_instance = field<int>(doc, "candidates_per_instance");
  h.split_seed = field<std::uint64_t>(doc, "split_seed");
  h.train_fraction = field<double>(doc, "train_fraction");
  h.train_instances = field<std::int64_t>(field<json>(doc, "train"), "instances");
  h.eval_instances = field<std::int64_t>(field<json>(doc, "eval"), "instances");
  if (h.row_width != h.num_attributes * h.num_values) {
    throw FormatError("row_width must equal num_attributes * num_values");
  }
  result.train = read_one_hot_file(dir / kOneHotTrainFile, h, h.train_instances);
  result.eval = read_one_hot_file(dir / kOneHotEvalFile, h, h.eval_instances);
  return result;
}

}  // namespace minsym
