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

#include "minsym/minsym.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "minsym/analysis.hpp"
#include "minsym/attributes.hpp"
#include "minsym/dataset_io.hpp"
#include "minsym/errors.hpp"
#include "minsym/game.hpp"
#include "minsym/probability.hpp"
#include "minsym/sampler.hpp"
#include "minsym/sms.hpp"

struct minsym_instance {
  minsym::GameInstance value;
};

struct minsym_dataset {
  minsym::LabeledDataset value;
};

struct minsym_curve {
  minsym::AccuracyCurve value;
};

struct minsym_message_stats {
  minsym::MessageStats value;
  std::vector<std::pair<int, std::int64_t>> lengths;
  std::vector<std::pair<int, std::int64_t>> symbols;
};

namespace {

thread_local std::string last_error;

minsym_status to_status(minsym::ErrorKind kind) {
  using minsym::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return MINSYM_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDomain: return MINSYM_ERR_DOMAIN;
    case ErrorKind::kIo: return MINSYM_ERR_IO;
    case ErrorKind::kAlreadyExists: return MINSYM_ERR_ALREADY_EXISTS;
    case ErrorKind::kFormat: return MINSYM_ERR_FORMAT;
    case ErrorKind::kCountMismatch: return MINSYM_ERR_COUNT_MISMATCH;
    case ErrorKind::kUnsupportedVersion: return MINSYM_ERR_UNSUPPORTED_VERSION;
    case ErrorKind::kPurityViolation: return MINSYM_ERR_PURITY_VIOLATION;
    case ErrorKind::kPartialResult: return MINSYM_ERR_PARTIAL_RESULT;
  }
  return MINSYM_ERR_INTERNAL;
}

minsym_status fail(minsym_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
minsym_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const minsym::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MINSYM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MINSYM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MINSYM_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw minsym::InvalidArgument(what);
}

minsym_status fill_histogram(const minsym::MinMHistogram& h, int num_attributes,
                             int64_t* counts, size_t counts_len) {
  require(counts != nullptr, "counts must not be null");
  if (counts_len < static_cast<size_t>(num_attributes) + 1) {
    return fail(MINSYM_ERR_BUFFER_TOO_SMALL,
                "counts buffer needs num_attributes + 1 slots");
  }
  std::fill(counts, counts + counts_len, 0);
  counts[0] = h.unsolvable;
  for (const auto& [k, c] : h.counts) counts[k] = c;
  return MINSYM_OK;
}

minsym::LabeledDataset bucketed(const minsym::OneHotHeader& header,
                                std::vector<minsym::LabeledInstance> records) {
  minsym::LabeledDataset ds;
  ds.space = minsym::AttributeSpace(header.num_attributes, header.num_values);
  ds.num_distractors = header.candidates_per_instance - 1;
  ds.complete = true;
  for (auto& rec : records) {
    const int key = rec.min_m;
    ds.buckets[key].push_back(std::move(rec));
  }
  return ds;
}

}  // namespace

extern "C" {

const char* minsym_version(void) { return "0.1.0"; }

const char* minsym_last_error(void) { return last_error.c_str(); }

const char* minsym_status_name(minsym_status status) {
  switch (status) {
    case MINSYM_OK: return "ok";
    case MINSYM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MINSYM_ERR_DOMAIN: return "domain error";
    case MINSYM_ERR_IO: return "I/O error";
    case MINSYM_ERR_ALREADY_EXISTS: return "already exists";
    case MINSYM_ERR_FORMAT: return "format error";
    case MINSYM_ERR_COUNT_MISMATCH: return "count mismatch";
    case MINSYM_ERR_UNSUPPORTED_VERSION: return "unsupported version";
    case MINSYM_ERR_PURITY_VIOLATION: return "bucket purity violation";
    case MINSYM_ERR_PARTIAL_RESULT: return "partial result";
    case MINSYM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MINSYM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

minsym_status minsym_encode_pair(int32_t num_attributes, int32_t num_values,
                                 int32_t attribute, int32_t value,
                                 int32_t* code) {
  return guarded([&] {
    require(code != nullptr, "code must not be null");
    const minsym::AttributeSpace space(num_attributes, num_values);
    *code = minsym::encode_pair(space, attribute, value).code;
    return MINSYM_OK;
  });
}

minsym_status minsym_decode_symbol(int32_t num_attributes, int32_t num_values,
                                   int32_t code, int32_t* attribute,
                                   int32_t* value) {
  return guarded([&] {
    require(attribute != nullptr && value != nullptr, "outputs must not be null");
    const minsym::AttributeSpace space(num_attributes, num_values);
    const auto pair = minsym::decode_symbol(space, minsym::Symbol{code});
    *attribute = pair.attribute;
    *value = pair.value;
    return MINSYM_OK;
  });
}

minsym_status minsym_instance_create(int32_t num_attributes, int32_t num_values,
                                     const int32_t* values, size_t num_objects,
                                     int32_t target_index,
                                     minsym_instance** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(values != nullptr || num_objects == 0, "values must not be null");
    const minsym::AttributeSpace space(num_attributes, num_values);
    const size_t total = num_objects * static_cast<size_t>(num_attributes);
    std::vector<minsym::Value> flat;
    flat.reserve(total);
    for (size_t i = 0; i < total; ++i) {
      if (values[i] < 0 || values[i] >= num_values) {
        throw minsym::DomainError("value " + std::to_string(values[i]) +
                                  " out of range");
      }
      flat.push_back(static_cast<minsym::Value>(values[i]));
    }
    *out = new minsym_instance{
        minsym::GameInstance(space, std::move(flat), target_index)};
    return MINSYM_OK;
  });
}

minsym_status minsym_instance_from_json(const char* json, minsym_instance** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "arguments must not be null");
    *out = new minsym_instance{minsym::parse_instance_json(json)};
    return MINSYM_OK;
  });
}

minsym_status minsym_instance_read_file(const char* path, minsym_instance** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be null");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw minsym::IoError(std::string("cannot open ") + path);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    *out = new minsym_instance{minsym::parse_instance_json(text)};
    return MINSYM_OK;
  });
}

void minsym_instance_destroy(minsym_instance* instance) { delete instance; }

int32_t minsym_instance_num_attributes(const minsym_instance* instance) {
  return instance ? instance->value.space().num_attributes() : 0;
}
int32_t minsym_instance_num_values(const minsym_instance* instance) {
  return instance ? instance->value.space().num_values() : 0;
}
int32_t minsym_instance_num_objects(const minsym_instance* instance) {
  return instance ? instance->value.num_objects() : 0;
}
int32_t minsym_instance_target_index(const minsym_instance* instance) {
  return instance ? instance->value.target_index() : -1;
}
int32_t minsym_instance_value(const minsym_instance* instance, int32_t object,
                              int32_t attribute) {
  if (!instance || object < 0 || object >= instance->value.num_objects() ||
      attribute < 0 || attribute >= instance->value.space().num_attributes()) {
    return -1;
  }
  return instance->value.object(object)[static_cast<size_t>(attribute)];
}
int minsym_instance_equal(const minsym_instance* a, const minsym_instance* b) {
  if (!a || !b) return a == b;
  return a->value == b->value ? 1 : 0;
}

minsym_status minsym_solve(const minsym_instance* instance, minsym_solver solver,
                           int32_t* min_symbols, int32_t* witness_attributes,
                           size_t capacity, size_t* witness_len) {
  return guarded([&] {
    require(instance != nullptr && min_symbols != nullptr,
            "instance and min_symbols must not be null");
    require(solver == MINSYM_SOLVER_ENUMERATION ||
                solver == MINSYM_SOLVER_HITTING_SET,
            "unknown solver");
    const auto result = minsym::solve_min_sym(
        instance->value, solver == MINSYM_SOLVER_ENUMERATION
                             ? minsym::SmsSolver::kEnumeration
                             : minsym::SmsSolver::kHittingSet);
    *min_symbols = result.min_symbols.value_or(0);
    const size_t size = result.witness ? result.witness->size() : 0;
    if (witness_len) *witness_len = size;
    if (size > 0 && witness_attributes != nullptr) {
      if (capacity < size) {
        return fail(MINSYM_ERR_BUFFER_TOO_SMALL,
                    "witness needs " + std::to_string(size) + " slots");
      }
      for (size_t i = 0; i < size; ++i) {
        witness_attributes[i] = result.witness->pairs()[i].attribute;
      }
    }
    return MINSYM_OK;
  });
}

minsym_status minsym_verify_witness(const minsym_instance* instance,
                                    const int32_t* attributes,
                                    const int32_t* values, size_t count,
                                    int* unique) {
  return guarded([&] {
    require(instance != nullptr && unique != nullptr,
            "instance and unique must not be null");
    require(count == 0 || (attributes != nullptr && values != nullptr),
            "attributes/values must not be null");
    std::vector<minsym::AttributeValue> pairs;
    for (size_t i = 0; i < count; ++i) pairs.push_back({attributes[i], values[i]});
    *unique = minsym::verify_witness(instance->value,
                                     minsym::SymbolSet(std::move(pairs)))
                  ? 1
                  : 0;
    return MINSYM_OK;
  });
}

minsym_status minsym_p_class_at_least(int64_t n, int64_t m, int64_t num_classes,
                                      double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = minsym::p_class_at_least({n, m, num_classes});
    return MINSYM_OK;
  });
}

minsym_status minsym_p_exists_class_at_least(int64_t n, int64_t m,
                                             int64_t num_classes, double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = minsym::p_exists_class_at_least({n, m, num_classes});
    return MINSYM_OK;
  });
}

minsym_status minsym_monte_carlo_exists(int64_t n, int64_t m,
                                        int64_t num_classes, int64_t trials,
                                        uint64_t seed, int32_t workers,
                                        minsym_mc_estimate* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(workers >= 1, "workers must be >= 1");
    const auto e =
        minsym::monte_carlo_exists({n, m, num_classes}, trials, seed, workers);
    *out = {e.probability, e.standard_error, e.trials, e.hits};
    return MINSYM_OK;
  });
}

minsym_status minsym_min_m_histogram(int32_t num_attributes, int32_t num_values,
                                     int32_t num_distractors, int64_t trials,
                                     uint64_t seed, int32_t workers,
                                     int64_t* counts, size_t counts_len) {
  return guarded([&] {
    require(workers >= 1, "workers must be >= 1");
    const minsym::AttributeSpace space(num_attributes, num_values);
    // Reject a short buffer before doing the sampling work.
    if (const auto s = fill_histogram({}, num_attributes, counts, counts_len);
        s != MINSYM_OK) {
      return s;
    }
    const auto h =
        minsym::min_m_histogram(space, num_distractors, trials, seed, workers);
    return fill_histogram(h, num_attributes, counts, counts_len);
  });
}

void minsym_sampler_config_init(minsym_sampler_config* config) {
  if (!config) return;
  *config = minsym_sampler_config{};
  config->num_attributes = 20;
  config->num_values = 4;
  config->num_distractors = 63;
  config->per_bucket_target = 10000;
  config->workers = 1;
}

minsym_status minsym_controlled_sample(const minsym_sampler_config* config,
                                       minsym_dataset** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "arguments must not be null");
    *out = nullptr;
    require(config->num_tracked_buckets == 0 || config->tracked_buckets != nullptr,
            "tracked_buckets must not be null");
    minsym::SamplerConfig c;
    c.space = minsym::AttributeSpace(config->num_attributes, config->num_values);
    c.num_distractors = config->num_distractors;
    c.per_bucket_target = config->per_bucket_target;
    c.tracked_buckets.assign(config->tracked_buckets,
                             config->tracked_buckets + config->num_tracked_buckets);
    c.seed = config->seed;
    c.max_attempts = config->max_attempts;
    c.workers = config->workers;
    try {
      *out = new minsym_dataset{minsym::controlled_sample(c)};
      return MINSYM_OK;
    } catch (const minsym::PartialResultError& e) {
      *out = new minsym_dataset{e.partial()};
      return fail(MINSYM_ERR_PARTIAL_RESULT, e.what());
    }
  });
}

void minsym_dataset_destroy(minsym_dataset* dataset) { delete dataset; }

int32_t minsym_dataset_num_attributes(const minsym_dataset* d) {
  return d ? d->value.space.num_attributes() : 0;
}
int32_t minsym_dataset_num_values(const minsym_dataset* d) {
  return d ? d->value.space.num_values() : 0;
}
int32_t minsym_dataset_num_distractors(const minsym_dataset* d) {
  return d ? d->value.num_distractors : 0;
}
int64_t minsym_dataset_attempts(const minsym_dataset* d) {
  return d ? d->value.attempts : 0;
}
int minsym_dataset_complete(const minsym_dataset* d) {
  return d && d->value.complete ? 1 : 0;
}
size_t minsym_dataset_num_buckets(const minsym_dataset* d) {
  return d ? d->value.buckets.size() : 0;
}
int32_t minsym_dataset_bucket_key(const minsym_dataset* d, size_t index) {
  if (!d || index >= d->value.buckets.size()) return -1;
  return std::next(d->value.buckets.begin(), static_cast<std::ptrdiff_t>(index))->first;
}
int64_t minsym_dataset_bucket_size(const minsym_dataset* d, int32_t key) {
  if (!d) return 0;
  const auto it = d->value.buckets.find(key);
  return it == d->value.buckets.end() ? 0 : static_cast<int64_t>(it->second.size());
}

minsym_status minsym_dataset_histogram(const minsym_dataset* dataset,
                                       int64_t* counts, size_t counts_len) {
  return guarded([&] {
    require(dataset != nullptr, "dataset must not be null");
    return fill_histogram(dataset->value.histogram,
                          dataset->value.space.num_attributes(), counts, counts_len);
  });
}

minsym_status minsym_dataset_instance(const minsym_dataset* dataset, int32_t key,
                                      size_t index, int64_t* id,
                                      minsym_instance** out) {
  return guarded([&] {
    require(dataset != nullptr && out != nullptr, "arguments must not be null");
    const auto it = dataset->value.buckets.find(key);
    if (it == dataset->value.buckets.end() || index >= it->second.size()) {
      throw minsym::DomainError("no instance " + std::to_string(index) +
                                " in bucket " + std::to_string(key));
    }
    const auto& rec = it->second[index];
    if (id) *id = rec.id;
    *out = new minsym_instance{rec.instance};
    return MINSYM_OK;
  });
}

minsym_status minsym_dataset_write(const minsym_dataset* dataset, const char* dir,
                                   int overwrite, double train_fraction) {
  return guarded([&] {
    require(dataset != nullptr && dir != nullptr, "arguments must not be null");
    minsym::write_dataset(dataset->value, dir,
                          {overwrite != 0, train_fraction});
    return MINSYM_OK;
  });
}

minsym_status minsym_dataset_read(const char* dir, int verify,
                                  minsym_dataset** out) {
  return guarded([&] {
    require(dir != nullptr && out != nullptr, "arguments must not be null");
    *out = new minsym_dataset{minsym::read_dataset(dir, {verify != 0})};
    return MINSYM_OK;
  });
}

minsym_status minsym_dataset_export_one_hot(const minsym_dataset* dataset,
                                            const char* dir, uint64_t split_seed,
                                            double train_fraction, int overwrite,
                                            int64_t* train_instances,
                                            int64_t* eval_instances) {
  return guarded([&] {
    require(dataset != nullptr && dir != nullptr, "arguments must not be null");
    const auto header = minsym::export_one_hot(dataset->value, dir, split_seed,
                                               train_fraction, overwrite != 0);
    if (train_instances) *train_instances = header.train_instances;
    if (eval_instances) *eval_instances = header.eval_instances;
    return MINSYM_OK;
  });
}

minsym_status minsym_one_hot_read(const char* dir, minsym_dataset** train,
                                  minsym_dataset** eval) {
  return guarded([&] {
    require(dir != nullptr && train != nullptr && eval != nullptr,
            "arguments must not be null");
    auto exported = minsym::read_one_hot(dir);
    auto train_ds = std::make_unique<minsym_dataset>(
        minsym_dataset{bucketed(exported.header, std::move(exported.train))});
    auto eval_ds = std::make_unique<minsym_dataset>(
        minsym_dataset{bucketed(exported.header, std::move(exported.eval))});
    *train = train_ds.release();
    *eval = eval_ds.release();
    return MINSYM_OK;
  });
}

minsym_status minsym_oracle_message(const minsym_instance* instance,
                                    int32_t max_length, int32_t* symbols,
                                    size_t capacity, size_t* length) {
  return guarded([&] {
    require(instance != nullptr && length != nullptr, "arguments must not be null");
    const auto message = minsym::oracle_sender(instance->value, max_length);
    *length = message.length();
    if (symbols == nullptr) return MINSYM_OK;
    if (capacity < message.length()) {
      return fail(MINSYM_ERR_BUFFER_TOO_SMALL,
                  "message needs " + std::to_string(message.length()) + " slots");
    }
    for (size_t i = 0; i < message.length(); ++i) {
      symbols[i] = message.symbols[i].code;
    }
    return MINSYM_OK;
  });
}

minsym_status minsym_message_survivors(const minsym_instance* instance,
                                       const int32_t* symbols, size_t length,
                                       int32_t* survivors,
                                       double* expected_success) {
  return guarded([&] {
    require(instance != nullptr, "instance must not be null");
    require(length == 0 || symbols != nullptr, "symbols must not be null");
    minsym::Message message;
    for (size_t i = 0; i < length; ++i) message.symbols.push_back({symbols[i]});
    if (survivors) {
      *survivors = static_cast<int32_t>(
          minsym::surviving_candidates(instance->value, message).size());
    }
    if (expected_success) {
      *expected_success = minsym::expected_success(instance->value, message);
    }
    return MINSYM_OK;
  });
}

minsym_status minsym_evaluate(const minsym_dataset* dataset, int32_t bucket,
                              int32_t max_length, minsym_policy sender,
                              int32_t episodes_per_instance, uint64_t seed,
                              int32_t workers, const char* log_path,
                              int append_log, minsym_eval_result* out) {
  return guarded([&] {
    require(dataset != nullptr && out != nullptr, "arguments must not be null");
    require(workers >= 1, "workers must be >= 1");
    std::vector<const minsym::LabeledInstance*> selected;
    for (const auto* rec : dataset->value.all()) {
      if (bucket < 0 || rec->min_m == bucket) selected.push_back(rec);
    }
    if (selected.empty()) {
      throw minsym::InvalidArgument("no instances in bucket " +
                                    std::to_string(bucket));
    }
    minsym::SenderPolicy send;
    switch (sender) {
      case MINSYM_POLICY_ORACLE: send = minsym::oracle_sender; break;
      case MINSYM_POLICY_EMPTY: send = minsym::empty_sender; break;
      default: throw minsym::InvalidArgument("unknown sender policy");
    }
    std::vector<minsym::EpisodeLogRecord> log;
    const auto result = minsym::evaluate(
        selected, send, minsym::oracle_receiver,
        {max_length, episodes_per_instance, seed, workers},
        log_path ? &log : nullptr);
    if (log_path) {
      std::ofstream file(log_path, append_log ? std::ios::app : std::ios::trunc);
      if (!file) throw minsym::IoError(std::string("cannot open ") + log_path);
      minsym::write_episode_log(file, log);
      if (!file) throw minsym::IoError(std::string("write to ") + log_path + " failed");
    }
    *out = {result.episodes, result.accuracy, result.standard_error,
            result.expected_accuracy};
    return MINSYM_OK;
  });
}

minsym_status minsym_curve_table_write(const char* path, const char* source,
                                       const minsym_curve_row* rows,
                                       size_t count) {
  return guarded([&] {
    require(path != nullptr, "path must not be null");
    require(count == 0 || rows != nullptr, "rows must not be null");
    minsym::CurveTable table;
    table.source = source ? source : "";
    for (size_t i = 0; i < count; ++i) {
      minsym::CurveRow row;
      row.max_length = rows[i].max_length;
      row.accuracy = rows[i].accuracy;
      row.standard_error = rows[i].standard_error;
      row.expected_accuracy = rows[i].expected_accuracy;
      row.episodes = rows[i].episodes;
      table.rows.push_back(row);
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw minsym::IoError(std::string("cannot open ") + path);
    minsym::write_curve_table(out, table);
    if (!out) throw minsym::IoError(std::string("write to ") + path + " failed");
    return MINSYM_OK;
  });
}

minsym_status minsym_curve_create(const int32_t* lengths,
                                  const double* accuracies, size_t count,
                                  minsym_curve** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(count == 0 || (lengths != nullptr && accuracies != nullptr),
            "lengths/accuracies must not be null");
    std::map<int, double> points;
    for (size_t i = 0; i < count; ++i) {
      if (!points.emplace(lengths[i], accuracies[i]).second) {
        throw minsym::DomainError("duplicate max length " +
                                  std::to_string(lengths[i]));
      }
    }
    *out = new minsym_curve{minsym::AccuracyCurve(std::move(points))};
    return MINSYM_OK;
  });
}

minsym_status minsym_curve_read(const char* path, const char* column,
                                int32_t epoch, minsym_curve** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be null");
    minsym::CurveSelection selection;
    if (column) selection.column = column;
    if (epoch >= 0) selection.epoch = epoch;
    *out = new minsym_curve{
        minsym::to_curve(minsym::read_curve_table(path), selection)};
    return MINSYM_OK;
  });
}

void minsym_curve_destroy(minsym_curve* curve) { delete curve; }

size_t minsym_curve_size(const minsym_curve* curve) {
  return curve ? curve->value.points().size() : 0;
}

minsym_status minsym_curve_point(const minsym_curve* curve, size_t index,
                                 int32_t* max_length, double* accuracy) {
  return guarded([&] {
    require(curve != nullptr && max_length != nullptr && accuracy != nullptr,
            "arguments must not be null");
    if (index >= curve->value.points().size()) {
      throw minsym::DomainError("curve index out of range");
    }
    const auto it = std::next(curve->value.points().begin(),
                              static_cast<std::ptrdiff_t>(index));
    *max_length = it->first;
    *accuracy = it->second;
    return MINSYM_OK;
  });
}

minsym_status minsym_effective_symbols(const minsym_curve* curve, double epsilon,
                                       int32_t* out) {
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "arguments must not be null");
    *out = minsym::effective_symbols(curve->value, epsilon);
    return MINSYM_OK;
  });
}

minsym_status minsym_accuracy_gap(const minsym_curve* curve, int32_t max_length,
                                  double* out) {
  return guarded([&] {
    require(curve != nullptr && out != nullptr, "arguments must not be null");
    *out = minsym::accuracy_gap(curve->value, max_length);
    return MINSYM_OK;
  });
}

minsym_status minsym_message_stats_read(const char* path,
                                        minsym_message_stats** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "arguments must not be null");
    auto stats = std::make_unique<minsym_message_stats>();
    stats->value = minsym::message_length_stats(std::filesystem::path(path));
    stats->lengths.assign(stats->value.length_histogram.begin(),
                          stats->value.length_histogram.end());
    stats->symbols.assign(stats->value.symbol_histogram.begin(),
                          stats->value.symbol_histogram.end());
    *out = stats.release();
    return MINSYM_OK;
  });
}

void minsym_message_stats_destroy(minsym_message_stats* stats) { delete stats; }

int64_t minsym_message_stats_total(const minsym_message_stats* s) {
  return s ? s->value.total : 0;
}
int64_t minsym_message_stats_successes(const minsym_message_stats* s) {
  return s ? s->value.successes : 0;
}
size_t minsym_message_stats_num_lengths(const minsym_message_stats* s) {
  return s ? s->lengths.size() : 0;
}
size_t minsym_message_stats_num_symbols(const minsym_message_stats* s) {
  return s ? s->symbols.size() : 0;
}

minsym_status minsym_message_stats_length(const minsym_message_stats* s,
                                          size_t index, int32_t* length,
                                          int64_t* count) {
  return guarded([&] {
    require(s != nullptr && length != nullptr && count != nullptr,
            "arguments must not be null");
    if (index >= s->lengths.size()) throw minsym::DomainError("index out of range");
    *length = s->lengths[index].first;
    *count = s->lengths[index].second;
    return MINSYM_OK;
  });
}

minsym_status minsym_message_stats_symbol(const minsym_message_stats* s,
                                          size_t index, int32_t* code,
                                          int64_t* count) {
  return guarded([&] {
    require(s != nullptr && code != nullptr && count != nullptr,
            "arguments must not be null");
    if (index >= s->symbols.size()) throw minsym::DomainError("index out of range");
    *code = s->symbols[index].first;
    *count = s->symbols[index].second;
    return MINSYM_OK;
  });
}

}  // extern "C"
