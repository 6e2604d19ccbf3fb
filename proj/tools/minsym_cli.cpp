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

// minsym command-line tool. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minsym/minsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitPartial = 4;
constexpr int kExitData = 5;

int exit_code(minsym_status status) {
  switch (status) {
    case MINSYM_OK: return kExitOk;
    case MINSYM_ERR_INVALID_ARGUMENT:
    case MINSYM_ERR_DOMAIN: return kExitUsage;
    case MINSYM_ERR_IO:
    case MINSYM_ERR_ALREADY_EXISTS: return kExitIo;
    case MINSYM_ERR_PARTIAL_RESULT: return kExitPartial;
    case MINSYM_ERR_FORMAT:
    case MINSYM_ERR_COUNT_MISMATCH:
    case MINSYM_ERR_UNSUPPORTED_VERSION:
    case MINSYM_ERR_PURITY_VIOLATION: return kExitData;
    default: return kExitInternal;
  }
}

// Thrown to unwind a subcommand with the exit code for a failed call.
struct Failure {
  int code;
};

void check(minsym_status status, const char* context) {
  if (status == MINSYM_OK) return;
  std::fprintf(stderr, "minsym: %s: %s: %s\n", context, minsym_status_name(status),
               minsym_last_error());
  throw Failure{exit_code(status)};
}

struct InstanceDeleter {
  void operator()(minsym_instance* p) const { minsym_instance_destroy(p); }
};
struct DatasetDeleter {
  void operator()(minsym_dataset* p) const { minsym_dataset_destroy(p); }
};
struct CurveDeleter {
  void operator()(minsym_curve* p) const { minsym_curve_destroy(p); }
};
struct StatsDeleter {
  void operator()(minsym_message_stats* p) const { minsym_message_stats_destroy(p); }
};
using Instance = std::unique_ptr<minsym_instance, InstanceDeleter>;
using Dataset = std::unique_ptr<minsym_dataset, DatasetDeleter>;
using Curve = std::unique_ptr<minsym_curve, CurveDeleter>;
using Stats = std::unique_ptr<minsym_message_stats, StatsDeleter>;

struct SpaceOptions {
  int32_t attributes = 20;
  int32_t values = 4;
  int32_t distractors = 63;
};

void add_space_options(CLI::App* cmd, SpaceOptions& space) {
  cmd->add_option("--attributes", space.attributes, "Number of attributes |A|")
      ->capture_default_str();
  cmd->add_option("--values", space.values, "Values per attribute |V|")
      ->capture_default_str();
  cmd->add_option("--distractors", space.distractors, "Distractors per game N_d")
      ->capture_default_str();
}

Dataset load_dataset(const std::string& dir, bool verify) {
  minsym_dataset* raw = nullptr;
  check(minsym_dataset_read(dir.c_str(), verify ? 1 : 0, &raw), "reading dataset");
  return Dataset(raw);
}

void print_histogram(std::FILE* out, const std::vector<int64_t>& counts) {
  int64_t total = 0;
  for (auto c : counts) total += c;
  std::fprintf(out, "min_m\tcount\tfrequency\n");
  for (std::size_t k = 1; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    std::fprintf(out, "%zu\t%lld\t%.6f\n", k, static_cast<long long>(counts[k]),
                 static_cast<double>(counts[k]) / static_cast<double>(total));
  }
  std::fprintf(out, "unsolvable\t%lld\t%.6f\n", static_cast<long long>(counts[0]),
               static_cast<double>(counts[0]) / static_cast<double>(total));
  std::size_t best = 0;
  int64_t best_mass = -1;
  for (std::size_t k = 1; k + 1 < counts.size(); ++k) {
    if (counts[k] + counts[k + 1] > best_mass) {
      best_mass = counts[k] + counts[k + 1];
      best = k;
    }
  }
  if (best > 0) {
    std::fprintf(out, "# top_adjacent_pair\t%zu,%zu\t%.6f\n", best, best + 1,
                 static_cast<double>(best_mass) / static_cast<double>(total));
  }
}

int run_solve(const std::string& path, const std::string& solver) {
  minsym_instance* raw = nullptr;
  check(minsym_instance_read_file(path.c_str(), &raw), "reading instance");
  Instance instance(raw);
  const int32_t attributes = minsym_instance_num_attributes(instance.get());
  const int32_t values = minsym_instance_num_values(instance.get());
  const int32_t target = minsym_instance_target_index(instance.get());

  std::vector<std::pair<const char*, minsym_solver>> solvers;
  if (solver == "enum" || solver == "both") {
    solvers.emplace_back("enumeration", MINSYM_SOLVER_ENUMERATION);
  }
  if (solver == "hitting" || solver == "both") {
    solvers.emplace_back("hitting-set", MINSYM_SOLVER_HITTING_SET);
  }
  int32_t agreed = -1;
  for (const auto& [name, kind] : solvers) {
    int32_t min_symbols = 0;
    std::vector<int32_t> witness(static_cast<std::size_t>(attributes));
    std::size_t length = 0;
    check(minsym_solve(instance.get(), kind, &min_symbols, witness.data(),
                       witness.size(), &length),
          "solving");
    if (agreed >= 0 && agreed != min_symbols) {
      std::fprintf(stderr, "minsym: solvers disagree (%d vs %d)\n", agreed,
                   min_symbols);
      return kExitInternal;
    }
    agreed = min_symbols;
    std::printf("solver\t%s\n", name);
    if (min_symbols == 0) {
      std::printf("min_symbols\tunsolvable\n");
      continue;
    }
    std::printf("min_symbols\t%d\n", min_symbols);
    std::string pairs;
    std::string codes;
    for (std::size_t i = 0; i < length; ++i) {
      const int32_t a = witness[i];
      const int32_t v = minsym_instance_value(instance.get(), target, a);
      int32_t code = 0;
      check(minsym_encode_pair(attributes, values, a, v, &code), "encoding");
      if (i > 0) {
        pairs += ' ';
        codes += ' ';
      }
      pairs += "a" + std::to_string(a) + "=" + std::to_string(v);
      codes += std::to_string(code);
    }
    std::printf("witness\t%s\n", pairs.c_str());
    std::printf("symbols\t%s\n", codes.c_str());
  }
  return kExitOk;
}

struct ProbOptions {
  int64_t n = 128;
  int64_t m = 2;
  int64_t classes = 10000;
  int64_t trials = 0;
  uint64_t seed = 0;
  int32_t workers = 1;
};

int run_prob(const ProbOptions& o) {
  double single = 0.0;
  double any = 0.0;
  check(minsym_p_class_at_least(o.n, o.m, o.classes, &single), "single-class tail");
  check(minsym_p_exists_class_at_least(o.n, o.m, o.classes, &any), "any-class");
  std::printf("n\t%lld\nm\t%lld\nclasses\t%lld\n", static_cast<long long>(o.n),
              static_cast<long long>(o.m), static_cast<long long>(o.classes));
  std::printf("p_class_at_least\t%.12g\n", single);
  std::printf("p_exists_class_at_least\t%.12g\n", any);
  if (o.trials > 0) {
    minsym_mc_estimate est{};
    check(minsym_monte_carlo_exists(o.n, o.m, o.classes, o.trials, o.seed,
                                    o.workers, &est),
          "Monte Carlo");
    std::printf("monte_carlo\t%.12g\nmonte_carlo_stderr\t%.12g\n", est.probability,
                est.standard_error);
    std::printf("monte_carlo_trials\t%lld\nseed\t%llu\n",
                static_cast<long long>(est.trials),
                static_cast<unsigned long long>(o.seed));
  }
  return kExitOk;
}

struct HistOptions {
  SpaceOptions space;
  int64_t trials = 10000;
  uint64_t seed = 0;
  int32_t workers = 1;
  std::string out;
};

int run_hist(const HistOptions& o) {
  std::vector<int64_t> counts(static_cast<std::size_t>(std::max(o.space.attributes, 0)) + 1);
  check(minsym_min_m_histogram(o.space.attributes, o.space.values,
                               o.space.distractors, o.trials, o.seed, o.workers,
                               counts.data(), counts.size()),
        "histogram");
  auto emit = [&](std::FILE* f) {
    std::fprintf(f, "# attributes=%d values=%d distractors=%d trials=%lld seed=%llu\n",
                 o.space.attributes, o.space.values, o.space.distractors,
                 static_cast<long long>(o.trials),
                 static_cast<unsigned long long>(o.seed));
    print_histogram(f, counts);
  };
  emit(stdout);
  if (!o.out.empty()) {
    std::FILE* f = std::fopen(o.out.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "minsym: cannot write %s\n", o.out.c_str());
      return kExitIo;
    }
    emit(f);
    std::fclose(f);
  }
  return kExitOk;
}

struct SampleOptions {
  SpaceOptions space;
  std::vector<int32_t> buckets{2, 3};
  int32_t per_bucket = 10000;
  uint64_t seed = 0;
  int64_t max_attempts = 0;
  int32_t workers = 1;
  std::string out;
  bool overwrite = false;
  double train_fraction = 0.8;
  bool verify = false;
};

void print_dataset_summary(const minsym_dataset* ds) {
  std::printf("attempts\t%lld\n", static_cast<long long>(minsym_dataset_attempts(ds)));
  std::printf("complete\t%s\n", minsym_dataset_complete(ds) ? "true" : "false");
  for (std::size_t i = 0; i < minsym_dataset_num_buckets(ds); ++i) {
    const int32_t key = minsym_dataset_bucket_key(ds, i);
    std::printf("bucket\t%d\t%lld\n", key,
                static_cast<long long>(minsym_dataset_bucket_size(ds, key)));
  }
}

int run_sample(const SampleOptions& o) {
  minsym_sampler_config config;
  minsym_sampler_config_init(&config);
  config.num_attributes = o.space.attributes;
  config.num_values = o.space.values;
  config.num_distractors = o.space.distractors;
  config.per_bucket_target = o.per_bucket;
  config.tracked_buckets = o.buckets.data();
  config.num_tracked_buckets = o.buckets.size();
  config.seed = o.seed;
  config.max_attempts = o.max_attempts;
  config.workers = o.workers;

  minsym_dataset* raw = nullptr;
  const minsym_status status = minsym_controlled_sample(&config, &raw);
  Dataset dataset(raw);
  if (status != MINSYM_OK && status != MINSYM_ERR_PARTIAL_RESULT) {
    check(status, "sampling");
  }
  const std::string diagnostic = minsym_last_error();
  std::printf("seed\t%llu\n", static_cast<unsigned long long>(o.seed));
  print_dataset_summary(dataset.get());
  std::vector<int64_t> counts(static_cast<std::size_t>(o.space.attributes) + 1);
  check(minsym_dataset_histogram(dataset.get(), counts.data(), counts.size()),
        "histogram");
  print_histogram(stdout, counts);

  check(minsym_dataset_write(dataset.get(), o.out.c_str(), o.overwrite ? 1 : 0,
                             o.train_fraction),
        "writing dataset");
  if (status == MINSYM_ERR_PARTIAL_RESULT) {
    std::fprintf(stderr, "minsym: sampling: %s: %s\n", minsym_status_name(status),
                 diagnostic.c_str());
    return kExitPartial;
  }
  if (o.verify) {
    Dataset reread = load_dataset(o.out, true);
    std::printf("verified\t%s\n", o.out.c_str());
  }
  return kExitOk;
}

int run_verify(const std::string& dir) {
  Dataset dataset = load_dataset(dir, true);
  int64_t total = 0;
  for (std::size_t i = 0; i < minsym_dataset_num_buckets(dataset.get()); ++i) {
    total += minsym_dataset_bucket_size(dataset.get(),
                                        minsym_dataset_bucket_key(dataset.get(), i));
  }
  print_dataset_summary(dataset.get());
  std::printf("verified\t%lld\n", static_cast<long long>(total));
  return kExitOk;
}

struct ExportOptions {
  std::string dataset;
  std::string out;
  uint64_t split_seed = 0;
  double train_fraction = 0.8;
  bool overwrite = false;
  bool verify = false;
};

int run_export(const ExportOptions& o) {
  Dataset dataset = load_dataset(o.dataset, o.verify);
  int64_t train = 0;
  int64_t eval = 0;
  check(minsym_dataset_export_one_hot(dataset.get(), o.out.c_str(), o.split_seed,
                                      o.train_fraction, o.overwrite ? 1 : 0,
                                      &train, &eval),
        "exporting");
  std::printf("split_seed\t%llu\ntrain\t%lld\neval\t%lld\n",
              static_cast<unsigned long long>(o.split_seed),
              static_cast<long long>(train), static_cast<long long>(eval));
  return kExitOk;
}

struct EvalOptions {
  std::string dataset;
  int32_t bucket = -1;
  int32_t max_len = 5;
  std::string policy = "oracle";
  int32_t episodes = 1;
  uint64_t seed = 0;
  int32_t workers = 1;
  std::string out;
  std::string log;
  bool verify = false;
};

int run_eval(const EvalOptions& o) {
  Dataset dataset = load_dataset(o.dataset, o.verify);
  const minsym_policy policy =
      o.policy == "empty" ? MINSYM_POLICY_EMPTY : MINSYM_POLICY_ORACLE;
  std::vector<minsym_curve_row> rows;
  std::printf("# seed=%llu bucket=%d policy=%s\n",
              static_cast<unsigned long long>(o.seed), o.bucket, o.policy.c_str());
  std::printf("max_len\taccuracy\tstderr\texpected_accuracy\tepisodes\n");
  for (int32_t length = 1; length <= o.max_len; ++length) {
    minsym_eval_result result{};
    check(minsym_evaluate(dataset.get(), o.bucket, length, policy, o.episodes,
                          o.seed, o.workers, o.log.empty() ? nullptr : o.log.c_str(),
                          length > 1 ? 1 : 0, &result),
          "evaluating");
    std::printf("%d\t%.6f\t%.6f\t%.6f\t%lld\n", length, result.accuracy,
                result.standard_error, result.expected_accuracy,
                static_cast<long long>(result.episodes));
    rows.push_back({length, result.accuracy, result.standard_error,
                    result.expected_accuracy, result.episodes});
  }
  if (!o.out.empty()) {
    check(minsym_curve_table_write(o.out.c_str(), o.policy.c_str(), rows.data(),
                                   rows.size()),
          "writing curve");
  }
  return kExitOk;
}

struct AnalyzeOptions {
  std::string curve;
  std::string log;
  double epsilon = 0.02;
  std::string column = "accuracy";
  int32_t epoch = -1;
};

int run_analyze(const AnalyzeOptions& o) {
  if (!o.curve.empty()) {
    minsym_curve* raw = nullptr;
    check(minsym_curve_read(o.curve.c_str(), o.column.c_str(), o.epoch, &raw),
          "reading curve");
    Curve curve(raw);
    std::printf("max_len\taccuracy\tgap\n");
    for (std::size_t i = 0; i < minsym_curve_size(curve.get()); ++i) {
      int32_t length = 0;
      double accuracy = 0.0;
      double gap = 0.0;
      check(minsym_curve_point(curve.get(), i, &length, &accuracy), "curve");
      check(minsym_accuracy_gap(curve.get(), length, &gap), "gap");
      std::printf("%d\t%.6f\t%.6f\n", length, accuracy, gap);
    }
    int32_t effective = 0;
    check(minsym_effective_symbols(curve.get(), o.epsilon, &effective),
          "effective symbols");
    std::printf("epsilon\t%g\neffective_symbols\t%d\n", o.epsilon, effective);
  }
  if (!o.log.empty()) {
    minsym_message_stats* raw = nullptr;
    check(minsym_message_stats_read(o.log.c_str(), &raw), "reading log");
    Stats stats(raw);
    std::printf("messages\t%lld\nsuccesses\t%lld\n",
                static_cast<long long>(minsym_message_stats_total(stats.get())),
                static_cast<long long>(minsym_message_stats_successes(stats.get())));
    std::printf("length\tcount\n");
    int32_t modal = -1;
    int64_t modal_count = 0;
    for (std::size_t i = 0; i < minsym_message_stats_num_lengths(stats.get()); ++i) {
      int32_t length = 0;
      int64_t count = 0;
      check(minsym_message_stats_length(stats.get(), i, &length, &count), "stats");
      std::printf("%d\t%lld\n", length, static_cast<long long>(count));
      if (count > modal_count) {
        modal = length;
        modal_count = count;
      }
    }
    if (modal >= 0) std::printf("modal_length\t%d\n", modal);
    std::printf("symbol\tcount\n");
    for (std::size_t i = 0; i < minsym_message_stats_num_symbols(stats.get()); ++i) {
      int32_t code = 0;
      int64_t count = 0;
      check(minsym_message_stats_symbol(stats.get(), i, &code, &count), "stats");
      std::printf("%d\t%lld\n", code, static_cast<long long>(count));
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minsym: minimum message length tools for Lewis signaling games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(minsym_version()));

  std::string solve_path;
  std::string solver = "both";
  auto* solve = app.add_subcommand("solve", "Compute min(|M|) and a witness for an instance file");
  solve->add_option("instance", solve_path, "Instance JSON file")->required();
  solve->add_option("--solver", solver, "enum, hitting or both")
      ->check(CLI::IsMember({"enum", "hitting", "both"}))
      ->capture_default_str();

  ProbOptions prob_opts;
  auto* prob = app.add_subcommand("prob", "Collision probabilities for n draws over equiprobable classes");
  prob->add_option("-n", prob_opts.n, "Number of sampled objects")->capture_default_str();
  prob->add_option("-m", prob_opts.m, "Threshold count")->capture_default_str();
  prob->add_option("--classes", prob_opts.classes, "Number of classes")->capture_default_str();
  prob->add_option("--monte-carlo", prob_opts.trials, "Monte Carlo trials (0 = skip)")
      ->capture_default_str();
  prob->add_option("--seed", prob_opts.seed, "Monte Carlo seed")->capture_default_str();
  prob->add_option("--workers", prob_opts.workers, "Worker threads")
      ->check(CLI::PositiveNumber)->capture_default_str();

  HistOptions hist_opts;
  auto* hist = app.add_subcommand("hist", "Monte Carlo distribution of min(|M|)");
  add_space_options(hist, hist_opts.space);
  hist->add_option("--trials", hist_opts.trials, "Number of sampled games")->capture_default_str();
  hist->add_option("--seed", hist_opts.seed, "Seed")->capture_default_str();
  hist->add_option("--workers", hist_opts.workers, "Worker threads")
      ->check(CLI::PositiveNumber)->capture_default_str();
  hist->add_option("--out", hist_opts.out, "Also write the table to this file");

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "min(|M|)-controlled sampling into a dataset directory");
  add_space_options(sample, sample_opts.space);
  sample->add_option("--buckets", sample_opts.buckets, "Tracked min(|M|) values")
      ->delimiter(',')->capture_default_str();
  sample->add_option("--per-bucket", sample_opts.per_bucket, "Instances per bucket N_g")
      ->capture_default_str();
  sample->add_option("--seed", sample_opts.seed, "Seed")->capture_default_str();
  sample->add_option("--max-attempts", sample_opts.max_attempts,
                     "Draw budget (0 = 10^4 x per-bucket x buckets)")
      ->capture_default_str();
  sample->add_option("--workers", sample_opts.workers, "Worker threads")
      ->check(CLI::PositiveNumber)->capture_default_str();
  sample->add_option("--out", sample_opts.out, "Output dataset directory")->required();
  sample->add_flag("--overwrite", sample_opts.overwrite, "Replace existing files");
  sample->add_option("--train-fraction", sample_opts.train_fraction, "Train share of each bucket")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sample->add_flag("--verify", sample_opts.verify, "Re-read and re-solve the written dataset");

  std::string verify_dir;
  auto* verify = app.add_subcommand("verify", "Re-solve every record of a dataset and check bucket purity");
  verify->add_option("--dataset", verify_dir, "Dataset directory")->required();

  ExportOptions export_opts;
  auto* exp = app.add_subcommand("export", "One-hot export with a seeded train/eval split");
  exp->add_option("--dataset", export_opts.dataset, "Dataset directory")->required();
  exp->add_option("--out", export_opts.out, "Output directory")->required();
  exp->add_option("--split-seed", export_opts.split_seed, "Split seed")->capture_default_str();
  exp->add_option("--train-fraction", export_opts.train_fraction, "Train share of each bucket")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  exp->add_flag("--overwrite", export_opts.overwrite, "Replace existing files");
  exp->add_flag("--verify", export_opts.verify, "Check bucket purity while loading");

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Play the oracle game for L = 1..max-len");
  eval->add_option("--dataset", eval_opts.dataset, "Dataset directory")->required();
  eval->add_option("--bucket", eval_opts.bucket, "Bucket to evaluate (-1 = all)")
      ->capture_default_str();
  eval->add_option("--max-len", eval_opts.max_len, "Largest message length")
      ->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--policy", eval_opts.policy, "Sender: oracle or empty")
      ->check(CLI::IsMember({"oracle", "empty"}))->capture_default_str();
  eval->add_option("--episodes", eval_opts.episodes, "Episodes per instance")
      ->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--seed", eval_opts.seed, "Seed")->capture_default_str();
  eval->add_option("--workers", eval_opts.workers, "Worker threads")
      ->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--out", eval_opts.out, "Curve CSV output");
  eval->add_option("--log", eval_opts.log, "Episode log output (JSON lines)");
  eval->add_flag("--verify", eval_opts.verify, "Check bucket purity while loading");

  AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Effective symbols from a curve; usage stats from a log");
  auto* curve_opt = analyze->add_option("--curve", analyze_opts.curve, "Curve CSV");
  auto* log_opt = analyze->add_option("--log", analyze_opts.log, "Episode log");
  analyze->add_option("--epsilon", analyze_opts.epsilon, "Tolerance for 'no improvement'")
      ->check(CLI::Range(0.0, 0.999999))->capture_default_str();
  analyze->add_option("--column", analyze_opts.column, "accuracy or expected_accuracy")
      ->check(CLI::IsMember({"accuracy", "expected_accuracy"}))->capture_default_str();
  analyze->add_option("--epoch", analyze_opts.epoch, "Epoch to read (-1 = last)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (analyze->parsed() && curve_opt->count() == 0 && log_opt->count() == 0) {
      throw CLI::ValidationError("analyze", "--curve or --log is required");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_path, solver);
    if (prob->parsed()) return run_prob(prob_opts);
    if (hist->parsed()) return run_hist(hist_opts);
    if (sample->parsed()) return run_sample(sample_opts);
    if (verify->parsed()) return run_verify(verify_dir);
    if (exp->parsed()) return run_export(export_opts);
    if (eval->parsed()) return run_eval(eval_opts);
    if (analyze->parsed()) return run_analyze(analyze_opts);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
