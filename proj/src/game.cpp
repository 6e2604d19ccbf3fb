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

#include "minsym/game.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "json.hpp"
#include "minsym/errors.hpp"
#include "minsym/sms.hpp"
#include "parallel.hpp"

namespace minsym {

using nlohmann::json;

Message oracle_sender(const GameInstance& instance, int max_length) {
  if (max_length < 1) throw InvalidArgument("max_length must be >= 1");
  const auto solved = solve_min_sym(instance);
  if (!solved.witness) {
    throw DomainError("oracle sender: instance is unsolvable (a distractor "
                      "duplicates the target)");
  }
  const auto& pairs = solved.witness->pairs();
  std::vector<AttributeValue> chosen;
  if (static_cast<int>(pairs.size()) <= max_length) {
    chosen = pairs;
  } else {
    const ObjectView target = instance.target();
    std::vector<int> alive;
    for (int i = 0; i < instance.num_objects(); ++i) {
      if (i != instance.target_index()) alive.push_back(i);
    }
    std::vector<bool> used(pairs.size(), false);
    for (int step = 0; step < max_length; ++step) {
      int best = -1;
      int best_eliminated = -1;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (used[p]) continue;
        const auto a = static_cast<std::size_t>(pairs[p].attribute);
        const int eliminated = static_cast<int>(std::count_if(
            alive.begin(), alive.end(),
            [&](int d) { return instance.object(d)[a] != target[a]; }));
        if (eliminated > best_eliminated) {
          best = static_cast<int>(p);
          best_eliminated = eliminated;
        }
      }
      used[static_cast<std::size_t>(best)] = true;
      const auto a = static_cast<std::size_t>(pairs[static_cast<std::size_t>(best)].attribute);
      std::erase_if(alive, [&](int d) { return instance.object(d)[a] != target[a]; });
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (used[p]) chosen.push_back(pairs[p]);
    }
  }
  Message message;
  for (const auto& p : chosen) {
    message.symbols.push_back(encode_pair(instance.space(), p.attribute, p.value));
  }
  return message;
}

Message empty_sender(const GameInstance&, int) { return {}; }

std::vector<int> surviving_candidates(const GameInstance& instance,
                                      const Message& message) {
  std::vector<AttributeValue> pairs;
  pairs.reserve(message.symbols.size());
  for (Symbol s : message.symbols) {
    pairs.push_back(decode_symbol(instance.space(), s));
  }
  std::vector<int> survivors;
  for (int i = 0; i < instance.num_objects(); ++i) {
    const ObjectView object = instance.object(i);
    const bool consistent = std::all_of(pairs.begin(), pairs.end(), [&](const AttributeValue& p) {
      return object[static_cast<std::size_t>(p.attribute)] == p.value;
    });
    if (consistent) survivors.push_back(i);
  }
  return survivors;
}

EpisodeResult oracle_receiver(const GameInstance& instance,
                              const Message& message, Rng& rng) {
  const auto survivors = surviving_candidates(instance, message);
  EpisodeResult result;
  result.message = message;
  result.survivors = static_cast<int>(survivors.size());
  if (survivors.empty()) return result;
  result.chosen_index = survivors[rng.Below(survivors.size())];
  result.success = result.chosen_index == instance.target_index();
  return result;
}

double expected_success(const GameInstance& instance, const Message& message) {
  const auto survivors = surviving_candidates(instance, message);
  if (std::find(survivors.begin(), survivors.end(), instance.target_index()) ==
      survivors.end()) {
    return 0.0;
  }
  return 1.0 / static_cast<double>(survivors.size());
}

EvaluationResult evaluate(std::span<const LabeledInstance* const> instances,
                          const SenderPolicy& sender,
                          const ReceiverPolicy& receiver,
                          const EvaluationOptions& options,
                          std::vector<EpisodeLogRecord>* log) {
  if (instances.empty()) throw InvalidArgument("cannot evaluate an empty dataset");
  if (options.max_length < 1) throw InvalidArgument("max_length must be >= 1");
  if (options.episodes_per_instance < 1) {
    throw InvalidArgument("episodes_per_instance must be >= 1");
  }
  const auto n = static_cast<std::int64_t>(instances.size());
  const auto episodes = static_cast<std::size_t>(options.episodes_per_instance);
  std::vector<EpisodeLogRecord> records(static_cast<std::size_t>(n) * episodes);
  std::vector<double> expected(static_cast<std::size_t>(n), 0.0);

  internal::parallel_ranges(n, options.workers, [&](int, std::int64_t begin,
                                                    std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      const auto& labeled = *instances[static_cast<std::size_t>(i)];
      const Message message = sender(labeled.instance, options.max_length);
      if (static_cast<int>(message.length()) > options.max_length) {
        throw DomainError("sender exceeded max_length");
      }
      expected[static_cast<std::size_t>(i)] =
          expected_success(labeled.instance, message);
      for (std::size_t e = 0; e < episodes; ++e) {
        Rng rng = Rng::ForStream(options.seed,
                                 static_cast<std::uint64_t>(i) * episodes + e);
        const auto outcome = receiver(labeled.instance, message, rng);
        auto& rec = records[static_cast<std::size_t>(i) * episodes + e];
        rec.instance_id = labeled.id;
        rec.max_length = options.max_length;
        for (Symbol s : message.symbols) rec.symbols.push_back(s.code);
        rec.chosen = outcome.chosen_index;
        rec.success = outcome.success;
      }
    }
  });

  EvaluationResult result;
  result.episodes = static_cast<std::int64_t>(records.size());
  std::int64_t successes = 0;
  for (const auto& r : records) successes += r.success ? 1 : 0;
  result.accuracy =
      static_cast<double>(successes) / static_cast<double>(result.episodes);
  result.standard_error = std::sqrt(result.accuracy * (1.0 - result.accuracy) /
                                    static_cast<double>(result.episodes));
  double sum = 0.0;
  for (double e : expected) sum += e;
  result.expected_accuracy = sum / static_cast<double>(n);
  if (log) {
    log->insert(log->end(), std::make_move_iterator(records.begin()),
                std::make_move_iterator(records.end()));
  }
  return result;
}

void write_episode_log(std::ostream& out,
                       std::span<const EpisodeLogRecord> records) {
  for (const auto& r : records) {
    const json line = {{"id", r.instance_id},
                       {"max_len", r.max_length},
                       {"symbols", r.symbols},
                       {"chosen", r.chosen},
                       {"success", r.success}};
    out << line.dump() << '\n';
  }
}

EpisodeLogRecord parse_episode_log_line(std::string_view line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed episode record: ") + e.what());
  }
  EpisodeLogRecord r;
  try {
    r.instance_id = doc.at("id").get<std::int64_t>();
    r.max_length = doc.at("max_len").get<int>();
    r.symbols = doc.at("symbols").get<std::vector<int>>();
    r.chosen = doc.at("chosen").get<int>();
    r.success = doc.at("success").get<bool>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed episode record: ") + e.what());
  }
  if (r.max_length < 1 || static_cast<int>(r.symbols.size()) > r.max_length) {
    throw FormatError("episode record has more symbols than max_len");
  }
  if (std::any_of(r.symbols.begin(), r.symbols.end(), [](int s) { return s < 0; })) {
    throw FormatError("episode record has a negative symbol code");
  }
  return r;
}

}  // namespace minsym
