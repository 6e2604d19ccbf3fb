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

#ifndef MINSYM_GAME_HPP_
#define MINSYM_GAME_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "minsym/attributes.hpp"
#include "minsym/random.hpp"
#include "minsym/sampler.hpp"

namespace minsym {

struct Message {
  std::vector<Symbol> symbols;

  std::size_t length() const { return symbols.size(); }
  bool operator==(const Message&) const = default;
};

struct EpisodeResult {
  int chosen_index = -1;
  bool success = false;
  Message message;
  int survivors = 0;
};

using SenderPolicy =
    std::function<Message(const GameInstance& instance, int max_length)>;
using ReceiverPolicy = std::function<EpisodeResult(
    const GameInstance& instance, const Message& message, Rng& rng)>;

// Emits a minimal witness, one symbol per pair in ascending attribute order.
// When the witness is longer than max_length, keeps the max_length witness
// pairs chosen greedily by how many still-matching distractors each rules
// out (lowest attribute on ties). Throws DomainError on unsolvable games.
Message oracle_sender(const GameInstance& instance, int max_length);

// Sends nothing; the receiver is left guessing among all candidates.
Message empty_sender(const GameInstance& instance, int max_length);

// Candidates that agree with every decoded (attribute, value) pair.
std::vector<int> surviving_candidates(const GameInstance& instance,
                                      const Message& message);

// Keeps the candidates consistent with the message and picks one of them
// uniformly at random. No survivors means failure with chosen_index -1.
EpisodeResult oracle_receiver(const GameInstance& instance,
                              const Message& message, Rng& rng);

// The oracle receiver's success probability for this message: 1/|survivors|
// if the target survives, else 0.
double expected_success(const GameInstance& instance, const Message& message);

struct EpisodeLogRecord {
  std::int64_t instance_id = 0;
  int max_length = 0;
  std::vector<int> symbols;
  int chosen = -1;
  bool success = false;

  bool operator==(const EpisodeLogRecord&) const = default;
};

struct EvaluationResult {
  std::int64_t episodes = 0;
  double accuracy = 0.0;
  double standard_error = 0.0;
  // Mean over instances of expected_success() for the sent messages.
  double expected_accuracy = 0.0;
};

struct EvaluationOptions {
  int max_length = 1;
  int episodes_per_instance = 1;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Plays every instance episodes_per_instance times. Episode e of the
// instance at position i uses RNG stream i * episodes_per_instance + e.
// Log records come out in (instance, episode) order.
EvaluationResult evaluate(std::span<const LabeledInstance* const> instances,
                          const SenderPolicy& sender,
                          const ReceiverPolicy& receiver,
                          const EvaluationOptions& options,
                          std::vector<EpisodeLogRecord>* log = nullptr);

// One JSON object per line:
// {"chosen":..,"id":..,"max_len":..,"success":..,"symbols":[..]}
void write_episode_log(std::ostream& out,
                       std::span<const EpisodeLogRecord> records);
EpisodeLogRecord parse_episode_log_line(std::string_view line);

}  // namespace minsym

#endif  // MINSYM_GAME_HPP_
