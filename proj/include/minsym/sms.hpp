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

#ifndef MINSYM_SMS_HPP_
#define MINSYM_SMS_HPP_

#include <optional>
#include <span>

#include "minsym/attributes.hpp"

namespace minsym {

// min(|M|) for one game. Both fields are empty iff some distractor is an
// exact copy of the target, in which case no message can single it out.
struct SmsResult {
  std::optional<int> min_symbols;
  std::optional<SymbolSet> witness;

  bool solvable() const { return min_symbols.has_value(); }
};

enum class SmsSolver { kEnumeration, kHittingSet };

// Reference solver. Tries target symbol sets by ascending size, in
// lexicographic attribute order within a size, and returns the first one
// that no distractor fully agrees with. Exponential in |A| in the worst case.
SmsResult solve_min_sym_enum(const GameInstance& instance);

// Same answer via the hitting-set view: a symbol set rules out distractor d
// iff it contains an attribute where d differs from the target, so min(|M|)
// is the size of a minimum set of attributes hitting every difference set.
SmsResult solve_min_sym_hitting(const GameInstance& instance);

SmsResult solve_min_sym(const GameInstance& instance,
                        SmsSolver solver = SmsSolver::kHittingSet);

// True iff no distractor agrees with the target on every pair in `witness`.
// Throws DomainError if a pair does not match the target.
bool verify_witness(const GameInstance& instance, const SymbolSet& witness);

// Exact minimum hitting set over attribute masks (bit a = attribute a).
// Returns nullopt if any set is empty. Among optimal solutions the one found
// first by the branching order is returned, so the result is deterministic.
std::optional<AttributeMask> minimum_hitting_set(
    std::span<const AttributeMask> sets);

}  // namespace minsym

#endif  // MINSYM_SMS_HPP_
