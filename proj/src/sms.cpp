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

#include "minsym/sms.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "minsym/errors.hpp"

namespace minsym {

namespace {

bool distractor_matches(ObjectView target, ObjectView other,
                        std::span<const int> attributes) {
  for (int a : attributes) {
    if (other[static_cast<std::size_t>(a)] !=
        target[static_cast<std::size_t>(a)]) {
      return false;
    }
  }
  return true;
}

bool is_unique_combination(const GameInstance& instance,
                           std::span<const int> attributes) {
  const ObjectView target = instance.target();
  for (int i = 0; i < instance.num_objects(); ++i) {
    if (i == instance.target_index()) continue;
    if (distractor_matches(target, instance.object(i), attributes)) {
      return false;
    }
  }
  return true;
}

// Advances `combo` to the next r-combination of [0, n) in lexicographic
// order. Returns false after the last one.
bool next_combination(std::vector<int>& combo, int n) {
  const int r = static_cast<int>(combo.size());
  int i = r - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

int popcount(AttributeMask m) { return std::popcount(m); }

// Drops duplicates and any set that contains another set: hitting the
// smaller one hits the larger one too.
std::vector<AttributeMask> reduce_sets(std::span<const AttributeMask> sets) {
  std::vector<AttributeMask> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end(), [](AttributeMask a, AttributeMask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<AttributeMask> kept;
  for (AttributeMask s : sorted) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [s](AttributeMask k) {
      return (k & s) == k;
    });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

class HittingSetSearch {
 public:
  explicit HittingSetSearch(std::vector<AttributeMask> sets)
      : sets_(std::move(sets)) {}

  AttributeMask Solve() {
    AttributeMask forced = 0;
    for (AttributeMask s : sets_) {
      if (popcount(s) == 1) forced |= s;
    }
    best_ = Greedy(forced);
    best_size_ = popcount(best_);
    Branch(forced, 0);
    return best_;
  }

 private:
  // Seeds the upper bound: repeatedly take the attribute hitting the most
  // open sets, lowest index on ties.
  AttributeMask Greedy(AttributeMask chosen) const {
    for (;;) {
      int counts[AttributeSpace::kMaxAttributes] = {};
      bool open = false;
      for (AttributeMask s : sets_) {
        if ((s & chosen) != 0) continue;
        open = true;
        for (AttributeMask m = s; m != 0; m &= m - 1) ++counts[std::countr_zero(m)];
      }
      if (!open) return chosen;
      int best_attr = 0;
      for (int a = 1; a < AttributeSpace::kMaxAttributes; ++a) {
        if (counts[a] > counts[best_attr]) best_attr = a;
      }
      chosen |= AttributeMask{1} << best_attr;
    }
  }

  // Size of a family of pairwise-disjoint open sets: each needs its own
  // attribute, so this bounds the remaining cost from below.
  int DisjointLowerBound(AttributeMask chosen, AttributeMask excluded) const {
    AttributeMask used = 0;
    int bound = 0;
    for (AttributeMask s : sets_) {
      if ((s & chosen) != 0) continue;
      const AttributeMask live = s & ~excluded;
      if ((live & used) == 0) {
        used |= live;
        ++bound;
      }
    }
    return bound;
  }

  // `excluded` holds attributes already fully explored at an ancestor; they
  // may not be added again below it.
  void Branch(AttributeMask chosen, AttributeMask excluded) {
    const int size = popcount(chosen);
    int branch_index = -1;
    int branch_width = AttributeSpace::kMaxAttributes + 1;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if ((sets_[i] & chosen) != 0) continue;
      const int width = popcount(sets_[i] & ~excluded);
      if (width == 0) return;
      if (width < branch_width) {
        branch_width = width;
        branch_index = static_cast<int>(i);
      }
    }
    if (branch_index < 0) {
      if (size < best_size_) {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if (size + DisjointLowerBound(chosen, excluded) >= best_size_) return;

    AttributeMask candidates =
        sets_[static_cast<std::size_t>(branch_index)] & ~excluded;
    while (candidates != 0) {
      const AttributeMask bit = candidates & (~candidates + 1);
      candidates &= candidates - 1;
      Branch(chosen | bit, excluded);
      excluded |= bit;
      if (size + 1 >= best_size_) return;
    }
  }

  std::vector<AttributeMask> sets_;
  AttributeMask best_ = 0;
  int best_size_ = 0;
};

std::vector<AttributeMask> difference_masks(const GameInstance& instance) {
  std::vector<AttributeMask> masks;
  masks.reserve(static_cast<std::size_t>(instance.num_distractors()));
  const ObjectView target = instance.target();
  for (int i = 0; i < instance.num_objects(); ++i) {
    if (i == instance.target_index()) continue;
    masks.push_back(difference_mask(target, instance.object(i)));
  }
  return masks;
}

}  // namespace

SmsResult solve_min_sym_enum(const GameInstance& instance) {
  const int n = instance.space().num_attributes();
  for (int r = 1; r <= n; ++r) {
    std::vector<int> combo(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      if (is_unique_combination(instance, combo)) {
        return {r, SymbolSet::FromAttributes(instance.target(), combo)};
      }
    } while (next_combination(combo, n));
  }
  return {};
}

std::optional<AttributeMask> minimum_hitting_set(
    std::span<const AttributeMask> sets) {
  if (std::any_of(sets.begin(), sets.end(),
                  [](AttributeMask s) { return s == 0; })) {
    return std::nullopt;
  }
  if (sets.empty()) return AttributeMask{0};
  return HittingSetSearch(reduce_sets(sets)).Solve();
}

SmsResult solve_min_sym_hitting(const GameInstance& instance) {
  const auto masks = difference_masks(instance);
  const auto hitting = minimum_hitting_set(masks);
  if (!hitting) return {};
  return {popcount(*hitting), SymbolSet::FromMask(instance.target(), *hitting)};
}

SmsResult solve_min_sym(const GameInstance& instance, SmsSolver solver) {
  return solver == SmsSolver::kEnumeration ? solve_min_sym_enum(instance)
                                           : solve_min_sym_hitting(instance);
}

bool verify_witness(const GameInstance& instance, const SymbolSet& witness) {
  const ObjectView target = instance.target();
  std::vector<int> attributes;
  attributes.reserve(witness.size());
  for (const auto& p : witness.pairs()) {
    if (p.attribute >= instance.space().num_attributes() ||
        target[static_cast<std::size_t>(p.attribute)] != p.value) {
      throw DomainError("witness pair a" + std::to_string(p.attribute) + "=" +
                        std::to_string(p.value) + " is not drawn from the target");
    }
    attributes.push_back(p.attribute);
  }
  return is_unique_combination(instance, attributes);
}

}  // namespace minsym
