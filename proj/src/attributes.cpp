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

#include "minsym/attributes.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "minsym/errors.hpp"

namespace minsym {

namespace {

void check_object(const AttributeSpace& space, ObjectView values) {
  if (values.size() != static_cast<std::size_t>(space.num_attributes())) {
    throw DomainError("object has " + std::to_string(values.size()) +
                      " attributes, space has " +
                      std::to_string(space.num_attributes()));
  }
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] >= space.num_values()) {
      throw DomainError("value " + std::to_string(values[a]) +
                        " out of range at attribute " + std::to_string(a));
    }
  }
}

}  // namespace

AttributeSpace::AttributeSpace(int num_attributes, int num_values)
    : num_attributes_(num_attributes), num_values_(num_values) {
  if (num_attributes < 1 || num_attributes > kMaxAttributes) {
    throw DomainError("num_attributes must be in [1, " +
                      std::to_string(kMaxAttributes) + "], got " +
                      std::to_string(num_attributes));
  }
  if (num_values < 1 || num_values > kMaxValues) {
    throw DomainError("num_values must be in [1, " +
                      std::to_string(kMaxValues) + "], got " +
                      std::to_string(num_values));
  }
}

ObjectVector::ObjectVector(const AttributeSpace& space,
                           std::vector<Value> values)
    : space_(space), values_(std::move(values)) {
  check_object(space_, values_);
}

ObjectVector::ObjectVector(const AttributeSpace& space,
                           std::initializer_list<int> values)
    : space_(space) {
  values_.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v >= space.num_values()) {
      throw DomainError("value " + std::to_string(v) + " out of range");
    }
    values_.push_back(static_cast<Value>(v));
  }
  check_object(space_, values_);
}

GameInstance::GameInstance(const AttributeSpace& space,
                           std::vector<Value> flat_values, int target_index)
    : space_(space), values_(std::move(flat_values)), target_index_(target_index) {
  const auto width = static_cast<std::size_t>(space_.num_attributes());
  if (values_.size() % width != 0) {
    throw DomainError("flat object buffer is not a multiple of |A|");
  }
  num_objects_ = static_cast<int>(values_.size() / width);
  if (num_objects_ < 2) {
    throw DomainError("a game needs a target and at least one distractor");
  }
  if (target_index < 0 || target_index >= num_objects_) {
    throw DomainError("target_index " + std::to_string(target_index) +
                      " out of range [0, " + std::to_string(num_objects_) + ")");
  }
  for (int i = 0; i < num_objects_; ++i) check_object(space_, object(i));
}

GameInstance::GameInstance(const AttributeSpace& space,
                           const std::vector<ObjectVector>& objects,
                           int target_index)
    : GameInstance(space,
                   [&] {
                     std::vector<Value> flat;
                     flat.reserve(objects.size() *
                                  static_cast<std::size_t>(space.num_attributes()));
                     for (const auto& o : objects) {
                       if (!(o.space() == space)) {
                         throw DomainError("object from a different space");
                       }
                       flat.insert(flat.end(), o.values().begin(),
                                   o.values().end());
                     }
                     return flat;
                   }(),
                   target_index) {}

ObjectView GameInstance::object(int index) const {
  const auto width = static_cast<std::size_t>(space_.num_attributes());
  return ObjectView(values_).subspan(static_cast<std::size_t>(index) * width,
                                     width);
}

SymbolSet::SymbolSet(std::vector<AttributeValue> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].attribute < 0 ||
        pairs_[i].attribute >= AttributeSpace::kMaxAttributes ||
        pairs_[i].value < 0) {
      throw DomainError("invalid (attribute, value) pair");
    }
    if (i > 0 && pairs_[i].attribute == pairs_[i - 1].attribute) {
      throw DomainError("symbol set repeats attribute " +
                        std::to_string(pairs_[i].attribute));
    }
  }
}

SymbolSet SymbolSet::FromMask(ObjectView target, AttributeMask mask) {
  std::vector<AttributeValue> pairs;
  while (mask != 0) {
    const int a = std::countr_zero(mask);
    mask &= mask - 1;
    if (static_cast<std::size_t>(a) >= target.size()) {
      throw DomainError("mask names an attribute outside the object");
    }
    pairs.push_back({a, target[static_cast<std::size_t>(a)]});
  }
  return SymbolSet(std::move(pairs));
}

SymbolSet SymbolSet::FromAttributes(ObjectView target,
                                    std::span<const int> attributes) {
  std::vector<AttributeValue> pairs;
  pairs.reserve(attributes.size());
  for (int a : attributes) {
    if (a < 0 || static_cast<std::size_t>(a) >= target.size()) {
      throw DomainError("attribute " + std::to_string(a) + " out of range");
    }
    pairs.push_back({a, target[static_cast<std::size_t>(a)]});
  }
  return SymbolSet(std::move(pairs));
}

AttributeMask SymbolSet::mask() const {
  AttributeMask m = 0;
  for (const auto& p : pairs_) m |= AttributeMask{1} << p.attribute;
  return m;
}

Symbol encode_pair(const AttributeSpace& space, int attribute, int value) {
  if (attribute < 0 || attribute >= space.num_attributes()) {
    throw DomainError("attribute " + std::to_string(attribute) +
                      " out of range");
  }
  if (value < 0 || value >= space.num_values()) {
    throw DomainError("value " + std::to_string(value) + " out of range");
  }
  return Symbol{attribute * space.num_values() + value};
}

AttributeValue decode_symbol(const AttributeSpace& space, Symbol symbol) {
  if (symbol.code < 0 || symbol.code >= space.vocabulary_size()) {
    throw DomainError("symbol code " + std::to_string(symbol.code) +
                      " outside vocabulary of size " +
                      std::to_string(space.vocabulary_size()));
  }
  return {symbol.code / space.num_values(), symbol.code % space.num_values()};
}

AttributeMask difference_mask(ObjectView target, ObjectView other) {
  if (target.size() != other.size()) {
    throw DomainError("objects come from different attribute spaces");
  }
  AttributeMask mask = 0;
  for (std::size_t a = 0; a < target.size(); ++a) {
    if (target[a] != other[a]) mask |= AttributeMask{1} << a;
  }
  return mask;
}

std::vector<int> difference_set(ObjectView target, ObjectView other) {
  if (target.size() != other.size()) {
    throw DomainError("objects come from different attribute spaces");
  }
  std::vector<int> out;
  for (std::size_t a = 0; a < target.size(); ++a) {
    if (target[a] != other[a]) out.push_back(static_cast<int>(a));
  }
  return out;
}

void one_hot_into(const AttributeSpace& space, ObjectView object,
                  std::span<std::uint8_t> row) {
  check_object(space, object);
  if (row.size() != static_cast<std::size_t>(space.vocabulary_size())) {
    throw DomainError("one-hot row has the wrong width");
  }
  std::fill(row.begin(), row.end(), std::uint8_t{0});
  for (std::size_t a = 0; a < object.size(); ++a) {
    row[a * static_cast<std::size_t>(space.num_values()) + object[a]] = 1;
  }
}

std::vector<std::uint8_t> one_hot(const AttributeSpace& space,
                                  ObjectView object) {
  std::vector<std::uint8_t> row(
      static_cast<std::size_t>(space.vocabulary_size()));
  one_hot_into(space, object, row);
  return row;
}

ObjectVector from_one_hot(const AttributeSpace& space,
                          std::span<const std::uint8_t> row) {
  if (row.size() != static_cast<std::size_t>(space.vocabulary_size())) {
    throw DomainError("one-hot row has the wrong width");
  }
  const auto width = static_cast<std::size_t>(space.num_values());
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(space.num_attributes()));
  for (int a = 0; a < space.num_attributes(); ++a) {
    const auto block = row.subspan(static_cast<std::size_t>(a) * width, width);
    int hot = -1;
    for (std::size_t v = 0; v < width; ++v) {
      if (block[v] == 0) continue;
      if (block[v] != 1 || hot != -1) {
        throw DomainError("attribute block " + std::to_string(a) +
                          " is not one-hot");
      }
      hot = static_cast<int>(v);
    }
    if (hot == -1) {
      throw DomainError("attribute block " + std::to_string(a) + " is empty");
    }
    values.push_back(static_cast<Value>(hot));
  }
  return ObjectVector(space, std::move(values));
}

std::string to_string(const SymbolSet& symbols) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& p : symbols.pairs()) {
    if (!first) out << ", ";
    first = false;
    out << 'a' << p.attribute << '=' << p.value;
  }
  out << '}';
  return out.str();
}

}  // namespace minsym
