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

#ifndef MINSYM_ATTRIBUTES_HPP_
#define MINSYM_ATTRIBUTES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace minsym {

using Value = std::uint8_t;
using ObjectView = std::span<const Value>;
using AttributeMask = std::uint64_t;

// |A| attributes, each taking one of |V| values. Values are plain indices;
// labels such as "red" only exist in fixtures and docs.
class AttributeSpace {
 public:
  static constexpr int kMaxAttributes = 64;
  static constexpr int kMaxValues = 256;

  AttributeSpace(int num_attributes, int num_values);

  int num_attributes() const { return num_attributes_; }
  int num_values() const { return num_values_; }
  int vocabulary_size() const { return num_attributes_ * num_values_; }

  bool operator==(const AttributeSpace&) const = default;

 private:
  int num_attributes_;
  int num_values_;
};

// One object: a value index per attribute.
class ObjectVector {
 public:
  ObjectVector(const AttributeSpace& space, std::vector<Value> values);
  ObjectVector(const AttributeSpace& space, std::initializer_list<int> values);

  const AttributeSpace& space() const { return space_; }
  ObjectView values() const { return values_; }
  Value operator[](std::size_t attribute) const { return values_[attribute]; }
  operator ObjectView() const { return values_; }

  bool operator==(const ObjectVector&) const = default;

 private:
  AttributeSpace space_;
  std::vector<Value> values_;
};

// Target plus K >= 1 distractors, stored row-major.
class GameInstance {
 public:
  GameInstance(const AttributeSpace& space, std::vector<Value> flat_values,
               int target_index);
  GameInstance(const AttributeSpace& space,
               const std::vector<ObjectVector>& objects, int target_index);

  const AttributeSpace& space() const { return space_; }
  int num_objects() const { return num_objects_; }
  int num_distractors() const { return num_objects_ - 1; }
  int target_index() const { return target_index_; }
  ObjectView object(int index) const;
  ObjectView target() const { return object(target_index_); }
  std::span<const Value> flat_values() const { return values_; }

  bool operator==(const GameInstance&) const = default;

 private:
  AttributeSpace space_;
  std::vector<Value> values_;
  int num_objects_;
  int target_index_;
};

struct AttributeValue {
  int attribute;
  int value;

  auto operator<=>(const AttributeValue&) const = default;
};

// Candidate message content: (attribute, value) pairs, at most one per
// attribute, kept sorted by attribute.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::vector<AttributeValue> pairs);

  // The pairs the target takes on the attributes set in `mask`.
  static SymbolSet FromMask(ObjectView target, AttributeMask mask);
  static SymbolSet FromAttributes(ObjectView target,
                                  std::span<const int> attributes);

  const std::vector<AttributeValue>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  AttributeMask mask() const;

  bool operator==(const SymbolSet&) const = default;

 private:
  std::vector<AttributeValue> pairs_;
};

struct Symbol {
  int code;

  auto operator<=>(const Symbol&) const = default;
};

// code = attribute * |V| + value.
Symbol encode_pair(const AttributeSpace& space, int attribute, int value);
AttributeValue decode_symbol(const AttributeSpace& space, Symbol symbol);

// Attributes on which the two objects differ, ascending.
std::vector<int> difference_set(ObjectView target, ObjectView other);
AttributeMask difference_mask(ObjectView target, ObjectView other);

// Concatenated one-hot blocks of width |V|.
std::vector<std::uint8_t> one_hot(const AttributeSpace& space,
                                  ObjectView object);
void one_hot_into(const AttributeSpace& space, ObjectView object,
                  std::span<std::uint8_t> row);
ObjectVector from_one_hot(const AttributeSpace& space,
                          std::span<const std::uint8_t> row);

std::string to_string(const SymbolSet& symbols);

}  // namespace minsym

#endif  // MINSYM_ATTRIBUTES_HPP_
