// Copyright 2026 The ptqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTQA_KB_TYPES_HPP_
#define PTQA_KB_TYPES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace ptqa {

// Dense handle for an interned concept URI ("en/play_piano").
struct ConceptId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const ConceptId&) const = default;
};

// Interned relation label ("IsA", "UsedFor", ...).
struct RelationId {
  std::uint16_t value = 0;

  constexpr auto operator<=>(const RelationId&) const = default;
};

// Orientation of an adjacency entry relative to the concept that owns it.
enum class Direction : std::uint8_t {
  kOutgoing = 0,  // owner --relation--> neighbor
  kIncoming = 1,  // neighbor --relation--> owner
};

// One assertion as read from the dump, before interning.
struct RawAssertion {
  std::string start;     // normalized concept URI, e.g. "en/piano"
  std::string end;
  std::string relation;  // final URI segment, e.g. "IsA"
  double weight = 0.0;   // signed after negative-relation mapping
};

// An interned assertion.
struct Assertion {
  ConceptId start;
  ConceptId end;
  RelationId relation;
  double weight = 0.0;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

// Adjacency entry. Weight is stored single precision; the index holds
// millions of these.
struct Neighbor {
  ConceptId node;
  RelationId relation;
  Direction direction = Direction::kOutgoing;
  float weight = 0.0F;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Result of a direct-assertion lookup between two concepts.
struct PhiResult {
  double strength = 0.0;  // signed assertion strength
  RelationId relation;
  bool forward = true;    // true when the assertion runs from the first
                          // argument to the second

  friend bool operator==(const PhiResult&, const PhiResult&) = default;
};

}  // namespace ptqa

template <>
struct std::hash<ptqa::ConceptId> {
  std::size_t operator()(ptqa::ConceptId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // PTQA_KB_TYPES_HPP_
