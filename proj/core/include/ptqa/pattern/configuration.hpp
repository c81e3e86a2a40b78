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

#ifndef PTQA_PATTERN_CONFIGURATION_HPP_
#define PTQA_PATTERN_CONFIGURATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptqa/kb/types.hpp"

namespace ptqa {

enum class Grounding : std::uint8_t { kGrounded, kUngrounded };

// Two-level POSET (evidence above hypothesis) plus the cue level for
// contextualization generators.
enum class Level : std::uint8_t { kEvidence, kHypothesis, kCue };

struct Generator {
  ConceptId node;
  Grounding grounding = Grounding::kGrounded;
  Level level = Level::kEvidence;

  bool grounded() const { return grounding == Grounding::kGrounded; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Semantic bond between two generator sites. `from`/`to` index into the
// owning configuration's generator list.
struct Bond {
  std::size_t from = 0;
  std::size_t to = 0;
  RelationId relation;
  double phi = 0.0;
  double energy = 0.0;  // tanh(phi)

  friend bool operator==(const Bond&, const Bond&) = default;
};

struct EnergySplit {
  double total = 0.0;       // E(c)
  double grounded = 0.0;    // bonds between grounded generators
  double ungrounded = 0.0;  // bonds touching at least one cue
};

// tanh(phi). Throws NonFiniteInput for NaN or infinite phi.
double BondEnergy(double phi);

// Log of the unnormalized configuration probability, P(c) ~ exp(-E).
inline double ConfigLogWeight(double energy) { return -energy; }

// A connector graph populated by generators. Generators are unique by
// (concept, level); bonds are unique by (from, to, relation).
class Configuration {
 public:
  // Returns the index of the generator, adding it if new. Grounding is
  // fixed by the level: cues are ungrounded, everything else grounded.
  std::size_t AddGenerator(ConceptId node, Level level);
  std::optional<std::size_t> FindGenerator(ConceptId node, Level level) const;

  // Adds a bond between existing generator sites. Returns false when an
  // identical bond is already present.
  bool AddBond(std::size_t from, std::size_t to, RelationId relation, double phi);
  bool HasBond(std::size_t from, std::size_t to, RelationId relation) const;

  std::span<const Generator> generators() const { return generators_; }
  std::span<const Bond> bonds() const { return bonds_; }

  // True when both endpoints of the bond are grounded generators.
  bool IsGroundedBond(const Bond& bond) const;

  std::size_t cue_count() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<Bond> bonds_;
};

// E(c) = -sum of bond energies, with its grounded/ungrounded partition.
EnergySplit ConfigEnergy(const Configuration& config);

}  // namespace ptqa

#endif  // PTQA_PATTERN_CONFIGURATION_HPP_
