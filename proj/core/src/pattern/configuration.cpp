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

#include "ptqa/pattern/configuration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptqa/errors.hpp"

namespace ptqa {

double BondEnergy(double phi) {
  if (!std::isfinite(phi)) {
    throw NonFiniteInput("bond strength must be finite");
  }
  return std::tanh(phi);
}

std::size_t Configuration::AddGenerator(ConceptId node, Level level) {
  if (auto existing = FindGenerator(node, level)) return *existing;
  const Grounding grounding =
      level == Level::kCue ? Grounding::kUngrounded : Grounding::kGrounded;
  generators_.push_back(Generator{node, grounding, level});
  return generators_.size() - 1;
}

std::optional<std::size_t> Configuration::FindGenerator(ConceptId node,
                                                        Level level) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].node == node && generators_[i].level == level) {
      return i;
    }
  }
  return std::nullopt;
}

bool Configuration::HasBond(std::size_t from, std::size_t to,
                            RelationId relation) const {
  for (const Bond& b : bonds_) {
    if (b.from == from && b.to == to && b.relation == relation) return true;
  }
  return false;
}

bool Configuration::AddBond(std::size_t from, std::size_t to,
                            RelationId relation, double phi) {
  if (from >= generators_.size() || to >= generators_.size() || from == to) {
    throw std::out_of_range("bond endpoints must be distinct generator sites");
  }
  if (HasBond(from, to, relation)) return false;
  bonds_.push_back(Bond{from, to, relation, phi, BondEnergy(phi)});
  return true;
}

bool Configuration::IsGroundedBond(const Bond& bond) const {
  return generators_[bond.from].grounded() && generators_[bond.to].grounded();
}

std::size_t Configuration::cue_count() const {
  std::size_t n = 0;
  for (const Generator& g : generators_) n += g.grounded() ? 0 : 1;
  return n;
}

EnergySplit ConfigEnergy(const Configuration& config) {
  double grounded = 0.0;
  double ungrounded = 0.0;
  for (const Bond& b : config.bonds()) {
    (config.IsGroundedBond(b) ? grounded : ungrounded) -= b.energy;
  }
  return EnergySplit{grounded + ungrounded, grounded, ungrounded};
}

}  // namespace ptqa
