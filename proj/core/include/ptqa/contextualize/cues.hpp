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

#ifndef PTQA_CONTEXTUALIZE_CUES_HPP_
#define PTQA_CONTEXTUALIZE_CUES_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "ptqa/kb/semantic_network.hpp"

namespace ptqa {

// The assertion linking a cue to one endpoint of its pair.
struct CueBond {
  RelationId relation;
  double phi = 0.0;
  bool toward_cue = true;  // assertion runs endpoint -> cue

  friend bool operator==(const CueBond&, const CueBond&) = default;
};

// An intermediate concept g_k with g_i R g_k and g_k R g_j.
struct CueCandidate {
  ConceptId cue;
  CueBond left;   // between g_i and the cue
  CueBond right;  // between the cue and g_j
  double gain = 0.0;  // tanh(left.phi) + tanh(right.phi)

  friend bool operator==(const CueCandidate&, const CueCandidate&) = default;
};

inline constexpr std::size_t kAllCues = std::numeric_limits<std::size_t>::max();

// One-hop intermediates adjacent to both g_i and g_j, best gain first, ties
// by ascending concept id, at most `k` of them. Empty when g_i and g_j are
// directly related. Throws UnknownConcept for invalid ids and
// std::invalid_argument when g_i == g_j.
std::vector<CueCandidate> FindCues(const SemanticNetwork& network, ConceptId gi,
                                   ConceptId gj, std::size_t k = kAllCues);

}  // namespace ptqa

#endif  // PTQA_CONTEXTUALIZE_CUES_HPP_
