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

#ifndef PTQA_CONTEXTUALIZE_INTERPRETATION_HPP_
#define PTQA_CONTEXTUALIZE_INTERPRETATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ptqa/contextualize/cues.hpp"
#include "ptqa/kb/semantic_network.hpp"
#include "ptqa/pattern/configuration.hpp"

namespace ptqa {

struct InterpretationParams {
  // Cues per pair without a direct assertion; 0 disables contextualization.
  std::size_t cues_per_pair = 3;
  // Also relate evidence generators to each other (direct bonds and cues).
  // These bonds are identical for every hypothesis of a question.
  bool include_evidence_pairs = false;
  // Discard candidates whose two bonds sum to a non-positive gain.
  bool positive_gain_only = true;
  // Branch-and-bound node limit per interpretation. When reached, the best
  // selection found so far is returned and the stats report exact = false.
  std::size_t search_node_budget = 2'000'000;
};

struct InterpretationStats {
  std::size_t pairs = 0;            // generator pairs considered
  std::size_t direct_bonds = 0;     // pairs with a direct assertion
  std::size_t deficient_pairs = 0;  // pairs without one
  std::size_t candidates = 0;       // admissible cues over all pairs
  std::size_t pruned = 0;           // candidates removed by dominance
  std::size_t shared_components = 0;  // groups of pairs solved jointly
  std::size_t search_nodes = 0;
  bool exact = true;
};

// Deficient pair of generator sites with its admissible cues.
struct PairCandidates {
  std::size_t first = 0;   // generator index of g_i
  std::size_t second = 0;  // generator index of g_j
  std::vector<CueCandidate> cues;
};

// Evidence and hypothesis generators, the direct bonds between them, and
// the admissible cue candidates of every deficient pair. This is the search
// space shared by BuildInterpretation and the brute-force oracle.
struct InterpretationFrame {
  Configuration base;
  std::vector<PairCandidates> pairs;
};

InterpretationFrame PrepareInterpretation(const SemanticNetwork& network,
                                          std::span<const ConceptId> evidence,
                                          std::span<const ConceptId> hypothesis,
                                          const InterpretationParams& params,
                                          InterpretationStats* stats = nullptr);

// Adds the chosen cues (indices into each pair's candidate list) and their
// two bonds each to a copy of the frame's base configuration.
Configuration AssembleInterpretation(
    const InterpretationFrame& frame,
    std::span<const std::vector<std::size_t>> selection);

// Minimum-energy contextualized interpretation of evidence plus one
// hypothesis: every direct evidence/hypothesis bond, plus at most
// `cues_per_pair` cues for each pair lacking one. Cue generators are shared
// across pairs and a bond shared by two selections counts once, so the
// selection is solved jointly (exact branch and bound with dominance
// pruning). Throws DegenerateInput when either side is empty.
Configuration BuildInterpretation(const SemanticNetwork& network,
                                  std::span<const ConceptId> evidence,
                                  std::span<const ConceptId> hypothesis,
                                  const InterpretationParams& params = {},
                                  InterpretationStats* stats = nullptr);

// Test oracle: enumerates every admissible selection and returns the
// minimum-energy configuration. Throws TooLarge above 20 candidates.
Configuration BruteForceBestInterpretation(const SemanticNetwork& network,
                                           std::span<const ConceptId> evidence,
                                           std::span<const ConceptId> hypothesis,
                                           const InterpretationParams& params = {});

inline constexpr std::size_t kBruteForceCandidateLimit = 20;

}  // namespace ptqa

#endif  // PTQA_CONTEXTUALIZE_INTERPRETATION_HPP_
