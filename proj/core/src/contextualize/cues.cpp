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

#include "ptqa/contextualize/cues.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptqa {

std::vector<CueCandidate> FindCues(const SemanticNetwork& network, ConceptId gi,
                                   ConceptId gj, std::size_t k) {
  const auto left = network.Neighbors(gi);
  const auto right = network.Neighbors(gj);
  if (gi == gj) {
    throw std::invalid_argument("cue search needs two distinct concepts");
  }
  if (network.Phi(gi, gj)) return {};

  std::vector<CueCandidate> out;
  auto a = left.begin();
  auto b = right.begin();
  while (a != left.end() && b != right.end()) {
    if (a->node < b->node) {
      ++a;
    } else if (b->node < a->node) {
      ++b;
    } else {
      const ConceptId cue = a->node;
      if (cue != gi && cue != gj) {
        const PhiResult l = *network.Phi(gi, cue);
        const PhiResult r = *network.Phi(cue, gj);
        out.push_back(CueCandidate{
            cue, CueBond{l.relation, l.strength, l.forward},
            CueBond{r.relation, r.strength, !r.forward},
            std::tanh(l.strength) + std::tanh(r.strength)});
      }
      while (a != left.end() && a->node == cue) ++a;
      while (b != right.end() && b->node == cue) ++b;
    }
  }
  std::sort(out.begin(), out.end(), [](const CueCandidate& x, const CueCandidate& y) {
    if (x.gain != y.gain) return x.gain > y.gain;
    return x.cue < y.cue;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace ptqa
