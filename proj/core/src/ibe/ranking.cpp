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

#include "ptqa/ibe/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ptqa/errors.hpp"

namespace ptqa {

double PairwisePreference(double energy_i, double energy_j) {
  const double x = energy_j - energy_i;
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

bool PreferGroundedSupport(const HypothesisScore& a, const HypothesisScore& b) {
  return a.grounded_energy < b.grounded_energy;
}

Ranking RankHypotheses(std::span<const HypothesisScore> scores, double tie_epsilon,
                       const TieBreaker& tie_breaker) {
  if (scores.size() < 2) {
    throw TooFewHypotheses("ranking needs at least two hypotheses");
  }
  const std::size_t n = scores.size();
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a].energy != scores[b].energy) return scores[a].energy < scores[b].energy;
    return scores[a].index < scores[b].index;
  });

  // Tie groups are anchored at their lowest energy so membership is
  // transitive.
  auto tie_order = [&](std::size_t a, std::size_t b) {
    if (tie_breaker(scores[a], scores[b])) return true;
    if (tie_breaker(scores[b], scores[a])) return false;
    return scores[a].index < scores[b].index;
  };
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n &&
           std::abs(scores[pos[end]].energy - scores[pos[begin]].energy) < tie_epsilon) {
      ++end;
    }
    std::stable_sort(pos.begin() + static_cast<std::ptrdiff_t>(begin),
                     pos.begin() + static_cast<std::ptrdiff_t>(end), tie_order);
    begin = end;
  }

  Ranking ranking;
  ranking.order.reserve(n);
  for (std::size_t p : pos) ranking.order.push_back(scores[p].index);
  ranking.preference.assign(n, std::vector<double>(n, 0.5));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        ranking.preference[i][j] =
            PairwisePreference(scores[i].energy, scores[j].energy);
      }
    }
  }
  const HypothesisScore& first = scores[pos[0]];
  const HypothesisScore& second = scores[pos[1]];
  ranking.indifferent = std::abs(first.energy - second.energy) < tie_epsilon;
  ranking.tie_broken = ranking.indifferent && (tie_breaker(first, second) ||
                                               tie_breaker(second, first));
  return ranking;
}

}  // namespace ptqa
