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

#ifndef PTQA_IBE_RANKING_HPP_
#define PTQA_IBE_RANKING_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ptqa {

struct HypothesisScore {
  std::size_t index = 0;
  double energy = 0.0;           // E(c_H)
  double grounded_energy = 0.0;  // grounded part of E(c_H)
  std::size_t bond_count = 0;
};

// Bradley-Terry preference P(H_i > H_j) = e^-Ei / (e^-Ei + e^-Ej), computed
// as a logistic of the energy gap so it never overflows.
double PairwisePreference(double energy_i, double energy_j);

// Orders two hypotheses whose energies are indistinguishable. Returns true
// when `a` should rank ahead of `b`.
using TieBreaker = std::function<bool(const HypothesisScore& a, const HypothesisScore& b)>;

// Default tie rule: more grounded support first, i.e. the lower grounded
// energy (larger sum of grounded bond energies).
bool PreferGroundedSupport(const HypothesisScore& a, const HypothesisScore& b);

inline constexpr double kDefaultTieEpsilon = 1e-9;

struct Ranking {
  std::vector<std::size_t> order;               // hypothesis indices, best first
  std::vector<std::vector<double>> preference;  // [i][j] = P(H_i > H_j)
  bool indifferent = false;  // best and runner-up energies within epsilon
  bool tie_broken = false;   // ... and the tie rule (not index order) split them
};

// Ranks hypotheses by ascending energy, which is the order of the pairwise
// tournament under PairwisePreference. Energies within `tie_epsilon` of the
// first member of their group are ordered by `tie_breaker`, then by index.
// Throws TooFewHypotheses for fewer than two scores.
Ranking RankHypotheses(std::span<const HypothesisScore> scores,
                       double tie_epsilon = kDefaultTieEpsilon,
                       const TieBreaker& tie_breaker = PreferGroundedSupport);

}  // namespace ptqa

#endif  // PTQA_IBE_RANKING_HPP_
