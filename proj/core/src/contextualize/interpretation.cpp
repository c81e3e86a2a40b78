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

#include "ptqa/contextualize/interpretation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

void CheckNonEmpty(std::span<const ConceptId> evidence,
                   std::span<const ConceptId> hypothesis) {
  if (evidence.empty()) throw DegenerateInput("no evidence concepts");
  if (hypothesis.empty()) throw DegenerateInput("no hypothesis concepts");
}

// Adds the direct bond for (first, second) or records the pair as
// deficient together with its admissible cues.
void RelatePair(const SemanticNetwork& network, InterpretationFrame& frame,
                std::size_t first, std::size_t second, bool poset_direction,
                const InterpretationParams& params, InterpretationStats& stats) {
  const ConceptId a = frame.base.generators()[first].node;
  const ConceptId b = frame.base.generators()[second].node;
  if (a == b) return;
  ++stats.pairs;
  if (const auto phi = network.Phi(a, b)) {
    ++stats.direct_bonds;
    if (poset_direction || phi->forward) {
      frame.base.AddBond(first, second, phi->relation, phi->strength);
    } else {
      frame.base.AddBond(second, first, phi->relation, phi->strength);
    }
    return;
  }
  ++stats.deficient_pairs;
  if (params.cues_per_pair == 0) return;
  auto cues = FindCues(network, a, b);
  if (params.positive_gain_only) {
    std::erase_if(cues, [](const CueCandidate& c) { return !(c.gain > 0.0); });
  }
  if (cues.empty()) return;
  stats.candidates += cues.size();
  frame.pairs.push_back(PairCandidates{first, second, std::move(cues)});
}

// ---------------------------------------------------------------------------
// Joint cue selection.
//
// Selecting cue x for pair (a, b) activates bonds (a, x) and (b, x). Two
// pairs that share an endpoint and choose the same cue share a bond, which
// counts once. The objective is the sum of tanh(phi) over active bonds,
// subject to at most k cues per pair.

struct SelectionProblem {
  struct Candidate {
    std::size_t pair = 0;
    std::size_t index = 0;  // position in PairCandidates::cues
    std::size_t bonds[2] = {0, 0};
    double gain = 0.0;
    bool removed = false;
  };

  std::vector<double> bond_value;
  std::vector<std::size_t> bond_site;  // generator site the bond attaches to
  std::vector<std::array<std::size_t, 2>> pair_sites;
  std::vector<Candidate> candidates;
  std::vector<std::vector<std::size_t>> by_pair;  // candidate ids
  std::size_t k = 0;

  SelectionProblem(const InterpretationFrame& frame, std::size_t slots) : k(slots) {
    // A bond is identified by its endpoint site and the cue assertion.
    std::map<std::tuple<std::size_t, std::uint32_t, std::uint16_t, bool>, std::size_t>
        ids;
    auto bond_id = [&](std::size_t site, ConceptId cue, const CueBond& b) {
      const auto key = std::tuple(site, cue.value, b.relation.value, b.toward_cue);
      auto [it, inserted] = ids.emplace(key, bond_value.size());
      if (inserted) {
        bond_value.push_back(std::tanh(b.phi));
        bond_site.push_back(site);
      }
      return it->second;
    };
    by_pair.resize(frame.pairs.size());
    for (std::size_t p = 0; p < frame.pairs.size(); ++p) {
      const PairCandidates& pc = frame.pairs[p];
      pair_sites.push_back({pc.first, pc.second});
      for (std::size_t i = 0; i < pc.cues.size(); ++i) {
        const CueCandidate& c = pc.cues[i];
        Candidate cand;
        cand.pair = p;
        cand.index = i;
        cand.bonds[0] = bond_id(pc.first, c.cue, c.left);
        cand.bonds[1] = bond_id(pc.second, c.cue, c.right);
        cand.gain = bond_value[cand.bonds[0]] + bond_value[cand.bonds[1]];
        by_pair[p].push_back(candidates.size());
        candidates.push_back(cand);
      }
    }
  }

  std::vector<std::size_t> Occurrences() const {
    std::vector<std::size_t> occ(bond_value.size(), 0);
    for (const Candidate& c : candidates) {
      if (c.removed) continue;
      ++occ[c.bonds[0]];
      ++occ[c.bonds[1]];
    }
    return occ;
  }

  // Best and worst marginal value a candidate can have in any selection.
  double Optimistic(const Candidate& c, const std::vector<std::size_t>& occ) const {
    double v = 0.0;
    for (std::size_t b : c.bonds) {
      v += occ[b] > 1 ? std::max(0.0, bond_value[b]) : bond_value[b];
    }
    return v;
  }
  double Pessimistic(const Candidate& c, const std::vector<std::size_t>& occ) const {
    double v = 0.0;
    for (std::size_t b : c.bonds) {
      v += occ[b] > 1 ? std::min(0.0, bond_value[b]) : bond_value[b];
    }
    return v;
  }

  // Removes candidates that some optimal selection provably avoids:
  //  - optimistic value <= 0 (dropping it never hurts);
  //  - outside the k best pessimistic values of its pair while its
  //    optimistic value is no better than the k-th of those (swap it for
  //    an unused member of that top k).
  // Returns the number removed.
  std::size_t Prune() {
    std::size_t removed = 0;
    for (;;) {
      const auto occ = Occurrences();
      std::size_t round = 0;
      for (Candidate& c : candidates) {
        if (!c.removed && Optimistic(c, occ) <= 0.0) {
          c.removed = true;
          ++round;
        }
      }
      if (round == 0) {
        for (const auto& ids : by_pair) {
          std::vector<std::size_t> live;
          for (std::size_t id : ids) {
            if (!candidates[id].removed) live.push_back(id);
          }
          if (live.size() <= k) continue;
          std::vector<std::pair<double, std::size_t>> pess;
          for (std::size_t id : live) {
            pess.emplace_back(Pessimistic(candidates[id], occ), id);
          }
          std::stable_sort(pess.begin(), pess.end(),
                           [](const auto& x, const auto& y) { return x.first > y.first; });
          const double tau = pess[k - 1].first;
          for (std::size_t r = k; r < pess.size(); ++r) {
            Candidate& c = candidates[pess[r].second];
            if (Optimistic(c, occ) <= tau) {
              c.removed = true;
              ++round;
            }
          }
        }
      }
      if (round == 0) return removed;
      removed += round;
    }
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const SelectionProblem& problem, std::vector<std::size_t> pairs,
                 std::size_t node_budget)
      : problem_(problem),
        pairs_(std::move(pairs)),
        budget_(node_budget),
        active_(problem.bond_value.size(), 0),
        occ_(problem.Occurrences()) {
    for (std::size_t p : pairs_) {
      std::vector<std::size_t> live;
      for (std::size_t id : problem_.by_pair[p]) {
        if (!problem_.candidates[id].removed) live.push_back(id);
      }
      std::stable_sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) {
        return problem_.Optimistic(problem_.candidates[x], occ_) >
               problem_.Optimistic(problem_.candidates[y], occ_);
      });
      order_.push_back(std::move(live));
    }
    current_.resize(pairs_.size());
    for (std::size_t p : pairs_) {
      for (std::size_t site : problem_.pair_sites[p]) {
        if (!site_slot_.contains(site)) site_slot_.emplace(site, site_slot_.size());
      }
    }
    site_bonds_.resize(site_slot_.size());
    site_capacity_.resize(site_slot_.size());
    seen_.assign(problem_.bond_value.size(), 0);
  }

  // Returns per-pair chosen candidate ids (aligned with `pairs`).
  std::vector<std::vector<std::size_t>> Solve() {
    Greedy();
    Improve();
    Search(0, 0, 0, 0.0);
    return best_;
  }

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ <= budget_; }

 private:
  double Activate(std::size_t id) {
    double gain = 0.0;
    for (std::size_t b : problem_.candidates[id].bonds) {
      if (active_[b]++ == 0) gain += problem_.bond_value[b];
    }
    return gain;
  }
  void Deactivate(std::size_t id) {
    for (std::size_t b : problem_.candidates[id].bonds) --active_[b];
  }
  double Marginal(std::size_t id) const {
    double gain = 0.0;
    for (std::size_t b : problem_.candidates[id].bonds) {
      if (active_[b] == 0) gain += problem_.bond_value[b];
    }
    return gain;
  }
  // Upper bound on what candidate `id` can still add.
  double Ceiling(std::size_t id) const {
    double v = 0.0;
    for (std::size_t b : problem_.candidates[id].bonds) {
      if (active_[b] != 0) continue;
      v += occ_[b] > 1 ? std::max(0.0, problem_.bond_value[b]) : problem_.bond_value[b];
    }
    return v;
  }
  double PairCeiling(std::size_t slot, std::size_t from, std::size_t slots) {
    scratch_.clear();
    const auto& live = order_[slot];
    for (std::size_t i = from; i < live.size(); ++i) {
      const double v = Ceiling(live[i]);
      if (v > 0.0) scratch_.push_back(v);
    }
    const std::size_t take = std::min(slots, scratch_.size());
    std::partial_sort(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(take),
                      scratch_.end(), std::greater<>());
    return std::accumulate(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(take),
                           0.0);
  }

  // Every bond attaches to one site, so the remaining gain splits by site.
  // A site can gain at most one new bond per free slot of the pairs that
  // touch it, which bounds shared hub cues far tighter than PairCeiling.
  double SiteCeiling(std::size_t slot, std::size_t index, std::size_t taken) {
    ++stamp_;
    for (auto& bonds : site_bonds_) bonds.clear();
    std::fill(site_capacity_.begin(), site_capacity_.end(), 0);
    for (std::size_t s = slot; s < pairs_.size(); ++s) {
      const auto& live = order_[s];
      const std::size_t from = s == slot ? index : 0;
      const std::size_t free = s == slot ? problem_.k - taken : problem_.k;
      const std::size_t usable = std::min(free, live.size() - std::min(from, live.size()));
      for (std::size_t site : problem_.pair_sites[pairs_[s]]) {
        site_capacity_[site_slot_.at(site)] += usable;
      }
      for (std::size_t i = from; i < live.size(); ++i) {
        for (std::size_t b : problem_.candidates[live[i]].bonds) {
          if (active_[b] != 0 || seen_[b] == stamp_ || problem_.bond_value[b] <= 0.0) continue;
          seen_[b] = stamp_;
          site_bonds_[site_slot_.at(problem_.bond_site[b])].push_back(problem_.bond_value[b]);
        }
      }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < site_bonds_.size(); ++i) {
      auto& values = site_bonds_[i];
      const std::size_t take = std::min(site_capacity_[i], values.size());
      std::partial_sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(take),
                        values.end(), std::greater<>());
      total += std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(take),
                               0.0);
    }
    return total;
  }

  double SelectionValue(const std::vector<std::vector<std::size_t>>& chosen) {
    double value = 0.0;
    for (const auto& c : chosen) {
      for (std::size_t id : c) value += Activate(id);
    }
    for (const auto& c : chosen) {
      for (std::size_t id : c) Deactivate(id);
    }
    return value;
  }

  // Local search on the incumbent: drop, add or swap one cue of one pair
  // while that strictly improves the value.
  void Improve() {
    auto chosen = best_;
    double value = best_value_;
    constexpr double kMinStep = 1e-12;
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t s = 0; s < pairs_.size() && !improved; ++s) {
        auto& mine = chosen[s];
        // Swap position j for candidate c (j == mine.size() means add).
        for (std::size_t j = 0; j <= mine.size() && !improved; ++j) {
          if (j == mine.size() && mine.size() >= problem_.k) break;
          if (j < mine.size()) {
            auto trial = chosen;
            trial[s].erase(trial[s].begin() + static_cast<std::ptrdiff_t>(j));
            const double v = SelectionValue(trial);
            if (v > value + kMinStep) {
              chosen = std::move(trial);
              value = v;
              improved = true;
              break;
            }
          }
          for (std::size_t c : order_[s]) {
            if (std::find(mine.begin(), mine.end(), c) != mine.end()) continue;
            auto trial = chosen;
            if (j < mine.size()) {
              trial[s][j] = c;
            } else {
              trial[s].push_back(c);
            }
            const double v = SelectionValue(trial);
            if (v > value + kMinStep) {
              chosen = std::move(trial);
              value = v;
              improved = true;
              break;
            }
          }
        }
      }
    }
    best_ = std::move(chosen);
    best_value_ = value;
  }

  void Greedy() {
    double value = 0.0;
    std::vector<std::vector<std::size_t>> chosen(pairs_.size());
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
      std::vector<bool> used(order_[s].size(), false);
      for (std::size_t n = 0; n < problem_.k; ++n) {
        double best_gain = 0.0;
        std::size_t best_i = order_[s].size();
        for (std::size_t i = 0; i < order_[s].size(); ++i) {
          if (used[i]) continue;
          const double g = Marginal(order_[s][i]);
          if (g > best_gain) {
            best_gain = g;
            best_i = i;
          }
        }
        if (best_i == order_[s].size()) break;
        used[best_i] = true;
        value += Activate(order_[s][best_i]);
        chosen[s].push_back(order_[s][best_i]);
      }
    }
    for (const auto& c : chosen) {
      for (std::size_t id : c) Deactivate(id);
    }
    best_value_ = value;
    best_ = std::move(chosen);
  }

  void Search(std::size_t slot, std::size_t index, std::size_t taken, double value) {
    if (nodes_ > budget_) return;
    ++nodes_;
    if (slot == pairs_.size()) {
      if (value > best_value_) {
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    const auto& live = order_[slot];
    if (index == live.size() || taken == problem_.k) {
      Search(slot + 1, 0, 0, value);
      return;
    }
    double pair_bound = PairCeiling(slot, index, problem_.k - taken);
    for (std::size_t s = slot + 1; s < pairs_.size(); ++s) {
      pair_bound += PairCeiling(s, 0, problem_.k);
    }
    if (value + pair_bound <= best_value_) return;
    if (value + SiteCeiling(slot, index, taken) <= best_value_) return;

    const std::size_t id = live[index];
    const double gain = Activate(id);
    current_[slot].push_back(id);
    Search(slot, index + 1, taken + 1, value + gain);
    current_[slot].pop_back();
    Deactivate(id);

    Search(slot, index + 1, taken, value);
  }

  const SelectionProblem& problem_;
  std::vector<std::size_t> pairs_;
  std::size_t budget_;
  std::vector<std::size_t> active_;  // reference counts per bond
  std::vector<std::size_t> occ_;
  std::vector<std::vector<std::size_t>> order_;
  std::vector<std::vector<std::size_t>> current_;
  std::vector<std::vector<std::size_t>> best_;
  double best_value_ = 0.0;
  std::size_t nodes_ = 0;
  std::vector<double> scratch_;
  std::map<std::size_t, std::size_t> site_slot_;  // generator site -> dense index
  std::vector<std::vector<double>> site_bonds_;
  std::vector<std::size_t> site_capacity_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

std::size_t Find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::vector<std::size_t>> SelectCues(const InterpretationFrame& frame,
                                                 const InterpretationParams& params,
                                                 InterpretationStats& stats) {
  std::vector<std::vector<std::size_t>> selection(frame.pairs.size());
  if (frame.pairs.empty() || params.cues_per_pair == 0) return selection;

  SelectionProblem problem(frame, params.cues_per_pair);
  stats.pruned = problem.Prune();

  // Pairs interact only through bonds that more than one candidate uses.
  const auto occ = problem.Occurrences();
  std::vector<std::size_t> parent(frame.pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> owner(problem.bond_value.size(), frame.pairs.size());
  for (const auto& c : problem.candidates) {
    if (c.removed) continue;
    for (std::size_t b : c.bonds) {
      if (owner[b] == frame.pairs.size()) {
        owner[b] = c.pair;
      } else {
        parent[Find(parent, c.pair)] = Find(parent, owner[b]);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t p = 0; p < frame.pairs.size(); ++p) {
    components[Find(parent, p)].push_back(p);
  }

  std::size_t budget = params.search_node_budget;
  for (const auto& [root, pairs] : components) {
    (void)root;
    bool shared = false;
    for (std::size_t p : pairs) {
      for (std::size_t id : problem.by_pair[p]) {
        const auto& c = problem.candidates[id];
        if (!c.removed && (occ[c.bonds[0]] > 1 || occ[c.bonds[1]] > 1)) shared = true;
      }
    }
    if (!shared) {
      // Independent pair: values are exact and additive, take the top k.
      for (std::size_t p : pairs) {
        std::vector<std::size_t> live;
        for (std::size_t id : problem.by_pair[p]) {
          if (!problem.candidates[id].removed) live.push_back(id);
        }
        std::stable_sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) {
          return problem.candidates[x].gain > problem.candidates[y].gain;
        });
        if (live.size() > params.cues_per_pair) live.resize(params.cues_per_pair);
        for (std::size_t id : live) selection[p].push_back(problem.candidates[id].index);
      }
      continue;
    }
    ++stats.shared_components;
    BranchAndBound search(problem, pairs, budget);
    const auto chosen = search.Solve();
    stats.search_nodes += search.nodes();
    budget = budget > search.nodes() ? budget - search.nodes() : 0;
    if (!search.exhausted()) stats.exact = false;
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      for (std::size_t id : chosen[s]) {
        selection[pairs[s]].push_back(problem.candidates[id].index);
      }
    }
  }
  for (auto& s : selection) std::sort(s.begin(), s.end());
  return selection;
}

}  // namespace

InterpretationFrame PrepareInterpretation(const SemanticNetwork& network,
                                          std::span<const ConceptId> evidence,
                                          std::span<const ConceptId> hypothesis,
                                          const InterpretationParams& params,
                                          InterpretationStats* stats) {
  CheckNonEmpty(evidence, hypothesis);
  InterpretationStats local;
  InterpretationStats& st = stats != nullptr ? *stats : local;

  InterpretationFrame frame;
  std::vector<std::size_t> ev_sites;
  std::vector<std::size_t> hyp_sites;
  for (ConceptId c : evidence) {
    network.Uri(c);  // validates
    const std::size_t before = frame.base.generators().size();
    const std::size_t site = frame.base.AddGenerator(c, Level::kEvidence);
    if (site == before) ev_sites.push_back(site);
  }
  for (ConceptId c : hypothesis) {
    network.Uri(c);
    const std::size_t before = frame.base.generators().size();
    const std::size_t site = frame.base.AddGenerator(c, Level::kHypothesis);
    if (site == before) hyp_sites.push_back(site);
  }
  for (std::size_t e : ev_sites) {
    for (std::size_t h : hyp_sites) {
      RelatePair(network, frame, e, h, /*poset_direction=*/true, params, st);
    }
  }
  if (params.include_evidence_pairs) {
    for (std::size_t i = 0; i < ev_sites.size(); ++i) {
      for (std::size_t j = i + 1; j < ev_sites.size(); ++j) {
        RelatePair(network, frame, ev_sites[i], ev_sites[j],
                   /*poset_direction=*/false, params, st);
      }
    }
  }
  return frame;
}

Configuration AssembleInterpretation(
    const InterpretationFrame& frame,
    std::span<const std::vector<std::size_t>> selection) {
  Configuration config = frame.base;
  for (std::size_t p = 0; p < frame.pairs.size() && p < selection.size(); ++p) {
    const PairCandidates& pair = frame.pairs[p];
    for (std::size_t index : selection[p]) {
      const CueCandidate& c = pair.cues.at(index);
      const std::size_t cue = config.AddGenerator(c.cue, Level::kCue);
      if (c.left.toward_cue) {
        config.AddBond(pair.first, cue, c.left.relation, c.left.phi);
      } else {
        config.AddBond(cue, pair.first, c.left.relation, c.left.phi);
      }
      if (c.right.toward_cue) {
        config.AddBond(pair.second, cue, c.right.relation, c.right.phi);
      } else {
        config.AddBond(cue, pair.second, c.right.relation, c.right.phi);
      }
    }
  }
  return config;
}

Configuration BuildInterpretation(const SemanticNetwork& network,
                                  std::span<const ConceptId> evidence,
                                  std::span<const ConceptId> hypothesis,
                                  const InterpretationParams& params,
                                  InterpretationStats* stats) {
  InterpretationStats local;
  InterpretationStats& st = stats != nullptr ? *stats : local;
  st = InterpretationStats{};
  const InterpretationFrame frame =
      PrepareInterpretation(network, evidence, hypothesis, params, &st);
  const auto selection = SelectCues(frame, params, st);
  return AssembleInterpretation(frame, selection);
}

Configuration BruteForceBestInterpretation(const SemanticNetwork& network,
                                           std::span<const ConceptId> evidence,
                                           std::span<const ConceptId> hypothesis,
                                           const InterpretationParams& params) {
  const InterpretationFrame frame =
      PrepareInterpretation(network, evidence, hypothesis, params);
  std::size_t total = 0;
  for (const auto& p : frame.pairs) total += p.cues.size();
  if (total > kBruteForceCandidateLimit) {
    throw TooLarge(std::to_string(total) + " cue candidates exceed the limit of " +
                   std::to_string(kBruteForceCandidateLimit));
  }
  const std::size_t k = params.cues_per_pair;

  // Every subset of size <= k of each pair's candidates, as bit masks.
  std::vector<std::vector<std::uint32_t>> options(frame.pairs.size());
  for (std::size_t p = 0; p < frame.pairs.size(); ++p) {
    const std::size_t m = frame.pairs[p].cues.size();
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) <= k) {
        options[p].push_back(mask);
      }
    }
  }

  Configuration best = frame.base;
  double best_energy = ConfigEnergy(best).total;
  std::vector<std::size_t> odometer(frame.pairs.size(), 0);
  std::vector<std::vector<std::size_t>> selection(frame.pairs.size());
  for (;;) {
    for (std::size_t p = 0; p < frame.pairs.size(); ++p) {
      selection[p].clear();
      const std::uint32_t mask = options[p][odometer[p]];
      for (std::size_t i = 0; i < frame.pairs[p].cues.size(); ++i) {
        if ((mask >> i) & 1U) selection[p].push_back(i);
      }
    }
    Configuration candidate = AssembleInterpretation(frame, selection);
    const double energy = ConfigEnergy(candidate).total;
    if (energy < best_energy) {
      best_energy = energy;
      best = std::move(candidate);
    }
    std::size_t p = 0;
    while (p < odometer.size() && ++odometer[p] == options[p].size()) {
      odometer[p++] = 0;
    }
    if (p == odometer.size()) break;
  }
  return best;
}

}  // namespace ptqa
