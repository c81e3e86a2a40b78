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

#include "ptqa/harness/answer.hpp"

#include "ptqa/errors.hpp"
#include "ptqa/pattern/configuration_json.hpp"

namespace ptqa {

std::vector<double> Prediction::energies() const {
  std::vector<double> out;
  out.reserve(choices.size());
  for (const auto& c : choices) out.push_back(c.energy.total);
  return out;
}

bool Prediction::exact() const {
  for (const auto& c : choices) {
    if (!c.stats.exact) return false;
  }
  return true;
}

Prediction AnswerQuestion(const SemanticNetwork& network,
                          const QuestionInstance& question,
                          const AnswerParams& params) {
  InterpretationParams interpretation = params.interpretation;
  if (!params.contextualize) interpretation.cues_per_pair = 0;

  Prediction out;
  out.id = question.id;
  out.evidence = ExtractConcepts(question.context, network, params.extraction);

  std::vector<HypothesisScore> scores;
  out.degenerate = true;
  for (std::size_t i = 0; i < question.choices.size(); ++i) {
    ChoiceResult choice;
    choice.concepts = ExtractConcepts(question.choices[i], network, params.extraction);
    try {
      choice.configuration = BuildInterpretation(network, out.evidence, choice.concepts,
                                                 interpretation, &choice.stats);
      choice.energy = ConfigEnergy(choice.configuration);
    } catch (const DegenerateInput&) {
      choice.degenerate = true;
    }
    out.degenerate = out.degenerate && choice.degenerate;
    scores.push_back(HypothesisScore{i, choice.energy.total, choice.energy.grounded,
                                     choice.configuration.bonds().size()});
    out.choices.push_back(std::move(choice));
  }

  out.ranking = RankHypotheses(scores, params.tie_epsilon);
  out.chosen = out.ranking.order.front();
  out.labels = SoftLabels(out.energies(), params.temperature);
  out.labels.id = question.id;
  out.labels.chosen = out.chosen;
  out.labels.degenerate = out.degenerate;
  return out;
}

nlohmann::json PredictionToJson(const Prediction& prediction,
                                const SemanticNetwork& network,
                                bool configurations) {
  auto uris = [&](const std::vector<ConceptId>& ids) {
    nlohmann::json list = nlohmann::json::array();
    for (ConceptId id : ids) list.push_back(network.Uri(id));
    return list;
  };
  nlohmann::json choices = nlohmann::json::array();
  for (const auto& c : prediction.choices) {
    nlohmann::json entry = {{"concepts", uris(c.concepts)},
                            {"energy", c.energy.total},
                            {"grounded_energy", c.energy.grounded},
                            {"ungrounded_energy", c.energy.ungrounded},
                            {"bonds", c.configuration.bonds().size()},
                            {"cues", c.configuration.cue_count()},
                            {"degenerate", c.degenerate},
                            {"exact", c.stats.exact}};
    if (configurations) {
      entry["configuration"] = ConfigurationToJson(c.configuration, network);
    }
    choices.push_back(std::move(entry));
  }
  return {{"id", prediction.id},
          {"chosen", prediction.chosen},
          {"ranking", prediction.ranking.order},
          {"evidence", uris(prediction.evidence)},
          {"energies", prediction.energies()},
          {"probs", prediction.labels.probabilities},
          {"temperature", prediction.labels.temperature},
          {"indifferent", prediction.ranking.indifferent},
          {"tie_broken", prediction.ranking.tie_broken},
          {"degenerate", prediction.degenerate},
          {"choices", std::move(choices)}};
}

}  // namespace ptqa
