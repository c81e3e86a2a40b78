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

#ifndef PTQA_HARNESS_ANSWER_HPP_
#define PTQA_HARNESS_ANSWER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptqa/contextualize/interpretation.hpp"
#include "ptqa/extract/extractor.hpp"
#include "ptqa/harness/dataset.hpp"
#include "ptqa/ibe/ranking.hpp"
#include "ptqa/ibe/soft_labels.hpp"
#include "ptqa/kb/semantic_network.hpp"
#include "ptqa/pattern/configuration.hpp"

namespace ptqa {

struct AnswerParams {
  InterpretationParams interpretation;
  bool contextualize = true;  // false forces zero cues per pair
  double temperature = kDefaultTemperature;
  double tie_epsilon = kDefaultTieEpsilon;
  ExtractionConfig extraction = DefaultExtractionConfig();
};

struct ChoiceResult {
  std::vector<ConceptId> concepts;
  Configuration configuration;
  EnergySplit energy;
  InterpretationStats stats;
  bool degenerate = false;  // no concepts on one side; scored as E = 0
};

struct Prediction {
  std::string id;
  std::size_t chosen = 0;
  std::vector<ConceptId> evidence;
  std::vector<ChoiceResult> choices;
  Ranking ranking;
  SoftLabelRecord labels;
  bool degenerate = false;  // every choice degenerate

  std::vector<double> energies() const;
  bool exact() const;  // every interpretation solved to optimality
};

// Extracts evidence and choice concepts, builds one interpretation per
// choice, ranks them and attaches soft labels. Degenerate choices are
// scored with zero energy and flagged rather than aborting.
Prediction AnswerQuestion(const SemanticNetwork& network,
                          const QuestionInstance& question,
                          const AnswerParams& params = {});

// Prediction summary; with `configurations` every interpretation is
// included in configuration JSON form.
nlohmann::json PredictionToJson(const Prediction& prediction,
                                const SemanticNetwork& network,
                                bool configurations = false);

}  // namespace ptqa

#endif  // PTQA_HARNESS_ANSWER_HPP_
