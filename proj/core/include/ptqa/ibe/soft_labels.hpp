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

#ifndef PTQA_IBE_SOFT_LABELS_HPP_
#define PTQA_IBE_SOFT_LABELS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ptqa {

inline constexpr double kDefaultTemperature = 2.0;

// Distillation target for one question.
struct SoftLabelRecord {
  std::string id;
  std::vector<double> probabilities;
  std::vector<double> energies;
  std::size_t chosen = 0;
  double temperature = 1.0;
  bool degenerate = false;

  friend bool operator==(const SoftLabelRecord&, const SoftLabelRecord&) = default;
};

// softmax(q / T) with logits q = -E, evaluated with max subtraction.
// `chosen` is the most probable hypothesis (lowest index on exact ties).
// Throws InvalidTemperature unless T > 0 and finite, NonFiniteInput for
// non-finite energies.
SoftLabelRecord SoftLabels(std::span<const double> energies, double temperature);

// One JSON object per line:
// {"id", "energies", "probs", "chosen", "temperature", "degenerate"}
nlohmann::json SoftLabelToJson(const SoftLabelRecord& record);
SoftLabelRecord SoftLabelFromJson(const nlohmann::json& doc);

}  // namespace ptqa

#endif  // PTQA_IBE_SOFT_LABELS_HPP_
