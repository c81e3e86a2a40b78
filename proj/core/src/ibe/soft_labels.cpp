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

#include "ptqa/ibe/soft_labels.hpp"

#include <algorithm>
#include <cmath>

#include "ptqa/errors.hpp"

namespace ptqa {

SoftLabelRecord SoftLabels(std::span<const double> energies, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidTemperature("temperature must be positive and finite");
  }
  SoftLabelRecord record;
  record.temperature = temperature;
  record.energies.assign(energies.begin(), energies.end());
  if (energies.empty()) return record;
  for (double e : energies) {
    if (!std::isfinite(e)) throw NonFiniteInput("energies must be finite");
  }

  const double max_logit = -*std::min_element(energies.begin(), energies.end());
  record.probabilities.resize(energies.size());
  double total = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    record.probabilities[i] = std::exp((-energies[i] - max_logit) / temperature);
    total += record.probabilities[i];
  }
  for (double& p : record.probabilities) p /= total;
  record.chosen = static_cast<std::size_t>(
      std::max_element(record.probabilities.begin(), record.probabilities.end()) -
      record.probabilities.begin());
  return record;
}

nlohmann::json SoftLabelToJson(const SoftLabelRecord& record) {
  return {{"id", record.id},
          {"energies", record.energies},
          {"probs", record.probabilities},
          {"chosen", record.chosen},
          {"temperature", record.temperature},
          {"degenerate", record.degenerate}};
}

SoftLabelRecord SoftLabelFromJson(const nlohmann::json& doc) {
  try {
    SoftLabelRecord record;
    record.id = doc.at("id").get<std::string>();
    record.energies = doc.at("energies").get<std::vector<double>>();
    record.probabilities = doc.at("probs").get<std::vector<double>>();
    record.chosen = doc.at("chosen").get<std::size_t>();
    record.temperature = doc.at("temperature").get<double>();
    record.degenerate = doc.value("degenerate", false);
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed soft-label record: ") + e.what());
  }
}

}  // namespace ptqa
