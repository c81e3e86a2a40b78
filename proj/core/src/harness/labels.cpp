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

#include "ptqa/harness/labels.hpp"

#include <fstream>

#include "ptqa/errors.hpp"

namespace ptqa {

std::vector<SoftLabelRecord> EmitLabels(const SemanticNetwork& network,
                                        std::span<const QuestionInstance> dataset,
                                        const EvalParams& params, std::ostream& out) {
  const auto positions = Subsample(dataset.size(), params.limit, params.seed);
  std::vector<SoftLabelRecord> records(positions.size());
  ParallelFor(positions.size(), params.threads, [&](std::size_t i) {
    records[i] = AnswerQuestion(network, dataset[positions[i]], params.answer).labels;
  });
  for (const auto& r : records) {
    out << SoftLabelToJson(r).dump() << '\n';
  }
  if (!out) throw DataError("failed writing soft labels");
  return records;
}

std::vector<SoftLabelRecord> EmitLabels(const SemanticNetwork& network,
                                        std::span<const QuestionInstance> dataset,
                                        const EvalParams& params,
                                        const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot open label file for writing: " + path);
  return EmitLabels(network, dataset, params, out);
}

std::vector<SoftLabelRecord> ReadLabels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open label file: " + path);
  std::vector<SoftLabelRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      throw MalformedRecord(out.size(), "soft-label line is not JSON");
    }
    out.push_back(SoftLabelFromJson(doc));
  }
  return out;
}

}  // namespace ptqa
