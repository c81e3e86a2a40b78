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

#ifndef PTQA_HARNESS_LABELS_HPP_
#define PTQA_HARNESS_LABELS_HPP_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ptqa/harness/evaluate.hpp"

namespace ptqa {

// Answers every question and writes one soft-label JSON object per line,
// in dataset order. Gold answers are not consulted. Returns the records.
std::vector<SoftLabelRecord> EmitLabels(const SemanticNetwork& network,
                                        std::span<const QuestionInstance> dataset,
                                        const EvalParams& params, std::ostream& out);

std::vector<SoftLabelRecord> EmitLabels(const SemanticNetwork& network,
                                        std::span<const QuestionInstance> dataset,
                                        const EvalParams& params,
                                        const std::string& path);

// Reads a soft-label file back.
std::vector<SoftLabelRecord> ReadLabels(const std::string& path);

}  // namespace ptqa

#endif  // PTQA_HARNESS_LABELS_HPP_
