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

#ifndef PTQA_HARNESS_EVALUATE_HPP_
#define PTQA_HARNESS_EVALUATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptqa/harness/answer.hpp"
#include "ptqa/harness/dataset.hpp"

namespace ptqa {

struct EvalParams {
  AnswerParams answer;
  std::size_t limit = 0;   // 0 = every question
  std::uint64_t seed = 0;
  std::size_t repeats = 1;  // subsamples drawn with seeds seed, seed+1, ...
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct QuestionOutcome {
  std::size_t repeat = 0;
  std::string id;
  std::size_t chosen = 0;
  std::size_t gold = 0;
  std::vector<double> energies;
  bool correct = false;
  bool indifferent = false;
  bool tie_broken = false;
  bool degenerate = false;
  bool exact = true;
};

struct EvalReport {
  double accuracy = 0.0;  // mean over repeats
  std::vector<double> repeat_accuracies;
  std::size_t total = 0;    // questions scored, all repeats
  std::size_t correct = 0;
  double tie_rate = 0.0;          // decided by the grounded tie rule
  double indifference_rate = 0.0; // best and runner-up share an energy
  // Indifference among questions whose gold answer ranked in the top two.
  double indifference_rate_gold_top2 = 0.0;
  std::size_t degenerate = 0;
  std::size_t inexact = 0;  // interpretation search hit its node budget
  double seconds = 0.0;
  std::vector<QuestionOutcome> predictions;
  nlohmann::json fingerprint;
};

// Positions of a uniform sample of `limit` items out of `total`, sorted
// ascending. Returns every position when limit is 0 or >= total. Stable
// across platforms for a given seed.
std::vector<std::size_t> Subsample(std::size_t total, std::size_t limit,
                                   std::uint64_t seed);

// Calls fn(i) for i in [0, count) on a bounded pool of threads.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn);

// Parameters, index checksum and dataset digest; equal fingerprints
// reproduce equal reports.
nlohmann::json Fingerprint(const SemanticNetwork& network,
                           std::span<const QuestionInstance> dataset,
                           const EvalParams& params);

// Accuracy and diagnostics over the dataset (or its subsamples). Throws
// MissingGold if any scored question has no gold index.
EvalReport Evaluate(const SemanticNetwork& network,
                    std::span<const QuestionInstance> dataset,
                    const EvalParams& params = {});

// Scores every question with a supplied predictor instead of the
// reasoning engine; used for baselines.
EvalReport EvaluateWith(std::span<const QuestionInstance> dataset,
                        const EvalParams& params,
                        const std::function<std::size_t(const QuestionInstance&)>& predict);

nlohmann::json EvalReportToJson(const EvalReport& report, bool predictions = false);

}  // namespace ptqa

#endif  // PTQA_HARNESS_EVALUATE_HPP_
