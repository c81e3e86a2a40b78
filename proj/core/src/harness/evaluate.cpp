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

#include "ptqa/harness/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "ptqa/errors.hpp"
#include "ptqa/kb/index_io.hpp"

namespace ptqa {
namespace {

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void CheckGold(std::span<const QuestionInstance> dataset,
               std::span<const std::size_t> positions) {
  for (std::size_t p : positions) {
    if (!dataset[p].gold) {
      throw MissingGold("question " + dataset[p].id + " has no gold answer");
    }
  }
}

// Shared accounting for Evaluate and EvaluateWith.
template <typename Score>
EvalReport Run(std::span<const QuestionInstance> dataset, const EvalParams& params,
               Score&& score) {
  const auto start = std::chrono::steady_clock::now();
  EvalReport report;
  const std::size_t repeats = std::max<std::size_t>(1, params.repeats);
  std::vector<std::vector<std::size_t>> samples;
  for (std::size_t r = 0; r < repeats; ++r) {
    samples.push_back(Subsample(dataset.size(), params.limit, params.seed + r));
    CheckGold(dataset, samples.back());
  }

  std::size_t tie_broken = 0;
  std::size_t indifferent = 0;
  std::size_t gold_top2 = 0;
  std::size_t gold_top2_indifferent = 0;
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto& sample = samples[r];
    std::vector<QuestionOutcome> outcomes(sample.size());
    std::vector<char> gold_in_top2(sample.size(), 0);
    ParallelFor(sample.size(), params.threads, [&](std::size_t i) {
      const QuestionInstance& q = dataset[sample[i]];
      QuestionOutcome& o = outcomes[i];
      o.repeat = r;
      o.id = q.id;
      o.gold = *q.gold;
      gold_in_top2[i] = score(q, o) ? 1 : 0;
      o.correct = o.chosen == o.gold;
    });
    std::size_t correct = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const QuestionOutcome& o = outcomes[i];
      correct += o.correct ? 1 : 0;
      tie_broken += o.tie_broken ? 1 : 0;
      indifferent += o.indifferent ? 1 : 0;
      report.degenerate += o.degenerate ? 1 : 0;
      report.inexact += o.exact ? 0 : 1;
      if (gold_in_top2[i]) {
        ++gold_top2;
        gold_top2_indifferent += o.indifferent ? 1 : 0;
      }
    }
    report.total += outcomes.size();
    report.correct += correct;
    report.repeat_accuracies.push_back(
        outcomes.empty() ? 0.0
                         : static_cast<double>(correct) / static_cast<double>(outcomes.size()));
    std::move(outcomes.begin(), outcomes.end(), std::back_inserter(report.predictions));
  }
  report.accuracy = std::accumulate(report.repeat_accuracies.begin(),
                                    report.repeat_accuracies.end(), 0.0) /
                    static_cast<double>(repeats);
  const auto rate = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  report.tie_rate = rate(tie_broken, report.total);
  report.indifference_rate = rate(indifferent, report.total);
  report.indifference_rate_gold_top2 = rate(gold_top2_indifferent, gold_top2);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace

std::vector<std::size_t> Subsample(std::size_t total, std::size_t limit,
                                   std::uint64_t seed) {
  std::vector<std::size_t> positions(total);
  std::iota(positions.begin(), positions.end(), 0);
  if (limit == 0 || limit >= total) return positions;
  // Partial Fisher-Yates on raw engine output; std::shuffle and the
  // standard distributions are not reproducible across library vendors.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < limit; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(positions[i], positions[j]);
  }
  positions.resize(limit);
  std::sort(positions.begin(), positions.end());
  return positions;
}

void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

nlohmann::json Fingerprint(const SemanticNetwork& network,
                           std::span<const QuestionInstance> dataset,
                           const EvalParams& params) {
  std::string digest_input;
  for (const auto& q : dataset) {
    digest_input += QuestionToJson(q).dump();
    digest_input.push_back('\n');
  }
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(digest_input.data());
  const auto& a = params.answer;
  nlohmann::json doc = {
      {"index",
       {{"checksum", Hex(network.checksum())},
        {"concepts", network.concept_count()},
        {"edges", network.edge_count()}}},
      {"dataset",
       {{"records", dataset.size()},
        {"digest", Hex(Fnv1a64({bytes, digest_input.size()}))}}},
      {"params",
       {{"cues_per_pair", a.interpretation.cues_per_pair},
        {"include_evidence_pairs", a.interpretation.include_evidence_pairs},
        {"positive_gain_only", a.interpretation.positive_gain_only},
        {"search_node_budget", a.interpretation.search_node_budget},
        {"contextualize", a.contextualize},
        {"temperature", a.temperature},
        {"tie_epsilon", a.tie_epsilon},
        {"max_phrase_length", a.extraction.max_phrase_length},
        {"extract_verbs", a.extraction.extract_verbs},
        {"stopwords", a.extraction.stopwords.size()},
        {"suffix_rules", a.extraction.suffix_rules.size()},
        {"limit", params.limit},
        {"seed", params.seed},
        {"repeats", params.repeats}}}};
  const std::string canonical = doc.dump();
  doc["id"] = Hex(Fnv1a64({reinterpret_cast<const std::uint8_t*>(canonical.data()),
                           canonical.size()}));
  return doc;
}

EvalReport Evaluate(const SemanticNetwork& network,
                    std::span<const QuestionInstance> dataset,
                    const EvalParams& params) {
  EvalReport report = Run(dataset, params, [&](const QuestionInstance& q,
                                               QuestionOutcome& o) {
    const Prediction p = AnswerQuestion(network, q, params.answer);
    o.chosen = p.chosen;
    o.energies = p.energies();
    o.indifferent = p.ranking.indifferent;
    o.tie_broken = p.ranking.tie_broken;
    o.degenerate = p.degenerate;
    o.exact = p.exact();
    return p.ranking.order[0] == o.gold || p.ranking.order[1] == o.gold;
  });
  report.fingerprint = Fingerprint(network, dataset, params);
  return report;
}

EvalReport EvaluateWith(std::span<const QuestionInstance> dataset,
                        const EvalParams& params,
                        const std::function<std::size_t(const QuestionInstance&)>& predict) {
  return Run(dataset, params, [&](const QuestionInstance& q, QuestionOutcome& o) {
    o.chosen = predict(q);
    return false;
  });
}

nlohmann::json EvalReportToJson(const EvalReport& report, bool predictions) {
  nlohmann::json doc = {{"accuracy", report.accuracy},
                        {"repeat_accuracies", report.repeat_accuracies},
                        {"total", report.total},
                        {"correct", report.correct},
                        {"tie_rate", report.tie_rate},
                        {"indifference_rate", report.indifference_rate},
                        {"indifference_rate_gold_top2", report.indifference_rate_gold_top2},
                        {"degenerate", report.degenerate},
                        {"inexact", report.inexact},
                        {"seconds", report.seconds},
                        {"fingerprint", report.fingerprint}};
  if (predictions) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& o : report.predictions) {
      list.push_back({{"repeat", o.repeat},
                      {"id", o.id},
                      {"chosen", o.chosen},
                      {"gold", o.gold},
                      {"correct", o.correct},
                      {"energies", o.energies},
                      {"indifferent", o.indifferent},
                      {"tie_broken", o.tie_broken},
                      {"degenerate", o.degenerate},
                      {"exact", o.exact}});
    }
    doc["predictions"] = std::move(list);
  }
  return doc;
}

}  // namespace ptqa
