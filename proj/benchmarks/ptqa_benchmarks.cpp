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


// Microbenchmarks for the hot paths: dump parsing, phi lookup, cue search,
// interpretation building, ranking and soft labels.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ptqa/contextualize/cues.hpp"
#include "ptqa/contextualize/interpretation.hpp"
#include "ptqa/harness/answer.hpp"
#include "ptqa/ibe/ranking.hpp"
#include "ptqa/ibe/soft_labels.hpp"
#include "ptqa/kb/assertion_parser.hpp"
#include "ptqa/kb/index_io.hpp"
#include "ptqa/kb/semantic_network.hpp"

namespace ptqa {
namespace {

const std::string kLine =
    "/a/[/r/UsedFor/,/c/en/piano/n/wn/artifact/,/c/en/make_music/]\t/r/UsedFor\t"
    "/c/en/piano/n/wn/artifact\t/c/en/make_music\t"
    "{\"dataset\": \"/d/conceptnet/4/en\", \"license\": \"cc:by/4.0\", "
    "\"sources\": [{\"activity\": \"/s/activity/omcs/omcs1_possibly_free_text\", "
    "\"contributor\": \"/s/contributor/omcs/bedume\"}], "
    "\"surfaceText\": \"[[a piano]] is used for [[making music]]\", \"weight\": 3.464}";

// Scale-free network: concept i links to earlier concepts chosen in
// proportion to degree, so a few hubs ("person", "thing") dominate, as in
// ConceptNet.
const SemanticNetwork& HubNetwork(std::size_t concepts) {
  static std::map<std::size_t, SemanticNetwork> cache;
  auto it = cache.find(concepts);
  if (it != cache.end()) return it->second;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> w(0.1, 4.0);
  std::vector<std::uint32_t> endpoints = {0, 1};
  NetworkBuilder builder;
  const char* relations[] = {"IsA", "RelatedTo", "UsedFor", "AtLocation", "CapableOf"};
  builder.Add({"en/c0", "en/c1", "RelatedTo", 1.0});
  for (std::size_t i = 2; i < concepts; ++i) {
    for (int e = 0; e < 5; ++e) {
      std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
      const std::uint32_t target = endpoints[pick(rng)];
      builder.Add({"en/c" + std::to_string(i), "en/c" + std::to_string(target),
                   relations[rng() % 5], w(rng)});
      endpoints.push_back(target);
      endpoints.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return cache.emplace(concepts, std::move(builder).Build()).first->second;
}

void BM_ParseAssertionLine(benchmark::State& state) {
  const ParserConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(ParseAssertionLine(kLine, 1, config));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * kLine.size()));
}
BENCHMARK(BM_ParseAssertionLine);

void BM_Phi(benchmark::State& state) {
  const auto& net = HubNetwork(100000);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(net.concept_count() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(net.Phi(ConceptId{pick(rng)}, ConceptId{pick(rng)}));
}
BENCHMARK(BM_Phi);

void BM_FindCues(benchmark::State& state) {
  const auto& net = HubNetwork(100000);
  std::mt19937_64 rng(2);
  // Low ids are hubs; mix hub and leaf endpoints.
  std::uniform_int_distribution<std::uint32_t> hub(0, 200);
  std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(net.concept_count() - 1));
  for (auto _ : state) {
    const ConceptId a{hub(rng)}, b{any(rng)};
    if (a == b) continue;
    benchmark::DoNotOptimize(FindCues(net, a, b, 3));
  }
}
BENCHMARK(BM_FindCues);

// Evidence and hypothesis sizes typical of a SWAG question.
void BM_BuildInterpretation(benchmark::State& state) {
  const auto& net = HubNetwork(100000);
  const auto n_evidence = static_cast<std::size_t>(state.range(0));
  const auto n_hypothesis = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> pick(0, 5000);
  std::size_t inexact = 0, runs = 0;
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<ConceptId> evidence, hypothesis;
    for (std::size_t i = 0; i < n_evidence; ++i) evidence.push_back(ConceptId{pick(rng)});
    for (std::size_t i = 0; i < n_hypothesis; ++i) hypothesis.push_back(ConceptId{pick(rng)});
    state.ResumeTiming();
    InterpretationStats stats;
    benchmark::DoNotOptimize(BuildInterpretation(net, evidence, hypothesis, {}, &stats));
    inexact += stats.exact ? 0 : 1;
    ++runs;
  }
  state.counters["inexact_rate"] = static_cast<double>(inexact) / static_cast<double>(runs);
}
BENCHMARK(BM_BuildInterpretation)->Args({3, 2})->Args({5, 3})->Args({8, 4})->Unit(benchmark::kMicrosecond);

void BM_RankHypotheses(benchmark::State& state) {
  std::vector<HypothesisScore> scores = {{0, -1.2, -0.3, 4}, {1, -3.4, 0.0, 7}, {2, 0.0, 0.0, 0},
                                         {3, -3.4, -1.0, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(RankHypotheses(scores));
}
BENCHMARK(BM_RankHypotheses);

void BM_SoftLabels(benchmark::State& state) {
  const std::vector<double> energies = {-5.2, -1.0, 0.0, -3.3};
  for (auto _ : state) benchmark::DoNotOptimize(SoftLabels(energies, kDefaultTemperature));
}
BENCHMARK(BM_SoftLabels);

void BM_SerializeIndex(benchmark::State& state) {
  const auto& net = HubNetwork(100000);
  for (auto _ : state) benchmark::DoNotOptimize(SerializeIndex(net));
}
BENCHMARK(BM_SerializeIndex)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ptqa

BENCHMARK_MAIN();
