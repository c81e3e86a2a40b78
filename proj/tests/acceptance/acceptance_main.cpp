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


// Acceptance suite: one line per criterion, PASS / FAIL / SKIP.
//
//   ptqa_acceptance [--cli path/to/ptqa]
//
// Criteria 7 and 8 need external data and run only when the environment
// provides it:
//   PTQA_CONCEPTNET_INDEX  index built by `ptqa ingest` (or PTQA_CONCEPTNET_DUMP)
//   PTQA_SWAG_VAL          SWAG val.csv
//   PTQA_HELLASWAG_VAL     HellaSWAG hellaswag_val.jsonl
// The process exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ptqa/contextualize/interpretation.hpp"
#include "ptqa/errors.hpp"
#include "ptqa/harness/answer.hpp"
#include "ptqa/harness/dataset.hpp"
#include "ptqa/harness/dot_export.hpp"
#include "ptqa/harness/evaluate.hpp"
#include "ptqa/ibe/ranking.hpp"
#include "ptqa/ibe/soft_labels.hpp"
#include "ptqa/kb/index_io.hpp"
#include "ptqa/pattern/configuration.hpp"
#include "test_support.hpp"

namespace ptqa {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

enum class Verdict { kPass, kFail, kSkip };

struct Result {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

// Collects failed checks; the first few are kept for the report line.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  Result Finish(const std::string& summary) const {
    if (ok()) return {Verdict::kPass, summary};
    std::string detail = summary + "; " + std::to_string(failures_) + " failed check(s):";
    for (const auto& m : messages_) detail += " [" + m + "]";
    return {Verdict::kFail, detail};
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string Fmt(double x, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

std::string TempFile(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("ptqa_acceptance_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

// 1. Exact interpretation search agrees with exhaustive enumeration.
Result OracleEquivalence() {
  constexpr int kInstances = 200;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> side(1, 3), kdist(1, 3);
  Checker check;
  int done = 0, oversized = 0, with_cues = 0;
  double worst = 0.0;
  while (done < kInstances) {
    const auto net = testing::RandomNetwork(rng);
    const std::size_t ne = side(rng), nh = side(rng);
    auto concepts = testing::RandomConcepts(rng, net, ne + nh);
    if (concepts.size() < 2) continue;
    const std::size_t split = std::min(ne, concepts.size() - 1);
    const std::vector<ConceptId> evidence(concepts.begin(), concepts.begin() + split);
    const std::vector<ConceptId> hypothesis(concepts.begin() + split, concepts.end());
    InterpretationParams params;
    params.cues_per_pair = kdist(rng);
    params.include_evidence_pairs = done % 4 == 0;
    Configuration oracle;
    try {
      oracle = BruteForceBestInterpretation(net, evidence, hypothesis, params);
    } catch (const TooLarge&) {
      ++oversized;
      continue;
    }
    InterpretationStats stats;
    const auto built = BuildInterpretation(net, evidence, hypothesis, params, &stats);
    const double diff = std::abs(ConfigEnergy(built).total - ConfigEnergy(oracle).total);
    worst = std::max(worst, diff);
    check.Expect(diff <= 1e-9, "instance " + std::to_string(done) + " differs by " + Fmt(diff));
    check.Expect(stats.exact, "instance " + std::to_string(done) + " hit the node budget");
    with_cues += built.cue_count() > 0;
    ++done;
  }
  const double secs = Seconds(start);
  check.Expect(secs < 10.0, "runtime " + Fmt(secs) + " s");
  return check.Finish(std::to_string(done) + "/" + std::to_string(kInstances) +
                      " instances within 1e-9 (max diff " + Fmt(worst, 3) + ", " +
                      std::to_string(with_cues) + " with cues, " + std::to_string(oversized) +
                      " oversized redrawn), " + Fmt(secs, 3) + " s");
}

// 2. Additivity, grounded/ungrounded partition, bond range, oddness.
Result EnergyCalculus() {
  std::mt19937_64 rng(20260102);
  std::uniform_int_distribution<int> gens(2, 12), bonds(0, 40), level(0, 2);
  std::uniform_real_distribution<double> phi(-10.0, 10.0);
  Checker check;
  for (int round = 0; round < 1000; ++round) {
    Configuration c;
    const int n = gens(rng);
    for (int i = 0; i < n; ++i) {
      c.AddGenerator(ConceptId{static_cast<std::uint32_t>(i)}, static_cast<Level>(level(rng)));
    }
    std::uniform_int_distribution<std::size_t> site(0, c.generators().size() - 1);
    const int m = bonds(rng);
    for (int i = 0; i < m; ++i) {
      const auto a = site(rng), b = site(rng);
      if (a != b) c.AddBond(a, b, RelationId{static_cast<std::uint16_t>(i % 5)}, phi(rng));
    }
    double sum = 0.0, grounded = 0.0, ungrounded = 0.0;
    for (const Bond& b : c.bonds()) {
      const double e = BondEnergy(b.phi);
      check.Expect(e > -1.0 && e < 1.0, "bond energy " + Fmt(e) + " outside (-1, 1)");
      check.Expect(std::abs(BondEnergy(-b.phi) + e) <= 1e-12, "tanh oddness");
      sum += e;
      (c.IsGroundedBond(b) ? grounded : ungrounded) -= e;
    }
    const auto split = ConfigEnergy(c);
    check.Expect(std::abs(split.total + sum) <= 1e-12, "additivity");
    check.Expect(std::abs(split.grounded + split.ungrounded - split.total) <= 1e-12, "partition");
    check.Expect(std::abs(split.grounded - grounded) <= 1e-12, "grounded term");
    check.Expect(std::abs(split.ungrounded - ungrounded) <= 1e-12, "ungrounded term");
  }
  return check.Finish("1000 configurations: additivity, partition, range, oddness");
}

// 3. Pairwise preference complementarity, tournament = ascending energy,
//    stability at |E| = 1e4.
Result BradleyTerry() {
  std::mt19937_64 rng(20260103);
  std::uniform_real_distribution<double> e(-100.0, 100.0);
  Checker check;
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double a = e(rng), b = e(rng);
    const double d = std::abs(PairwisePreference(a, b) + PairwisePreference(b, a) - 1.0);
    worst = std::max(worst, d);
    check.Expect(d <= 1e-12, "complementarity " + Fmt(d));
  }
  for (int round = 0; round < 1000; ++round) {
    std::vector<HypothesisScore> s;
    for (std::size_t i = 0; i < 4; ++i) s.push_back({i, e(rng) / 10.0, 0.0, 0});
    std::vector<std::size_t> wins(4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (i != j && PairwisePreference(s[i].energy, s[j].energy) > 0.5) ++wins[i];
      }
    }
    std::vector<std::size_t> tournament = {0, 1, 2, 3};
    std::sort(tournament.begin(), tournament.end(),
              [&](std::size_t x, std::size_t y) { return wins[x] > wins[y]; });
    std::vector<std::size_t> ascending = {0, 1, 2, 3};
    std::sort(ascending.begin(), ascending.end(),
              [&](std::size_t x, std::size_t y) { return s[x].energy < s[y].energy; });
    const auto r = RankHypotheses(s);
    check.Expect(tournament == ascending, "tournament order differs");
    check.Expect(r.order == ascending, "RankHypotheses order differs");
  }
  for (double big : {1e4, -1e4}) {
    const double p = PairwisePreference(big, -big);
    const double q = PairwisePreference(-big, big);
    check.Expect(std::isfinite(p) && std::isfinite(q) && p >= 0.0 && q <= 1.0,
                 "overflow at |E| = 1e4");
    check.Expect(std::abs(p + q - 1.0) <= 1e-12, "complementarity at |E| = 1e4");
    std::vector<HypothesisScore> s = {{0, big, 0.0, 0}, {1, -big, 0.0, 0}, {2, 0.0, 0.0, 0}};
    const auto r = RankHypotheses(s);
    for (const auto& row : r.preference) {
      for (double x : row) check.Expect(std::isfinite(x), "non-finite preference matrix");
    }
  }
  return check.Finish("1e5 pairs (max deviation " + Fmt(worst, 3) +
                      "), 1000 tournaments, |E| = 1e4 finite");
}

// 4. Softmax normalization, argmax invariance across T, near-uniform at T = 100.
Result SoftLabelCalculus() {
  std::mt19937_64 rng(20260104);
  // Energies in the range a question's configurations actually reach.
  std::uniform_real_distribution<double> e(-10.0, 10.0);
  Checker check;
  double worst_entropy = 0.0;
  for (int round = 0; round < 1000; ++round) {
    std::vector<double> energies(4);
    for (auto& x : energies) x = e(rng);
    std::optional<std::size_t> argmax;
    for (double t : {0.5, 1.0, 2.0, 100.0}) {
      const auto r = SoftLabels(energies, t);
      const double total = std::accumulate(r.probabilities.begin(), r.probabilities.end(), 0.0);
      check.Expect(std::abs(total - 1.0) <= 1e-9, "normalization at T=" + Fmt(t));
      const auto best = static_cast<std::size_t>(
          std::max_element(r.probabilities.begin(), r.probabilities.end()) -
          r.probabilities.begin());
      if (!argmax) argmax = best;
      check.Expect(best == *argmax, "argmax moved at T=" + Fmt(t));
      if (t == 100.0) {
        double h = 0.0;
        for (double p : r.probabilities) h -= p > 0.0 ? p * std::log(p) : 0.0;
        const double rel = std::abs(h - std::log(4.0)) / std::log(4.0);
        worst_entropy = std::max(worst_entropy, rel);
        check.Expect(rel <= 0.01, "entropy at T=100 off by " + Fmt(rel * 100) + "%");
      }
    }
  }
  return check.Finish("1000 vectors, T in {0.5, 1, 2, 100}; worst T=100 entropy gap " +
                      Fmt(worst_entropy * 100, 3) + "%");
}

// 5. Ten-line fixture adjacency, byte-identical persist/load, negative phi.
Result Ingestion() {
  Checker check;
  IngestStats stats;
  auto net = BuildNetworkFromFile(testing::FixturePath("ten_line.csv"), {}, &stats);
  check.Expect(stats.lines == 10 && stats.retained == 7 && stats.skipped == 2 &&
                   stats.self_loops == 1 && stats.malformed == 0,
               "ingest counters");
  check.Expect(net.edge_count() == stats.retained, "edge count != retained lines");

  struct Expected {
    const char* a;
    const char* b;
    const char* relation;
    double weight;
  };
  const Expected edges[] = {{"en/piano", "en/instrument", "IsA", 2.0},
                            {"en/piano", "en/music", "UsedFor", 1.0},
                            {"en/guitar", "en/instrument", "IsA", 1.5},
                            {"en/dog", "en/bark", "CapableOf", 3.0},
                            {"en/cat", "en/bath", "NotDesires", -1.0},
                            {"en/musician", "en/play_music", "CapableOf", 2.5},
                            {"en/play_piano", "en/piano", "HasPrerequisite", 1.0}};
  std::size_t entries = 0;
  for (const auto& x : edges) {
    const auto a = net.FindUri(x.a), b = net.FindUri(x.b);
    check.Expect(a && b, std::string("missing concept ") + x.a + " or " + x.b);
    if (!a || !b) continue;
    const auto phi = net.Phi(*a, *b);
    check.Expect(phi && phi->strength == x.weight && phi->forward &&
                     net.RelationName(phi->relation) == x.relation,
                 std::string("phi ") + x.a + " " + x.b);
  }
  for (std::uint32_t c = 0; c < net.concept_count(); ++c) {
    entries += net.Neighbors(ConceptId{c}).size();
  }
  check.Expect(net.concept_count() == 11, "concept count");
  check.Expect(entries == 2 * std::size(edges), "adjacency has extra entries");
  const auto cat = net.FindUri("en/cat"), bath = net.FindUri("en/bath");
  check.Expect(cat && bath && net.Phi(*cat, *bath)->strength < 0.0, "negative relation phi");

  const auto first = TempFile("first.idx"), second = TempFile("second.idx");
  PersistIndex(net, first);
  const auto loaded = LoadIndex(first);
  PersistIndex(loaded, second);
  std::ifstream fa(first, std::ios::binary), fb(second, std::ios::binary);
  const std::string ba{std::istreambuf_iterator<char>(fa), {}};
  const std::string bb{std::istreambuf_iterator<char>(fb), {}};
  check.Expect(!ba.empty() && ba == bb, "re-serialization not byte-identical");
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  return check.Finish("7 assertions, exact adjacency, " + std::to_string(ba.size()) +
                      "-byte index round-trips byte-identically");
}

std::string RunCapture(const std::string& command, int* status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  *status = ::pclose(pipe);
  return out;
}

// 6. Woman/piano mini-network: gold first, explain renders the expected graph.
Result PianoConcert(const std::string& cli) {
  Checker check;
  const auto net = testing::LoadFixtureNetwork("piano_concert.csv");
  std::ifstream in(testing::FixturePath("piano_concert_questions.jsonl"));
  std::string line;
  std::getline(in, line);
  const auto question = QuestionFromJson(nlohmann::json::parse(line));
  const auto prediction = AnswerQuestion(net, question);
  check.Expect(prediction.chosen == question.gold, "gold not ranked first");

  std::string dot = ExportDot(prediction.choices[*question.gold].configuration, net,
                              question.id + "/" + std::to_string(*question.gold));
  std::string source = "library";
  if (!cli.empty()) {
    const auto index = TempFile("piano.idx"), out = TempFile("piano.dot");
    int status = 0;
    RunCapture("'" + cli + "' ingest --dump '" + testing::FixturePath("piano_concert.csv") +
                   "' --out '" + index + "' 2>&1",
               &status);
    check.Expect(status == 0, "ptqa ingest failed");
    std::string quoted;
    for (char c : line) quoted += c == '\'' ? std::string("'\\''") : std::string(1, c);
    RunCapture("'" + cli + "' explain --index '" + index + "' --question '" + quoted +
                   "' --choice 0 --out '" + out + "' 2>&1",
               &status);
    check.Expect(status == 0, "ptqa explain failed");
    std::ifstream dot_in(out);
    const std::string from_cli{std::istreambuf_iterator<char>(dot_in), {}};
    check.Expect(from_cli == dot, "CLI DOT differs from library DOT");
    dot = from_cli;
    source = "ptqa explain";
    std::filesystem::remove(index);
    std::filesystem::remove(out);
  }

  const auto graph = testing::ParseDot(dot);
  check.Expect(graph.well_formed, "DOT does not parse");
  std::map<std::string, std::string> fill;
  for (const auto& [id, node] : graph.nodes) fill[node.first] = node.second;
  const std::map<std::string, std::string> expected_nodes = {
      {"woman", "white"},  {"piano", "white"},      {"concert", "white"},
      {"person", "red"},   {"instrument", "red"},   {"music", "red"}};
  check.Expect(fill == expected_nodes, "node set or colors differ");
  const std::multiset<std::tuple<std::string, std::string, std::string, bool>> expected_edges = {
      {"woman", "person", "IsA (2.00)", false},
      {"person", "concert", "AtLocation (1.00)", false},
      {"piano", "instrument", "IsA (2.00)", false},
      {"instrument", "concert", "AtLocation (1.00)", false},
      {"piano", "music", "UsedFor (1.00)", false},
      {"music", "concert", "AtLocation (2.00)", false}};
  check.Expect(graph.well_formed && graph.LabelledEdges() == expected_edges, "edges differ");
  return check.Finish("gold ranked first (E = " + Fmt(prediction.energies()[0]) + "); " +
                      source + " graph has " + std::to_string(graph.nodes.size()) +
                      " nodes (3 white, 3 red) and " + std::to_string(graph.edges.size()) +
                      " edges as fixtured");
}

const char* Env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

std::optional<SemanticNetwork> ExternalNetwork(std::string* why) {
  if (const char* index = Env("PTQA_CONCEPTNET_INDEX")) return LoadIndex(index);
  if (const char* dump = Env("PTQA_CONCEPTNET_DUMP")) return BuildNetworkFromFile(dump);
  *why = "set PTQA_CONCEPTNET_INDEX or PTQA_CONCEPTNET_DUMP";
  return std::nullopt;
}

EvalParams BenchmarkParams() {
  EvalParams params;
  params.limit = 500;
  params.seed = 2020;
  return params;
}

// 7. SWAG val, 500-question seeded subset.
Result SwagAccuracy() {
  const char* data = Env("PTQA_SWAG_VAL");
  if (!data) return {Verdict::kSkip, "needs PTQA_SWAG_VAL and a ConceptNet index"};
  std::string why;
  const auto start = Clock::now();
  const auto net = ExternalNetwork(&why);
  if (!net) return {Verdict::kSkip, why};
  const auto dataset = LoadDataset(data, DatasetFormat::kSwag);
  auto params = BenchmarkParams();
  const auto full = Evaluate(*net, dataset, params);
  params.answer.contextualize = false;
  const auto off = Evaluate(*net, dataset, params);
  const double secs = Seconds(start);
  Checker check;
  check.Expect(full.accuracy >= 0.30, "accuracy " + Fmt(full.accuracy) + " < 0.30");
  check.Expect(full.accuracy >= off.accuracy - 0.02, "contextualization ablation reversed");
  check.Expect(secs < 1800.0, "runtime " + Fmt(secs) + " s");
  return check.Finish("accuracy " + Fmt(full.accuracy * 100, 3) + "%, " +
                      "no-context " + Fmt(off.accuracy * 100, 3) + "%, " +
                      "indifference " + Fmt(full.indifference_rate * 100, 3) + "%, " +
                      "gold-in-top-2 indifference " +
                      Fmt(full.indifference_rate_gold_top2 * 100, 3) + "%, " +
                      Fmt(secs, 4) + " s");
}

// 8. HellaSWAG val, 500-question seeded subset.
Result HellaSwagAccuracy() {
  const char* data = Env("PTQA_HELLASWAG_VAL");
  if (!data) return {Verdict::kSkip, "needs PTQA_HELLASWAG_VAL and a ConceptNet index"};
  std::string why;
  const auto net = ExternalNetwork(&why);
  if (!net) return {Verdict::kSkip, why};
  const auto report = Evaluate(*net, LoadDataset(data, DatasetFormat::kHellaSwag), BenchmarkParams());
  Checker check;
  check.Expect(report.accuracy > 0.25, "accuracy " + Fmt(report.accuracy) + " <= 0.25");
  return check.Finish("accuracy " + Fmt(report.accuracy * 100, 3) + "% (chance 25%)");
}

}  // namespace
}  // namespace ptqa

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  using ptqa::Result;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"oracle equivalence", ptqa::OracleEquivalence},
      {"energy calculus", ptqa::EnergyCalculus},
      {"Bradley-Terry preference", ptqa::BradleyTerry},
      {"soft labels", ptqa::SoftLabelCalculus},
      {"ingestion", ptqa::Ingestion},
      {"piano concert end to end", [&] { return ptqa::PianoConcert(cli); }},
      {"SWAG accuracy", ptqa::SwagAccuracy},
      {"HellaSWAG accuracy", ptqa::HellaSwagAccuracy},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {ptqa::Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.verdict == ptqa::Verdict::kPass   ? "PASS"
                      : r.verdict == ptqa::Verdict::kFail ? "FAIL"
                                                          : "SKIP";
    failed += r.verdict == ptqa::Verdict::kFail;
    std::cout << "[" << tag << "] " << (i + 1) << ". " << criteria[i].first << ": " << r.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
