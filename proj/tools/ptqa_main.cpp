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

// ptqa: command-line front end.
//
//   ptqa ingest      --dump conceptnet.csv.gz --out kb.idx
//   ptqa extract     --index kb.idx --text "A woman is playing piano"
//   ptqa answer      --index kb.idx --question '{"id":..,"context":..,"choices":[..]}'
//   ptqa eval        --index kb.idx --data val.csv --format swag --limit 500
//   ptqa emit-labels --index kb.idx --data val.csv --format swag --out labels.jsonl
//   ptqa explain     --index kb.idx --question '<json>' --choice 0 --out graph.dot
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 index error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ptqa/errors.hpp"
#include "ptqa/extract/extractor.hpp"
#include "ptqa/harness/answer.hpp"
#include "ptqa/harness/dataset.hpp"
#include "ptqa/harness/dot_export.hpp"
#include "ptqa/harness/evaluate.hpp"
#include "ptqa/harness/labels.hpp"
#include "ptqa/kb/index_io.hpp"
#include "ptqa/kb/semantic_network.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIndex = 3;

struct ReasoningOptions {
  std::size_t k = 3;
  double temperature = ptqa::kDefaultTemperature;
  bool no_context = false;
  bool evidence_pairs = false;
  bool no_verbs = false;
  std::size_t max_phrase = 3;
  std::size_t node_budget = ptqa::InterpretationParams{}.search_node_budget;
  std::string stopwords;
  std::string suffix_rules;

  void Register(CLI::App* app) {
    app->add_option("--k", k, "cues per pair lacking a direct assertion")
        ->capture_default_str();
    app->add_option("--temp", temperature, "soft-label temperature")
        ->capture_default_str();
    app->add_flag("--no-context", no_context, "disable contextualization cues");
    app->add_flag("--evidence-pairs", evidence_pairs,
                  "also relate evidence concepts to each other");
    app->add_flag("--no-verbs", no_verbs, "drop verb-inflected single tokens");
    app->add_option("--max-phrase", max_phrase, "longest multiword phrase, in tokens")
        ->capture_default_str();
    app->add_option("--node-budget", node_budget, "cue search node limit")
        ->capture_default_str();
    app->add_option("--stopwords", stopwords, "stopword list file");
    app->add_option("--suffix-rules", suffix_rules, "suffix rule file");
  }

  ptqa::ExtractionConfig Extraction() const {
    ptqa::ExtractionConfig config = ptqa::DefaultExtractionConfig();
    if (!stopwords.empty()) config.stopwords = ptqa::LoadStopwords(stopwords);
    if (!suffix_rules.empty()) config.suffix_rules = ptqa::LoadSuffixRules(suffix_rules);
    config.extract_verbs = !no_verbs;
    config.max_phrase_length = max_phrase;
    return config;
  }

  ptqa::AnswerParams Answer() const {
    if (!(temperature > 0.0)) throw CLI::ValidationError("--temp", "must be positive");
    ptqa::AnswerParams params;
    params.interpretation.cues_per_pair = k;
    params.interpretation.include_evidence_pairs = evidence_pairs;
    params.interpretation.search_node_budget = node_budget;
    params.contextualize = !no_context;
    params.temperature = temperature;
    params.extraction = Extraction();
    return params;
  }
};

ptqa::QuestionInstance ParseQuestion(const std::string& text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ptqa::DataError("--question is not valid JSON");
  return ptqa::QuestionFromJson(doc);
}

void WriteOrPrint(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ptqa::DataError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abductive commonsense question answering over ConceptNet"};
  app.require_subcommand(1);

  // ingest
  std::string dump, index_out, lang = "en", aggregation = "max";
  std::size_t max_edges = 0;
  auto* ingest = app.add_subcommand("ingest", "build a binary index from a ConceptNet dump");
  ingest->add_option("--dump", dump, "assertion dump (.csv or .csv.gz)")->required();
  ingest->add_option("--out", index_out, "index file to write")->required();
  ingest->add_option("--lang", lang, "language filter")->capture_default_str();
  ingest->add_option("--max-edges", max_edges, "stop after N retained assertions");
  ingest->add_option("--aggregation", aggregation, "duplicate rule")
      ->check(CLI::IsMember({"max", "sum"}))
      ->capture_default_str();

  // extract
  std::string index_path, text;
  ReasoningOptions extract_opts;
  auto* extract = app.add_subcommand("extract", "print grounded concepts of a sentence");
  extract->add_option("--index", index_path, "index file")->required();
  extract->add_option("--text", text, "sentence")->required();
  extract_opts.Register(extract);

  // answer
  std::string question;
  bool with_configurations = false;
  ReasoningOptions answer_opts;
  auto* answer = app.add_subcommand("answer", "answer one question given as JSON");
  answer->add_option("--index", index_path, "index file")->required();
  answer->add_option("--question", question, "generic-schema JSON record")->required();
  answer->add_flag("--configurations", with_configurations,
                   "include every interpretation in the output");
  answer_opts.Register(answer);

  // eval / emit-labels
  std::string data, format = "generic", swag_context = "startphrase", out_path;
  std::size_t limit = 0, repeats = 1, threads = 0;
  std::uint64_t seed = 0;
  bool with_predictions = false;
  ReasoningOptions eval_opts;
  auto add_data_options = [&](CLI::App* cmd) {
    cmd->add_option("--index", index_path, "index file")->required();
    cmd->add_option("--data", data, "dataset file")->required();
    cmd->add_option("--format", format, "dataset format")
        ->check(CLI::IsMember({"swag", "hellaswag", "generic"}))
        ->capture_default_str();
    cmd->add_option("--swag-context", swag_context, "SWAG evidence text")
        ->check(CLI::IsMember({"startphrase", "sent2"}))
        ->capture_default_str();
    cmd->add_option("--limit", limit, "score a uniform subsample of N questions");
    cmd->add_option("--seed", seed, "subsample seed")->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    eval_opts.Register(cmd);
  };
  auto* eval = app.add_subcommand("eval", "accuracy over a labelled dataset");
  add_data_options(eval);
  eval->add_option("--repeats", repeats, "number of subsamples to average")
      ->capture_default_str();
  eval->add_option("--out", out_path, "write the JSON report here instead of stdout");
  eval->add_flag("--predictions", with_predictions, "include per-question predictions");

  auto* emit = app.add_subcommand("emit-labels", "write soft-label pseudo-targets");
  add_data_options(emit);
  emit->add_option("--out", out_path, "JSON-lines output file")->required();

  // explain
  std::size_t choice = 0;
  std::string dot_out;
  ReasoningOptions explain_opts;
  auto* explain = app.add_subcommand("explain", "export one interpretation as DOT");
  explain->add_option("--index", index_path, "index file")->required();
  explain->add_option("--question", question, "generic-schema JSON record")->required();
  explain->add_option("--choice", choice, "choice index")->required();
  explain->add_option("--out", dot_out, "DOT file (stdout when omitted)");
  explain_opts.Register(explain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ingest) {
      ptqa::IngestConfig config;
      config.parser.language = lang;
      config.max_edges = max_edges;
      config.aggregation =
          aggregation == "sum" ? ptqa::Aggregation::kSum : ptqa::Aggregation::kMax;
      ptqa::IngestStats stats;
      ptqa::SemanticNetwork network = ptqa::BuildNetworkFromFile(dump, config, &stats);
      ptqa::PersistIndex(network, index_out);
      nlohmann::json report = {{"lines", stats.lines},
                               {"retained", stats.retained},
                               {"skipped", stats.skipped},
                               {"self_loops", stats.self_loops},
                               {"malformed", stats.malformed},
                               {"concepts", network.concept_count()},
                               {"edges", network.edge_count()},
                               {"relations", network.relation_count()}};
      for (const auto& e : stats.first_errors) {
        std::cerr << "line " << e.line_number << ": " << e.reason << '\n';
      }
      std::cout << report.dump(2) << '\n';
      return 0;
    }

    const ptqa::SemanticNetwork network = ptqa::LoadIndex(index_path);

    if (*extract) {
      for (ptqa::ConceptId id :
           ptqa::ExtractConcepts(text, network, extract_opts.Extraction())) {
        std::cout << network.Uri(id) << '\n';
      }
      return 0;
    }
    if (*answer) {
      const auto prediction =
          ptqa::AnswerQuestion(network, ParseQuestion(question), answer_opts.Answer());
      std::cout << ptqa::PredictionToJson(prediction, network, with_configurations).dump(2)
                << '\n';
      return 0;
    }
    if (*explain) {
      const ptqa::QuestionInstance q = ParseQuestion(question);
      if (choice >= q.choices.size()) {
        std::cerr << "--choice " << choice << " out of range\n";
        return kExitUsage;
      }
      const auto prediction = ptqa::AnswerQuestion(network, q, explain_opts.Answer());
      WriteOrPrint(dot_out, ptqa::ExportDot(prediction.choices[choice].configuration, network,
                                            q.id + "/" + std::to_string(choice)));
      return 0;
    }

    ptqa::DatasetOptions dataset_options;
    dataset_options.swag_context = swag_context == "sent2"
                                       ? ptqa::SwagContext::kSecondSentence
                                       : ptqa::SwagContext::kStartphrase;
    const auto dataset =
        ptqa::LoadDataset(data, ptqa::ParseDatasetFormat(format), dataset_options);
    ptqa::EvalParams params;
    params.answer = eval_opts.Answer();
    params.limit = limit;
    params.seed = seed;
    params.repeats = repeats;
    params.threads = threads;

    if (*eval) {
      const auto report = ptqa::Evaluate(network, dataset, params);
      WriteOrPrint(out_path, ptqa::EvalReportToJson(report, with_predictions).dump(2) + "\n");
      return 0;
    }
    if (*emit) {
      const auto records = ptqa::EmitLabels(network, dataset, params, out_path);
      std::cerr << "wrote " << records.size() << " soft-label records to " << out_path << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ptqa::IndexError& e) {
    std::cerr << "index error: " << e.what() << '\n';
    return kExitIndex;
  } catch (const ptqa::Error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
