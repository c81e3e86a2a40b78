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

#ifndef PTQA_HARNESS_DATASET_HPP_
#define PTQA_HARNESS_DATASET_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ptqa {

// A multiple-choice question: evidence text plus candidate continuations.
struct QuestionInstance {
  std::string id;
  std::string context;
  std::vector<std::string> choices;
  std::optional<std::size_t> gold;

  friend bool operator==(const QuestionInstance&, const QuestionInstance&) = default;
};

enum class DatasetFormat { kSwag, kHellaSwag, kGeneric };

// "swag", "hellaswag" or "generic"; throws UnknownFormat otherwise.
DatasetFormat ParseDatasetFormat(std::string_view name);

enum class SwagContext {
  kStartphrase,  // sent1 + the partial sent2 (the full startphrase)
  kSecondSentence,  // the partial sent2 only
};

struct DatasetOptions {
  SwagContext swag_context = SwagContext::kStartphrase;
};

// SWAG: CSV with a header row (startphrase, sent1, sent2, ending0..3, label).
// HellaSWAG: JSON lines with ctx, endings, label, ind.
// Generic: JSON lines {"id", "context", "choices", "gold"?}.
// Throws MalformedRecord (with the record index) or DataError.
std::vector<QuestionInstance> LoadDataset(std::istream& in, DatasetFormat format,
                                          const DatasetOptions& options = {});
std::vector<QuestionInstance> LoadDataset(const std::string& path,
                                          DatasetFormat format,
                                          const DatasetOptions& options = {});

// Generic-schema record <-> instance. `record` is used in error messages.
QuestionInstance QuestionFromJson(const nlohmann::json& doc, std::size_t record = 0);
nlohmann::json QuestionToJson(const QuestionInstance& question);

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. Returns false at end of input.
bool ReadCsvRecord(std::istream& in, std::vector<std::string>& fields);

}  // namespace ptqa

#endif  // PTQA_HARNESS_DATASET_HPP_
