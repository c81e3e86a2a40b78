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

#include "ptqa/harness/dataset.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

void Validate(const QuestionInstance& q, std::size_t record) {
  if (q.choices.size() < 2) {
    throw MalformedRecord(record, "fewer than two choices");
  }
  if (q.gold && *q.gold >= q.choices.size()) {
    throw MalformedRecord(record, "gold index out of range");
  }
}

std::optional<std::size_t> ParseIndex(std::string_view text, std::size_t record) {
  while (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw MalformedRecord(record, "label is not an integer: " + std::string(text));
  }
  return value;
}

std::optional<std::size_t> JsonGold(const nlohmann::json& doc, const char* key,
                                    std::size_t record) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (it->is_number_integer()) {
    const auto v = it->get<long long>();
    if (v < 0) throw MalformedRecord(record, "negative gold index");
    return static_cast<std::size_t>(v);
  }
  if (it->is_string()) return ParseIndex(it->get<std::string>(), record);
  throw MalformedRecord(record, "gold is neither integer nor string");
}

std::string JsonId(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<QuestionInstance> LoadSwag(std::istream& in, const DatasetOptions& options) {
  std::vector<std::string> header;
  if (!ReadCsvRecord(in, header)) return {};
  std::map<std::string, std::size_t, std::less<>> column;
  for (std::size_t i = 0; i < header.size(); ++i) column.emplace(header[i], i);

  auto require = [&](const char* name) {
    const auto it = column.find(name);
    if (it == column.end()) {
      throw DataError(std::string("SWAG header lacks column '") + name + "'");
    }
    return it->second;
  };
  const std::size_t sent2 = require("sent2");
  const auto startphrase = column.find("startphrase");
  const auto sent1 = column.find("sent1");
  if (startphrase == column.end() && sent1 == column.end()) {
    throw DataError("SWAG header lacks both 'startphrase' and 'sent1'");
  }
  std::vector<std::size_t> endings;
  for (int i = 0;; ++i) {
    const auto it = column.find("ending" + std::to_string(i));
    if (it == column.end()) break;
    endings.push_back(it->second);
  }
  const auto label = column.find("label");
  // pandas writes its row index as an unnamed first column.
  const bool has_row_index = !header.empty() && header.front().empty();

  std::vector<QuestionInstance> out;
  std::vector<std::string> row;
  for (std::size_t record = 0; ReadCsvRecord(in, row); ++record) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != header.size()) {
      throw MalformedRecord(record, "expected " + std::to_string(header.size()) +
                                        " columns, got " + std::to_string(row.size()));
    }
    QuestionInstance q;
    q.id = has_row_index && !row[0].empty() ? "swag-" + row[0]
                                            : "swag-" + std::to_string(record);
    if (options.swag_context == SwagContext::kSecondSentence) {
      q.context = row[sent2];
    } else if (startphrase != column.end() && !row[startphrase->second].empty()) {
      q.context = row[startphrase->second];
    } else {
      q.context = row[sent1->second] + " " + row[sent2];
    }
    for (std::size_t e : endings) q.choices.push_back(row[e]);
    if (label != column.end()) q.gold = ParseIndex(row[label->second], record);
    Validate(q, record);
    out.push_back(std::move(q));
  }
  return out;
}

template <typename F>
std::vector<QuestionInstance> LoadJsonLines(std::istream& in, F&& convert) {
  std::vector<QuestionInstance> out;
  std::string line;
  for (std::size_t record = 0; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw MalformedRecord(record, "not a JSON object");
    }
    out.push_back(convert(doc, record));
    ++record;
  }
  return out;
}

QuestionInstance HellaSwagFromJson(const nlohmann::json& doc, std::size_t record) {
  try {
    QuestionInstance q;
    q.id = doc.contains("ind") ? "hellaswag-" + JsonId(doc.at("ind"))
                               : "hellaswag-" + std::to_string(record);
    q.context = doc.at("ctx").get<std::string>();
    q.choices = doc.at("endings").get<std::vector<std::string>>();
    q.gold = JsonGold(doc, "label", record);
    Validate(q, record);
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedRecord(record, e.what());
  }
}

}  // namespace

DatasetFormat ParseDatasetFormat(std::string_view name) {
  if (name == "swag") return DatasetFormat::kSwag;
  if (name == "hellaswag") return DatasetFormat::kHellaSwag;
  if (name == "generic") return DatasetFormat::kGeneric;
  throw UnknownFormat("unknown dataset format: " + std::string(name));
}

bool ReadCsvRecord(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return true;
}

QuestionInstance QuestionFromJson(const nlohmann::json& doc, std::size_t record) {
  try {
    QuestionInstance q;
    q.id = JsonId(doc.at("id"));
    q.context = doc.at("context").get<std::string>();
    q.choices = doc.at("choices").get<std::vector<std::string>>();
    q.gold = JsonGold(doc, "gold", record);
    Validate(q, record);
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedRecord(record, e.what());
  }
}

nlohmann::json QuestionToJson(const QuestionInstance& question) {
  nlohmann::json doc = {{"id", question.id},
                        {"context", question.context},
                        {"choices", question.choices}};
  if (question.gold) doc["gold"] = *question.gold;
  return doc;
}

std::vector<QuestionInstance> LoadDataset(std::istream& in, DatasetFormat format,
                                          const DatasetOptions& options) {
  switch (format) {
    case DatasetFormat::kSwag:
      return LoadSwag(in, options);
    case DatasetFormat::kHellaSwag:
      return LoadJsonLines(in, HellaSwagFromJson);
    case DatasetFormat::kGeneric:
      return LoadJsonLines(in, QuestionFromJson);
  }
  throw UnknownFormat("unknown dataset format");
}

std::vector<QuestionInstance> LoadDataset(const std::string& path,
                                          DatasetFormat format,
                                          const DatasetOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset: " + path);
  return LoadDataset(in, format, options);
}

}  // namespace ptqa
