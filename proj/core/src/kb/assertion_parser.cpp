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

#include "ptqa/kb/assertion_parser.hpp"

#include <array>
#include <cctype>
#include <cmath>

#include <nlohmann/json.hpp>

namespace ptqa {
namespace {

constexpr std::size_t kFieldCount = 5;

// Splits on tabs; returns false when the field count is wrong.
bool SplitFields(std::string_view line,
                 std::array<std::string_view, kFieldCount>& fields) {
  std::size_t field = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      if (field == kFieldCount) return false;
      fields[field++] = line.substr(begin, i - begin);
      begin = i + 1;
    }
  }
  return field == kFieldCount;
}

std::string_view ConceptLanguage(std::string_view uri) {
  if (!uri.starts_with("/c/")) return {};
  uri.remove_prefix(3);
  return uri.substr(0, uri.find('/'));
}

}  // namespace

std::set<std::string, std::less<>> DefaultNegativeRelations() {
  return {"NotCapableOf", "NotDesires",   "NotHasProperty",
          "Antonym",      "DistinctFrom", "NotUsedFor"};
}

std::string NormalizeConceptUri(std::string_view uri) {
  if (!uri.starts_with("/c/")) return {};
  uri.remove_prefix(3);
  const std::size_t lang_end = uri.find('/');
  if (lang_end == std::string_view::npos || lang_end == 0) return {};
  std::string_view rest = uri.substr(lang_end + 1);
  const std::string_view term = rest.substr(0, rest.find('/'));
  if (term.empty()) return {};

  std::string out;
  out.reserve(lang_end + 1 + term.size());
  for (char c : uri.substr(0, lang_end + 1)) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (char c : term) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string RelationLabel(std::string_view relation_uri) {
  if (!relation_uri.starts_with("/r/")) return {};
  while (!relation_uri.empty() && relation_uri.back() == '/') {
    relation_uri.remove_suffix(1);
  }
  const std::size_t slash = relation_uri.rfind('/');
  return std::string(relation_uri.substr(slash + 1));
}

LineOutcome ParseAssertionLine(std::string_view line, std::size_t line_number,
                               const ParserConfig& config) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  std::array<std::string_view, kFieldCount> fields;
  if (!SplitFields(line, fields)) {
    return MalformedLine{line_number, "expected 5 tab-separated fields"};
  }
  const auto [edge_uri, relation_uri, start_uri, end_uri, metadata] = fields;
  (void)edge_uri;

  std::string relation = RelationLabel(relation_uri);
  if (relation.empty()) {
    return MalformedLine{line_number, "relation is not a /r/ uri"};
  }
  const std::string_view start_lang = ConceptLanguage(start_uri);
  const std::string_view end_lang = ConceptLanguage(end_uri);
  if (start_lang.empty() || end_lang.empty()) {
    // Non-concept endpoints (external links, sources) are out of scope.
    return SkipLine{};
  }
  if (start_lang != config.language || end_lang != config.language) {
    return SkipLine{};
  }

  RawAssertion out;
  out.start = NormalizeConceptUri(start_uri);
  out.end = NormalizeConceptUri(end_uri);
  if (out.start.empty() || out.end.empty()) {
    return MalformedLine{line_number, "concept uri has no term"};
  }
  out.relation = std::move(relation);

  const auto meta = nlohmann::json::parse(metadata, nullptr,
                                          /*allow_exceptions=*/false);
  if (meta.is_discarded() || !meta.is_object()) {
    return MalformedLine{line_number, "metadata is not a JSON object"};
  }
  const auto weight = meta.find("weight");
  if (weight == meta.end() || !weight->is_number()) {
    return MalformedLine{line_number, "metadata has no numeric weight"};
  }
  out.weight = weight->get<double>();
  if (!std::isfinite(out.weight)) {
    return MalformedLine{line_number, "weight is not finite"};
  }
  if (config.negative_relations.contains(out.relation)) {
    out.weight = -std::abs(out.weight);
  }
  return out;
}

}  // namespace ptqa
