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

#ifndef PTQA_KB_ASSERTION_PARSER_HPP_
#define PTQA_KB_ASSERTION_PARSER_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "ptqa/kb/types.hpp"

namespace ptqa {

// Relations whose dump weight is negated on ingest so that phi carries the
// polarity of the assertion.
std::set<std::string, std::less<>> DefaultNegativeRelations();

struct ParserConfig {
  std::string language = "en";
  std::set<std::string, std::less<>> negative_relations =
      DefaultNegativeRelations();
};

// The line was well formed but is filtered out (language filter).
struct SkipLine {};

struct MalformedLine {
  std::size_t line_number = 0;
  std::string reason;
};

using LineOutcome = std::variant<RawAssertion, SkipLine, MalformedLine>;

// Parses one record of the ConceptNet 5.x CSV dump:
//   edge-uri \t relation-uri \t start-uri \t end-uri \t {json metadata}
// Never throws; problems are reported as MalformedLine.
LineOutcome ParseAssertionLine(std::string_view line, std::size_t line_number,
                               const ParserConfig& config = {});

// "/c/en/play_piano/v/wn/..." -> "en/play_piano". Returns an empty string
// for anything that is not a concept URI.
std::string NormalizeConceptUri(std::string_view uri);

// "/r/IsA" -> "IsA", "/r/dbpedia/genre" -> "genre".
std::string RelationLabel(std::string_view relation_uri);

}  // namespace ptqa

#endif  // PTQA_KB_ASSERTION_PARSER_HPP_
