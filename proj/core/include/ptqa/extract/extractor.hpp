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

#ifndef PTQA_EXTRACT_EXTRACTOR_HPP_
#define PTQA_EXTRACT_EXTRACTOR_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ptqa/kb/semantic_network.hpp"

namespace ptqa {

// Rewrites a trailing `suffix` to `replacement` ("ies" -> "y").
struct SuffixRule {
  std::string suffix;
  std::string replacement;
  bool inflection = false;  // verb inflection (-ing, -ed)
};

struct ExtractionConfig {
  std::set<std::string, std::less<>> stopwords;
  std::vector<SuffixRule> suffix_rules;
  std::size_t max_phrase_length = 3;
  // When false, single tokens whose lemma came from a verb-inflection
  // rule are dropped.
  bool extract_verbs = true;
  // Minimum stem length left after stripping a suffix.
  std::size_t min_stem_length = 2;
};

// Checked-in defaults; identical to core/data/*.txt.
std::set<std::string, std::less<>> DefaultStopwords();
std::vector<SuffixRule> DefaultSuffixRules();
ExtractionConfig DefaultExtractionConfig();

// One word per line; '#' starts a comment.
std::set<std::string, std::less<>> LoadStopwords(const std::string& path);
// "suffix replacement [verb]" per line; "-" means an empty replacement.
std::vector<SuffixRule> LoadSuffixRules(const std::string& path);

// Lowercases ASCII letters and strips punctuation from both ends.
std::string CleanToken(std::string_view token);

// Returns the lemma for `token`: the first suffix rule whose result is in
// the network vocabulary, else the cleaned token unchanged.
std::string NormalizeToken(std::string_view token, const SemanticNetwork& network,
                           const ExtractionConfig& config);

// Cleaned, whitespace-split tokens of `text`. Possessive "'s" is dropped.
std::vector<std::string> Tokenize(std::string_view text);

// Grounded concepts mentioned in `text`, deduplicated in first-occurrence
// order. Greedy longest match over the vocabulary, then per-token lemmas.
std::vector<ConceptId> ExtractConcepts(std::string_view text,
                                       const SemanticNetwork& network,
                                       const ExtractionConfig& config);

}  // namespace ptqa

#endif  // PTQA_EXTRACT_EXTRACTOR_HPP_
