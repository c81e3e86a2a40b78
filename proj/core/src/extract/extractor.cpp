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

#include "ptqa/extract/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ptqa/default_resources.hpp"
#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

bool IsPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

char Lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::set<std::string, std::less<>> ParseStopwords(std::istream& in) {
  std::set<std::string, std::less<>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string word = Trim(line);
    for (char& c : word) c = Lower(c);
    if (!word.empty()) out.insert(std::move(word));
  }
  return out;
}

std::vector<SuffixRule> ParseSuffixRules(std::istream& in) {
  std::vector<SuffixRule> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    SuffixRule rule;
    std::string tag;
    if (!(fields >> rule.suffix)) continue;
    if (!(fields >> rule.replacement)) {
      throw DataError("suffix rule line " + std::to_string(number) +
                      ": missing replacement");
    }
    if (rule.replacement == "-") rule.replacement.clear();
    if (fields >> tag) {
      if (tag != "verb") {
        throw DataError("suffix rule line " + std::to_string(number) +
                        ": unknown tag '" + tag + "'");
      }
      rule.inflection = true;
    }
    out.push_back(std::move(rule));
  }
  return out;
}

struct Lemma {
  std::string text;
  bool inflected = false;
};

Lemma LemmatizeClean(const std::string& clean, const SemanticNetwork& network,
                     const ExtractionConfig& config) {
  for (const SuffixRule& rule : config.suffix_rules) {
    if (!clean.ends_with(rule.suffix)) continue;
    const std::size_t stem = clean.size() - rule.suffix.size();
    if (stem < config.min_stem_length) continue;
    // "-s" on "glass" would yield "glas".
    if (rule.suffix == "s" && rule.replacement.empty() && clean.ends_with("ss")) {
      continue;
    }
    std::string candidate = clean.substr(0, stem) + rule.replacement;
    if (candidate != clean && network.HasPhrase(candidate)) {
      return {std::move(candidate), rule.inflection};
    }
  }
  return {clean, false};
}

std::string Join(const std::vector<std::string>& parts, std::size_t begin,
                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i != begin) out.push_back('_');
    out += parts[i];
  }
  return out;
}

}  // namespace

std::set<std::string, std::less<>> DefaultStopwords() {
  std::istringstream in(resources::kStopwords);
  return ParseStopwords(in);
}

std::vector<SuffixRule> DefaultSuffixRules() {
  std::istringstream in(resources::kSuffixRules);
  return ParseSuffixRules(in);
}

ExtractionConfig DefaultExtractionConfig() {
  ExtractionConfig config;
  config.stopwords = DefaultStopwords();
  config.suffix_rules = DefaultSuffixRules();
  return config;
}

std::set<std::string, std::less<>> LoadStopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stopword list: " + path);
  return ParseStopwords(in);
}

std::vector<SuffixRule> LoadSuffixRules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open suffix rules: " + path);
  return ParseSuffixRules(in);
}

std::string CleanToken(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && IsPunct(token[begin])) ++begin;
  while (end > begin && IsPunct(token[end - 1])) --end;
  std::string out;
  out.reserve(end - begin);
  for (char c : token.substr(begin, end - begin)) out.push_back(Lower(c));
  return out;
}

std::string NormalizeToken(std::string_view token, const SemanticNetwork& network,
                           const ExtractionConfig& config) {
  std::string clean = CleanToken(token);
  if (clean.empty()) return clean;
  return LemmatizeClean(clean, network, config).text;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::string spaced;
  spaced.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\'') {
      // Possessive "'s" goes; any other apostrophe is elided ("don't").
      const bool possessive = i + 1 < text.size() && Lower(text[i + 1]) == 's' &&
                              (i + 2 == text.size() || !std::isalnum(
                                  static_cast<unsigned char>(text[i + 2])));
      if (possessive) ++i;
      continue;
    }
    spaced.push_back(IsPunct(c) ? ' ' : Lower(c));
  }
  std::vector<std::string> tokens;
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

std::vector<ConceptId> ExtractConcepts(std::string_view text,
                                       const SemanticNetwork& network,
                                       const ExtractionConfig& config) {
  const std::vector<std::string> tokens = Tokenize(text);
  const std::size_t n = tokens.size();
  std::vector<Lemma> lemmas;
  lemmas.reserve(n);
  for (const auto& t : tokens) lemmas.push_back(LemmatizeClean(t, network, config));
  std::vector<std::string> lemma_text;
  lemma_text.reserve(n);
  for (const auto& l : lemmas) lemma_text.push_back(l.text);

  auto is_stop = [&](std::size_t i) {
    return config.stopwords.contains(tokens[i]) ||
           config.stopwords.contains(lemma_text[i]);
  };

  std::vector<ConceptId> out;
  std::unordered_set<ConceptId> seen;
  auto emit = [&](ConceptId id) {
    if (seen.insert(id).second) out.push_back(id);
  };

  const std::size_t max_len = std::max<std::size_t>(1, config.max_phrase_length);
  std::size_t i = 0;
  while (i < n) {
    bool matched = false;
    for (std::size_t len = std::min(max_len, n - i); len >= 2; --len) {
      // Phrases must start and end on content words ("the_piano" is noise).
      if (is_stop(i) || is_stop(i + len - 1)) continue;
      auto id = network.LookupPhrase(Join(tokens, i, i + len));
      if (!id) id = network.LookupPhrase(Join(lemma_text, i, i + len));
      if (id) {
        emit(*id);
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (!is_stop(i) && !(lemmas[i].inflected && !config.extract_verbs)) {
      if (auto id = network.LookupPhrase(lemma_text[i])) emit(*id);
    }
    ++i;
  }
  return out;
}

}  // namespace ptqa
