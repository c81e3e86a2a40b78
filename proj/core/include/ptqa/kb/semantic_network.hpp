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

#ifndef PTQA_KB_SEMANTIC_NETWORK_HPP_
#define PTQA_KB_SEMANTIC_NETWORK_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ptqa/kb/assertion_parser.hpp"
#include "ptqa/kb/types.hpp"

namespace ptqa {

struct TransparentStringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

template <typename V>
using StringMap =
    std::unordered_map<std::string, V, TransparentStringHash, std::equal_to<>>;

// Bidirectional string <-> dense id table.
class StringInterner {
 public:
  std::uint32_t Intern(std::string_view text);
  std::optional<std::uint32_t> Find(std::string_view text) const;
  const std::string& Text(std::uint32_t id) const { return strings_.at(id); }
  std::size_t size() const { return strings_.size(); }
  const std::vector<std::string>& strings() const { return strings_; }

 private:
  std::vector<std::string> strings_;
  StringMap<std::uint32_t> ids_;
};

enum class Aggregation {
  kMax,  // keep the strongest duplicate
  kSum,  // add duplicate magnitudes
};

struct IngestConfig {
  ParserConfig parser;
  Aggregation aggregation = Aggregation::kMax;
  std::size_t max_edges = 0;  // 0 = unlimited
};

struct IngestStats {
  std::size_t lines = 0;
  std::size_t retained = 0;    // assertions accepted before aggregation
  std::size_t skipped = 0;     // language filter
  std::size_t self_loops = 0;
  std::size_t malformed = 0;
  std::vector<MalformedLine> first_errors;  // capped sample for reporting
};

// Immutable ConceptNet graph. Every assertion is stored twice, once in the
// adjacency list of each endpoint, and each list is sorted by neighbor id.
class SemanticNetwork {
 public:
  SemanticNetwork() = default;

  std::size_t concept_count() const { return concepts_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t relation_count() const { return relations_.size(); }

  bool Valid(ConceptId id) const { return id.value < concepts_.size(); }

  const std::string& Uri(ConceptId id) const;
  std::optional<ConceptId> FindUri(std::string_view uri) const;
  const std::string& RelationName(RelationId id) const;
  std::optional<RelationId> FindRelation(std::string_view name) const;

  // Surface phrase ("play_piano") -> concept.
  std::optional<ConceptId> LookupPhrase(std::string_view phrase) const;
  bool HasPhrase(std::string_view phrase) const {
    return LookupPhrase(phrase).has_value();
  }

  // Outgoing and incoming entries, sorted by (neighbor, relation, direction).
  std::span<const Neighbor> Neighbors(ConceptId id) const;

  // Strongest direct assertion between a and b in either direction, or
  // nullopt. Self pairs never have one.
  std::optional<PhiResult> Phi(ConceptId a, ConceptId b) const;

  const StringInterner& concepts() const { return concepts_; }
  const StringInterner& relations() const { return relations_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  // Vocabulary entries sorted by phrase.
  std::vector<std::pair<std::string, ConceptId>> SortedVocabulary() const;
  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const Neighbor> entries() const { return entries_; }

  // Checksum recorded when the network was loaded from or written to disk;
  // zero for networks built in memory and never persisted.
  std::uint64_t checksum() const { return checksum_; }
  void set_checksum(std::uint64_t c) { checksum_ = c; }

 private:
  friend class NetworkBuilder;
  friend SemanticNetwork LoadIndexFromBytes(std::span<const std::uint8_t>);

  void CheckValid(ConceptId id) const;
  void BuildVocabulary();

  StringInterner concepts_;
  StringInterner relations_;
  std::vector<std::uint64_t> offsets_{0};  // CSR row offsets, size n+1
  std::vector<Neighbor> entries_;
  std::size_t edge_count_ = 0;
  StringMap<ConceptId> vocabulary_;
  std::uint64_t checksum_ = 0;
};

// Single-writer accumulator for assertions; Build() freezes the result.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(IngestConfig config = {});

  // Returns false once max_edges has been reached.
  bool Add(const RawAssertion& assertion);
  // Feeds one dump line; updates stats.
  bool AddLine(std::string_view line);

  const IngestStats& stats() const { return stats_; }
  SemanticNetwork Build() &&;

 private:
  struct PendingEdge {
    std::uint32_t start;
    std::uint32_t end;
    std::uint16_t relation;
    double magnitude;
    bool negative;
  };

  IngestConfig config_;
  IngestStats stats_;
  StringInterner concepts_;
  StringInterner relations_;
  std::vector<PendingEdge> pending_;
};

// Reads every line from `in` (plain text).
SemanticNetwork BuildNetwork(std::istream& in, const IngestConfig& config = {},
                             IngestStats* stats = nullptr);

// Reads a dump from disk; gzip input is detected from its magic bytes.
SemanticNetwork BuildNetworkFromFile(const std::string& path,
                                     const IngestConfig& config = {},
                                     IngestStats* stats = nullptr);

}  // namespace ptqa

#endif  // PTQA_KB_SEMANTIC_NETWORK_HPP_
