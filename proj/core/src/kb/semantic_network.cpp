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

#include "ptqa/kb/semantic_network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <new>
#include <utility>

#include <zlib.h>

#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

constexpr std::size_t kMaxReportedErrors = 20;

bool NeighborLess(const Neighbor& a, const Neighbor& b) {
  return std::tie(a.node, a.relation, a.direction) <
         std::tie(b.node, b.relation, b.direction);
}

}  // namespace

// --- StringInterner -------------------------------------------------------

std::uint32_t StringInterner::Intern(std::string_view text) {
  if (auto it = ids_.find(text); it != ids_.end()) return it->second;
  if (strings_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw OutOfStorage("interner exhausted the 32-bit id space");
  }
  const auto id = static_cast<std::uint32_t>(strings_.size());
  strings_.emplace_back(text);
  ids_.emplace(strings_.back(), id);
  return id;
}

std::optional<std::uint32_t> StringInterner::Find(std::string_view text) const {
  if (auto it = ids_.find(text); it != ids_.end()) return it->second;
  return std::nullopt;
}

// --- SemanticNetwork ------------------------------------------------------

void SemanticNetwork::CheckValid(ConceptId id) const {
  if (!Valid(id)) {
    throw UnknownConcept("concept id " + std::to_string(id.value) +
                         " out of range [0, " +
                         std::to_string(concept_count()) + ")");
  }
}

const std::string& SemanticNetwork::Uri(ConceptId id) const {
  CheckValid(id);
  return concepts_.Text(id.value);
}

std::optional<ConceptId> SemanticNetwork::FindUri(std::string_view uri) const {
  if (auto id = concepts_.Find(uri)) return ConceptId{*id};
  return std::nullopt;
}

const std::string& SemanticNetwork::RelationName(RelationId id) const {
  return relations_.Text(id.value);
}

std::optional<RelationId> SemanticNetwork::FindRelation(
    std::string_view name) const {
  if (auto id = relations_.Find(name)) {
    return RelationId{static_cast<std::uint16_t>(*id)};
  }
  return std::nullopt;
}

std::optional<ConceptId> SemanticNetwork::LookupPhrase(
    std::string_view phrase) const {
  if (auto it = vocabulary_.find(phrase); it != vocabulary_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, ConceptId>>
SemanticNetwork::SortedVocabulary() const {
  std::vector<std::pair<std::string, ConceptId>> out(vocabulary_.begin(),
                                                     vocabulary_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const Neighbor> SemanticNetwork::Neighbors(ConceptId id) const {
  CheckValid(id);
  return std::span<const Neighbor>(entries_).subspan(
      offsets_[id.value], offsets_[id.value + 1] - offsets_[id.value]);
}

std::optional<PhiResult> SemanticNetwork::Phi(ConceptId a, ConceptId b) const {
  CheckValid(a);
  CheckValid(b);
  if (a == b) return std::nullopt;
  const auto row = Neighbors(a);
  const auto [lo, hi] = std::equal_range(
      row.begin(), row.end(), Neighbor{b, {}, Direction::kOutgoing, 0.0F},
      [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
  if (lo == hi) return std::nullopt;
  // Strongest assertion; ties go to the lowest relation id, then to the
  // assertion whose start has the lower id, so Phi(a, b) and Phi(b, a)
  // always select the same assertion.
  auto start_of = [a, b](const Neighbor& n) {
    return n.direction == Direction::kOutgoing ? a : b;
  };
  auto best = lo;
  for (auto it = lo + 1; it != hi; ++it) {
    const float wa = std::abs(it->weight);
    const float wb = std::abs(best->weight);
    if (wa > wb ||
        (wa == wb && std::pair(it->relation, start_of(*it)) <
                         std::pair(best->relation, start_of(*best)))) {
      best = it;
    }
  }
  return PhiResult{static_cast<double>(best->weight), best->relation,
                   best->direction == Direction::kOutgoing};
}

// The vocabulary maps the term part of each uri ("en/play_piano" ->
// "play_piano").
void SemanticNetwork::BuildVocabulary() {
  vocabulary_.clear();
  vocabulary_.reserve(concepts_.size());
  for (std::uint32_t i = 0; i < concepts_.size(); ++i) {
    const std::string& uri = concepts_.Text(i);
    const std::size_t slash = uri.find('/');
    vocabulary_.emplace(slash == std::string::npos ? uri : uri.substr(slash + 1),
                        ConceptId{i});
  }
}

// --- NetworkBuilder -------------------------------------------------------

NetworkBuilder::NetworkBuilder(IngestConfig config)
    : config_(std::move(config)) {}

bool NetworkBuilder::Add(const RawAssertion& assertion) {
  if (config_.max_edges != 0 && stats_.retained >= config_.max_edges) {
    return false;
  }
  if (assertion.start == assertion.end) {
    ++stats_.self_loops;
    return true;
  }
  const std::uint32_t rel = relations_.Intern(assertion.relation);
  if (rel > std::numeric_limits<std::uint16_t>::max()) {
    throw OutOfStorage("more than 65536 relation labels");
  }
  PendingEdge edge{concepts_.Intern(assertion.start),
                   concepts_.Intern(assertion.end),
                   static_cast<std::uint16_t>(rel),
                   std::abs(assertion.weight), assertion.weight < 0.0};
  try {
    pending_.push_back(edge);
  } catch (const std::bad_alloc&) {
    throw OutOfStorage("out of memory while buffering assertions");
  }
  ++stats_.retained;
  return config_.max_edges == 0 || stats_.retained < config_.max_edges;
}

bool NetworkBuilder::AddLine(std::string_view line) {
  ++stats_.lines;
  if (line.empty() || line == "\r") {
    return true;
  }
  auto outcome = ParseAssertionLine(line, stats_.lines, config_.parser);
  if (auto* assertion = std::get_if<RawAssertion>(&outcome)) {
    return Add(*assertion);
  }
  if (auto* error = std::get_if<MalformedLine>(&outcome)) {
    ++stats_.malformed;
    if (stats_.first_errors.size() < kMaxReportedErrors) {
      stats_.first_errors.push_back(std::move(*error));
    }
    return true;
  }
  ++stats_.skipped;
  return true;
}

SemanticNetwork NetworkBuilder::Build() && {
  try {
    // Aggregate duplicates of (start, end, relation). Stable so ties on
    // magnitude resolve to the earliest line.
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const PendingEdge& a, const PendingEdge& b) {
                       return std::tie(a.start, a.end, a.relation) <
                              std::tie(b.start, b.end, b.relation);
                     });
    std::vector<Assertion> edges;
    edges.reserve(pending_.size());
    for (std::size_t i = 0; i < pending_.size();) {
      const PendingEdge& first = pending_[i];
      double signed_weight = first.negative ? -first.magnitude : first.magnitude;
      double best = first.magnitude;
      std::size_t j = i + 1;
      for (; j < pending_.size() && pending_[j].start == first.start &&
             pending_[j].end == first.end &&
             pending_[j].relation == first.relation;
           ++j) {
        const PendingEdge& dup = pending_[j];
        const double w = dup.negative ? -dup.magnitude : dup.magnitude;
        if (config_.aggregation == Aggregation::kSum) {
          signed_weight += w;
        } else if (dup.magnitude > best) {
          best = dup.magnitude;
          signed_weight = w;
        }
      }
      edges.push_back(Assertion{ConceptId{first.start}, ConceptId{first.end},
                                RelationId{first.relation}, signed_weight});
      i = j;
    }
    pending_.clear();
    pending_.shrink_to_fit();

    SemanticNetwork net;
    const std::size_t n = concepts_.size();
    net.offsets_.assign(n + 1, 0);
    for (const Assertion& e : edges) {
      ++net.offsets_[e.start.value + 1];
      ++net.offsets_[e.end.value + 1];
    }
    for (std::size_t i = 0; i < n; ++i) net.offsets_[i + 1] += net.offsets_[i];
    net.entries_.resize(net.offsets_[n]);
    std::vector<std::uint64_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
    for (const Assertion& e : edges) {
      const auto w = static_cast<float>(e.weight);
      net.entries_[cursor[e.start.value]++] =
          Neighbor{e.end, e.relation, Direction::kOutgoing, w};
      net.entries_[cursor[e.end.value]++] =
          Neighbor{e.start, e.relation, Direction::kIncoming, w};
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(net.entries_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i]),
                net.entries_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i + 1]),
                NeighborLess);
    }
    net.edge_count_ = edges.size();
    net.concepts_ = std::move(concepts_);
    net.relations_ = std::move(relations_);
    net.BuildVocabulary();
    return net;
  } catch (const std::bad_alloc&) {
    throw OutOfStorage("out of memory while building the network");
  }
}

// --- stream front ends ----------------------------------------------------

SemanticNetwork BuildNetwork(std::istream& in, const IngestConfig& config,
                             IngestStats* stats) {
  NetworkBuilder builder(config);
  std::string line;
  while (std::getline(in, line)) {
    if (!builder.AddLine(line)) break;
  }
  if (stats != nullptr) *stats = builder.stats();
  return std::move(builder).Build();
}

SemanticNetwork BuildNetworkFromFile(const std::string& path,
                                     const IngestConfig& config,
                                     IngestStats* stats) {
  // gzread passes uncompressed input through unchanged, so plain and
  // gzip dumps share one code path.
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw DataError("cannot open dump: " + path);
  }
  gzbuffer(file, 1 << 20);
  NetworkBuilder builder(config);
  std::string line;
  char buffer[1 << 16];
  bool more = true;
  while (more) {
    const char* got = gzgets(file, buffer, sizeof(buffer));
    if (got == nullptr) break;
    line.append(got);
    if (line.empty() || line.back() != '\n') {
      if (!gzeof(file)) continue;  // partial line; keep reading
    }
    more = builder.AddLine(line);
    line.clear();
  }
  if (more && !line.empty()) builder.AddLine(line);
  int err = Z_OK;
  const char* message = gzerror(file, &err);
  const bool failed = err != Z_OK && err != Z_STREAM_END;
  const std::string error_text = failed ? message : "";
  gzclose(file);
  if (failed) {
    throw DataError("error reading dump " + path + ": " + error_text);
  }
  if (stats != nullptr) *stats = builder.stats();
  return std::move(builder).Build();
}

}  // namespace ptqa
