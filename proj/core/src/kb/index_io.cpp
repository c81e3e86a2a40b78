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

#include "ptqa/kb/index_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

class ByteWriter {
 public:
  void Raw(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    bytes_.insert(bytes_.end(), p, p + n);
  }
  template <typename T>
  void Int(T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bytes_.push_back(static_cast<std::uint8_t>(
          static_cast<std::uint64_t>(value) >> (8 * i)));
    }
  }
  void String(const std::string& s) {
    Int<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    Raw(s.data(), s.size());
  }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <typename T>
  T Int() {
    Need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  std::string String() {
    const auto n = Int<std::uint32_t>();
    Need(n);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  void Need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw CorruptIndex("index truncated");
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kEntryBytes = 12;
constexpr std::size_t kHeaderBytes = sizeof(kIndexMagic) + sizeof(std::uint16_t);
constexpr std::size_t kChecksumBytes = sizeof(std::uint64_t);

}  // namespace

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::uint8_t> SerializeIndex(const SemanticNetwork& network) {
  ByteWriter w;
  w.Raw(kIndexMagic, sizeof(kIndexMagic));
  w.Int<std::uint16_t>(kIndexVersion);

  const auto& relations = network.relations().strings();
  w.Int<std::uint32_t>(static_cast<std::uint32_t>(relations.size()));
  for (const auto& r : relations) w.String(r);

  const auto& concepts = network.concepts().strings();
  w.Int<std::uint32_t>(static_cast<std::uint32_t>(concepts.size()));
  for (const auto& c : concepts) w.String(c);

  const auto entries = network.entries();
  w.Int<std::uint64_t>(entries.size());
  for (std::uint64_t off : network.offsets()) w.Int<std::uint64_t>(off);
  for (const Neighbor& e : entries) {
    w.Int<std::uint32_t>(e.node.value);
    w.Int<std::uint16_t>(e.relation.value);
    w.Int<std::uint8_t>(static_cast<std::uint8_t>(e.direction));
    w.Int<std::uint8_t>(0);
    w.Int<std::uint32_t>(std::bit_cast<std::uint32_t>(e.weight));
  }

  const auto vocabulary = network.SortedVocabulary();
  w.Int<std::uint32_t>(static_cast<std::uint32_t>(vocabulary.size()));
  for (const auto& [phrase, id] : vocabulary) {
    w.String(phrase);
    w.Int<std::uint32_t>(id.value);
  }

  w.Int<std::uint64_t>(network.edge_count());
  const std::uint64_t checksum = Fnv1a64(w.bytes());
  w.Int<std::uint64_t>(checksum);
  return std::move(w.bytes());
}

SemanticNetwork LoadIndexFromBytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes + kChecksumBytes) {
    throw CorruptIndex("index shorter than its header");
  }
  if (std::memcmp(bytes.data(), kIndexMagic, sizeof(kIndexMagic)) != 0) {
    throw CorruptIndex("bad magic bytes");
  }
  const std::uint16_t version = static_cast<std::uint16_t>(
      bytes[sizeof(kIndexMagic)] | (bytes[sizeof(kIndexMagic) + 1] << 8));
  if (version != kIndexVersion) {
    throw VersionMismatch("index version " + std::to_string(version) +
                          ", expected " + std::to_string(kIndexVersion));
  }
  const auto body = bytes.first(bytes.size() - kChecksumBytes);
  ByteReader tail(bytes.last(kChecksumBytes));
  const std::uint64_t checksum = Fnv1a64(body);
  if (tail.Int<std::uint64_t>() != checksum) {
    throw CorruptIndex("checksum mismatch");
  }

  ByteReader r(body.subspan(kHeaderBytes));
  SemanticNetwork net;

  const auto relation_count = r.Int<std::uint32_t>();
  for (std::uint32_t i = 0; i < relation_count; ++i) {
    const std::string s = r.String();
    if (net.relations_.Intern(s) != i) throw CorruptIndex("duplicate relation");
  }
  const auto concept_count = r.Int<std::uint32_t>();
  for (std::uint32_t i = 0; i < concept_count; ++i) {
    const std::string s = r.String();
    if (net.concepts_.Intern(s) != i) throw CorruptIndex("duplicate concept");
  }

  const auto entry_count = r.Int<std::uint64_t>();
  r.Need((static_cast<std::size_t>(concept_count) + 1) * sizeof(std::uint64_t));
  net.offsets_.resize(static_cast<std::size_t>(concept_count) + 1);
  for (auto& off : net.offsets_) off = r.Int<std::uint64_t>();
  if (net.offsets_.front() != 0 || net.offsets_.back() != entry_count) {
    throw CorruptIndex("adjacency offsets inconsistent");
  }
  for (std::size_t i = 0; i + 1 < net.offsets_.size(); ++i) {
    if (net.offsets_[i] > net.offsets_[i + 1]) {
      throw CorruptIndex("adjacency offsets not monotone");
    }
  }
  if (r.remaining() / kEntryBytes < entry_count) {
    throw CorruptIndex("adjacency truncated");
  }
  net.entries_.resize(entry_count);
  for (Neighbor& e : net.entries_) {
    e.node = ConceptId{r.Int<std::uint32_t>()};
    e.relation = RelationId{r.Int<std::uint16_t>()};
    const auto dir = r.Int<std::uint8_t>();
    r.Int<std::uint8_t>();
    e.weight = std::bit_cast<float>(r.Int<std::uint32_t>());
    if (e.node.value >= concept_count || e.relation.value >= relation_count ||
        dir > 1) {
      throw CorruptIndex("adjacency entry out of range");
    }
    e.direction = static_cast<Direction>(dir);
  }

  const auto vocabulary_count = r.Int<std::uint32_t>();
  net.vocabulary_.reserve(vocabulary_count);
  for (std::uint32_t i = 0; i < vocabulary_count; ++i) {
    std::string phrase = r.String();
    const auto id = r.Int<std::uint32_t>();
    if (id >= concept_count) throw CorruptIndex("vocabulary id out of range");
    net.vocabulary_.emplace(std::move(phrase), ConceptId{id});
  }

  net.edge_count_ = r.Int<std::uint64_t>();
  if (r.remaining() != 0) throw CorruptIndex("trailing bytes in index");
  net.checksum_ = checksum;
  return net;
}

namespace {

std::uint64_t WriteIndex(const SemanticNetwork& network, const std::string& path) {
  const auto bytes = SerializeIndex(network);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IndexError("cannot open index for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw OutOfStorage("failed writing index: " + path);
  return ByteReader(std::span<const std::uint8_t>(bytes).last(kChecksumBytes))
      .Int<std::uint64_t>();
}

}  // namespace

void PersistIndex(const SemanticNetwork& network, const std::string& path) {
  WriteIndex(network, path);
}

void PersistIndex(SemanticNetwork& network, const std::string& path) {
  network.set_checksum(WriteIndex(network, path));
}

SemanticNetwork LoadIndex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IndexError("cannot open index: " + path);
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  std::vector<std::uint8_t> bytes(size);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
  if (!in) throw IndexError("failed reading index: " + path);
  return LoadIndexFromBytes(bytes);
}

}  // namespace ptqa
