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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>

#include <unistd.h>

#include <gtest/gtest.h>

#include "ptqa/errors.hpp"
#include "test_support.hpp"

namespace ptqa {
namespace {

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("ptqa_" + std::to_string(::getpid()) + "_" + name);
}

std::vector<std::uint8_t> ReadAll(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void WriteAll(const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

TEST(IndexIo, RoundTripIsObservationallyIdentical) {
  auto net = testing::LoadFixtureNetwork("ten_line.csv");
  const auto path = TempPath("roundtrip.idx");
  PersistIndex(net, path.string());
  const auto loaded = LoadIndex(path.string());

  ASSERT_EQ(loaded.concept_count(), net.concept_count());
  EXPECT_EQ(loaded.edge_count(), net.edge_count());
  EXPECT_EQ(loaded.checksum(), net.checksum());
  EXPECT_NE(loaded.checksum(), 0U);
  EXPECT_EQ(loaded.SortedVocabulary(), net.SortedVocabulary());
  for (std::uint32_t i = 0; i < net.concept_count(); ++i) {
    const ConceptId id{i};
    EXPECT_EQ(loaded.Uri(id), net.Uri(id));
    const auto a = net.Neighbors(id);
    const auto b = loaded.Neighbors(id);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  std::filesystem::remove(path);
}

TEST(IndexIo, ReserializationIsByteIdentical) {
  auto net = testing::LoadFixtureNetwork("ten_line.csv");
  const auto first = TempPath("first.idx");
  const auto second = TempPath("second.idx");
  PersistIndex(net, first.string());
  const auto loaded = LoadIndex(first.string());
  PersistIndex(loaded, second.string());
  EXPECT_EQ(ReadAll(first), ReadAll(second));
  EXPECT_EQ(SerializeIndex(net), SerializeIndex(loaded));
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST(IndexIo, HeaderLayout) {
  const auto bytes = SerializeIndex(testing::LoadFixtureNetwork("ten_line.csv"));
  ASSERT_GT(bytes.size(), 10U);
  EXPECT_TRUE(std::equal(std::begin(kIndexMagic), std::end(kIndexMagic), bytes.begin()));
  EXPECT_EQ(bytes[8] | (bytes[9] << 8), kIndexVersion);
}

TEST(IndexIo, TruncatedFileIsCorrupt) {
  const auto bytes = SerializeIndex(testing::LoadFixtureNetwork("ten_line.csv"));
  for (std::size_t cut : {std::size_t{0}, std::size_t{5}, std::size_t{12}, bytes.size() / 2,
                          bytes.size() - 1}) {
    std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + static_cast<long>(cut));
    EXPECT_THROW(LoadIndexFromBytes(part), CorruptIndex) << cut;
  }
  const auto path = TempPath("truncated.idx");
  WriteAll(path, {bytes.begin(), bytes.end() - 3});
  EXPECT_THROW(LoadIndex(path.string()), CorruptIndex);
  std::filesystem::remove(path);
}

TEST(IndexIo, BumpedVersionIsMismatch) {
  auto bytes = SerializeIndex(testing::LoadFixtureNetwork("ten_line.csv"));
  bytes[8] = static_cast<std::uint8_t>(bytes[8] + 1);
  EXPECT_THROW(LoadIndexFromBytes(bytes), VersionMismatch);
}

TEST(IndexIo, FlippedPayloadByteFailsChecksum) {
  auto bytes = SerializeIndex(testing::LoadFixtureNetwork("ten_line.csv"));
  bytes[bytes.size() / 2] ^= 0x5A;
  EXPECT_THROW(LoadIndexFromBytes(bytes), CorruptIndex);
}

TEST(IndexIo, BadMagicIsCorrupt) {
  auto bytes = SerializeIndex(testing::LoadFixtureNetwork("ten_line.csv"));
  bytes[0] = 'X';
  EXPECT_THROW(LoadIndexFromBytes(bytes), CorruptIndex);
}

TEST(IndexIo, MissingFile) {
  EXPECT_THROW(LoadIndex("/nonexistent/ptqa.idx"), IndexError);
}

TEST(IndexIo, EmptyNetworkRoundTrip) {
  NetworkBuilder builder;
  const auto net = std::move(builder).Build();
  const auto loaded = LoadIndexFromBytes(SerializeIndex(net));
  EXPECT_EQ(loaded.concept_count(), 0U);
  EXPECT_EQ(loaded.edge_count(), 0U);
}

TEST(Fnv1a64, ReferenceValues) {
  const std::string a = "a";
  EXPECT_EQ(Fnv1a64({}), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64({reinterpret_cast<const std::uint8_t*>(a.data()), 1}),
            0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace ptqa
