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


#include "ptqa/contextualize/cues.hpp"

#include <gtest/gtest.h>

#include "ptqa/errors.hpp"
#include "test_support.hpp"

namespace ptqa {
namespace {

using testing::DumpLine;
using testing::Id;
using testing::NetworkFromLines;

// a and b share five neighbors s1..s5. Expected gains are tanh of the
// weights as stored (single precision).
SemanticNetwork FiveShared() {
  return NetworkFromLines({
      DumpLine("RelatedTo", "/c/en/a", "/c/en/s1", 1.0),
      DumpLine("RelatedTo", "/c/en/s1", "/c/en/b", 1.0),
      DumpLine("RelatedTo", "/c/en/a", "/c/en/s2", 2.0),
      DumpLine("RelatedTo", "/c/en/b", "/c/en/s2", 0.5),
      DumpLine("IsA", "/c/en/s3", "/c/en/a", 3.0),
      DumpLine("IsA", "/c/en/s3", "/c/en/b", 3.0),
      DumpLine("RelatedTo", "/c/en/a", "/c/en/s4", 0.2),
      DumpLine("RelatedTo", "/c/en/s4", "/c/en/b", 0.2),
      DumpLine("Antonym", "/c/en/a", "/c/en/s5", 1.0),
      DumpLine("RelatedTo", "/c/en/s5", "/c/en/b", 2.0),
      DumpLine("RelatedTo", "/c/en/a", "/c/en/lonely", 2.0),
  });
}

std::vector<std::string> CueNames(const SemanticNetwork& net,
                                  const std::vector<CueCandidate>& cues) {
  std::vector<std::string> out;
  for (const auto& c : cues) out.push_back(net.Uri(c.cue));
  return out;
}

TEST(FindCues, TopTwoOfFive) {
  const auto net = FiveShared();
  const auto cues = FindCues(net, Id(net, "en/a"), Id(net, "en/b"), 2);
  EXPECT_EQ(CueNames(net, cues), (std::vector<std::string>{"en/s3", "en/s1"}));
  EXPECT_NEAR(cues[0].gain, 1.990109507373461, 1e-12);
  EXPECT_NEAR(cues[1].gain, 1.5231883119115297, 1e-12);
}

TEST(FindCues, AllCandidatesSortedByGain) {
  const auto net = FiveShared();
  const auto cues = FindCues(net, Id(net, "en/a"), Id(net, "en/b"));
  EXPECT_EQ(CueNames(net, cues),
            (std::vector<std::string>{"en/s3", "en/s1", "en/s2", "en/s4", "en/s5"}));
  const double expected[] = {1.990109507373461, 1.5231883119115297, 1.4261447373358267,
                             0.39475064617807054, 0.20243342412005205};
  for (std::size_t i = 0; i < cues.size(); ++i) EXPECT_NEAR(cues[i].gain, expected[i], 1e-12);
  EXPECT_DOUBLE_EQ(cues[4].left.phi, -1.0);
  EXPECT_TRUE(cues[4].left.toward_cue);
  EXPECT_FALSE(cues[0].left.toward_cue);
}

TEST(FindCues, EqualGainBrokenByConceptId) {
  const auto net = NetworkFromLines({
      DumpLine("RelatedTo", "/c/en/a", "/c/en/z", 1.0),
      DumpLine("RelatedTo", "/c/en/z", "/c/en/b", 1.0),
      DumpLine("RelatedTo", "/c/en/a", "/c/en/y", 1.0),
      DumpLine("RelatedTo", "/c/en/y", "/c/en/b", 1.0),
  });
  const auto cues = FindCues(net, Id(net, "en/a"), Id(net, "en/b"));
  ASSERT_EQ(cues.size(), 2U);
  EXPECT_LT(cues[0].cue.value, cues[1].cue.value);
}

TEST(FindCues, PianoConcert) {
  const auto net = testing::LoadFixtureNetwork("piano_concert.csv");
  EXPECT_TRUE(FindCues(net, Id(net, "en/woman"), Id(net, "en/piano"), 3).empty());
  EXPECT_EQ(CueNames(net, FindCues(net, Id(net, "en/woman"), Id(net, "en/concert"), 3)),
            (std::vector<std::string>{"en/person"}));
  EXPECT_EQ(CueNames(net, FindCues(net, Id(net, "en/piano"), Id(net, "en/concert"), 3)),
            (std::vector<std::string>{"en/instrument", "en/music"}));
}

TEST(FindCues, NoSharedNeighborOrDirectEdge) {
  const auto net = FiveShared();
  EXPECT_TRUE(FindCues(net, Id(net, "en/lonely"), Id(net, "en/b")).empty());
  EXPECT_TRUE(FindCues(net, Id(net, "en/a"), Id(net, "en/s1")).empty());
  EXPECT_TRUE(FindCues(net, Id(net, "en/a"), Id(net, "en/b"), 0).empty());
}

TEST(FindCues, Errors) {
  const auto net = FiveShared();
  EXPECT_THROW(FindCues(net, Id(net, "en/a"), ConceptId{999}), UnknownConcept);
  EXPECT_THROW(FindCues(net, Id(net, "en/a"), Id(net, "en/a")), std::invalid_argument);
}

}  // namespace
}  // namespace ptqa
