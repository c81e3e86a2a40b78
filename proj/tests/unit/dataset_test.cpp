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

#include <sstream>

#include <gtest/gtest.h>

#include "ptqa/errors.hpp"

namespace ptqa {
namespace {

constexpr const char* kSwagCsv =
    ",video-id,fold-ind,startphrase,sent1,sent2,gold-source,ending0,ending1,ending2,ending3,"
    "label\n"
    "0,anetv_jkn6uvmqwh4,3416,\"Members of the procession walk down the street holding "
    "small horn brass instruments. A drum line\",Members of the procession walk down the "
    "street holding small horn brass instruments.,A drum line,gold,\"passes by walking down "
    "the street playing their instruments.\",has heard approaching them.,\"arrives and "
    "they're outside dancing and asleep.\",turns the lead singer watches the performance.,0\n"
    "1,anetv_x,3417,A woman sits. She,A woman sits.,She,gen,plays piano.,eats.,runs.,"
    "sleeps.,2\n";

TEST(LoadDataset, Swag) {
  std::istringstream in(kSwagCsv);
  const auto qs = LoadDataset(in, DatasetFormat::kSwag);
  ASSERT_EQ(qs.size(), 2U);
  EXPECT_EQ(qs[0].id, "swag-0");
  EXPECT_EQ(qs[0].context,
            "Members of the procession walk down the street holding small horn brass "
            "instruments. A drum line");
  EXPECT_EQ(qs[0].choices.size(), 4U);
  EXPECT_EQ(qs[0].choices[2], "arrives and they're outside dancing and asleep.");
  EXPECT_EQ(qs[0].gold, 0U);
  EXPECT_EQ(qs[1].gold, 2U);
  EXPECT_EQ(qs[1].context, "A woman sits. She");
}

TEST(LoadDataset, SwagSecondSentenceOnly) {
  std::istringstream in(kSwagCsv);
  DatasetOptions options;
  options.swag_context = SwagContext::kSecondSentence;
  EXPECT_EQ(LoadDataset(in, DatasetFormat::kSwag, options)[1].context, "She");
}

TEST(LoadDataset, SwagTestSplitWithoutLabel) {
  std::istringstream in(
      ",video-id,fold-ind,startphrase,sent1,sent2,gold-source,ending0,ending1,ending2,ending3\n"
      "5,v,1,A b,A,b,gold,w,x,y,z\n");
  const auto qs = LoadDataset(in, DatasetFormat::kSwag);
  ASSERT_EQ(qs.size(), 1U);
  EXPECT_FALSE(qs[0].gold.has_value());
}

TEST(LoadDataset, SwagBadRowReportsRecord) {
  std::istringstream in(
      ",video-id,fold-ind,startphrase,sent1,sent2,gold-source,ending0,ending1,ending2,ending3,"
      "label\n0,v,1,a,a,b,gold,w,x,y,z,1\n1,v,1,a,a,b,gold,w,x\n");
  try {
    LoadDataset(in, DatasetFormat::kSwag);
    FAIL() << "expected MalformedRecord";
  } catch (const MalformedRecord& e) {
    EXPECT_EQ(e.record(), 1U);
  }
}

TEST(LoadDataset, HellaSwag) {
  std::istringstream in(
      R"({"ind": 24, "activity_label": "Roof shingle removal", "ctx_a": "A man is sitting on a roof.", "ctx_b": "he", "ctx": "A man is sitting on a roof. he", "split": "val", "split_type": "indomain", "label": 3, "endings": ["is using wrap to wrap a pair of skis.", "is ripping level tiles off.", "is holding a rubik's cube.", "starts pulling up roofing on a roof."], "source_id": "activitynet~v_-JhWjGDPHMY"})"
      "\n\n");
  const auto qs = LoadDataset(in, DatasetFormat::kHellaSwag);
  ASSERT_EQ(qs.size(), 1U);
  EXPECT_EQ(qs[0].id, "hellaswag-24");
  EXPECT_EQ(qs[0].context, "A man is sitting on a roof. he");
  EXPECT_EQ(qs[0].choices,
            (std::vector<std::string>{"is using wrap to wrap a pair of skis.",
                                      "is ripping level tiles off.",
                                      "is holding a rubik's cube.",
                                      "starts pulling up roofing on a roof."}));
  EXPECT_EQ(qs[0].gold, 3U);
}

TEST(LoadDataset, GenericRoundTrip) {
  const std::string line = R"({"id":"q1","context":"...","choices":["a","b"],"gold":0})";
  std::istringstream in(line + "\n");
  const auto qs = LoadDataset(in, DatasetFormat::kGeneric);
  ASSERT_EQ(qs.size(), 1U);
  EXPECT_EQ(QuestionToJson(qs[0]), nlohmann::json::parse(line));
  EXPECT_EQ(QuestionFromJson(QuestionToJson(qs[0])), qs[0]);
}

TEST(LoadDataset, GenericValidation) {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return LoadDataset(in, DatasetFormat::kGeneric);
  };
  EXPECT_THROW(load(R"({"id":"q","context":"c","choices":["a"]})"), MalformedRecord);
  EXPECT_THROW(load(R"({"id":"q","context":"c","choices":["a","b"],"gold":2})"),
               MalformedRecord);
  EXPECT_THROW(load("{oops\n"), MalformedRecord);
  EXPECT_FALSE(load(R"({"id":"q","context":"c","choices":["a","b"]})")[0].gold.has_value());
}

TEST(ParseDatasetFormat, Names) {
  EXPECT_EQ(ParseDatasetFormat("swag"), DatasetFormat::kSwag);
  EXPECT_EQ(ParseDatasetFormat("hellaswag"), DatasetFormat::kHellaSwag);
  EXPECT_EQ(ParseDatasetFormat("generic"), DatasetFormat::kGeneric);
  EXPECT_THROW(ParseDatasetFormat("csv"), UnknownFormat);
}

TEST(ReadCsvRecord, QuotingRules) {
  std::istringstream in("a,\"b,c\",\"d \"\"e\"\"\",\"multi\nline\"\r\nx\n");
  std::vector<std::string> f;
  ASSERT_TRUE(ReadCsvRecord(in, f));
  EXPECT_EQ(f, (std::vector<std::string>{"a", "b,c", "d \"e\"", "multi\nline"}));
  ASSERT_TRUE(ReadCsvRecord(in, f));
  EXPECT_EQ(f, (std::vector<std::string>{"x"}));
  EXPECT_FALSE(ReadCsvRecord(in, f));
}

}  // namespace
}  // namespace ptqa
