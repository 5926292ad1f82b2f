// Copyright 2026 The Claudette Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "claudette/error.h"
#include "claudette/tag_parser.h"

namespace claudette {
namespace {

using C = ClauseCategory;
using L = FairnessLevel;

ErrorKind KindOf(std::string_view raw, TagParseOptions options = {}) {
  try {
    ParseTaggedText(raw, options);
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << raw;
  return ErrorKind::kBadConfig;
}

TEST(TagParser, SingleSpanCoversSentence) {
  const std::string body =
      "You and Dropbox agree that any judicial proceeding will be brought in the courts of "
      "San Francisco County. Both you and Dropbox consent to venue in such courts.";
  TaggedText t = ParseTaggedText("<j3>" + body + "</j3>");
  EXPECT_EQ(t.plain, body);
  ASSERT_EQ(t.spans.size(), 1u);
  EXPECT_EQ(t.spans[0].category, C::kJurisdiction);
  EXPECT_EQ(t.spans[0].level, L::kClearlyUnfair);
  EXPECT_EQ(t.spans[0].start, 0u);
  EXPECT_EQ(t.spans[0].end, body.size());
}

TEST(TagParser, NestedSpansKeepOpeningOrder) {
  TaggedText t = ParseTaggedText("<j1> <a3>Any dispute shall be settled by arbitration.</a3> </j1>");
  EXPECT_EQ(t.plain, " Any dispute shall be settled by arbitration. ");
  ASSERT_EQ(t.spans.size(), 2u);
  EXPECT_EQ(t.spans[0].label(), (ClauseLabel{C::kJurisdiction, L::kClearlyFair}));
  EXPECT_EQ(t.spans[1].label(), (ClauseLabel{C::kArbitration, L::kClearlyUnfair}));
  EXPECT_EQ(t.spans[0].start, 0u);
  EXPECT_EQ(t.spans[0].end, t.plain.size());
  EXPECT_EQ(t.spans[1].start, 1u);
  EXPECT_EQ(t.spans[1].end, t.plain.size() - 1);
}

TEST(TagParser, UntaggedTextIsIdentity) {
  TaggedText t = ParseTaggedText("no tags here");
  EXPECT_EQ(t.plain, "no tags here");
  EXPECT_TRUE(t.spans.empty());
}

TEST(TagParser, LiteralAngleBracketsAreText) {
  TaggedText t = ParseTaggedText("if a < b and c > d then <use2>ok</use2>");
  EXPECT_EQ(t.plain, "if a < b and c > d then ok");
  ASSERT_EQ(t.spans.size(), 1u);
}

TEST(TagParser, WhitespaceInsideTagBrackets) {
  TaggedText t = ParseTaggedText("< ltd2 >x</ ltd2 >");
  EXPECT_EQ(t.plain, "x");
  ASSERT_EQ(t.spans.size(), 1u);
  EXPECT_EQ(t.spans[0].category, C::kLimitationOfLiability);
}

TEST(TagParser, AllSymbolsRecognized) {
  for (ClauseCategory c : kAllCategories) {
    std::string sym(TagSymbol(c));
    TaggedText t = ParseTaggedText("<" + sym + "2>x</" + sym + "2>");
    ASSERT_EQ(t.spans.size(), 1u) << sym;
    EXPECT_EQ(t.spans[0].category, c);
  }
}

TEST(TagParser, Errors) {
  EXPECT_EQ(KindOf("<zz2>x</zz2>"), ErrorKind::kUnknownTag);
  EXPECT_EQ(KindOf("<a4>x</a4>"), ErrorKind::kUnknownTag);
  EXPECT_EQ(KindOf("x</a2>"), ErrorKind::kUnbalancedTag);
  EXPECT_EQ(KindOf("<a2>x"), ErrorKind::kUnbalancedTag);
  EXPECT_EQ(KindOf("<a2><j1>x</a2></j1>"), ErrorKind::kCrossedNesting);
  EXPECT_EQ(KindOf("<a2></a2>"), ErrorKind::kEmptyTag);
}

TEST(TagParser, ErrorsReportLineAndColumn) {
  try {
    ParseTaggedText("first line\nsecond <zz1>bad</zz1>");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 8);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(TagParser, LenientModeAcceptsRepeatedOpeningTagAsCloser) {
  const std::string raw = "<ltd3> In no event will Rovio be liable for damages.<ltd3>";
  EXPECT_EQ(KindOf(raw), ErrorKind::kUnbalancedTag);
  TaggedText t = ParseTaggedText(raw, {.lenient = true});
  ASSERT_EQ(t.spans.size(), 1u);
  EXPECT_EQ(t.spans[0].label(), (ClauseLabel{C::kLimitationOfLiability, L::kClearlyUnfair}));
  EXPECT_EQ(t.spans[0].start, 0u);
  EXPECT_EQ(t.spans[0].end, t.plain.size());
}

TEST(TagParser, SameTagMayCoincideAfterClosing) {
  TaggedText t = ParseTaggedText("<a2>x</a2><a2>y</a2>");
  ASSERT_EQ(t.spans.size(), 2u);
  EXPECT_EQ(t.spans[1].start, 1u);
}

// Random well-nested tagging of random text.
std::string RandomTagged(std::mt19937_64 &rng, int depth = 0) {
  static const char *kWords[] = {"alpha ", "beta. ", "Gamma ", "delta\n", "x < y ", "e.g. "};
  std::string out;
  int parts = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < parts; ++i) {
    if (depth < 3 && rng() % 3 == 0) {
      ClauseCategory c = kAllCategories[rng() % kNumCategories];
      std::string tag = std::string(TagSymbol(c)) + std::to_string(1 + rng() % 3);
      out += "<" + tag + ">" + kWords[rng() % 6] + RandomTagged(rng, depth + 1) + "</" + tag + ">";
    } else {
      out += kWords[rng() % 6];
    }
  }
  return out;
}

std::size_t CountOpeningTags(const TaggedText &t) { return t.spans.size(); }

TEST(TagParserProperty, RenderRoundTripsAndPreservesSpanCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::string raw = RandomTagged(rng);
    TaggedText t;
    try {
      t = ParseTaggedText(raw);
    } catch (const Error &e) {
      // Identical nested tags are rejected; skip those draws.
      ASSERT_EQ(e.kind(), ErrorKind::kUnbalancedTag) << raw;
      continue;
    }
    EXPECT_EQ(RenderTaggedText(t.plain, t.spans), raw) << raw;
    std::size_t openings = 0;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if (raw[i] == '<' && raw[i + 1] >= 'a' && raw[i + 1] <= 'z') ++openings;
    }
    EXPECT_EQ(CountOpeningTags(t), openings);
    for (const TagSpan &s : t.spans) {
      EXPECT_LT(s.start, s.end);
      EXPECT_LE(s.end, t.plain.size());
    }
  }
}

}  // namespace
}  // namespace claudette
