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

#include "claudette/text.h"

namespace claudette {
namespace {

std::vector<std::string> Texts(std::string_view plain) {
  std::vector<std::string> out;
  for (const Sentence &s : SegmentSentences(plain)) out.push_back(s.text);
  return out;
}

TEST(Segmenter, TwoTerminalPeriods) {
  EXPECT_EQ(Texts("Hello world. Bye now."),
            (std::vector<std::string>{"Hello world.", "Bye now."}));
}

TEST(Segmenter, AbbreviationDoesNotSplit) {
  EXPECT_EQ(Texts("e.g. this stays whole.").size(), 1u);
  EXPECT_EQ(Texts("See Acme Inc. For details write to us.").size(), 1u);
  EXPECT_EQ(Texts("Call Dr. Smith today.").size(), 1u);
}

TEST(Segmenter, EmptyInput) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences("  \n\n  ").empty());
}

TEST(Segmenter, NewlineAlwaysSplits) {
  EXPECT_EQ(Texts("first part without period\nsecond part"),
            (std::vector<std::string>{"first part without period", "second part"}));
}

TEST(Segmenter, SplitRequiresUppercaseDigitOrQuote) {
  EXPECT_EQ(Texts("Visit example.com today. ok then.").size(), 1u);
  EXPECT_EQ(Texts("It ends! 2 more follow.").size(), 2u);
  EXPECT_EQ(Texts("He said yes. \"Fine\" she said.").size(), 2u);
  EXPECT_EQ(Texts("Really? Yes.").size(), 2u);
}

TEST(Segmenter, ClosingPunctuationStaysWithSentence) {
  EXPECT_EQ(Texts("(This is closed.) Next one."),
            (std::vector<std::string>{"(This is closed.)", "Next one."}));
}

TEST(Segmenter, OffsetsIndexPlainText) {
  const std::string plain = "  One here.  Two there.\n\nThree.";
  for (const Sentence &s : SegmentSentences(plain)) {
    EXPECT_EQ(plain.substr(s.start, s.end - s.start), s.text);
  }
}

TEST(Segmenter, AbbreviationListIsBundled) {
  EXPECT_GE(Abbreviations().size(), 60u);
  EXPECT_TRUE(IsAbbreviation("e.g."));
  EXPECT_TRUE(IsAbbreviation("i.e."));
  EXPECT_TRUE(IsAbbreviation("inc."));
  EXPECT_TRUE(IsAbbreviation("Ltd."));
  EXPECT_FALSE(IsAbbreviation("world."));
}

TEST(SegmenterProperty, PartitionCoversEveryNonSpaceByteOnce) {
  static const char *kPieces[] = {"Alpha", "beta", ".", "!", "?", " ", "  ", "\n", "\n\n",
                                  "e.g.",  "Inc.", "3",  "\"", ")", "x.y", "Ünïcode"};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::string plain;
    int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) plain += kPieces[rng() % 16];
    std::vector<Sentence> sentences = SegmentSentences(plain);
    std::vector<int> owner(plain.size(), -1);
    std::size_t prev_end = 0;
    for (std::size_t k = 0; k < sentences.size(); ++k) {
      const Sentence &s = sentences[k];
      ASSERT_LE(prev_end, s.start) << plain;
      ASSERT_LT(s.start, s.end);
      ASSERT_LE(s.end, plain.size());
      EXPECT_EQ(s.text, plain.substr(s.start, s.end - s.start));
      EXPECT_EQ(s.text.find('\n'), std::string::npos) << "sentence crosses a line break";
      for (std::size_t i = s.start; i < s.end; ++i) owner[i] = static_cast<int>(k);
      prev_end = s.end;
    }
    std::size_t covered = 0;
    for (std::size_t i = 0; i < plain.size(); ++i) {
      bool space = plain[i] == ' ' || plain[i] == '\n' || plain[i] == '\t' || plain[i] == '\r';
      if (!space) EXPECT_GE(owner[i], 0) << "byte " << i << " of '" << plain << "'";
      if (owner[i] >= 0) ++covered;
    }
    std::size_t gaps = plain.size() - covered;
    std::size_t sum = 0;
    for (const Sentence &s : sentences) sum += s.end - s.start;
    EXPECT_EQ(sum + gaps, plain.size());
  }
}

TEST(Tokenizer, WhitespaceAndLowercase) {
  EXPECT_EQ(Tokenize("You and Dropbox agree"),
            (std::vector<std::string>{"you", "and", "dropbox", "agree"}));
}

TEST(Tokenizer, PunctuationBoundaries) {
  EXPECT_EQ(Tokenize("twitter.com/tos"),
            (std::vector<std::string>{"twitter", ".", "com", "/", "tos"}));
  EXPECT_EQ(Tokenize("end.)"), (std::vector<std::string>{"end", ".", ")"}));
  EXPECT_EQ(Tokenize("don't"), (std::vector<std::string>{"don", "'", "t"}));
}

TEST(Tokenizer, EmptyAndCase) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("   ").empty());
  EXPECT_EQ(Tokenize("ABC", false), (std::vector<std::string>{"ABC"}));
}

TEST(Tokenizer, Utf8LettersStayTogetherAndPunctuationSplits) {
  EXPECT_EQ(Tokenize("Ünïcode café"), (std::vector<std::string>{"Ünïcode", "café"}));
  EXPECT_EQ(Tokenize("a—b"), (std::vector<std::string>{"a", "—", "b"}));
}

TEST(Tokenizer, NoEmptyTokens) {
  for (const std::string &t : Tokenize(" ..a,,b  c!? ")) EXPECT_FALSE(t.empty());
}

}  // namespace
}  // namespace claudette
