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

#include "claudette/config.h"
#include "claudette/error.h"
#include "test_support.h"

namespace claudette {
namespace {

ErrorKind KindOf(std::string_view text) {
  try {
    ParseConfig(text);
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::kIo;
}

TEST(Config, DefaultsWhenEmpty) {
  ToolkitConfig c = ParseConfig("# nothing but a comment\n\n");
  EXPECT_EQ(c.features, FeatureConfig{});
  EXPECT_EQ(c.train, TrainConfig{});
  EXPECT_EQ(c.lambda, kDefaultLambda);
  EXPECT_TRUE(c.normalize_kernel);
  EXPECT_EQ(c.positive, PositivePolicy::kLevels2And3);
}

TEST(Config, ParsesEveryKey) {
  ToolkitConfig c = ParseConfig(
      "ngram_orders = 1, 3\nuse_pos = yes\nmin_df = 2\nlowercase = false\ntf = log\n"
      "c = 0.5  # trailing comment\npositive_weight = 4\ntol = 1e-4\nmax_iter = 50\n"
      "epochs = 7\nseed = 42\nlambda = 0.25\nnormalize_kernel = 0\npositive_levels = 2\n"
      "lenient_tags = true\n");
  EXPECT_EQ(c.features.ngram_orders, (std::set<int>{1, 3}));
  EXPECT_TRUE(c.features.use_pos);
  EXPECT_EQ(c.features.min_df, 2);
  EXPECT_FALSE(c.features.lowercase);
  EXPECT_EQ(c.features.tf, TfMode::kLog);
  EXPECT_EQ(c.train.c, 0.5);
  EXPECT_EQ(c.train.positive_weight, 4.0);
  EXPECT_EQ(c.train.tol, 1e-4);
  EXPECT_EQ(c.train.max_iter, 50);
  EXPECT_EQ(c.train.epochs, 7);
  EXPECT_EQ(c.train.seed, 42u);
  EXPECT_EQ(c.lambda, 0.25);
  EXPECT_FALSE(c.normalize_kernel);
  EXPECT_EQ(c.positive, PositivePolicy::kLevel2Only);
  EXPECT_TRUE(c.lenient_tags);
  EXPECT_TRUE(c.corpus_options().tags.lenient);
}

TEST(Config, RenderRoundTrips) {
  ToolkitConfig c = ParseConfig("c = 0.1\nlambda = 0.3\npositive_weight = 2.5\nngram_orders = 2\n");
  ToolkitConfig again = ParseConfig(RenderConfig(c));
  EXPECT_EQ(RenderConfig(again), RenderConfig(c));
  EXPECT_EQ(again.train, c.train);
  EXPECT_EQ(again.features, c.features);
}

TEST(Config, RejectsBadInput) {
  EXPECT_EQ(KindOf("c = -1\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("c = abc\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("lambda = 0\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("lambda = 1.5\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("colour = blue\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("just text\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("ngram_orders = 0\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("positive_levels = 1,2\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("tf = sqrt\n"), ErrorKind::kBadConfig);
  EXPECT_EQ(KindOf("use_pos = maybe\n"), ErrorKind::kBadConfig);
  try {
    ParseConfig("c = 1\n\nepochs = x\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Config, ReadsFiles) {
  testing::TempDir dir;
  testing::WriteText(dir / "run.cfg", "seed = 9\n");
  EXPECT_EQ(ReadConfigFile(dir / "run.cfg").train.seed, 9u);
  EXPECT_THROW(ReadConfigFile(dir / "missing.cfg"), Error);
}

}  // namespace
}  // namespace claudette
