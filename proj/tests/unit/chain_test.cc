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

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "claudette/chain_model.h"
#include "claudette/error.h"
#include "test_support.h"

namespace claudette {
namespace {

// One-hot position features, so emission(y)[s] is the score of label y at
// position s.
std::vector<SparseVector> PositionFeatures(std::size_t length) {
  std::vector<SparseVector> xs;
  for (std::size_t s = 0; s < length; ++s) {
    xs.emplace_back(length, std::vector<SparseVector::Entry>{{static_cast<std::uint32_t>(s), 1.0}});
  }
  return xs;
}

ChainModel ModelFromTable(const std::vector<std::vector<double>> &per_position,
                          std::size_t labels) {
  ChainModel m(labels, per_position.size());
  for (std::size_t s = 0; s < per_position.size(); ++s) {
    for (std::size_t y = 0; y < labels; ++y) {
      m.emission(static_cast<int>(y))[s] = per_position[s][y];
    }
  }
  return m;
}

struct Best {
  std::vector<int> labels;
  double score = -std::numeric_limits<double>::infinity();
  double runner_up = -std::numeric_limits<double>::infinity();
};

// Exhaustive search over all label sequences.
Best Enumerate(const ChainModel &m, std::span<const SparseVector> xs,
               const std::vector<int> *gold) {
  const std::size_t k = xs.size();
  const int labels = static_cast<int>(m.num_labels());
  Best best;
  std::vector<int> ys(k, 0);
  for (;;) {
    double score = JointScore(m, xs, ys);
    if (gold) {
      for (std::size_t s = 0; s < k; ++s) score += ys[s] != (*gold)[s] ? 1.0 : 0.0;
    }
    if (score > best.score) {
      best.runner_up = best.score;
      best.labels = ys;
      best.score = score;
    } else {
      best.runner_up = std::max(best.runner_up, score);
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++ys[pos] < labels) break;
      ys[pos] = 0;
      if (pos == 0) return best;
    }
    if (k == 0) return best;
  }
}

ChainModel RandomModel(std::mt19937_64 &rng, std::size_t labels, std::size_t dim) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  ChainModel m(labels, dim);
  for (std::size_t a = 0; a < labels; ++a) {
    int ia = static_cast<int>(a);
    m.start(ia) = u(rng);
    for (std::size_t b = 0; b < labels; ++b) m.transition(ia, static_cast<int>(b)) = u(rng);
    for (double &w : m.emission(ia)) w = u(rng);
  }
  return m;
}

std::vector<SparseVector> RandomInputs(std::mt19937_64 &rng, std::size_t length,
                                       std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<SparseVector> xs;
  for (std::size_t s = 0; s < length; ++s) {
    std::vector<double> v(dim);
    for (double &e : v) e = rng() % 3 == 0 ? 0.0 : u(rng);
    xs.push_back(testing::Dense(v));
    xs.back() = SparseVector(dim, xs.back().entries());
  }
  return xs;
}

TEST(JointScore, Basics) {
  ChainModel zero(2, 3);
  std::vector<SparseVector> xs = RandomInputs(*std::make_unique<std::mt19937_64>(1), 4, 3);
  EXPECT_EQ(JointScore(zero, xs, std::vector<int>{0, 1, 1, 0}), 0.0);

  ChainModel m(2, 2);
  m.start(0) = 0.5;
  m.start(1) = -0.5;
  m.transition(0, 1) = 2.0;
  m.transition(1, 1) = -1.0;
  m.emission(0)[0] = 1.0;
  m.emission(1)[1] = 3.0;
  std::vector<SparseVector> one{testing::Dense({2.0, 1.0})};
  EXPECT_DOUBLE_EQ(JointScore(m, one, std::vector<int>{1}), -0.5 + 3.0);
  std::vector<SparseVector> two{testing::Dense({2.0, 1.0}), testing::Dense({1.0, 1.0})};
  // start[0] + e0.x1 + trans[0][1] + e1.x2 = 0.5 + 2 + 2 + 3
  EXPECT_DOUBLE_EQ(JointScore(m, two, std::vector<int>{0, 1}), 7.5);
  EXPECT_THROW(JointScore(m, two, std::vector<int>{0}), Error);
  try {
    JointScore(m, two, std::vector<int>{0, 2});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownLabel);
  }
}

TEST(Viterbi, PerPositionArgmaxWithoutTransitions) {
  ChainModel m = ModelFromTable({{1, 0}, {0, 1}}, 2);
  Decoding d = Viterbi(m, PositionFeatures(2));
  EXPECT_EQ(d.labels, (std::vector<int>{0, 1}));
  EXPECT_DOUBLE_EQ(d.score, 2.0);
}

TEST(Viterbi, TransitionPenaltyChangesPath) {
  ChainModel m = ModelFromTable({{1, 0}, {0, 2}}, 2);
  m.transition(0, 1) = -5.0;
  std::vector<SparseVector> xs = PositionFeatures(2);
  Decoding d = Viterbi(m, xs);
  EXPECT_EQ(d.labels, (std::vector<int>{1, 1}));
  EXPECT_DOUBLE_EQ(d.score, 2.0);
  EXPECT_DOUBLE_EQ(JointScore(m, xs, std::vector<int>{0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(JointScore(m, xs, std::vector<int>{0, 1}), -2.0);
  EXPECT_DOUBLE_EQ(JointScore(m, xs, std::vector<int>{1, 0}), 0.0);
}

TEST(Viterbi, TiesPreferLowerLabel) {
  ChainModel zero(3, 2);
  Decoding d = Viterbi(zero, PositionFeatures(2));
  EXPECT_EQ(d.labels, (std::vector<int>{0, 0}));
  EXPECT_EQ(d.score, 0.0);
}

TEST(LossAugmentedViterbi, ZeroModelMaximizesHamming) {
  ChainModel zero(2, 4);
  std::vector<int> gold{0, 1, 0, 0};
  Decoding d = LossAugmentedViterbi(zero, PositionFeatures(4), gold);
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0, 1, 1}));
  EXPECT_DOUBLE_EQ(d.score, 4.0);
  ChainModel three(3, 3);
  Decoding d3 = LossAugmentedViterbi(three, PositionFeatures(3), std::vector<int>{0, 1, 2});
  EXPECT_EQ(d3.labels, (std::vector<int>{1, 0, 0}));
  EXPECT_THROW(LossAugmentedViterbi(zero, PositionFeatures(4), std::vector<int>{0}), Error);
}

TEST(LossAugmentedViterbi, LargeMarginKeepsGold) {
  // Gold [0,1] wins by 3 at each position; every competitor gains at most its
  // Hamming loss, so gold stays optimal. With a margin of 0.5 the flipped
  // sequence wins instead.
  for (double margin : {3.0, 0.5}) {
    ChainModel m = ModelFromTable({{margin, 0}, {0, margin}}, 2);
    std::vector<int> gold{0, 1};
    Decoding d = LossAugmentedViterbi(m, PositionFeatures(2), gold);
    if (margin > 1.0) {
      EXPECT_EQ(d.labels, gold);
      EXPECT_DOUBLE_EQ(d.score, 2.0 * margin);
    } else {
      EXPECT_EQ(d.labels, (std::vector<int>{1, 0}));
      EXPECT_DOUBLE_EQ(d.score, 2.0);
    }
  }
}

TEST(ViterbiProperty, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t labels = 2 + rng() % 2;
    std::size_t length = 1 + rng() % 8;
    std::size_t dim = 1 + rng() % 4;
    ChainModel m = RandomModel(rng, labels, dim);
    std::vector<SparseVector> xs = RandomInputs(rng, length, dim);

    Decoding d = Viterbi(m, xs);
    Best b = Enumerate(m, xs, nullptr);
    EXPECT_NEAR(d.score, b.score, 1e-9);
    if (b.runner_up < b.score - 1e-9) EXPECT_EQ(d.labels, b.labels);
    EXPECT_NEAR(JointScore(m, xs, d.labels), d.score, 1e-9);

    std::vector<int> gold(length);
    for (int &y : gold) y = static_cast<int>(rng() % labels);
    Decoding a = LossAugmentedViterbi(m, xs, gold);
    Best ab = Enumerate(m, xs, &gold);
    EXPECT_NEAR(a.score, ab.score, 1e-9);
    if (ab.runner_up < ab.score - 1e-9) EXPECT_EQ(a.labels, ab.labels);
    double loss = 0.0;
    for (std::size_t s = 0; s < length; ++s) loss += a.labels[s] != gold[s] ? 1.0 : 0.0;
    EXPECT_NEAR(JointScore(m, xs, a.labels) + loss, a.score, 1e-9);
    EXPECT_GE(a.score, JointScore(m, xs, gold) - 1e-12);
  }
}

// Labels follow one indicative feature; the second feature is noise.
std::vector<SeqExample> SeparableSequences(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-0.3, 0.3);
  std::vector<SeqExample> out;
  for (std::size_t j = 0; j < count; ++j) {
    SeqExample ex;
    std::size_t length = 3 + rng() % 6;
    for (std::size_t s = 0; s < length; ++s) {
      int y = static_cast<int>(rng() % 2);
      ex.ys.push_back(y);
      ex.xs.push_back(SparseVector(2, {{0, y ? 1.0 : -1.0}, {1, noise(rng)}}));
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::size_t HammingErrors(const ChainModel &m, std::span<const SeqExample> examples) {
  std::size_t errors = 0;
  for (const SeqExample &ex : examples) {
    std::vector<int> pred = Viterbi(m, ex.xs).labels;
    for (std::size_t s = 0; s < pred.size(); ++s) errors += pred[s] != ex.ys[s];
  }
  return errors;
}

TEST(TrainChain, SeparableSequencesAreFit) {
  std::vector<SeqExample> data = SeparableSequences(40, 3);
  TrainConfig config;
  config.record_trace = true;
  ChainTrainResult result = TrainChain(data, 2, config);
  EXPECT_EQ(HammingErrors(result.model, data), 0u);
  ASSERT_EQ(result.epoch_objective.size(), static_cast<std::size_t>(config.epochs));
  for (double v : result.epoch_objective) EXPECT_TRUE(std::isfinite(v));
  EXPECT_LT(result.epoch_objective.back(), result.epoch_objective.front());
}

TEST(TrainChain, SingleLengthOneExample) {
  for (int gold : {0, 1}) {
    std::vector<SeqExample> data{{{SparseVector(3, {{1, 1.0}})}, {gold}}};
    ChainModel m = TrainChain(data, 2, TrainConfig{}).model;
    EXPECT_EQ(Viterbi(m, data[0].xs).labels, std::vector<int>{gold});
  }
}

TEST(TrainChain, SeededDeterminism) {
  std::vector<SeqExample> data = SeparableSequences(25, 8);
  TrainConfig config;
  config.seed = 5;
  EXPECT_EQ(TrainChain(data, 2, config).model, TrainChain(data, 2, config).model);
}

TEST(TrainChain, Errors) {
  std::vector<SeqExample> none;
  EXPECT_THROW(TrainChain(none, 2, TrainConfig{}), Error);
  std::vector<SeqExample> mixed{{{SparseVector(2, {})}, {0}}, {{SparseVector(3, {})}, {1}}};
  try {
    TrainChain(mixed, 2, TrainConfig{});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  std::vector<SeqExample> bad_label{{{SparseVector(2, {})}, {2}}};
  EXPECT_THROW(TrainChain(bad_label, 2, TrainConfig{}), Error);
}

// Positives come in adjacent pairs; one feature agrees with the label 60% of
// the time.
std::vector<SeqExample> PairedSequences(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SeqExample> out;
  for (std::size_t j = 0; j < count; ++j) {
    SeqExample ex;
    std::size_t blocks = 6 + rng() % 6;
    for (std::size_t b = 0; b < blocks; ++b) {
      int y = rng() % 2 == 0 ? 1 : 0;
      for (int r = 0; r < 2; ++r) {
        bool agrees = rng() % 10 < 6;
        double v = (y == 1) == agrees ? 1.0 : -1.0;
        ex.ys.push_back(y);
        ex.xs.push_back(SparseVector(1, {{0, v}}));
      }
    }
    out.push_back(std::move(ex));
  }
  return out;
}

TEST(TrainChain, LearnsPairedTransitions) {
  for (std::uint64_t seed : {1, 2, 3}) {
    std::vector<SeqExample> data = PairedSequences(60, seed);
    TrainConfig config;
    config.seed = seed;
    ChainModel m = TrainChain(data, 2, config).model;
    // Adding a constant to a transition column (and the matching start
    // weight) is a label bias the emissions can absorb, so compare the
    // shift-invariant contrast as well as the raw entries.
    EXPECT_GT(m.transition(1, 1) + m.transition(0, 0), m.transition(1, 0) + m.transition(0, 1));
    EXPECT_GT(m.transition(1, 1), m.transition(1, 0));
  }
}

}  // namespace
}  // namespace claudette
