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
#include <random>

#include "claudette/error.h"
#include "claudette/fragment_oracle.h"
#include "claudette/parse_tree.h"
#include "claudette/tree_kernel.h"
#include "test_support.h"

namespace claudette {
namespace {

const char *kAmazonTree =
    "(S (NP (NP (NNS Portions)) (PP (IN of) (NP (DT the) (NN Amazon) (NNS services)))) "
    "(VP (VBP operate) (PP (IN under) (NP (NP (NN license)) (PP (IN of) (NP (QP (CD one) "
    "(CC or) (JJR more) (NNS patents))))))) (. .))";

ErrorKind KindOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIo;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> SymmetricEigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i, i);
  return out;
}

TEST(ParseBracketed, SimpleTree) {
  ParseTree t = ParseBracketed("(S (A a) (B b))");
  EXPECT_EQ(t.node(t.root()).label, "S");
  EXPECT_EQ(t.Production(t.root()), "S A B");
  std::vector<int> pre = t.Preterminals();
  ASSERT_EQ(pre.size(), 2u);
  EXPECT_EQ(t.node(pre[0]).label, "A");
  EXPECT_EQ(t.node(t.node(pre[1]).children[0]).label, "b");
  EXPECT_EQ(t.Production(pre[0]), "A a");
}

TEST(ParseBracketed, CanonicalRoundTrip) {
  ParseTree t = ParseBracketed(kAmazonTree);
  EXPECT_EQ(t.ToString(), kAmazonTree);
  EXPECT_EQ(ParseBracketed(t.ToString()), t);
  ParseTree spaced = ParseBracketed("  ( S\n(A   a)(B b) )  ");
  EXPECT_EQ(spaced.ToString(), "(S (A a) (B b))");
  EXPECT_EQ(ParseBracketed("( (S (A a)))").ToString(), "(S (A a))");
}

TEST(ParseBracketed, Errors) {
  EXPECT_EQ(KindOf([] { ParseBracketed("(S (A a)"); }), ErrorKind::kUnbalancedParens);
  EXPECT_EQ(KindOf([] { ParseBracketed("(S (A a)))"); }), ErrorKind::kUnbalancedParens);
  EXPECT_EQ(KindOf([] { ParseBracketed("(S (A))"); }), ErrorKind::kEmptyNode);
  EXPECT_EQ(KindOf([] { ParseBracketed(""); }), ErrorKind::kEmptyNode);
  EXPECT_EQ(KindOf([] { ParseBracketed("(S (A a)) (T t)"); }), ErrorKind::kTrailingInput);
}

TEST(TreeGroups, BlankLinesSeparateDocuments) {
  auto groups = ParseTreeGroups("(S (A a))\n(S (B b))\n\n\n(S (C c))\n");
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].size(), 2u);
  EXPECT_EQ(groups[1].size(), 1u);
  EXPECT_EQ(ParseTreeGroups(WriteTreeGroups(groups)).size(), 2u);
  EXPECT_EQ(WriteTreeGroups(ParseTreeGroups(WriteTreeGroups(groups))), WriteTreeGroups(groups));
  EXPECT_EQ(KindOf([] { ParseTreeGroups("(S (A a))\n(S (B\n"); }),
            ErrorKind::kUnbalancedParens);
}

TEST(TreeGroups, AlignmentChecksCounts) {
  Corpus corpus = testing::CorpusFromTexts({{"one", "First. Second."}, {"two", "Only."}});
  auto good = ParseTreeGroups("(S (A a))\n(S (B b))\n\n(S (C c))\n");
  TreeBank bank = AlignTreeBank(corpus, good);
  ASSERT_NE(bank.Find("two"), nullptr);
  EXPECT_EQ(bank.Find("two")->size(), 1u);
  EXPECT_EQ(bank.Find("three"), nullptr);
  auto short_group = ParseTreeGroups("(S (A a))\n\n(S (C c))\n");
  EXPECT_EQ(KindOf([&] { AlignTreeBank(corpus, short_group); }), ErrorKind::kTreeBankMismatch);
  auto one_group = ParseTreeGroups("(S (A a))\n(S (B b))\n");
  EXPECT_EQ(KindOf([&] { AlignTreeBank(corpus, one_group); }), ErrorKind::kTreeBankMismatch);
}

TEST(Sstk, WorkedValues) {
  ParseTree t = ParseBracketed("(S (A a) (B b))");
  EXPECT_DOUBLE_EQ(Sstk(t, t, 1.0), 6.0);
  EXPECT_DOUBLE_EQ(Sstk(t, t, 0.5), 0.5 + 0.5 + 0.5 * 1.5 * 1.5);
  EXPECT_DOUBLE_EQ(Sstk(t, t, 0.5), 2.125);
  ParseTree disjoint = ParseBracketed("(S (C c) (D d))");
  for (double lambda : {0.1, 0.4, 1.0}) EXPECT_EQ(Sstk(t, disjoint, lambda), 0.0);
  ParseTree half = ParseBracketed("(S (A a) (D d))");
  EXPECT_DOUBLE_EQ(Sstk(t, half, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(SstkNormalized(t, half, 1.0), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(SstkNormalized(t, t, 0.4), 1.0);
  EXPECT_EQ(SstkNormalized(t, disjoint, 0.4), 0.0);
}

TEST(Sstk, Errors) {
  ParseTree t = ParseBracketed("(S (A a) (B b))");
  EXPECT_EQ(KindOf([&] { Sstk(t, t, 0.0); }), ErrorKind::kInvalidLambda);
  EXPECT_EQ(KindOf([&] { Sstk(t, t, 1.5); }), ErrorKind::kInvalidLambda);
  EXPECT_EQ(KindOf([&] { Sstk(t, t, std::nan("")); }), ErrorKind::kInvalidLambda);
  ParseTree leaf = ParseTree::Leaf("word");
  EXPECT_EQ(Sstk(leaf, t, 1.0), 0.0);
  EXPECT_EQ(KindOf([&] { SstkNormalized(leaf, t, 1.0); }), ErrorKind::kDegenerateTree);
  std::vector<ParseTree> trees{t, leaf};
  EXPECT_EQ(KindOf([&] { GramMatrix(trees, 0.4, true); }), ErrorKind::kDegenerateTree);
}

TEST(FragmentOracle, SmallTrees) {
  EXPECT_EQ(EnumerateFragments(ParseBracketed("(A a)")).size(), 1u);
  std::vector<Fragment> frags = EnumerateFragments(ParseBracketed("(S (A a) (B b))"));
  std::multiset<std::string> texts;
  for (const Fragment &f : frags) texts.insert(f.text);
  EXPECT_EQ(texts, (std::multiset<std::string>{"(A a)", "(B b)", "(S A B)", "(S (A a) B)",
                                                "(S A (B b))", "(S (A a) (B b))"}));
  ParseTree t = ParseBracketed("(S (A a) (B b))");
  EXPECT_EQ(CountMatchingFragmentPairs(t, t), 6u);
  EXPECT_DOUBLE_EQ(FragmentKernel(t, t, 0.5), 2.125);
}

TEST(FragmentOracle, RejectsLargeTrees) {
  ParseTree big = ParseBracketed(kAmazonTree);
  ASSERT_GT(big.size(), kOracleMaxNodes);
  EXPECT_EQ(KindOf([&] { EnumerateFragments(big); }), ErrorKind::kTooLarge);
}

TEST(SstkProperty, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    ParseTree a = RandomTree(rng, 12);
    ParseTree b = k % 5 == 0 ? a : RandomTree(rng, 12);
    EXPECT_EQ(Sstk(a, b, 1.0), static_cast<double>(CountMatchingFragmentPairs(a, b)))
        << a.ToString() << " vs " << b.ToString();
    for (double lambda : {0.5, 0.4}) {
      EXPECT_NEAR(Sstk(a, b, lambda), FragmentKernel(a, b, lambda), 1e-9);
    }
  }
}

TEST(SstkProperty, SymmetricAndMonotoneInLambda) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    ParseTree a = RandomTree(rng, 14);
    ParseTree b = RandomTree(rng, 14);
    double previous = 0.0;
    for (double lambda : {0.1, 0.25, 0.4, 0.7, 1.0}) {
      double ab = Sstk(a, b, lambda);
      EXPECT_DOUBLE_EQ(ab, Sstk(b, a, lambda));
      EXPECT_GE(ab, previous);
      previous = ab;
    }
    double n = SstkNormalized(a, b, 0.4);
    EXPECT_GE(n, 0.0);
    EXPECT_LE(n, 1.0 + 1e-9);
  }
}

TEST(SstkProperty, SelfKernelDominatesAverage) {
  // Cauchy-Schwarz: K(a,b)^2 <= K(a,a) K(b,b).
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    ParseTree a = RandomTree(rng, 16);
    ParseTree b = RandomTree(rng, 16);
    double ab = Sstk(a, b, 0.4);
    EXPECT_LE(ab * ab, Sstk(a, a, 0.4) * Sstk(b, b, 0.4) * (1.0 + 1e-12));
  }
}

TEST(GramMatrix, SmallCases) {
  ParseTree t = ParseBracketed("(S (A a) (B b))");
  std::vector<ParseTree> one{t};
  EXPECT_DOUBLE_EQ(GramMatrix(one, 1.0, false)(0, 0), 6.0);
  EXPECT_DOUBLE_EQ(GramMatrix(one, 1.0, true)(0, 0), 1.0);
  std::vector<ParseTree> twice{t, t};
  KernelGram g = GramMatrix(twice, 0.5, false);
  for (double v : g.values) EXPECT_DOUBLE_EQ(v, 2.125);
}

TEST(GramMatrix, MatchesOracleAndIsPositiveSemidefinite) {
  std::mt19937_64 rng(21);
  std::vector<ParseTree> trees;
  for (int k = 0; k < 10; ++k) trees.push_back(RandomTree(rng, 12));
  for (bool normalize : {false, true}) {
    KernelGram g = GramMatrix(trees, 0.4, normalize);
    ASSERT_EQ(g.n, trees.size());
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t j = 0; j < g.n; ++j) {
        double expected = FragmentKernel(trees[i], trees[j], 0.4);
        if (normalize) {
          expected /= std::sqrt(FragmentKernel(trees[i], trees[i], 0.4) *
                                FragmentKernel(trees[j], trees[j], 0.4));
        }
        EXPECT_NEAR(g(i, j), expected, 1e-9);
        EXPECT_EQ(g(i, j), g(j, i));
      }
      if (normalize) EXPECT_NEAR(g(i, i), 1.0, 1e-9);
    }
    for (double ev : SymmetricEigenvalues(g.values, g.n)) EXPECT_GE(ev, -1e-9);
  }
}

TEST(GramMatrix, LargerSetIsPositiveSemidefinite) {
  auto groups = ReadTreeGroups(testing::DataDir() / "planted" / "trees.txt");
  std::vector<ParseTree> trees;
  for (std::size_t k = 0; k < 40; ++k) trees.push_back(groups[0][k % groups[0].size()]);
  KernelGram g = GramMatrix(trees, kDefaultLambda, true);
  for (double ev : SymmetricEigenvalues(g.values, g.n)) EXPECT_GE(ev, -1e-9);
}

TEST(KernelRow, AgreesWithGram) {
  std::mt19937_64 rng(31);
  std::vector<ParseTree> trees;
  for (int k = 0; k < 6; ++k) trees.push_back(RandomTree(rng, 14));
  KernelGram g = GramMatrix(trees, 0.4, true);
  std::vector<PreparedTree> prepared(trees.begin(), trees.end());
  std::vector<double> self;
  for (const PreparedTree &p : prepared) self.push_back(Sstk(p, p, 0.4));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    std::vector<double> row = KernelRow(prepared[i], prepared, self, 0.4);
    for (std::size_t j = 0; j < trees.size(); ++j) EXPECT_NEAR(row[j], g(i, j), 1e-12);
  }
}

TEST(KernelSelfTest, ReportsNoFailures) {
  KernelSelfTestResult r = RunKernelSelfTest(7, 50);
  EXPECT_EQ(r.comparisons, 150u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace
}  // namespace claudette
