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

#include "claudette/fragment_oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "claudette/error.h"
#include "claudette/tree_kernel.h"

namespace claudette {
namespace {

// Fragments rooted (and expanded) at node `i`.
std::vector<Fragment> Rooted(const ParseTree &tree, int i) {
  const ParseTree::Node &node = tree.node(i);
  // Partial fragments: the prefix "(LABEL" plus choices for children so far.
  std::vector<Fragment> partial = {{"(" + node.label, 1}};
  for (int c : node.children) {
    std::vector<Fragment> options;
    if (tree.IsLeaf(c)) {
      options.push_back({tree.node(c).label, 0});
    } else {
      options.push_back({tree.node(c).label, 0});  // stop at the non-terminal
      for (Fragment &f : Rooted(tree, c)) options.push_back(std::move(f));
    }
    std::vector<Fragment> next;
    next.reserve(partial.size() * options.size());
    for (const Fragment &p : partial) {
      for (const Fragment &o : options) {
        next.push_back({p.text + " " + o.text, p.expanded + o.expanded});
      }
    }
    partial = std::move(next);
  }
  for (Fragment &f : partial) f.text += ")";
  return partial;
}

std::map<std::string, std::pair<std::uint64_t, int>> Histogram(const ParseTree &tree) {
  std::map<std::string, std::pair<std::uint64_t, int>> h;
  for (Fragment &f : EnumerateFragments(tree)) {
    auto &entry = h[f.text];
    ++entry.first;
    entry.second = f.expanded;
  }
  return h;
}

}  // namespace

std::vector<Fragment> EnumerateFragments(const ParseTree &tree) {
  if (tree.size() > kOracleMaxNodes) {
    throw Error(ErrorKind::kTooLarge,
                "fragment enumeration limited to " + std::to_string(kOracleMaxNodes) +
                    " nodes, tree has " + std::to_string(tree.size()));
  }
  std::vector<Fragment> out;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    if (tree.IsLeaf(i)) continue;
    for (Fragment &f : Rooted(tree, i)) out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t CountMatchingFragmentPairs(const ParseTree &a, const ParseTree &b) {
  auto ha = Histogram(a);
  auto hb = Histogram(b);
  std::uint64_t pairs = 0;
  for (const auto &[text, entry] : ha) {
    auto it = hb.find(text);
    if (it != hb.end()) pairs += entry.first * it->second.first;
  }
  return pairs;
}

double FragmentKernel(const ParseTree &a, const ParseTree &b, double lambda) {
  auto ha = Histogram(a);
  auto hb = Histogram(b);
  double sum = 0.0;
  for (const auto &[text, entry] : ha) {
    auto it = hb.find(text);
    if (it == hb.end()) continue;
    sum += static_cast<double>(entry.first * it->second.first) *
           std::pow(lambda, entry.second);
  }
  return sum;
}

namespace {

constexpr const char *kPhrases[] = {"S", "NP", "VP"};
constexpr const char *kTags[] = {"DT", "NN", "VB"};
constexpr const char *kWords[] = {"a", "b", "c"};

std::size_t Pick(std::mt19937_64 &rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Appends a subtree using at most `budget` nodes (budget >= 2); returns the
// number of nodes used.
std::size_t Grow(std::mt19937_64 &rng, std::size_t budget, std::string *out) {
  if (budget < 4 || Pick(rng, 3) == 0) {
    *out += "(";
    *out += kTags[Pick(rng, 3)];
    *out += " ";
    *out += kWords[Pick(rng, 3)];
    *out += ")";
    return 2;
  }
  *out += "(";
  *out += kPhrases[Pick(rng, 3)];
  std::size_t remaining = budget - 1;
  const std::size_t arity = 1 + Pick(rng, std::min<std::size_t>(3, remaining / 2));
  std::size_t used = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    const std::size_t reserve = 2 * (arity - k - 1);
    const std::size_t cap = remaining - reserve;
    const std::size_t child_budget = 2 + Pick(rng, cap - 1);
    *out += " ";
    std::size_t n = Grow(rng, child_budget, out);
    remaining -= n;
    used += n;
  }
  *out += ")";
  return used;
}

}  // namespace

ParseTree RandomTree(std::mt19937_64 &rng, std::size_t max_nodes) {
  if (max_nodes < 2) throw Error(ErrorKind::kTooLarge, "random tree needs at least 2 nodes");
  std::string text;
  Grow(rng, 2 + Pick(rng, max_nodes - 1), &text);
  return ParseBracketed(text);
}

KernelSelfTestResult RunKernelSelfTest(std::uint64_t seed, std::size_t pairs,
                                       std::size_t max_nodes) {
  constexpr double kLambdas[] = {1.0, 0.5, 0.4};
  std::mt19937_64 rng(seed);
  KernelSelfTestResult result;
  for (std::size_t p = 0; p < pairs; ++p) {
    ParseTree a = RandomTree(rng, max_nodes);
    ParseTree b = RandomTree(rng, max_nodes);
    for (double lambda : kLambdas) {
      const double fast = Sstk(a, b, lambda);
      const double oracle = lambda == 1.0
                                ? static_cast<double>(CountMatchingFragmentPairs(a, b))
                                : FragmentKernel(a, b, lambda);
      const double err = std::abs(fast - oracle);
      const bool ok = lambda == 1.0 ? fast == oracle : err <= 1e-9;
      ++result.comparisons;
      result.max_error = std::max(result.max_error, err);
      if (!ok) {
        if (result.failures == 0) {
          result.first_failure = a.ToString() + " vs " + b.ToString() + " at lambda " +
                                 std::to_string(lambda) + ": " + std::to_string(fast) +
                                 " != " + std::to_string(oracle);
        }
        ++result.failures;
      }
    }
  }
  return result;
}

}  // namespace claudette
