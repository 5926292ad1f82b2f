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

#ifndef CLAUDETTE_FRAGMENT_ORACLE_H_
#define CLAUDETTE_FRAGMENT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "claudette/parse_tree.h"

namespace claudette {

// Exhaustive SubSet Tree fragment enumeration. Exponential; intended only as
// a reference for the dynamic-programming kernel on small trees.

inline constexpr std::size_t kOracleMaxNodes = 16;

struct Fragment {
  std::string text;  // e.g. "(S (A a) B)"; unexpanded non-terminals are bare
  int expanded = 0;  // number of expanded nodes
};

// All fragments rooted at every internal node. Throws kTooLarge above
// kOracleMaxNodes nodes (leaves included).
std::vector<Fragment> EnumerateFragments(const ParseTree &tree);

// Number of identical fragment pairs between the two trees.
std::uint64_t CountMatchingFragmentPairs(const ParseTree &a, const ParseTree &b);

// Sum over identical fragment pairs of lambda^expanded.
double FragmentKernel(const ParseTree &a, const ParseTree &b, double lambda);

// Random tree over a small label alphabet with at most max_nodes nodes,
// leaves included (max_nodes >= 2).
ParseTree RandomTree(std::mt19937_64 &rng, std::size_t max_nodes);

struct KernelSelfTestResult {
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::string first_failure;
};

// Compares Sstk against FragmentKernel on random pairs for lambda in
// {1.0, 0.5, 0.4}; exact equality at lambda 1, 1e-9 otherwise.
KernelSelfTestResult RunKernelSelfTest(std::uint64_t seed, std::size_t pairs,
                                       std::size_t max_nodes = 12);

}  // namespace claudette

#endif  // CLAUDETTE_FRAGMENT_ORACLE_H_
