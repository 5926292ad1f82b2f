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

#ifndef CLAUDETTE_TREE_KERNEL_H_
#define CLAUDETTE_TREE_KERNEL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "claudette/parse_tree.h"

namespace claudette {

inline constexpr double kDefaultLambda = 0.4;

// A tree flattened for repeated SubSet Tree Kernel evaluation: internal
// nodes only, with productions sorted so matching node pairs can be found
// by a merge.
class PreparedTree {
 public:
  explicit PreparedTree(const ParseTree &tree);

  struct Node {
    std::string production;
    bool preterminal = false;
    std::vector<int> children;  // prepared index, or -1 for a leaf child
  };

  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<int> &by_production() const { return by_production_; }

 private:
  std::vector<Node> nodes_;
  std::vector<int> by_production_;
};

// SubSet Tree Kernel with decay `lambda` in (0, 1]:
//   K(t1, t2) = sum over node pairs of D(n1, n2), where
//   D = 0 if the productions differ,
//   D = lambda for matching preterminals,
//   D = lambda * prod_i (1 + D(child_i(n1), child_i(n2))) otherwise.
// Throws kInvalidLambda.
double Sstk(const ParseTree &a, const ParseTree &b, double lambda);
double Sstk(const PreparedTree &a, const PreparedTree &b, double lambda);

// K(a, b) / sqrt(K(a, a) K(b, b)); throws kDegenerateTree when a self-kernel
// is zero.
double SstkNormalized(const ParseTree &a, const ParseTree &b, double lambda);

struct KernelGram {
  std::size_t n = 0;
  std::vector<double> values;  // row-major n x n
  double lambda = kDefaultLambda;
  bool normalized = true;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// Symmetric Gram matrix, one kernel evaluation per unordered pair. Rows are
// computed on a small thread pool.
KernelGram GramMatrix(std::span<const ParseTree> trees, double lambda,
                      bool normalize);

// Kernel values of `query` against each of `basis`, normalized with the
// supplied basis self-kernels when `basis_self` is non-empty.
std::vector<double> KernelRow(const PreparedTree &query,
                              std::span<const PreparedTree> basis,
                              std::span<const double> basis_self, double lambda);

}  // namespace claudette

#endif  // CLAUDETTE_TREE_KERNEL_H_
