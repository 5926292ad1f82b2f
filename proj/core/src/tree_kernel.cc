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

#include "claudette/tree_kernel.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "claudette/error.h"

namespace claudette {
namespace {

void CheckLambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kInvalidLambda,
                "tree kernel decay must lie in (0, 1], got " + std::to_string(lambda));
  }
}

// Delta evaluation over one tree pair, memoized per node pair.
class DeltaTable {
 public:
  DeltaTable(const PreparedTree &a, const PreparedTree &b, double lambda,
             std::vector<double> *memo)
      : a_(a.nodes()), b_(b.nodes()), lambda_(lambda), memo_(*memo) {
    memo_.assign(a_.size() * b_.size(), -1.0);
  }

  double Delta(int i, int j) {
    double &cached = memo_[static_cast<std::size_t>(i) * b_.size() +
                           static_cast<std::size_t>(j)];
    if (cached >= 0.0) return cached;
    const PreparedTree::Node &x = a_[static_cast<std::size_t>(i)];
    const PreparedTree::Node &y = b_[static_cast<std::size_t>(j)];
    if (x.production != y.production) return cached = 0.0;
    if (x.preterminal && y.preterminal) return cached = lambda_;
    double product = lambda_;
    for (std::size_t k = 0; k < x.children.size(); ++k) {
      int ci = x.children[k];
      int cj = y.children[k];
      if (ci < 0 || cj < 0) continue;  // leaf: factor 1
      product *= 1.0 + Delta(ci, cj);
    }
    return cached = product;
  }

 private:
  const std::vector<PreparedTree::Node> &a_;
  const std::vector<PreparedTree::Node> &b_;
  double lambda_;
  std::vector<double> &memo_;
};

double Evaluate(const PreparedTree &a, const PreparedTree &b, double lambda) {
  thread_local std::vector<double> memo;
  DeltaTable table(a, b, lambda, &memo);
  const std::vector<int> &ia = a.by_production();
  const std::vector<int> &ib = b.by_production();
  const auto &na = a.nodes();
  const auto &nb = b.nodes();
  double sum = 0.0;
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < ia.size() && q < ib.size()) {
    const std::string &pa = na[static_cast<std::size_t>(ia[p])].production;
    const std::string &pb = nb[static_cast<std::size_t>(ib[q])].production;
    int cmp = pa.compare(pb);
    if (cmp < 0) {
      ++p;
    } else if (cmp > 0) {
      ++q;
    } else {
      std::size_t p_end = p;
      while (p_end < ia.size() && na[static_cast<std::size_t>(ia[p_end])].production == pa) ++p_end;
      std::size_t q_end = q;
      while (q_end < ib.size() && nb[static_cast<std::size_t>(ib[q_end])].production == pb) ++q_end;
      for (std::size_t x = p; x < p_end; ++x) {
        for (std::size_t y = q; y < q_end; ++y) sum += table.Delta(ia[x], ib[y]);
      }
      p = p_end;
      q = q_end;
    }
  }
  return sum;
}

}  // namespace

PreparedTree::PreparedTree(const ParseTree &tree) {
  std::vector<int> index(tree.size(), -1);
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    if (!tree.IsLeaf(i)) {
      index[static_cast<std::size_t>(i)] = static_cast<int>(nodes_.size());
      nodes_.push_back({tree.Production(i), tree.IsPreterminal(i), {}});
    }
  }
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    int id = index[static_cast<std::size_t>(i)];
    if (id < 0) continue;
    for (int c : tree.node(i).children) {
      nodes_[static_cast<std::size_t>(id)].children.push_back(index[static_cast<std::size_t>(c)]);
    }
  }
  by_production_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) by_production_[i] = static_cast<int>(i);
  std::stable_sort(by_production_.begin(), by_production_.end(), [&](int x, int y) {
    return nodes_[static_cast<std::size_t>(x)].production <
           nodes_[static_cast<std::size_t>(y)].production;
  });
}

double Sstk(const PreparedTree &a, const PreparedTree &b, double lambda) {
  CheckLambda(lambda);
  return Evaluate(a, b, lambda);
}

double Sstk(const ParseTree &a, const ParseTree &b, double lambda) {
  return Sstk(PreparedTree(a), PreparedTree(b), lambda);
}

double SstkNormalized(const ParseTree &a, const ParseTree &b, double lambda) {
  CheckLambda(lambda);
  PreparedTree pa(a);
  PreparedTree pb(b);
  double kaa = Evaluate(pa, pa, lambda);
  double kbb = Evaluate(pb, pb, lambda);
  if (kaa <= 0.0 || kbb <= 0.0) {
    throw Error(ErrorKind::kDegenerateTree, "tree with zero self-kernel");
  }
  return Evaluate(pa, pb, lambda) / std::sqrt(kaa * kbb);
}

KernelGram GramMatrix(std::span<const ParseTree> trees, double lambda,
                      bool normalize) {
  CheckLambda(lambda);
  KernelGram gram;
  gram.n = trees.size();
  gram.lambda = lambda;
  gram.normalized = normalize;
  gram.values.assign(gram.n * gram.n, 0.0);
  std::vector<PreparedTree> prepared;
  prepared.reserve(trees.size());
  for (const ParseTree &t : trees) prepared.emplace_back(t);

  std::vector<double> self(gram.n);
  for (std::size_t i = 0; i < gram.n; ++i) {
    self[i] = Evaluate(prepared[i], prepared[i], lambda);
    if (normalize && self[i] <= 0.0) {
      throw Error(ErrorKind::kDegenerateTree,
                  "tree " + std::to_string(i) + " has zero self-kernel");
    }
  }

  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next_row.fetch_add(1);
      if (i >= gram.n) return;
      for (std::size_t j = i; j < gram.n; ++j) {
        double k = (i == j) ? self[i] : Evaluate(prepared[i], prepared[j], lambda);
        if (normalize) k = (i == j) ? 1.0 : k / std::sqrt(self[i] * self[j]);
        gram.values[i * gram.n + j] = k;
        gram.values[j * gram.n + i] = k;
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), gram.n / 16 + 1);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread &t : pool) t.join();
  return gram;
}

std::vector<double> KernelRow(const PreparedTree &query,
                              std::span<const PreparedTree> basis,
                              std::span<const double> basis_self, double lambda) {
  CheckLambda(lambda);
  std::vector<double> row(basis.size(), 0.0);
  double query_self = basis_self.empty() ? 1.0 : Evaluate(query, query, lambda);
  if (query_self <= 0.0) return row;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    double v = Evaluate(query, basis[k], lambda);
    if (!basis_self.empty()) v /= std::sqrt(query_self * basis_self[k]);
    row[k] = v;
  }
  return row;
}

}  // namespace claudette
