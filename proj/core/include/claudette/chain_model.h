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

#ifndef CLAUDETTE_CHAIN_MODEL_H_
#define CLAUDETTE_CHAIN_MODEL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "claudette/features.h"
#include "claudette/svm.h"

namespace claudette {

// One document as a sentence sequence with labels in [0, num_labels).
struct SeqExample {
  std::vector<SparseVector> xs;
  std::vector<int> ys;
};

// First-order chain model scored as
//   start[y_1] + sum_t emission[y_t] . x_t + sum_{t>=2} transition[y_{t-1}][y_t].
class ChainModel {
 public:
  ChainModel() = default;
  ChainModel(std::size_t num_labels, std::size_t dim);

  std::size_t num_labels() const { return num_labels_; }
  std::size_t dim() const { return dim_; }

  double start(int y) const { return start_[static_cast<std::size_t>(y)]; }
  double transition(int from, int to) const {
    return transition_[static_cast<std::size_t>(from) * num_labels_ + static_cast<std::size_t>(to)];
  }
  std::span<const double> emission(int y) const {
    return {emission_.data() + static_cast<std::size_t>(y) * dim_, dim_};
  }

  double &start(int y) { return start_[static_cast<std::size_t>(y)]; }
  double &transition(int from, int to) {
    return transition_[static_cast<std::size_t>(from) * num_labels_ + static_cast<std::size_t>(to)];
  }
  std::span<double> emission(int y) {
    return {emission_.data() + static_cast<std::size_t>(y) * dim_, dim_};
  }

  bool operator==(const ChainModel &) const = default;

 private:
  std::size_t num_labels_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> start_;
  std::vector<double> transition_;  // row-major [from][to]
  std::vector<double> emission_;    // row-major [label][feature]
};

// Throws kLengthMismatch, kUnknownLabel, kDimensionMismatch.
double JointScore(const ChainModel &model, std::span<const SparseVector> xs,
                  std::span<const int> ys);

struct Decoding {
  std::vector<int> labels;
  double score = 0.0;
};

// Highest-scoring label sequence. Ties go to the lower label index at each
// backtracking step (the final label first, then each predecessor).
Decoding Viterbi(const ChainModel &model, std::span<const SparseVector> xs);

// argmax_y JointScore(xs, y) + Hamming(y, gold); the returned score includes
// the Hamming term. Same tie rule as Viterbi.
Decoding LossAugmentedViterbi(const ChainModel &model, std::span<const SparseVector> xs,
                              std::span<const int> gold);

struct ChainTrainResult {
  ChainModel model;
  std::vector<double> epoch_objective;  // filled when TrainConfig::record_trace
};

// Stochastic subgradient (Pegasos) on the margin-rescaled structured hinge
//   1/2 |W|^2 + C sum_j max_y [score(x_j, y) + Hamming(y, y_j) - score(x_j, y_j)]
// with lambda = 1 / (C n), step 1 / (lambda t), seeded shuffling per epoch and
// averaged weights. Throws kEmptyData, kDimensionMismatch, kUnknownLabel.
ChainTrainResult TrainChain(std::span<const SeqExample> examples, std::size_t num_labels,
                            const TrainConfig &config);

// The training objective above, evaluated for `model`.
double StructuredObjective(const ChainModel &model, std::span<const SeqExample> examples,
                           double c);

}  // namespace claudette

#endif  // CLAUDETTE_CHAIN_MODEL_H_
