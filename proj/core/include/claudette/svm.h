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

#ifndef CLAUDETTE_SVM_H_
#define CLAUDETTE_SVM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "claudette/features.h"
#include "claudette/tree_kernel.h"

namespace claudette {

struct TrainConfig {
  double c = 1.0;
  // Multiplier of C for positive examples. Unset means balanced weighting:
  // each class gets C * N / (2 * N_class).
  std::optional<double> positive_weight;
  double tol = 1e-3;
  int max_iter = 10000;  // passes over the data
  int epochs = 20;       // chain model training
  std::uint64_t seed = 1;
  bool record_trace = false;

  void Validate() const;
  bool operator==(const TrainConfig &) const = default;
};

struct ClassCosts {
  double positive = 1.0;
  double negative = 1.0;

  double For(int y) const { return y > 0 ? positive : negative; }
};

// Per-class box bounds C_i. Labels are +1 / -1.
ClassCosts ComputeClassCosts(std::span<const int> y, const TrainConfig &config);

struct LinearModel {
  std::vector<double> weights;  // dense, one per feature
  double bias = 0.0;
  bool converged = false;
  int epochs = 0;
  double max_violation = 0.0;
  std::string warning;  // e.g. single-class training data

  bool operator==(const LinearModel &) const = default;
};

// Dual coordinate descent for the L1-loss (hinge) SVM
//   min 1/2 |w|^2 + sum_i C_i max(0, 1 - y_i (w.x_i + b)).
// The bias is learned as the weight of an implicit constant feature of
// value 1. One seeded random permutation per epoch; stops when the largest
// projected gradient magnitude drops below tol or after max_iter epochs.
// Throws kEmptyData or kDimensionMismatch.
LinearModel TrainLinear(std::span<const SparseVector> x, std::span<const int> y,
                        const TrainConfig &config);

// w.x + b; predicted label is +1 iff the score is >= 0. kDimensionMismatch
// when x.dim() differs from the model width.
double PredictLinear(const LinearModel &model, const SparseVector &x);

double LinearPrimalObjective(const LinearModel &model, std::span<const SparseVector> x,
                             std::span<const int> y, const ClassCosts &costs);

struct SmoDiagnostics {
  bool converged = false;
  std::size_t iterations = 0;
  double max_violation = 0.0;
  std::vector<double> dual_trace;  // filled when TrainConfig::record_trace
};

struct KernelModel {
  std::vector<std::size_t> support;   // indices into the training set
  std::vector<double> coefficients;   // alpha_i * y_i, aligned with support
  double bias = 0.0;
  double lambda = kDefaultLambda;
  bool normalized = true;
  SmoDiagnostics diagnostics;
};

// Two-variable SMO with maximal-violating-pair selection on a precomputed
// Gram matrix. Stops when m(alpha) - M(alpha) < tol; on hitting the
// iteration cap (max_iter * n updates) the last iterate is returned with
// diagnostics.converged == false. Throws kNotSquare, kSingleClass, kEmptyData.
KernelModel TrainSmo(const KernelGram &gram, std::span<const int> y,
                     const TrainConfig &config);

// sum_k coefficients[k] * kernel_row[k] + bias, with kernel_row aligned to
// model.support. kLengthMismatch otherwise.
double PredictKernel(const KernelModel &model, std::span<const double> kernel_row);

}  // namespace claudette

#endif  // CLAUDETTE_SVM_H_
