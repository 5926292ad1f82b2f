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

#include "claudette/svm.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "claudette/error.h"

namespace claudette {

void TrainConfig::Validate() const {
  if (!(c > 0.0)) throw Error(ErrorKind::kBadConfig, "C must be positive");
  if (!(tol > 0.0)) throw Error(ErrorKind::kBadConfig, "tol must be positive");
  if (positive_weight && !(*positive_weight > 0.0)) {
    throw Error(ErrorKind::kBadConfig, "positive_weight must be positive");
  }
  if (max_iter < 1) throw Error(ErrorKind::kBadConfig, "max_iter must be >= 1");
  if (epochs < 1) throw Error(ErrorKind::kBadConfig, "epochs must be >= 1");
}

ClassCosts ComputeClassCosts(std::span<const int> y, const TrainConfig &config) {
  ClassCosts costs{config.c, config.c};
  if (config.positive_weight) {
    costs.positive = config.c * *config.positive_weight;
    return costs;
  }
  std::size_t positives = static_cast<std::size_t>(std::count_if(
      y.begin(), y.end(), [](int v) { return v > 0; }));
  std::size_t negatives = y.size() - positives;
  double n = static_cast<double>(y.size());
  if (positives > 0) costs.positive = config.c * n / (2.0 * static_cast<double>(positives));
  if (negatives > 0) costs.negative = config.c * n / (2.0 * static_cast<double>(negatives));
  return costs;
}

namespace {

// Fisher-Yates with raw mt19937_64 draws so permutations do not depend on
// the standard library's distribution implementations.
void Shuffle(std::vector<std::size_t> *order, std::mt19937_64 *rng) {
  for (std::size_t i = order->size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>((*rng)() % i);
    std::swap((*order)[i - 1], (*order)[j]);
  }
}

}  // namespace

LinearModel TrainLinear(std::span<const SparseVector> x, std::span<const int> y,
                        const TrainConfig &config) {
  config.Validate();
  if (x.empty()) throw Error(ErrorKind::kEmptyData, "no training examples");
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kLengthMismatch, "features and labels differ in length");
  }
  const std::size_t dim = x[0].dim();
  for (const SparseVector &v : x) {
    if (v.dim() != dim) throw Error(ErrorKind::kDimensionMismatch, "mixed feature widths");
  }
  const ClassCosts costs = ComputeClassCosts(y, config);

  LinearModel model;
  model.weights.assign(dim, 0.0);
  bool has_pos = std::any_of(y.begin(), y.end(), [](int v) { return v > 0; });
  bool has_neg = std::any_of(y.begin(), y.end(), [](int v) { return v <= 0; });
  if (!has_pos || !has_neg) {
    model.warning = "SingleClass: training data has only " +
                    std::string(has_pos ? "positive" : "negative") + " examples";
  }

  const std::size_t n = x.size();
  std::vector<double> alpha(n, 0.0);
  std::vector<double> qd(n);
  for (std::size_t i = 0; i < n; ++i) qd[i] = x[i].SquaredNorm() + 1.0;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(config.seed);

  for (int epoch = 0; epoch < config.max_iter; ++epoch) {
    Shuffle(&order, &rng);
    double violation = 0.0;
    for (std::size_t i : order) {
      const double yi = y[i] > 0 ? 1.0 : -1.0;
      const double upper = costs.For(y[i]);
      const double g = yi * (x[i].Dot(model.weights) + model.bias) - 1.0;
      double pg = 0.0;
      if (alpha[i] <= 0.0) {
        pg = std::min(g, 0.0);
      } else if (alpha[i] >= upper) {
        pg = std::max(g, 0.0);
      } else {
        pg = g;
      }
      violation = std::max(violation, std::fabs(pg));
      if (std::fabs(pg) <= 1e-12) continue;
      const double old = alpha[i];
      alpha[i] = std::clamp(old - g / qd[i], 0.0, upper);
      const double d = (alpha[i] - old) * yi;
      for (const auto &[index, weight] : x[i].entries()) model.weights[index] += d * weight;
      model.bias += d;
    }
    model.epochs = epoch + 1;
    model.max_violation = violation;
    if (violation < config.tol) {
      model.converged = true;
      break;
    }
  }
  return model;
}

double PredictLinear(const LinearModel &model, const SparseVector &x) {
  if (x.dim() != model.weights.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "feature width " + std::to_string(x.dim()) + " vs model width " +
                    std::to_string(model.weights.size()));
  }
  return x.Dot(model.weights) + model.bias;
}

double LinearPrimalObjective(const LinearModel &model, std::span<const SparseVector> x,
                             std::span<const int> y, const ClassCosts &costs) {
  // The bias is trained as a constant feature, so it is regularized too.
  double obj = 0.5 * model.bias * model.bias;
  for (double w : model.weights) obj += 0.5 * w * w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double margin = (y[i] > 0 ? 1.0 : -1.0) * PredictLinear(model, x[i]);
    obj += costs.For(y[i]) * std::max(0.0, 1.0 - margin);
  }
  return obj;
}

}  // namespace claudette
