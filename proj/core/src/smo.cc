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
#include <limits>

#include "claudette/error.h"

namespace claudette {

KernelModel TrainSmo(const KernelGram &gram, std::span<const int> y,
                     const TrainConfig &config) {
  config.Validate();
  const std::size_t n = gram.n;
  if (gram.values.size() != n * n || y.size() != n) {
    throw Error(ErrorKind::kNotSquare, "Gram matrix must be n x n with n = |y|");
  }
  if (n == 0) throw Error(ErrorKind::kEmptyData, "no training examples");
  bool has_pos = std::any_of(y.begin(), y.end(), [](int v) { return v > 0; });
  bool has_neg = std::any_of(y.begin(), y.end(), [](int v) { return v <= 0; });
  if (!has_pos || !has_neg) {
    throw Error(ErrorKind::kSingleClass, "SMO needs both classes");
  }
  const ClassCosts costs = ComputeClassCosts(y, config);
  constexpr double kTau = 1e-12;

  std::vector<double> ys(n);
  std::vector<double> upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    ys[i] = y[i] > 0 ? 1.0 : -1.0;
    upper[i] = costs.For(y[i]);
  }
  auto q = [&](std::size_t i, std::size_t j) { return ys[i] * ys[j] * gram(i, j); };

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // Q alpha - e
  KernelModel model;
  model.lambda = gram.lambda;
  model.normalized = gram.normalized;
  SmoDiagnostics &diag = model.diagnostics;

  auto dual_objective = [&] {
    double f = 0.0;
    for (std::size_t t = 0; t < n; ++t) f += alpha[t] * (grad[t] - 1.0);
    return -0.5 * f;
  };

  const std::size_t cap = static_cast<std::size_t>(config.max_iter) * std::max<std::size_t>(n, 1);
  double m_up = 0.0;
  double m_low = 0.0;
  for (;;) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    m_up = -kInf;
    m_low = kInf;
    std::size_t i = n;
    std::size_t j = n;
    for (std::size_t t = 0; t < n; ++t) {
      double v = -ys[t] * grad[t];
      bool in_up = (ys[t] > 0) ? alpha[t] < upper[t] : alpha[t] > 0.0;
      bool in_low = (ys[t] > 0) ? alpha[t] > 0.0 : alpha[t] < upper[t];
      if (in_up && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    diag.max_violation = (i == n || j == n) ? 0.0 : m_up - m_low;
    if (i == n || j == n || m_up - m_low < config.tol) {
      diag.converged = true;
      break;
    }
    if (diag.iterations >= cap) break;
    ++diag.iterations;

    const double ci = upper[i];
    const double cj = upper[j];
    const double old_i = alpha[i];
    const double old_j = alpha[j];
    if (ys[i] != ys[j]) {
      double quad = gram(i, i) + gram(j, j) + 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > ci - cj) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = ci - diff;
        }
      } else if (alpha[j] > cj) {
        alpha[j] = cj;
        alpha[i] = cj + diff;
      }
    } else {
      double quad = gram(i, i) + gram(j, j) - 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      double delta = (grad[i] - grad[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > ci) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = sum - ci;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > cj) {
        if (alpha[j] > cj) {
          alpha[j] = cj;
          alpha[i] = sum - cj;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }
    const double di = alpha[i] - old_i;
    const double dj = alpha[j] - old_j;
    for (std::size_t t = 0; t < n; ++t) grad[t] += q(t, i) * di + q(t, j) * dj;
    if (config.record_trace) diag.dual_trace.push_back(dual_objective());
  }

  model.bias = (std::isfinite(m_up) && std::isfinite(m_low)) ? 0.5 * (m_up + m_low)
               : std::isfinite(m_up)                         ? m_up
               : std::isfinite(m_low)                        ? m_low
                                                             : 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0) {
      model.support.push_back(t);
      model.coefficients.push_back(alpha[t] * ys[t]);
    }
  }
  return model;
}

double PredictKernel(const KernelModel &model, std::span<const double> kernel_row) {
  if (kernel_row.size() != model.support.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "kernel row has " + std::to_string(kernel_row.size()) +
                    " entries for " + std::to_string(model.support.size()) +
                    " support vectors");
  }
  double score = model.bias;
  for (std::size_t k = 0; k < kernel_row.size(); ++k) {
    score += model.coefficients[k] * kernel_row[k];
  }
  return score;
}

}  // namespace claudette
