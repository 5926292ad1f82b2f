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

#ifndef CLAUDETTE_METRICS_H_
#define CLAUDETTE_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "claudette/categories.h"

namespace claudette {

// Gold or predicted labels of one sentence.
struct LabelSet {
  bool positive = false;
  std::uint32_t categories = 0;  // bitmask over CategoryIndex()
};

struct TargetMetrics {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool vacuous = false;  // no gold and no predicted positives

  // Recomputes the ratios from the counts; 0/0 is taken as 0.
  void Finalize();
};

struct MetricsReport {
  std::size_t sentences = 0;
  bool has_detection = true;
  bool has_categories = true;
  TargetMetrics detection;
  std::array<TargetMetrics, kNumCategories> categories;
  TargetMetrics micro;  // from summed category counts
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::size_t macro_targets = 0;  // non-vacuous categories averaged
  std::vector<std::string> warnings;
};

// Throws kLengthMismatch.
MetricsReport ComputeMetrics(std::span<const LabelSet> gold, std::span<const LabelSet> pred);

std::string RenderMetricsText(const MetricsReport &report);
std::string RenderMetricsJson(const MetricsReport &report);

}  // namespace claudette

#endif  // CLAUDETTE_METRICS_H_
