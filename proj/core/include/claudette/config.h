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

#ifndef CLAUDETTE_CONFIG_H_
#define CLAUDETTE_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "claudette/categories.h"
#include "claudette/corpus.h"
#include "claudette/features.h"
#include "claudette/svm.h"
#include "claudette/tree_kernel.h"

namespace claudette {

// Everything a training or evaluation run is parameterized by.
struct ToolkitConfig {
  FeatureConfig features;
  TrainConfig train;
  double lambda = kDefaultLambda;
  bool normalize_kernel = true;
  PositivePolicy positive = PositivePolicy::kLevels2And3;
  bool lenient_tags = false;

  CorpusOptions corpus_options() const { return {{lenient_tags}, positive}; }
  void Validate() const;
};

// Flat "key = value" lines; '#' starts a comment. Recognized keys:
//   ngram_orders = 1,2        use_pos = false      min_df = 1
//   lowercase = true          tf = raw|log
//   c = 1.0                   positive_weight = balanced|<number>
//   tol = 0.001               max_iter = 10000     epochs = 20
//   seed = 1                  lambda = 0.4         normalize_kernel = true
//   positive_levels = 2,3|2   lenient_tags = false
// Unknown keys and malformed values throw kBadConfig.
ToolkitConfig ParseConfig(std::string_view text, ToolkitConfig base = {});
ToolkitConfig ReadConfigFile(const std::filesystem::path &path, ToolkitConfig base = {});

// Canonical rendering accepted by ParseConfig.
std::string RenderConfig(const ToolkitConfig &config);

}  // namespace claudette

#endif  // CLAUDETTE_CONFIG_H_
