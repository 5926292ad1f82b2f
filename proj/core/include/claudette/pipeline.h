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

#ifndef CLAUDETTE_PIPELINE_H_
#define CLAUDETTE_PIPELINE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "claudette/config.h"
#include "claudette/corpus.h"
#include "claudette/model_file.h"
#include "claudette/parse_tree.h"

namespace claudette {

// Fits the vocabulary and the selected learner on `documents` only.
// `trees` is required for kernel-sstk and for POS features (kMissingTree).
ModelFile TrainModel(ModelKind kind, std::span<const Document *const> documents,
                     const TreeBank *trees, const ToolkitConfig &config);

struct SentencePrediction {
  bool flagged = false;
  double score = 0.0;
  bool has_categories = false;
  std::array<double, kNumCategories> category_scores{};
  std::uint32_t categories = 0;  // bitmask over CategoryIndex()
};

struct DocumentPrediction {
  std::vector<SentencePrediction> sentences;
  std::vector<std::string> warnings;
};

// Immutable predictor; safe to share across threads.
class Predictor {
 public:
  explicit Predictor(ModelFile model);

  const ModelFile &model() const { return model_; }

  // `trees`, when given, must align with `sentences`. kernel-sstk models fall
  // back to their linear model (with a warning) when trees are absent.
  DocumentPrediction Predict(std::span<const Sentence> sentences,
                             const std::vector<ParseTree> *trees) const;

 private:
  ModelFile model_;
  std::vector<PreparedTree> support_;
  std::vector<double> support_self_;
};

}  // namespace claudette

#endif  // CLAUDETTE_PIPELINE_H_
