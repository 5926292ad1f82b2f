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

#ifndef CLAUDETTE_EVALUATION_H_
#define CLAUDETTE_EVALUATION_H_

#include <string>
#include <vector>

#include "claudette/config.h"
#include "claudette/corpus.h"
#include "claudette/metrics.h"
#include "claudette/model_file.h"
#include "claudette/parse_tree.h"

namespace claudette {

struct FoldSplit {
  std::string held_out;
  std::vector<std::string> train;
};

// One split per document, in corpus order. Throws kTooFewDocuments for M < 2.
std::vector<FoldSplit> MakeLooSplits(const Corpus &corpus);

std::vector<LabelSet> GoldLabels(const Document &document, PositivePolicy policy);

// The model a fold trains: vocabulary and learner see the training
// documents only.
ModelFile TrainFoldModel(const Corpus &corpus, const FoldSplit &split, ModelKind kind,
                         const ToolkitConfig &config, const TreeBank *trees);

// Leave-one-document-out detection with linear-bow, kernel-sstk or chain.
// Folds run concurrently; results are merged in fold order.
MetricsReport RunDetectionEval(const Corpus &corpus, ModelKind kind,
                               const ToolkitConfig &config, const TreeBank *trees);

// Leave-one-document-out multi-label category classification with eight
// one-vs-rest linear models.
MetricsReport RunCategoryEval(const Corpus &corpus, const ToolkitConfig &config,
                              const TreeBank *trees);

}  // namespace claudette

#endif  // CLAUDETTE_EVALUATION_H_
