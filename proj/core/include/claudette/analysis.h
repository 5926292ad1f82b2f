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

#ifndef CLAUDETTE_ANALYSIS_H_
#define CLAUDETTE_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "claudette/categories.h"
#include "claudette/parse_tree.h"
#include "claudette/pipeline.h"

namespace claudette {

struct AnalyzedSentence {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  bool flagged = false;
  double score = 0.0;
  bool has_categories = false;
  std::array<double, kNumCategories> category_scores{};
  std::vector<ClauseCategory> categories;
};

struct AnalysisResult {
  std::string model_kind;
  int format_version = 0;
  std::string document;  // the analyzed plain text
  std::vector<AnalyzedSentence> sentences;
  std::vector<std::string> warnings;

  std::size_t num_flagged() const;
};

// Segments `plain`, scores every sentence with `predictor`. `trees`, when
// non-null, must hold one tree per segmented sentence (kTreeBankMismatch).
AnalysisResult AnalyzeDocument(const Predictor &predictor, std::string_view plain,
                               const std::vector<ParseTree> *trees = nullptr);

// JSON record shared by the CLI and the HTTP service:
// {"model_kind", "format_version", "warnings": [...],
//  "sentences": [{"index", "start", "end", "text", "flagged", "score",
//                 "category_scores": {key: score}, "categories": [key]}]}
// category_scores/categories appear only for category models.
std::string RenderAnalysisJson(const AnalysisResult &result);

}  // namespace claudette

#endif  // CLAUDETTE_ANALYSIS_H_
