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

#include "claudette/analysis.h"

#include <algorithm>

#include "claudette/error.h"
#include "json.hpp"

namespace claudette {

using Json = nlohmann::ordered_json;

std::size_t AnalysisResult::num_flagged() const {
  return static_cast<std::size_t>(std::count_if(
      sentences.begin(), sentences.end(), [](const AnalyzedSentence &s) { return s.flagged; }));
}

AnalysisResult AnalyzeDocument(const Predictor &predictor, std::string_view plain,
                               const std::vector<ParseTree> *trees) {
  std::vector<Sentence> sentences = SegmentSentences(plain);
  DocumentPrediction prediction = predictor.Predict(sentences, trees);

  AnalysisResult result;
  result.model_kind = std::string(ModelKindName(predictor.model().kind()));
  result.format_version = predictor.model().format_version;
  result.document = std::string(plain);
  result.warnings = std::move(prediction.warnings);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const SentencePrediction &p = prediction.sentences[i];
    AnalyzedSentence s;
    s.start = sentences[i].start;
    s.end = sentences[i].end;
    s.text = std::move(sentences[i].text);
    s.flagged = p.flagged;
    s.score = p.score;
    s.has_categories = p.has_categories;
    s.category_scores = p.category_scores;
    for (ClauseCategory c : kAllCategories) {
      if (p.categories & (1u << CategoryIndex(c))) s.categories.push_back(c);
    }
    result.sentences.push_back(std::move(s));
  }
  return result;
}

std::string RenderAnalysisJson(const AnalysisResult &result) {
  Json sentences = Json::array();
  for (std::size_t i = 0; i < result.sentences.size(); ++i) {
    const AnalyzedSentence &s = result.sentences[i];
    Json item{{"index", i},     {"start", s.start},     {"end", s.end},
              {"text", s.text}, {"flagged", s.flagged}, {"score", s.score}};
    if (s.has_categories) {
      Json scores;
      for (ClauseCategory c : kAllCategories) {
        scores[std::string(CategoryKey(c))] = s.category_scores[CategoryIndex(c)];
      }
      item["category_scores"] = std::move(scores);
    } else {
      item["category_scores"] = Json::object();
    }
    Json cats = Json::array();
    for (ClauseCategory c : s.categories) cats.push_back(CategoryKey(c));
    item["categories"] = std::move(cats);
    sentences.push_back(std::move(item));
  }
  Json j{{"model_kind", result.model_kind},
         {"format_version", result.format_version},
         {"flagged", result.num_flagged()},
         {"warnings", result.warnings},
         {"sentences", std::move(sentences)}};
  return j.dump(2) + "\n";
}

}  // namespace claudette
