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

#include "claudette/corpus_stats.h"

#include <cstdio>
#include <limits>

#include "json.hpp"

namespace claudette {

StatsTable ComputeCorpusStats(const Corpus &corpus) {
  StatsTable stats;
  stats.num_documents = corpus.num_documents();
  bool have_rate = false;
  for (const Document &doc : corpus.documents()) {
    std::array<bool, kNumCategories> present{};
    for (const TagSpan &span : doc.spans) {
      if (!IsPositiveLevel(span.level, corpus.policy())) continue;
      ++stats.categories[CategoryIndex(span.category)].clauses;
      present[CategoryIndex(span.category)] = true;
    }
    for (std::size_t c = 0; c < kNumCategories; ++c) {
      if (present[c]) ++stats.categories[c].documents;
    }
    std::size_t positives = 0;
    for (const LabeledSentence &s : doc.sentences) {
      if (s.detection_label) ++positives;
    }
    stats.total_sentences += doc.sentences.size();
    stats.positive_sentences += positives;
    if (doc.sentences.empty()) continue;
    double rate = 100.0 * static_cast<double>(positives) /
                  static_cast<double>(doc.sentences.size());
    if (!have_rate || rate < stats.min_document_rate) {
      stats.min_document_rate = rate;
      stats.min_document = doc.name;
    }
    if (!have_rate || rate > stats.max_document_rate) {
      stats.max_document_rate = rate;
      stats.max_document = doc.name;
    }
    have_rate = true;
  }
  if (stats.total_sentences > 0) {
    stats.positive_fraction = static_cast<double>(stats.positive_sentences) /
                              static_cast<double>(stats.total_sentences);
  }
  return stats;
}

std::string RenderStatsText(const StatsTable &stats) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-26s %9s %11s\n", "Category", "Clauses",
                "Documents");
  out += line;
  std::size_t total = 0;
  for (ClauseCategory c : kAllCategories) {
    const CategoryStats &row = stats.categories[CategoryIndex(c)];
    total += row.clauses;
    std::snprintf(line, sizeof(line), "%-26s %9zu %11zu\n",
                  std::string(CategoryName(c)).c_str(), row.clauses, row.documents);
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-26s %9zu %11zu\n", "Total", total,
                stats.num_documents);
  out += line;
  out += "\n";
  std::snprintf(line, sizeof(line), "Documents:          %zu\n", stats.num_documents);
  out += line;
  std::snprintf(line, sizeof(line), "Sentences:          %zu\n", stats.total_sentences);
  out += line;
  std::snprintf(line, sizeof(line), "Positive sentences: %zu (%.2f%%)\n",
                stats.positive_sentences, 100.0 * stats.positive_fraction);
  out += line;
  std::snprintf(line, sizeof(line),
                "Positive rate per document: min %.2f%% (%s), max %.2f%% (%s)\n",
                stats.min_document_rate,
                stats.min_document.empty() ? "-" : stats.min_document.c_str(),
                stats.max_document_rate,
                stats.max_document.empty() ? "-" : stats.max_document.c_str());
  out += line;
  return out;
}

std::string RenderStatsJson(const StatsTable &stats) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json categories = nlohmann::ordered_json::array();
  for (ClauseCategory c : kAllCategories) {
    const CategoryStats &row = stats.categories[CategoryIndex(c)];
    categories.push_back({{"category", CategoryKey(c)},
                          {"symbol", TagSymbol(c)},
                          {"clauses", row.clauses},
                          {"documents", row.documents}});
  }
  j["categories"] = std::move(categories);
  j["documents"] = stats.num_documents;
  j["sentences"] = stats.total_sentences;
  j["positive_sentences"] = stats.positive_sentences;
  j["positive_fraction"] = stats.positive_fraction;
  j["min_document_rate"] = {{"document", stats.min_document},
                            {"percent", stats.min_document_rate}};
  j["max_document_rate"] = {{"document", stats.max_document},
                            {"percent", stats.max_document_rate}};
  return j.dump(2) + "\n";
}

}  // namespace claudette
