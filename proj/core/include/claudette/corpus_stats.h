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

#ifndef CLAUDETTE_CORPUS_STATS_H_
#define CLAUDETTE_CORPUS_STATS_H_

#include <array>
#include <cstddef>
#include <string>

#include "claudette/categories.h"
#include "claudette/corpus.h"

namespace claudette {

struct CategoryStats {
  std::size_t clauses = 0;    // spans at a positive level
  std::size_t documents = 0;  // documents with at least one such span
};

struct StatsTable {
  std::array<CategoryStats, kNumCategories> categories{};
  std::size_t num_documents = 0;
  std::size_t total_sentences = 0;
  std::size_t positive_sentences = 0;
  double positive_fraction = 0.0;
  // Per-document percentage of positive sentences (0..100).
  double min_document_rate = 0.0;
  double max_document_rate = 0.0;
  std::string min_document;
  std::string max_document;
};

StatsTable ComputeCorpusStats(const Corpus &corpus);

std::string RenderStatsText(const StatsTable &stats);
std::string RenderStatsJson(const StatsTable &stats);

}  // namespace claudette

#endif  // CLAUDETTE_CORPUS_STATS_H_
