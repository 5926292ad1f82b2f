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

#ifndef CLAUDETTE_PUBLISHED_STATS_H_
#define CLAUDETTE_PUBLISHED_STATS_H_

#include <string>
#include <vector>

#include "claudette/corpus_stats.h"

namespace claudette {

// Published statistics of the 50-document Terms of Service corpus and a diff
// of a StatsTable against them.

enum class DiffStatus { kPass, kFail, kNotComparable };

struct DiffEntry {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  std::string tolerance;  // human-readable rule
  DiffStatus status = DiffStatus::kNotComparable;
};

struct DiffReport {
  bool comparable = false;  // only a 50-document corpus is compared
  std::vector<DiffEntry> entries;

  bool AllPass() const;
};

struct ReferenceStats {
  std::array<std::size_t, kNumCategories> clauses;
  std::array<std::size_t, kNumCategories> documents;
  std::size_t num_documents;
  std::size_t sentences;
  std::size_t positives;
  double positive_fraction;
  double min_document_rate;
  double max_document_rate;
};

const ReferenceStats &PublishedCorpusStats();

// Tolerances: clause and document counts exact; sentences within 3%;
// positive fraction within 1 percentage point; lowest per-document rate at
// most 4.5% and highest at least 14%.
DiffReport CompareToPublishedStats(const StatsTable &stats);

std::string RenderDiffText(const DiffReport &report);
std::string RenderDiffJson(const DiffReport &report);

}  // namespace claudette

#endif  // CLAUDETTE_PUBLISHED_STATS_H_
