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

#include "claudette/published_stats.h"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace claudette {

using Json = nlohmann::ordered_json;

namespace {

std::string_view StatusName(DiffStatus s) {
  switch (s) {
    case DiffStatus::kPass:
      return "pass";
    case DiffStatus::kFail:
      return "fail";
    case DiffStatus::kNotComparable:
      return "not comparable";
  }
  return "not comparable";
}

}  // namespace

bool DiffReport::AllPass() const {
  if (!comparable) return false;
  for (const DiffEntry &e : entries) {
    if (e.status != DiffStatus::kPass) return false;
  }
  return true;
}

const ReferenceStats &PublishedCorpusStats() {
  static const ReferenceStats kStats = {
      {44, 188, 118, 68, 70, 296, 236, 117},
      {28, 49, 45, 40, 47, 49, 48, 48},
      50,
      12011,
      1032,
      0.086,
      3.3,
      16.2,
  };
  return kStats;
}

DiffReport CompareToPublishedStats(const StatsTable &stats) {
  const ReferenceStats &ref = PublishedCorpusStats();
  DiffReport report;
  report.comparable = stats.num_documents == ref.num_documents;

  auto add = [&](std::string name, double expected, double observed, std::string tolerance,
                 bool ok) {
    DiffStatus status = !report.comparable ? DiffStatus::kNotComparable
                        : ok               ? DiffStatus::kPass
                                           : DiffStatus::kFail;
    report.entries.push_back(
        {std::move(name), expected, observed, std::move(tolerance), status});
  };

  for (ClauseCategory c : kAllCategories) {
    const std::size_t k = CategoryIndex(c);
    add("clauses." + std::string(CategoryKey(c)), static_cast<double>(ref.clauses[k]),
        static_cast<double>(stats.categories[k].clauses), "exact",
        stats.categories[k].clauses == ref.clauses[k]);
  }
  for (ClauseCategory c : kAllCategories) {
    const std::size_t k = CategoryIndex(c);
    add("documents." + std::string(CategoryKey(c)), static_cast<double>(ref.documents[k]),
        static_cast<double>(stats.categories[k].documents), "exact",
        stats.categories[k].documents == ref.documents[k]);
  }
  add("documents", static_cast<double>(ref.num_documents),
      static_cast<double>(stats.num_documents), "exact",
      stats.num_documents == ref.num_documents);

  const double sentences = static_cast<double>(stats.total_sentences);
  const double ref_sentences = static_cast<double>(ref.sentences);
  add("sentences", ref_sentences, sentences, "within 3%",
      std::abs(sentences - ref_sentences) <= 0.03 * ref_sentences);

  const bool fraction_ok = std::abs(stats.positive_fraction - ref.positive_fraction) <= 0.01;
  add("positive_sentences", static_cast<double>(ref.positives),
      static_cast<double>(stats.positive_sentences), "via positive_fraction", fraction_ok);
  add("positive_fraction", ref.positive_fraction, stats.positive_fraction,
      "within 1 percentage point", fraction_ok);
  add("min_document_rate", ref.min_document_rate, stats.min_document_rate, "at most 4.5%",
      stats.min_document_rate <= 4.5);
  add("max_document_rate", ref.max_document_rate, stats.max_document_rate, "at least 14%",
      stats.max_document_rate >= 14.0);
  return report;
}

std::string RenderDiffText(const DiffReport &report) {
  std::string out = report.comparable
                        ? "Comparison with published corpus statistics:\n"
                        : "Comparison with published corpus statistics: not comparable "
                          "(reference applies to the 50-document corpus)\n";
  char buf[200];
  std::snprintf(buf, sizeof(buf), "%-36s %10s %10s %10s  %-28s %s\n", "Entry", "Expected",
                "Observed", "Delta", "Tolerance", "Status");
  out += buf;
  for (const DiffEntry &e : report.entries) {
    std::snprintf(buf, sizeof(buf), "%-36s %10.4g %10.4g %+10.4g  %-28s %s\n", e.name.c_str(),
                  e.expected, e.observed, e.observed - e.expected, e.tolerance.c_str(),
                  std::string(StatusName(e.status)).c_str());
    out += buf;
  }
  return out;
}

std::string RenderDiffJson(const DiffReport &report) {
  Json entries = Json::array();
  for (const DiffEntry &e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"expected", e.expected},
                       {"observed", e.observed},
                       {"delta", e.observed - e.expected},
                       {"tolerance", e.tolerance},
                       {"status", StatusName(e.status)}});
  }
  Json j{{"comparable", report.comparable},
         {"all_pass", report.AllPass()},
         {"entries", std::move(entries)}};
  return j.dump(2) + "\n";
}

}  // namespace claudette
