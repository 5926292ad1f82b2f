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

#include "claudette/metrics.h"

#include <cstdio>

#include "claudette/error.h"
#include "json.hpp"

namespace claudette {

using Json = nlohmann::ordered_json;

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void Count(TargetMetrics *m, bool gold, bool pred) {
  if (gold && pred) ++m->tp;
  if (!gold && pred) ++m->fp;
  if (gold && !pred) ++m->fn;
}

Json TargetJson(const TargetMetrics &m) {
  return Json{{"tp", m.tp},           {"fp", m.fp},
              {"fn", m.fn},           {"precision", m.precision},
              {"recall", m.recall},   {"f1", m.f1},
              {"vacuous", m.vacuous}};
}

std::string Row(std::string_view name, const TargetMetrics &m) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-28.*s %6zu %6zu %6zu %9.4f %9.4f %9.4f%s\n",
                static_cast<int>(name.size()), name.data(), m.tp, m.fp, m.fn, m.precision,
                m.recall, m.f1, m.vacuous ? "  (vacuous)" : "");
  return buf;
}

}  // namespace

void TargetMetrics::Finalize() {
  precision = Ratio(tp, tp + fp);
  recall = Ratio(tp, tp + fn);
  f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  vacuous = tp + fp + fn == 0;
}

MetricsReport ComputeMetrics(std::span<const LabelSet> gold, std::span<const LabelSet> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "gold has " + std::to_string(gold.size()) + " labels, predictions " +
                    std::to_string(pred.size()));
  }
  MetricsReport report;
  report.sentences = gold.size();
  for (std::size_t i = 0; i < gold.size(); ++i) {
    Count(&report.detection, gold[i].positive, pred[i].positive);
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      const std::uint32_t bit = 1u << k;
      Count(&report.categories[k], gold[i].categories & bit, pred[i].categories & bit);
    }
  }
  report.detection.Finalize();
  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (TargetMetrics &m : report.categories) {
    m.Finalize();
    report.micro.tp += m.tp;
    report.micro.fp += m.fp;
    report.micro.fn += m.fn;
    if (m.vacuous) continue;
    ++report.macro_targets;
    sum_p += m.precision;
    sum_r += m.recall;
    sum_f += m.f1;
  }
  report.micro.Finalize();
  if (report.macro_targets > 0) {
    const double n = static_cast<double>(report.macro_targets);
    report.macro_precision = sum_p / n;
    report.macro_recall = sum_r / n;
    report.macro_f1 = sum_f / n;
  }
  return report;
}

std::string RenderMetricsText(const MetricsReport &report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "Sentences: %zu\n", report.sentences);
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-28s %6s %6s %6s %9s %9s %9s\n", "Target", "TP", "FP",
                "FN", "Precision", "Recall", "F1");
  out += buf;
  if (report.has_detection) out += Row("Detection", report.detection);
  if (report.has_categories) {
    for (ClauseCategory c : kAllCategories) {
      out += Row(CategoryName(c), report.categories[CategoryIndex(c)]);
    }
    out += Row("Micro average", report.micro);
    std::snprintf(buf, sizeof(buf), "%-28s %6s %6s %6s %9.4f %9.4f %9.4f  (%zu categories)\n",
                  "Macro average", "", "", "", report.macro_precision, report.macro_recall,
                  report.macro_f1, report.macro_targets);
    out += buf;
  }
  for (const std::string &w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string RenderMetricsJson(const MetricsReport &report) {
  Json j;
  j["sentences"] = report.sentences;
  if (report.has_detection) j["detection"] = TargetJson(report.detection);
  if (report.has_categories) {
    Json cats;
    for (ClauseCategory c : kAllCategories) {
      cats[std::string(CategoryKey(c))] = TargetJson(report.categories[CategoryIndex(c)]);
    }
    j["categories"] = std::move(cats);
    j["micro"] = TargetJson(report.micro);
    j["macro"] = {{"precision", report.macro_precision},
                  {"recall", report.macro_recall},
                  {"f1", report.macro_f1},
                  {"categories", report.macro_targets}};
  }
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

}  // namespace claudette
