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

#include "claudette/evaluation.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "claudette/error.h"
#include "claudette/pipeline.h"

namespace claudette {

namespace {

struct FoldOutcome {
  std::vector<LabelSet> predicted;
  std::vector<std::string> warnings;
  std::exception_ptr error;
};

FoldOutcome RunFold(const Corpus &corpus, const FoldSplit &split, ModelKind kind,
                    const ToolkitConfig &config, const TreeBank *trees) {
  FoldOutcome outcome;
  ModelFile model = TrainFoldModel(corpus, split, kind, config, trees);
  for (const std::string &w : model.metadata.warnings) {
    outcome.warnings.push_back("fold " + split.held_out + ": " + w);
  }
  const Document &doc = corpus.document(corpus.Find(split.held_out));
  std::vector<Sentence> sentences;
  sentences.reserve(doc.sentences.size());
  for (const LabeledSentence &s : doc.sentences) sentences.push_back(s.sentence);

  const bool need_trees = kind == ModelKind::kKernelSstk || config.features.use_pos;
  const std::vector<ParseTree> *doc_trees = need_trees && trees ? trees->Find(doc.name) : nullptr;
  if (need_trees && doc_trees == nullptr) {
    throw Error(ErrorKind::kMissingTree, "no parse trees for document " + doc.name);
  }

  Predictor predictor(std::move(model));
  DocumentPrediction prediction = predictor.Predict(sentences, doc_trees);
  for (const std::string &w : prediction.warnings) {
    outcome.warnings.push_back("fold " + split.held_out + ": " + w);
  }
  for (const SentencePrediction &p : prediction.sentences) {
    outcome.predicted.push_back({p.flagged, p.categories});
  }
  return outcome;
}

MetricsReport RunEval(const Corpus &corpus, ModelKind kind, const ToolkitConfig &config,
                      const TreeBank *trees) {
  std::vector<FoldSplit> splits = MakeLooSplits(corpus);
  std::vector<FoldOutcome> outcomes(splits.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= splits.size()) return;
      try {
        outcomes[i] = RunFold(corpus, splits[i], kind, config, trees);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    }
  };
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, splits.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread &t : pool) t.join();

  std::vector<LabelSet> gold;
  std::vector<LabelSet> predicted;
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (outcomes[i].error) std::rethrow_exception(outcomes[i].error);
    const Document &doc = corpus.document(corpus.Find(splits[i].held_out));
    std::vector<LabelSet> g = GoldLabels(doc, config.positive);
    gold.insert(gold.end(), g.begin(), g.end());
    predicted.insert(predicted.end(), outcomes[i].predicted.begin(),
                     outcomes[i].predicted.end());
    warnings.insert(warnings.end(), outcomes[i].warnings.begin(), outcomes[i].warnings.end());
  }
  MetricsReport report = ComputeMetrics(gold, predicted);
  report.warnings = std::move(warnings);
  return report;
}

}  // namespace

std::vector<FoldSplit> MakeLooSplits(const Corpus &corpus) {
  if (corpus.num_documents() < 2) {
    throw Error(ErrorKind::kTooFewDocuments,
                "leave-one-out evaluation needs at least 2 documents, got " +
                    std::to_string(corpus.num_documents()));
  }
  std::vector<FoldSplit> splits;
  for (const Document &held : corpus.documents()) {
    FoldSplit split;
    split.held_out = held.name;
    for (const Document &doc : corpus.documents()) {
      if (doc.name != held.name) split.train.push_back(doc.name);
    }
    splits.push_back(std::move(split));
  }
  return splits;
}

std::vector<LabelSet> GoldLabels(const Document &document, PositivePolicy policy) {
  std::vector<LabelSet> out;
  out.reserve(document.sentences.size());
  for (const LabeledSentence &s : document.sentences) {
    out.push_back({s.detection_label, s.PositiveCategoryMask(policy)});
  }
  return out;
}

ModelFile TrainFoldModel(const Corpus &corpus, const FoldSplit &split, ModelKind kind,
                         const ToolkitConfig &config, const TreeBank *trees) {
  std::vector<const Document *> docs;
  for (const std::string &name : split.train) {
    std::size_t idx = corpus.Find(name);
    if (idx == Corpus::npos) throw Error(ErrorKind::kBadConfig, "unknown document " + name);
    docs.push_back(&corpus.document(idx));
  }
  return TrainModel(kind, docs, trees, config);
}

MetricsReport RunDetectionEval(const Corpus &corpus, ModelKind kind,
                               const ToolkitConfig &config, const TreeBank *trees) {
  MetricsReport report = RunEval(corpus, kind, config, trees);
  report.has_categories = false;
  return report;
}

MetricsReport RunCategoryEval(const Corpus &corpus, const ToolkitConfig &config,
                              const TreeBank *trees) {
  return RunEval(corpus, ModelKind::kCategoryOvr, config, trees);
}

}  // namespace claudette
