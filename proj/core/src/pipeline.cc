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

#include "claudette/pipeline.h"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>

#include "claudette/error.h"

namespace claudette {

namespace {

constexpr char kNoTreesWarning[] =
    "no parse trees supplied; kernel-sstk model used its bag-of-words fallback";

struct TrainingSet {
  std::vector<const LabeledSentence *> sentences;
  std::vector<const ParseTree *> trees;  // empty unless trees are needed
  std::vector<std::size_t> document_offsets;  // size documents + 1
};

TrainingSet Collect(std::span<const Document *const> documents, const TreeBank *trees,
                    bool need_trees) {
  TrainingSet set;
  set.document_offsets.push_back(0);
  for (const Document *doc : documents) {
    const std::vector<ParseTree> *doc_trees = nullptr;
    if (need_trees) {
      doc_trees = trees ? trees->Find(doc->name) : nullptr;
      if (doc_trees == nullptr) {
        throw Error(ErrorKind::kMissingTree, "no parse trees for document " + doc->name);
      }
      if (doc_trees->size() != doc->sentences.size()) {
        throw Error(ErrorKind::kTreeBankMismatch,
                    "document " + doc->name + " has " + std::to_string(doc->sentences.size()) +
                        " sentences but " + std::to_string(doc_trees->size()) + " trees");
      }
    }
    for (std::size_t i = 0; i < doc->sentences.size(); ++i) {
      set.sentences.push_back(&doc->sentences[i]);
      if (need_trees) set.trees.push_back(&(*doc_trees)[i]);
    }
    set.document_offsets.push_back(set.sentences.size());
  }
  if (set.sentences.empty()) throw Error(ErrorKind::kEmptyData, "no training sentences");
  return set;
}

std::vector<SparseVector> VectorizeAll(const TrainingSet &set, const Vocabulary &vocab,
                                       const FeatureConfig &features) {
  std::vector<SparseVector> x;
  x.reserve(set.sentences.size());
  for (std::size_t i = 0; i < set.sentences.size(); ++i) {
    const ParseTree *tree = features.use_pos ? set.trees[i] : nullptr;
    x.push_back(Vectorize(set.sentences[i]->sentence, tree, vocab, features));
  }
  return x;
}

void NoteLinear(const LinearModel &model, const std::string &what,
                std::vector<std::string> *warnings) {
  if (!model.warning.empty()) warnings->push_back(what + ": " + model.warning);
  if (!model.converged) {
    warnings->push_back(what + ": solver stopped at the iteration cap (max violation " +
                        std::to_string(model.max_violation) + ")");
  }
}

KernelPayload TrainKernelPayload(const TrainingSet &set, std::span<const int> y,
                                 std::span<const SparseVector> x, const ToolkitConfig &config,
                                 std::vector<std::string> *warnings) {
  KernelPayload payload;
  payload.fallback = TrainLinear(x, y, config.train);
  NoteLinear(payload.fallback, "fallback", warnings);

  bool has_pos = std::any_of(y.begin(), y.end(), [](int v) { return v > 0; });
  bool has_neg = std::any_of(y.begin(), y.end(), [](int v) { return v <= 0; });
  payload.model.lambda = config.lambda;
  payload.model.normalized = config.normalize_kernel;
  if (!has_pos || !has_neg) {
    payload.model.bias = has_pos ? 1.0 : -1.0;
    payload.model.diagnostics.converged = true;
    payload.warning = std::string("SingleClass: training data has only ") +
                      (has_pos ? "positive" : "negative") + " examples";
    warnings->push_back("kernel: " + payload.warning);
    return payload;
  }

  std::vector<ParseTree> trees;
  trees.reserve(set.trees.size());
  for (const ParseTree *t : set.trees) trees.push_back(*t);
  KernelGram gram = GramMatrix(trees, config.lambda, config.normalize_kernel);
  payload.model = TrainSmo(gram, y, config.train);
  if (!payload.model.diagnostics.converged) {
    warnings->push_back("kernel: SMO stopped at the iteration cap (max violation " +
                        std::to_string(payload.model.diagnostics.max_violation) + ")");
  }
  for (std::size_t idx : payload.model.support) payload.support_trees.push_back(trees[idx]);
  return payload;
}

}  // namespace

ModelFile TrainModel(ModelKind kind, std::span<const Document *const> documents,
                     const TreeBank *trees, const ToolkitConfig &config) {
  config.Validate();
  const bool need_trees = kind == ModelKind::kKernelSstk || config.features.use_pos;
  TrainingSet set = Collect(documents, trees, need_trees);

  ModelFile file;
  file.metadata.config = config;
  file.metadata.documents = documents.size();
  file.metadata.sentences = set.sentences.size();
  file.metadata.corpus_fingerprint =
      Fingerprint(std::vector<const Document *>(documents.begin(), documents.end()));
  std::vector<std::string> &warnings = file.metadata.warnings;

  file.vocabulary = BuildVocabulary(
      std::span<const LabeledSentence *const>(set.sentences),
      config.features.use_pos ? std::span<const ParseTree *const>(set.trees)
                              : std::span<const ParseTree *const>(),
      config.features);
  std::vector<SparseVector> x = VectorizeAll(set, file.vocabulary, config.features);

  std::vector<int> y(set.sentences.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = set.sentences[i]->detection_label ? 1 : -1;

  switch (kind) {
    case ModelKind::kLinearBow: {
      LinearPayload payload{TrainLinear(x, y, config.train)};
      NoteLinear(payload.model, "linear", &warnings);
      file.payload = std::move(payload);
      break;
    }
    case ModelKind::kKernelSstk:
      file.payload = TrainKernelPayload(set, y, x, config, &warnings);
      break;
    case ModelKind::kChain: {
      std::vector<SeqExample> examples;
      for (std::size_t d = 0; d + 1 < set.document_offsets.size(); ++d) {
        SeqExample ex;
        for (std::size_t i = set.document_offsets[d]; i < set.document_offsets[d + 1]; ++i) {
          ex.xs.push_back(x[i]);
          ex.ys.push_back(y[i] > 0 ? 1 : 0);
        }
        if (!ex.xs.empty()) examples.push_back(std::move(ex));
      }
      file.payload = ChainPayload{TrainChain(examples, 2, config.train).model};
      break;
    }
    case ModelKind::kCategoryOvr: {
      CategoryPayload payload;
      for (ClauseCategory c : kAllCategories) {
        const std::uint32_t bit = 1u << CategoryIndex(c);
        std::vector<int> yc(set.sentences.size());
        for (std::size_t i = 0; i < yc.size(); ++i) {
          yc[i] = (set.sentences[i]->PositiveCategoryMask(config.positive) & bit) ? 1 : -1;
        }
        LinearModel &m = payload.models[CategoryIndex(c)];
        m = TrainLinear(x, yc, config.train);
        NoteLinear(m, std::string(CategoryKey(c)), &warnings);
      }
      file.payload = std::move(payload);
      break;
    }
  }
  return file;
}

Predictor::Predictor(ModelFile model) : model_(std::move(model)) {
  if (const auto *kernel = std::get_if<KernelPayload>(&model_.payload)) {
    for (const ParseTree &t : kernel->support_trees) support_.emplace_back(t);
    if (kernel->model.normalized) {
      for (const PreparedTree &t : support_) {
        support_self_.push_back(Sstk(t, t, kernel->model.lambda));
      }
    }
  }
}

DocumentPrediction Predictor::Predict(std::span<const Sentence> sentences,
                                      const std::vector<ParseTree> *trees) const {
  const FeatureConfig &features = model_.features();
  if (trees != nullptr && trees->size() != sentences.size()) {
    throw Error(ErrorKind::kTreeBankMismatch,
                "document has " + std::to_string(sentences.size()) + " sentences but " +
                    std::to_string(trees->size()) + " trees");
  }
  if (features.use_pos && trees == nullptr) {
    throw Error(ErrorKind::kMissingTree, "model uses POS features but no trees were given");
  }

  DocumentPrediction out;
  out.sentences.resize(sentences.size());
  std::vector<SparseVector> x;
  x.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const ParseTree *tree = features.use_pos ? &(*trees)[i] : nullptr;
    x.push_back(Vectorize(sentences[i], tree, model_.vocabulary, features));
  }

  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearPayload>) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            out.sentences[i].score = PredictLinear(p.model, x[i]);
            out.sentences[i].flagged = out.sentences[i].score > 0.0;
          }
        } else if constexpr (std::is_same_v<T, KernelPayload>) {
          if (trees == nullptr) {
            if (!sentences.empty()) out.warnings.push_back(kNoTreesWarning);
            for (std::size_t i = 0; i < x.size(); ++i) {
              out.sentences[i].score = PredictLinear(p.fallback, x[i]);
              out.sentences[i].flagged = out.sentences[i].score > 0.0;
            }
            return;
          }
          std::span<const double> self =
              p.model.normalized ? std::span<const double>(support_self_)
                                 : std::span<const double>();
          for (std::size_t i = 0; i < x.size(); ++i) {
            PreparedTree query((*trees)[i]);
            std::vector<double> row = KernelRow(query, support_, self, p.model.lambda);
            out.sentences[i].score = PredictKernel(p.model, row);
            out.sentences[i].flagged = out.sentences[i].score > 0.0;
          }
        } else if constexpr (std::is_same_v<T, ChainPayload>) {
          if (x.empty()) return;
          Decoding decoded = Viterbi(p.model, x);
          for (std::size_t i = 0; i < x.size(); ++i) {
            out.sentences[i].score = x[i].Dot(p.model.emission(1)) - x[i].Dot(p.model.emission(0));
            out.sentences[i].flagged = decoded.labels[i] == 1;
          }
        } else {
          for (std::size_t i = 0; i < x.size(); ++i) {
            SentencePrediction &s = out.sentences[i];
            s.has_categories = true;
            s.score = -HUGE_VAL;
            for (ClauseCategory c : kAllCategories) {
              const std::size_t k = CategoryIndex(c);
              s.category_scores[k] = PredictLinear(p.models[k], x[i]);
              if (s.category_scores[k] >= 0.0) s.categories |= 1u << k;
              s.score = std::max(s.score, s.category_scores[k]);
            }
            s.flagged = s.categories != 0;
          }
        }
      },
      model_.payload);
  return out;
}

}  // namespace claudette
