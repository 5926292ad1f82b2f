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

#include "claudette/features.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "claudette/error.h"

namespace claudette {

void FeatureConfig::Validate() const {
  if (ngram_orders.empty()) throw Error(ErrorKind::kBadConfig, "ngram_orders is empty");
  if (*ngram_orders.begin() < 1) throw Error(ErrorKind::kBadConfig, "ngram order < 1");
  if (min_df < 1) throw Error(ErrorKind::kBadConfig, "min_df < 1");
}

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].first >= dim_ || (k > 0 && entries_[k].first <= entries_[k - 1].first)) {
      throw Error(ErrorKind::kDimensionMismatch, "sparse entries not increasing or out of range");
    }
  }
}

double SparseVector::Dot(const SparseVector &other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double SparseVector::Dot(std::span<const double> dense) const {
  double sum = 0.0;
  for (const auto &[index, weight] : entries_) {
    if (index < dense.size()) sum += weight * dense[index];
  }
  return sum;
}

double SparseVector::SquaredNorm() const {
  double sum = 0.0;
  for (const auto &entry : entries_) sum += entry.second * entry.second;
  return sum;
}

std::vector<std::string> ExtractNgrams(const std::vector<std::string> &tokens, int n) {
  std::vector<std::string> out;
  if (n < 1 || tokens.size() < static_cast<std::size_t>(n)) return out;
  const std::string prefix = "w" + std::to_string(n) + ":";
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string term = prefix + tokens[i];
    for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
      term += '_';
      term += tokens[i + k];
    }
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<std::string> PosBag(const ParseTree &tree) {
  std::vector<std::string> out;
  for (int id : tree.Preterminals()) out.push_back("p:" + tree.node(id).label);
  return out;
}

std::vector<std::string> ExtractTerms(const Sentence &sentence,
                                      const ParseTree *tree,
                                      const FeatureConfig &config) {
  std::vector<std::string> cased;
  const std::vector<std::string> *tokens = &sentence.tokens;
  if (!config.lowercase) {
    cased = Tokenize(sentence.text, false);
    tokens = &cased;
  }
  std::vector<std::string> terms;
  for (int n : config.ngram_orders) {
    for (std::string &t : ExtractNgrams(*tokens, n)) terms.push_back(std::move(t));
  }
  if (config.use_pos) {
    if (tree == nullptr) {
      throw Error(ErrorKind::kMissingTree, "POS features need a parse tree");
    }
    for (std::string &t : PosBag(*tree)) terms.push_back(std::move(t));
  }
  return terms;
}

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::uint32_t> df,
                       std::size_t n_fit)
    : terms_(std::move(terms)), df_(std::move(df)), n_fit_(n_fit) {
  if (terms_.size() != df_.size()) {
    throw Error(ErrorKind::kBadModel, "vocabulary terms/df length mismatch");
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!(terms_[i - 1] < terms_[i])) {
      throw Error(ErrorKind::kBadModel, "vocabulary terms not sorted and unique");
    }
  }
}

std::optional<std::uint32_t> Vocabulary::Index(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                             [](const std::string &a, std::string_view b) { return a < b; });
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::uint32_t>(it - terms_.begin());
}

double Vocabulary::Idf(std::uint32_t index) const {
  return std::log((1.0 + static_cast<double>(n_fit_)) /
                  (1.0 + static_cast<double>(df_[index]))) +
         1.0;
}

Vocabulary BuildVocabulary(std::span<const LabeledSentence *const> sentences,
                           std::span<const ParseTree *const> trees,
                           const FeatureConfig &config) {
  config.Validate();
  if (config.use_pos && trees.size() != sentences.size()) {
    throw Error(ErrorKind::kMissingTree,
                "POS features need one tree per sentence (" +
                    std::to_string(trees.size()) + " trees for " +
                    std::to_string(sentences.size()) + " sentences)");
  }
  std::map<std::string, std::uint32_t> df;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const ParseTree *tree = trees.empty() ? nullptr : trees[i];
    std::vector<std::string> terms = ExtractTerms(sentences[i]->sentence, tree, config);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::string &t : terms) ++df[std::move(t)];
  }
  std::vector<std::string> kept;
  std::vector<std::uint32_t> kept_df;
  for (auto &[term, count] : df) {
    if (count >= static_cast<std::uint32_t>(config.min_df)) {
      kept.push_back(term);
      kept_df.push_back(count);
    }
  }
  return Vocabulary(std::move(kept), std::move(kept_df), sentences.size());
}

Vocabulary BuildVocabulary(std::span<const LabeledSentence> sentences,
                           std::span<const ParseTree> trees,
                           const FeatureConfig &config) {
  std::vector<const LabeledSentence *> s;
  for (const LabeledSentence &x : sentences) s.push_back(&x);
  std::vector<const ParseTree *> t;
  for (const ParseTree &x : trees) t.push_back(&x);
  return BuildVocabulary(std::span<const LabeledSentence *const>(s),
                         std::span<const ParseTree *const>(t), config);
}

SparseVector Vectorize(const Sentence &sentence, const ParseTree *tree,
                       const Vocabulary &vocab, const FeatureConfig &config) {
  std::map<std::uint32_t, int> counts;
  for (const std::string &term : ExtractTerms(sentence, tree, config)) {
    if (std::optional<std::uint32_t> index = vocab.Index(term)) ++counts[*index];
  }
  std::vector<SparseVector::Entry> entries;
  entries.reserve(counts.size());
  double norm2 = 0.0;
  for (const auto &[index, count] : counts) {
    double tf = config.tf == TfMode::kLog ? 1.0 + std::log(static_cast<double>(count))
                                          : static_cast<double>(count);
    double w = tf * vocab.Idf(index);
    entries.emplace_back(index, w);
    norm2 += w * w;
  }
  if (norm2 > 0.0) {
    double inv = 1.0 / std::sqrt(norm2);
    for (auto &entry : entries) entry.second *= inv;
  }
  return SparseVector(vocab.size(), std::move(entries));
}

}  // namespace claudette
