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

#ifndef CLAUDETTE_FEATURES_H_
#define CLAUDETTE_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "claudette/corpus.h"
#include "claudette/parse_tree.h"

namespace claudette {

enum class TfMode { kRaw, kLog };

struct FeatureConfig {
  std::set<int> ngram_orders = {1, 2};
  bool use_pos = false;
  int min_df = 1;
  bool lowercase = true;
  TfMode tf = TfMode::kRaw;

  // Throws kBadConfig when an invariant is broken.
  void Validate() const;
  bool operator==(const FeatureConfig &) const = default;
};

// Sparse vector with strictly increasing indices and non-zero weights.
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  SparseVector() = default;
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double Dot(const SparseVector &other) const;
  double Dot(std::span<const double> dense) const;
  double SquaredNorm() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

// "w{n}:" prefixed windows joined by '_'. Duplicates are kept.
std::vector<std::string> ExtractNgrams(const std::vector<std::string> &tokens, int n);

// "p:"-prefixed preterminal labels, left to right.
std::vector<std::string> PosBag(const ParseTree &tree);

// All terms of one sentence under `config`. `tree` may be null unless
// config.use_pos is set (kMissingTree).
std::vector<std::string> ExtractTerms(const Sentence &sentence,
                                      const ParseTree *tree,
                                      const FeatureConfig &config);

class Vocabulary {
 public:
  Vocabulary() = default;

  // Terms must be sorted and unique; df aligned with terms.
  Vocabulary(std::vector<std::string> terms, std::vector<std::uint32_t> df,
             std::size_t n_fit);

  std::size_t size() const { return terms_.size(); }
  std::size_t n_fit() const { return n_fit_; }
  const std::vector<std::string> &terms() const { return terms_; }
  const std::vector<std::uint32_t> &df() const { return df_; }

  std::optional<std::uint32_t> Index(std::string_view term) const;

  // ln((1 + N_fit) / (1 + df)) + 1
  double Idf(std::uint32_t index) const;

  bool operator==(const Vocabulary &) const = default;

 private:
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> df_;
  std::size_t n_fit_ = 0;
};

// `trees` is either empty or aligned 1:1 with `sentences`.
Vocabulary BuildVocabulary(std::span<const LabeledSentence *const> sentences,
                           std::span<const ParseTree *const> trees,
                           const FeatureConfig &config);
Vocabulary BuildVocabulary(std::span<const LabeledSentence> sentences,
                           std::span<const ParseTree> trees,
                           const FeatureConfig &config);

// L2-normalized TF-IDF encoding; out-of-vocabulary terms are ignored.
SparseVector Vectorize(const Sentence &sentence, const ParseTree *tree,
                       const Vocabulary &vocab, const FeatureConfig &config);

}  // namespace claudette

#endif  // CLAUDETTE_FEATURES_H_
