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

#ifndef CLAUDETTE_CORPUS_H_
#define CLAUDETTE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "claudette/categories.h"
#include "claudette/tag_parser.h"
#include "claudette/text.h"

namespace claudette {

struct LabeledSentence {
  Sentence sentence;
  std::set<ClauseLabel> labels;
  bool detection_label = false;

  // Categories carried at a positive fairness level, as a bitmask over
  // CategoryIndex().
  std::uint32_t PositiveCategoryMask(PositivePolicy policy) const;
};

struct Document {
  std::string name;
  std::string plain;
  std::vector<LabeledSentence> sentences;
  std::vector<TagSpan> spans;
};

struct CorpusOptions {
  TagParseOptions tags;
  PositivePolicy positive = PositivePolicy::kLevels2And3;
};

class Corpus {
 public:
  Corpus() = default;
  Corpus(std::vector<Document> documents, PositivePolicy policy);

  const std::vector<Document> &documents() const { return documents_; }
  const Document &document(std::size_t i) const { return documents_[i]; }
  std::size_t num_documents() const { return documents_.size(); }
  std::size_t num_sentences() const { return num_sentences_; }
  PositivePolicy policy() const { return policy_; }

  // Index of the named document, or npos.
  std::size_t Find(std::string_view name) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Document> documents_;
  std::size_t num_sentences_ = 0;
  PositivePolicy policy_ = PositivePolicy::kLevels2And3;
};

// A sentence gets label (c, l) when it shares at least one non-whitespace
// byte with a span of that label.
std::vector<LabeledSentence> ProjectLabels(
    const std::vector<TagSpan> &spans, std::vector<Sentence> sentences,
    PositivePolicy policy = PositivePolicy::kLevels2And3);

// Parse, segment, tokenize and project a single tagged document.
Document BuildDocument(std::string name, std::string_view raw,
                       const CorpusOptions &options = {});

// Loads every *.txt file in `directory`, ordered by filename. Document names
// are the file stems. Parse errors are rethrown prefixed with the filename.
Corpus LoadCorpus(const std::filesystem::path &directory,
                  const CorpusOptions &options = {});

// Order-sensitive 64-bit FNV-1a digest of document names, text and spans.
std::uint64_t Fingerprint(const std::vector<const Document *> &documents);

std::string ReadFile(const std::filesystem::path &path);

}  // namespace claudette

#endif  // CLAUDETTE_CORPUS_H_
