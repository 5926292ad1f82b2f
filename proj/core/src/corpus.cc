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

#include "claudette/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "claudette/error.h"

namespace claudette {
namespace {

bool IsWhitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::uint32_t LabeledSentence::PositiveCategoryMask(PositivePolicy policy) const {
  std::uint32_t mask = 0;
  for (const ClauseLabel &label : labels) {
    if (IsPositiveLevel(label.level, policy)) {
      mask |= 1u << CategoryIndex(label.category);
    }
  }
  return mask;
}

Corpus::Corpus(std::vector<Document> documents, PositivePolicy policy)
    : documents_(std::move(documents)), policy_(policy) {
  std::set<std::string> names;
  for (const Document &doc : documents_) {
    if (!names.insert(doc.name).second) {
      throw Error(ErrorKind::kBadConfig, "duplicate document name: " + doc.name);
    }
    num_sentences_ += doc.sentences.size();
  }
}

std::size_t Corpus::Find(std::string_view name) const {
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].name == name) return i;
  }
  return npos;
}

std::vector<LabeledSentence> ProjectLabels(const std::vector<TagSpan> &spans,
                                           std::vector<Sentence> sentences,
                                           PositivePolicy policy) {
  std::vector<LabeledSentence> out;
  out.reserve(sentences.size());
  for (Sentence &sentence : sentences) {
    LabeledSentence labeled;
    for (const TagSpan &span : spans) {
      std::size_t lo = std::max(span.start, sentence.start);
      std::size_t hi = std::min(span.end, sentence.end);
      if (lo >= hi) continue;
      std::string_view overlap =
          std::string_view(sentence.text).substr(lo - sentence.start, hi - lo);
      if (std::any_of(overlap.begin(), overlap.end(),
                      [](char c) { return !IsWhitespace(c); })) {
        labeled.labels.insert(span.label());
      }
    }
    labeled.detection_label =
        std::any_of(labeled.labels.begin(), labeled.labels.end(),
                    [&](const ClauseLabel &l) { return IsPositiveLevel(l.level, policy); });
    labeled.sentence = std::move(sentence);
    out.push_back(std::move(labeled));
  }
  return out;
}

Document BuildDocument(std::string name, std::string_view raw,
                       const CorpusOptions &options) {
  TaggedText tagged = ParseTaggedText(raw, options.tags);
  Document doc;
  doc.name = std::move(name);
  doc.sentences = ProjectLabels(tagged.spans, SegmentSentences(tagged.plain),
                                options.positive);
  doc.spans = std::move(tagged.spans);
  doc.plain = std::move(tagged.plain);
  return doc;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Corpus LoadCorpus(const std::filesystem::path &directory,
                  const CorpusOptions &options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorKind::kIo, "not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const fs::directory_entry &entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorKind::kEmptyCorpus,
                "no .txt documents in " + directory.string());
  }
  std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<Document> documents;
  documents.reserve(files.size());
  for (const fs::path &file : files) {
    try {
      documents.push_back(
          BuildDocument(file.stem().string(), ReadFile(file), options));
    } catch (const Error &e) {
      throw Error(e.kind(), file.filename().string() + ": " + e.what());
    }
  }
  return Corpus(std::move(documents), options.positive);
}

std::uint64_t Fingerprint(const std::vector<const Document *> &documents) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xFF;
    h *= 1099511628211ull;
  };
  for (const Document *doc : documents) {
    mix(doc->name);
    mix(doc->plain);
    for (const TagSpan &span : doc->spans) {
      mix(std::to_string(CategoryIndex(span.category)) + ":" +
          std::to_string(ToInt(span.level)) + ":" + std::to_string(span.start) +
          ":" + std::to_string(span.end));
    }
  }
  return h;
}

}  // namespace claudette
