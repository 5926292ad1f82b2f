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

#ifndef CLAUDETTE_TEXT_H_
#define CLAUDETTE_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace claudette {

struct Sentence {
  std::size_t start = 0;  // byte offsets into the plain text
  std::size_t end = 0;
  std::string text;
  std::vector<std::string> tokens;
};

// Rule-based sentence splitter.
//
// Newlines always end a sentence. Otherwise a run of [.!?] (plus closing
// quotes/brackets) ends a sentence when followed by whitespace and then an
// uppercase letter, a digit or an opening quote, unless the word carrying the
// punctuation is a known abbreviation. Sentence bounds are trimmed of
// whitespace; the gaps between sentences are whitespace only.
std::vector<Sentence> SegmentSentences(std::string_view plain);

// Lowercase (when requested) tokens split at whitespace and at every
// word/punctuation boundary. Each punctuation mark is its own token. Bytes of
// non-ASCII letters stay inside words; U+2000..U+206F punctuation is split.
std::vector<std::string> Tokenize(std::string_view text, bool lowercase = true);

// Bundled abbreviation list, lowercase, with trailing period ("e.g.").
std::span<const std::string_view> Abbreviations();

bool IsAbbreviation(std::string_view word);

}  // namespace claudette

#endif  // CLAUDETTE_TEXT_H_
