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

#ifndef CLAUDETTE_TAG_PARSER_H_
#define CLAUDETTE_TAG_PARSER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "claudette/categories.h"

namespace claudette {

// A tagged region of the plain (tag-stripped) text, as byte offsets [start, end).
struct TagSpan {
  ClauseCategory category;
  FairnessLevel level;
  std::size_t start = 0;
  std::size_t end = 0;

  ClauseLabel label() const { return {category, level}; }
  bool operator==(const TagSpan &) const = default;
};

struct TaggedText {
  std::string plain;
  std::vector<TagSpan> spans;  // in opening-tag order
};

struct TagParseOptions {
  // Accept an opening tag of the innermost open (category, level) as its
  // closer, e.g. "<ltd3>...<ltd3>".
  bool lenient = false;
};

// Strips <SYMLVL>...</SYMLVL> markup and returns the spans it delimited.
//
// Anything of the shape "<" ["/"] letters [digits] ">" (whitespace allowed
// inside the brackets) is treated as a tag and must belong to the grammar;
// any other '<' is ordinary text. Throws ParseError with kUnknownTag,
// kUnbalancedTag, kCrossedNesting or kEmptyTag; line and column refer to the
// raw input.
TaggedText ParseTaggedText(std::string_view raw,
                           const TagParseOptions &options = {});

// Inverse of ParseTaggedText for canonical input (no whitespace inside tag
// brackets, properly nested spans).
std::string RenderTaggedText(std::string_view plain,
                             const std::vector<TagSpan> &spans);

}  // namespace claudette

#endif  // CLAUDETTE_TAG_PARSER_H_
