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

#include "claudette/tag_parser.h"

#include <algorithm>
#include <cctype>
#include <optional>

#include "claudette/error.h"

namespace claudette {
namespace {

struct RawPosition {
  int line = 1;
  int column = 1;
};

RawPosition PositionOf(std::string_view raw, std::size_t offset) {
  RawPosition pos;
  for (std::size_t i = 0; i < offset && i < raw.size(); ++i) {
    if (raw[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void Fail(ErrorKind kind, const std::string &message,
                       std::string_view raw, std::size_t offset) {
  RawPosition pos = PositionOf(raw, offset);
  throw ParseError(kind, message, pos.line, pos.column);
}

bool IsBlank(char c) { return c == ' ' || c == '\t'; }

struct RawTag {
  bool closing = false;
  std::string_view letters;
  std::string_view digits;
  std::size_t length = 0;  // bytes consumed, including brackets
};

// Recognizes "<" [ws] ["/"] [ws] letters digits [ws] ">" at raw[pos].
std::optional<RawTag> MatchTag(std::string_view raw, std::size_t pos) {
  std::size_t i = pos + 1;
  auto skip_blank = [&] {
    while (i < raw.size() && IsBlank(raw[i])) ++i;
  };
  RawTag tag;
  skip_blank();
  if (i < raw.size() && raw[i] == '/') {
    tag.closing = true;
    ++i;
    skip_blank();
  }
  std::size_t letters_begin = i;
  while (i < raw.size() && std::isalpha(static_cast<unsigned char>(raw[i]))) ++i;
  if (i == letters_begin) return std::nullopt;
  tag.letters = raw.substr(letters_begin, i - letters_begin);
  std::size_t digits_begin = i;
  while (i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i]))) ++i;
  tag.digits = raw.substr(digits_begin, i - digits_begin);
  skip_blank();
  if (i >= raw.size() || raw[i] != '>') return std::nullopt;
  tag.length = i + 1 - pos;
  return tag;
}

struct OpenTag {
  std::size_t span_index;
  std::size_t raw_offset;
};

}  // namespace

TaggedText ParseTaggedText(std::string_view raw,
                           const TagParseOptions &options) {
  TaggedText out;
  out.plain.reserve(raw.size());
  std::vector<OpenTag> stack;

  auto close_top = [&](std::size_t raw_offset) {
    TagSpan &span = out.spans[stack.back().span_index];
    span.end = out.plain.size();
    if (span.end == span.start) {
      Fail(ErrorKind::kEmptyTag,
           "empty <" + std::string(TagSymbol(span.category)) +
               std::to_string(ToInt(span.level)) + "> element",
           raw, raw_offset);
    }
    stack.pop_back();
  };

  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      out.plain.push_back(raw[i]);
      ++i;
      continue;
    }
    std::optional<RawTag> tag = MatchTag(raw, i);
    if (!tag) {
      out.plain.push_back(raw[i]);
      ++i;
      continue;
    }
    std::optional<ClauseCategory> category = CategoryFromSymbol(tag->letters);
    std::optional<FairnessLevel> level;
    if (tag->digits.size() == 1) level = FairnessLevelFromInt(tag->digits[0] - '0');
    if (!category || !level) {
      Fail(ErrorKind::kUnknownTag,
           "unknown tag <" + std::string(tag->closing ? "/" : "") +
               std::string(tag->letters) + std::string(tag->digits) + ">",
           raw, i);
    }
    const ClauseLabel label{*category, *level};
    auto open_it = std::find_if(stack.rbegin(), stack.rend(), [&](const OpenTag &o) {
      return out.spans[o.span_index].label() == label;
    });

    if (!tag->closing) {
      if (open_it != stack.rend()) {
        if (options.lenient && open_it == stack.rbegin()) {
          close_top(i);
          i += tag->length;
          continue;
        }
        Fail(ErrorKind::kUnbalancedTag,
             "tag <" + std::string(tag->letters) + std::string(tag->digits) +
                 "> reopened while still open",
             raw, i);
      }
      out.spans.push_back({label.category, label.level, out.plain.size(),
                           out.plain.size()});
      stack.push_back({out.spans.size() - 1, i});
    } else {
      if (open_it == stack.rend()) {
        Fail(ErrorKind::kUnbalancedTag,
             "closing tag </" + std::string(tag->letters) +
                 std::string(tag->digits) + "> without matching open tag",
             raw, i);
      }
      if (open_it != stack.rbegin()) {
        Fail(ErrorKind::kCrossedNesting,
             "closing tag </" + std::string(tag->letters) +
                 std::string(tag->digits) + "> crosses an inner open tag",
             raw, i);
      }
      close_top(i);
    }
    i += tag->length;
  }

  if (!stack.empty()) {
    const TagSpan &span = out.spans[stack.back().span_index];
    Fail(ErrorKind::kUnbalancedTag,
         "tag <" + std::string(TagSymbol(span.category)) +
             std::to_string(ToInt(span.level)) + "> never closed",
         raw, stack.back().raw_offset);
  }
  return out;
}

std::string RenderTaggedText(std::string_view plain,
                             const std::vector<TagSpan> &spans) {
  auto tag_text = [](const TagSpan &s, bool closing) {
    return std::string(closing ? "</" : "<") + std::string(TagSymbol(s.category)) +
           std::to_string(ToInt(s.level)) + ">";
  };
  std::string out;
  out.reserve(plain.size() + spans.size() * 12);
  for (std::size_t pos = 0; pos <= plain.size(); ++pos) {
    // Close inner (later-opened) spans first.
    for (std::size_t k = spans.size(); k-- > 0;) {
      if (spans[k].end == pos && spans[k].start < pos) out += tag_text(spans[k], true);
    }
    for (const TagSpan &s : spans) {
      if (s.start == pos && s.end > pos) out += tag_text(s, false);
    }
    if (pos < plain.size()) out.push_back(plain[pos]);
  }
  return out;
}

}  // namespace claudette
