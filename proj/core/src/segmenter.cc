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

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "claudette/text.h"

namespace claudette {
namespace {

constexpr std::array<std::string_view, 72> kAbbreviations = {
    "a.m.",  "al.",    "approx.", "apr.",  "art.",   "aug.",  "b.v.",   "ca.",
    "cf.",   "co.",    "corp.",   "dec.",  "dept.",  "dr.",   "e.g.",   "e.u.",
    "ed.",   "eds.",   "esp.",    "est.",  "etc.",   "feb.",  "fig.",   "gmbh.",
    "gov.",  "i.e.",   "inc.",    "incl.", "jan.",   "jr.",   "jul.",   "jun.",
    "llc.",  "ltd.",   "mar.",    "max.",  "min.",   "misc.", "mr.",    "mrs.",
    "ms.",   "n.v.",   "no.",     "nos.",  "nov.",   "oct.",  "p.",     "p.m.",
    "para.", "plc.",   "pp.",     "prof.", "ref.",   "resp.", "s.a.",   "sec.",
    "sept.", "sep.",   "sr.",     "st.",   "tel.",   "u.k.",  "u.s.",   "u.s.a.",
    "v.",    "viz.",   "vol.",    "vs.",   "w.r.t.", "ag.",   "nr.",    "op.",
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Length in bytes of a closing quote/bracket at text[i], or 0.
std::size_t CloserLength(std::string_view text, std::size_t i) {
  char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  // U+201D right double quote, U+2019 right single quote.
  if (text.substr(i, 3) == "\xE2\x80\x9D" || text.substr(i, 3) == "\xE2\x80\x99") {
    return 3;
  }
  return 0;
}

bool StartsSentence(std::string_view text, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (std::isupper(c) || std::isdigit(c) || c == '"' || c == '\'') return true;
  // U+201C left double quote, U+2018 left single quote.
  return text.substr(i, 3) == "\xE2\x80\x9C" || text.substr(i, 3) == "\xE2\x80\x98";
}

// The whitespace-delimited word ending at `last` (inclusive), lowercased and
// stripped of leading quotes and brackets.
std::string WordEndingAt(std::string_view text, std::size_t last,
                         std::size_t floor) {
  std::size_t begin = last + 1;
  while (begin > floor && !IsSpace(text[begin - 1]) && text[begin - 1] != '\n') {
    --begin;
  }
  while (begin <= last && (text[begin] == '(' || text[begin] == '"' ||
                           text[begin] == '\'' || text[begin] == '[')) {
    ++begin;
  }
  std::string word(text.substr(begin, last + 1 - begin));
  for (char &c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return word;
}

}  // namespace

std::span<const std::string_view> Abbreviations() { return kAbbreviations; }

bool IsAbbreviation(std::string_view word) {
  std::string lower(word);
  for (char &c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

std::vector<Sentence> SegmentSentences(std::string_view plain) {
  std::vector<Sentence> out;
  const std::size_t n = plain.size();
  std::size_t begin = std::string_view::npos;  // first byte of open sentence

  auto emit = [&](std::size_t end) {
    if (begin == std::string_view::npos) return;
    while (end > begin && (IsSpace(plain[end - 1]) || plain[end - 1] == '\n')) --end;
    if (end > begin) {
      Sentence s;
      s.start = begin;
      s.end = end;
      s.text = std::string(plain.substr(begin, end - begin));
      s.tokens = Tokenize(s.text);
      out.push_back(std::move(s));
    }
    begin = std::string_view::npos;
  };

  std::size_t i = 0;
  while (i < n) {
    char c = plain[i];
    if (c == '\n') {
      emit(i);
      ++i;
      continue;
    }
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (begin == std::string_view::npos) begin = i;
    if (!IsTerminal(c)) {
      ++i;
      continue;
    }
    std::size_t last_punct = i;
    std::size_t j = i + 1;
    while (j < n && IsTerminal(plain[j])) last_punct = j++;
    while (j < n) {
      std::size_t len = CloserLength(plain, j);
      if (len == 0) break;
      j += len;
    }
    if (j >= n) {
      emit(n);
      break;
    }
    if (!IsSpace(plain[j]) && plain[j] != '\n') {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < n && IsSpace(plain[k])) ++k;
    bool boundary = k >= n || plain[k] == '\n' || StartsSentence(plain, k);
    if (boundary && plain[last_punct] == '.' &&
        IsAbbreviation(WordEndingAt(plain, last_punct, begin))) {
      boundary = false;
    }
    if (boundary) emit(j);
    i = j;
  }
  emit(n);
  return out;
}

namespace {

enum class CharClass { kSpace, kPunct, kWord };

// Decodes one UTF-8 code point at text[i]; returns its byte length.
std::size_t DecodeAt(std::string_view text, std::size_t i, char32_t *cp) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  std::size_t len = 1;
  char32_t value = c;
  if (c >= 0xF0) {
    len = 4;
    value = c & 0x07;
  } else if (c >= 0xE0) {
    len = 3;
    value = c & 0x0F;
  } else if (c >= 0xC0) {
    len = 2;
    value = c & 0x1F;
  }
  if (i + len > text.size()) len = 1;
  if (len == 1) {
    *cp = c;
    return 1;
  }
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char cc = static_cast<unsigned char>(text[i + k]);
    if ((cc & 0xC0) != 0x80) {
      *cp = c;
      return 1;
    }
    value = (value << 6) | (cc & 0x3F);
  }
  *cp = value;
  return len;
}

CharClass Classify(char32_t cp) {
  if (cp < 0x80) {
    if (std::isspace(static_cast<int>(cp))) return CharClass::kSpace;
    if (std::isalnum(static_cast<int>(cp))) return CharClass::kWord;
    if (cp < 0x20 || cp == 0x7F) return CharClass::kSpace;
    return CharClass::kPunct;
  }
  if (cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x3000) {
    return CharClass::kSpace;
  }
  if ((cp >= 0xA1 && cp <= 0xBF && cp != 0xAA && cp != 0xBA) || cp == 0xD7 ||
      cp == 0xF7 || (cp >= 0x2010 && cp <= 0x206F)) {
    return CharClass::kPunct;
  }
  return CharClass::kWord;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text, bool lowercase) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp;
    std::size_t len = DecodeAt(text, i, &cp);
    switch (Classify(cp)) {
      case CharClass::kSpace:
        flush();
        break;
      case CharClass::kPunct:
        flush();
        tokens.emplace_back(text.substr(i, len));
        break;
      case CharClass::kWord:
        if (len == 1 && lowercase) {
          word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
        } else {
          word.append(text.substr(i, len));
        }
        break;
    }
    i += len;
  }
  flush();
  return tokens;
}

}  // namespace claudette
