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

#include "claudette/html_report.h"

#include <cstdio>
#include <fstream>

#include "claudette/error.h"

namespace claudette {

namespace {

constexpr char kHead[] = R"(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Clause analysis</title>
<style>
body { font-family: Georgia, serif; margin: 2em auto; max-width: 52em; color: #222; }
.summary { font-family: sans-serif; font-size: 0.9em; color: #555; }
.document { white-space: pre-wrap; line-height: 1.5; }
mark.clause { background: #ffd9a8; border-bottom: 2px solid #d9822b; }
</style>
</head>
<body>
)";

}  // namespace

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string RenderHtmlReport(const AnalysisResult &result) {
  std::string out = kHead;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "<p class=\"summary\">Model %s: %zu of %zu sentences flagged.</p>\n",
                result.model_kind.c_str(), result.num_flagged(), result.sentences.size());
  out += buf;
  for (const std::string &w : result.warnings) {
    out += "<p class=\"summary\">Warning: " + EscapeHtml(w) + "</p>\n";
  }
  out += "<div class=\"document\">";
  const std::string_view doc = result.document;
  std::size_t cursor = 0;
  for (const AnalyzedSentence &s : result.sentences) {
    if (!s.flagged) continue;
    out += EscapeHtml(doc.substr(cursor, s.start - cursor));
    std::string names;
    for (ClauseCategory c : s.categories) {
      if (!names.empty()) names += ' ';
      names += CategoryKey(c);
    }
    std::snprintf(buf, sizeof(buf), "%.6f", s.score);
    out += "<mark class=\"clause\" data-categories=\"" + EscapeHtml(names) +
           "\" data-score=\"" + buf + "\">";
    out += EscapeHtml(doc.substr(s.start, s.end - s.start));
    out += "</mark>";
    cursor = s.end;
  }
  out += EscapeHtml(doc.substr(cursor));
  out += "</div>\n</body>\n</html>\n";
  return out;
}

void WriteHtmlReport(const AnalysisResult &result, const std::filesystem::path &out) {
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, "cannot write " + out.string());
  file << RenderHtmlReport(result);
  if (!file) throw Error(ErrorKind::kIo, "failed writing " + out.string());
}

}  // namespace claudette
