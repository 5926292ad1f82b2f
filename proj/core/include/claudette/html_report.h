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

#ifndef CLAUDETTE_HTML_REPORT_H_
#define CLAUDETTE_HTML_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "claudette/analysis.h"

namespace claudette {

std::string EscapeHtml(std::string_view text);

// Self-contained page showing result.document with every flagged sentence
// wrapped in <mark class="clause" data-categories=".." data-score="..">.
// All other text is reproduced verbatim, HTML-escaped.
std::string RenderHtmlReport(const AnalysisResult &result);

void WriteHtmlReport(const AnalysisResult &result, const std::filesystem::path &out);

}  // namespace claudette

#endif  // CLAUDETTE_HTML_REPORT_H_
