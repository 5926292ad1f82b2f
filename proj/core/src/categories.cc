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

#include "claudette/categories.h"
#include "claudette/error.h"

namespace claudette {
namespace {

struct CategoryInfo {
  std::string_view symbol;
  std::string_view name;
  std::string_view key;
};

constexpr std::array<CategoryInfo, kNumCategories> kInfo = {{
    {"a", "Arbitration", "arbitration"},
    {"ch", "Unilateral change", "unilateral_change"},
    {"cr", "Content removal", "content_removal"},
    {"j", "Jurisdiction", "jurisdiction"},
    {"law", "Choice of law", "choice_of_law"},
    {"ltd", "Limitation of liability", "limitation_of_liability"},
    {"ter", "Unilateral termination", "unilateral_termination"},
    {"use", "Contract by using", "contract_by_using"},
}};

}  // namespace

std::string_view TagSymbol(ClauseCategory category) {
  return kInfo[CategoryIndex(category)].symbol;
}

std::string_view CategoryName(ClauseCategory category) {
  return kInfo[CategoryIndex(category)].name;
}

std::string_view CategoryKey(ClauseCategory category) {
  return kInfo[CategoryIndex(category)].key;
}

std::optional<ClauseCategory> CategoryFromSymbol(std::string_view symbol) {
  for (ClauseCategory c : kAllCategories) {
    if (TagSymbol(c) == symbol) return c;
  }
  return std::nullopt;
}

std::optional<ClauseCategory> CategoryFromKey(std::string_view key) {
  for (ClauseCategory c : kAllCategories) {
    if (CategoryKey(c) == key) return c;
  }
  return std::nullopt;
}

std::optional<FairnessLevel> FairnessLevelFromInt(int value) {
  if (value < 1 || value > 3) return std::nullopt;
  return static_cast<FairnessLevel>(value);
}

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownTag: return "UnknownTag";
    case ErrorKind::kUnbalancedTag: return "UnbalancedTag";
    case ErrorKind::kCrossedNesting: return "CrossedNesting";
    case ErrorKind::kEmptyTag: return "EmptyTag";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kIo: return "Io";
    case ErrorKind::kMissingTree: return "MissingTree";
    case ErrorKind::kTreeBankMismatch: return "TreeBankMismatch";
    case ErrorKind::kUnbalancedParens: return "UnbalancedParens";
    case ErrorKind::kEmptyNode: return "EmptyNode";
    case ErrorKind::kTrailingInput: return "TrailingInput";
    case ErrorKind::kInvalidLambda: return "InvalidLambda";
    case ErrorKind::kDegenerateTree: return "DegenerateTree";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kEmptyData: return "EmptyData";
    case ErrorKind::kSingleClass: return "SingleClass";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kTooFewDocuments: return "TooFewDocuments";
    case ErrorKind::kVersionMismatch: return "VersionMismatch";
    case ErrorKind::kBadModel: return "BadModel";
    case ErrorKind::kBadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace claudette
