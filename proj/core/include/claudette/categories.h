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

#ifndef CLAUDETTE_CATEGORIES_H_
#define CLAUDETTE_CATEGORIES_H_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

namespace claudette {

// The eight clause categories of the annotation scheme.
enum class ClauseCategory : int {
  kArbitration = 0,
  kUnilateralChange,
  kContentRemoval,
  kJurisdiction,
  kChoiceOfLaw,
  kLimitationOfLiability,
  kUnilateralTermination,
  kContractByUsing,
};

inline constexpr std::size_t kNumCategories = 8;

inline constexpr std::array<ClauseCategory, kNumCategories> kAllCategories = {
    ClauseCategory::kArbitration,           ClauseCategory::kUnilateralChange,
    ClauseCategory::kContentRemoval,        ClauseCategory::kJurisdiction,
    ClauseCategory::kChoiceOfLaw,           ClauseCategory::kLimitationOfLiability,
    ClauseCategory::kUnilateralTermination, ClauseCategory::kContractByUsing,
};

inline constexpr std::size_t CategoryIndex(ClauseCategory c) {
  return static_cast<std::size_t>(c);
}

// Tag symbol used in annotated text: a, ch, cr, j, law, ltd, ter, use.
std::string_view TagSymbol(ClauseCategory category);

// Human-readable name, e.g. "Limitation of liability".
std::string_view CategoryName(ClauseCategory category);

// Stable machine identifier, e.g. "limitation_of_liability".
std::string_view CategoryKey(ClauseCategory category);

std::optional<ClauseCategory> CategoryFromSymbol(std::string_view symbol);
std::optional<ClauseCategory> CategoryFromKey(std::string_view key);

// 1 = clearly fair, 2 = potentially unfair, 3 = clearly unfair.
enum class FairnessLevel : int {
  kClearlyFair = 1,
  kPotentiallyUnfair = 2,
  kClearlyUnfair = 3,
};

std::optional<FairnessLevel> FairnessLevelFromInt(int value);

inline constexpr int ToInt(FairnessLevel level) {
  return static_cast<int>(level);
}

// Which fairness levels make a clause count as "potentially unfair".
enum class PositivePolicy {
  kLevels2And3,
  kLevel2Only,
};

inline constexpr bool IsPositiveLevel(FairnessLevel level,
                                      PositivePolicy policy) {
  if (policy == PositivePolicy::kLevel2Only) {
    return level == FairnessLevel::kPotentiallyUnfair;
  }
  return level != FairnessLevel::kClearlyFair;
}

struct ClauseLabel {
  ClauseCategory category;
  FairnessLevel level;

  auto operator<=>(const ClauseLabel &) const = default;
};

}  // namespace claudette

#endif  // CLAUDETTE_CATEGORIES_H_
