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

#ifndef CLAUDETTE_MODEL_FILE_H_
#define CLAUDETTE_MODEL_FILE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "claudette/chain_model.h"
#include "claudette/config.h"
#include "claudette/features.h"
#include "claudette/parse_tree.h"
#include "claudette/svm.h"

namespace claudette {

inline constexpr int kModelFormatVersion = 1;

enum class ModelKind { kLinearBow, kKernelSstk, kChain, kCategoryOvr };

std::string_view ModelKindName(ModelKind kind);  // "linear-bow", ...
std::optional<ModelKind> ModelKindFromName(std::string_view name);

struct LinearPayload {
  LinearModel model;
};

struct KernelPayload {
  KernelModel model;
  std::vector<ParseTree> support_trees;  // aligned with model.support
  LinearModel fallback;                  // used when no tree is supplied
  std::string warning;
};

struct ChainPayload {
  ChainModel model;
};

struct CategoryPayload {
  std::array<LinearModel, kNumCategories> models;
};

using ModelPayload =
    std::variant<LinearPayload, KernelPayload, ChainPayload, CategoryPayload>;

struct TrainingMetadata {
  ToolkitConfig config;
  std::uint64_t corpus_fingerprint = 0;
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::vector<std::string> warnings;
};

// Unified, versioned model container. Serialized as JSON; Parse followed by
// Serialize reproduces the input bytes.
struct ModelFile {
  int format_version = kModelFormatVersion;
  Vocabulary vocabulary;
  ModelPayload payload;
  TrainingMetadata metadata;

  ModelKind kind() const { return static_cast<ModelKind>(payload.index()); }
  const FeatureConfig &features() const { return metadata.config.features; }
};

std::string SerializeModel(const ModelFile &model);

// Throws kVersionMismatch for another format_version, kBadModel for
// malformed content.
ModelFile ParseModel(std::string_view text);

void SaveModel(const ModelFile &model, const std::filesystem::path &path);
ModelFile LoadModel(const std::filesystem::path &path);

// True when any learner stopped on its iteration cap.
bool HitIterationCap(const ModelFile &model);

}  // namespace claudette

#endif  // CLAUDETTE_MODEL_FILE_H_
