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

#ifndef CLAUDETTE_TOOLS_COMMANDS_H_
#define CLAUDETTE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace claudette::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitData = 3,
  kExitNotConverged = 4,
};

struct StatsOptions {
  std::filesystem::path corpus;
  bool lenient_tags = false;
  std::optional<std::filesystem::path> json;
};

struct TrainOptions {
  std::string task = "detect";
  std::string model = "linear-bow";
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> trees;
  std::optional<std::filesystem::path> config;
  std::uint64_t seed = 1;
  std::filesystem::path out;
  bool lenient_tags = false;
};

struct PredictOptions {
  std::filesystem::path model;
  std::filesystem::path input;
  std::optional<std::filesystem::path> trees;
  std::optional<std::filesystem::path> report;
};

struct EvaluateOptions {
  std::string task = "detect";
  std::string model_kind = "linear-bow";
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> trees;
  std::optional<std::filesystem::path> config;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> json;
  bool lenient_tags = false;
};

struct ServeOptions {
  std::filesystem::path model;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_body_bytes = 1 << 20;
};

int RunStats(const StatsOptions &options, std::ostream &out, std::ostream &err);
int RunTrain(const TrainOptions &options, std::ostream &out, std::ostream &err);
int RunPredict(const PredictOptions &options, std::ostream &out, std::ostream &err);
int RunEvaluate(const EvaluateOptions &options, std::ostream &out, std::ostream &err);
int RunServe(const ServeOptions &options, std::ostream &out, std::ostream &err);
int RunKernelSelfTest(std::uint64_t seed, std::size_t pairs, std::ostream &out,
                      std::ostream &err);

}  // namespace claudette::cli

#endif  // CLAUDETTE_TOOLS_COMMANDS_H_
