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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

namespace cli = claudette::cli;

int main(int argc, char **argv) {
  CLI::App app{"Detection and classification of potentially unfair clauses in online terms of service"};
  app.require_subcommand(1);

  cli::StatsOptions stats;
  CLI::App *stats_cmd = app.add_subcommand("stats", "Corpus statistics and comparison with the published table");
  stats_cmd->add_option("corpus", stats.corpus, "Directory of tagged .txt documents")->required();
  stats_cmd->add_flag("--lenient-tags", stats.lenient_tags,
                      "Accept a repeated opening tag as the closer of the innermost open span");
  stats_cmd->add_option("--json", stats.json, "Also write the tables as JSON");

  cli::TrainOptions train;
  CLI::App *train_cmd = app.add_subcommand("train", "Train a model on a tagged corpus");
  train_cmd->add_option("--task", train.task, "detect or category")
      ->check(CLI::IsMember({"detect", "category"}));
  train_cmd->add_option("--model", train.model, "linear-bow, kernel-sstk or chain")
      ->check(CLI::IsMember({"linear-bow", "kernel-sstk", "chain", "category-ovr"}));
  train_cmd->add_option("--corpus", train.corpus, "Directory of tagged .txt documents")->required();
  train_cmd->add_option("--trees", train.trees, "Parse trees, one per sentence");
  train_cmd->add_option("--config", train.config, "key = value configuration file");
  train_cmd->add_option("--seed", train.seed, "Random seed")->required();
  train_cmd->add_option("--out", train.out, "Model file to write")->required();
  train_cmd->add_flag("--lenient-tags", train.lenient_tags, "Lenient tag closing");

  cli::PredictOptions predict;
  CLI::App *predict_cmd = app.add_subcommand("predict", "Analyze one plain-text document");
  predict_cmd->add_option("--model", predict.model, "Model file")->required();
  predict_cmd->add_option("--input", predict.input, "Plain-text document")->required();
  predict_cmd->add_option("--trees", predict.trees, "Parse trees for the document's sentences");
  predict_cmd->add_option("--report", predict.report, "Write an HTML report");

  cli::EvaluateOptions evaluate;
  CLI::App *eval_cmd = app.add_subcommand("evaluate", "Leave-one-document-out evaluation");
  eval_cmd->add_option("--task", evaluate.task, "detect or category")
      ->check(CLI::IsMember({"detect", "category"}));
  eval_cmd->add_option("--model-kind", evaluate.model_kind,
                       "linear-bow, kernel-sstk, chain or category-ovr")
      ->check(CLI::IsMember({"linear-bow", "kernel-sstk", "chain", "category-ovr"}));
  eval_cmd->add_option("--corpus", evaluate.corpus, "Directory of tagged .txt documents")->required();
  eval_cmd->add_option("--trees", evaluate.trees, "Parse trees, one per sentence");
  eval_cmd->add_option("--config", evaluate.config, "key = value configuration file");
  eval_cmd->add_option("--seed", evaluate.seed, "Random seed")->required();
  eval_cmd->add_option("--json", evaluate.json, "Also write the report as JSON");
  eval_cmd->add_flag("--lenient-tags", evaluate.lenient_tags, "Lenient tag closing");

  cli::ServeOptions serve;
  CLI::App *serve_cmd = app.add_subcommand("serve", "Serve POST /analyze and GET /health");
  serve_cmd->add_option("--model", serve.model, "Model file")->required();
  serve_cmd->add_option("--port", serve.port, "TCP port (0 picks a free one)")->required();
  serve_cmd->add_option("--host", serve.host, "Address to bind");
  serve_cmd->add_option("--max-body", serve.max_body_bytes, "Request body cap in bytes");

  std::uint64_t selftest_seed = 1;
  std::size_t selftest_pairs = 200;
  CLI::App *selftest_cmd =
      app.add_subcommand("kernel-selftest", "Check the tree kernel against fragment enumeration");
  selftest_cmd->add_option("--seed", selftest_seed, "Random seed");
  selftest_cmd->add_option("--pairs", selftest_pairs, "Random tree pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  if (*stats_cmd) return cli::RunStats(stats, std::cout, std::cerr);
  if (*train_cmd) return cli::RunTrain(train, std::cout, std::cerr);
  if (*predict_cmd) return cli::RunPredict(predict, std::cout, std::cerr);
  if (*eval_cmd) return cli::RunEvaluate(evaluate, std::cout, std::cerr);
  if (*serve_cmd) return cli::RunServe(serve, std::cout, std::cerr);
  if (*selftest_cmd) return cli::RunKernelSelfTest(selftest_seed, selftest_pairs, std::cout, std::cerr);
  return cli::kExitUsage;
}
