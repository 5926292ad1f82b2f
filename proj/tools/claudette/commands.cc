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

#include "commands.h"

#include <csignal>
#include <fstream>
#include <sstream>

#include "claudette/analysis.h"
#include "claudette/config.h"
#include "claudette/corpus.h"
#include "claudette/corpus_stats.h"
#include "claudette/error.h"
#include "claudette/evaluation.h"
#include "claudette/fragment_oracle.h"
#include "claudette/html_report.h"
#include "claudette/model_file.h"
#include "claudette/parse_tree.h"
#include "claudette/pipeline.h"
#include "claudette/published_stats.h"
#include "claudette/service.h"
#include "json.hpp"

namespace claudette::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(const Error &e) {
  switch (e.kind()) {
    case ErrorKind::kEmptyCorpus:
    case ErrorKind::kBadConfig:
      return kExitUsage;
    default:
      return kExitData;
  }
}

template <typename Fn>
int Guard(std::ostream &err, Fn &&fn) {
  try {
    return fn();
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  file << text;
  if (!file) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

ToolkitConfig LoadToolkitConfig(const std::optional<std::filesystem::path> &path,
                                std::uint64_t seed, bool lenient) {
  ToolkitConfig config = path ? ReadConfigFile(*path) : ToolkitConfig{};
  config.train.seed = seed;
  if (lenient) config.lenient_tags = true;
  config.Validate();
  return config;
}

std::optional<TreeBank> LoadTrees(const std::optional<std::filesystem::path> &path,
                                  const Corpus &corpus) {
  if (!path) return std::nullopt;
  return AlignTreeBank(corpus, ReadTreeGroups(*path));
}

ModelKind DetectionKind(const std::string &name) {
  std::optional<ModelKind> kind = ModelKindFromName(name);
  if (!kind || *kind == ModelKind::kCategoryOvr) {
    throw UsageError("unknown detection model '" + name +
                     "' (expected linear-bow, kernel-sstk or chain)");
  }
  return *kind;
}

bool IsCategoryTask(const std::string &task, const std::string &model) {
  if (task == "category") {
    if (model != "linear-bow" && model != "category-ovr") {
      throw UsageError("category classification uses one-vs-rest linear models; got '" +
                       model + "'");
    }
    return true;
  }
  if (task != "detect") throw UsageError("unknown task '" + task + "'");
  return model == "category-ovr";
}

}  // namespace

int RunStats(const StatsOptions &options, std::ostream &out, std::ostream &err) {
  return Guard(err, [&] {
    CorpusOptions corpus_options;
    corpus_options.tags.lenient = options.lenient_tags;
    Corpus corpus = LoadCorpus(options.corpus, corpus_options);
    StatsTable stats = ComputeCorpusStats(corpus);
    DiffReport diff = CompareToPublishedStats(stats);
    out << RenderStatsText(stats) << "\n" << RenderDiffText(diff);
    if (options.json) {
      nlohmann::ordered_json j{{"stats", nlohmann::ordered_json::parse(RenderStatsJson(stats))},
                               {"comparison", nlohmann::ordered_json::parse(RenderDiffJson(diff))}};
      WriteText(*options.json, j.dump(2) + "\n");
    }
    return static_cast<int>(kExitOk);
  });
}

int RunTrain(const TrainOptions &options, std::ostream &out, std::ostream &err) {
  return Guard(err, [&] {
    const bool category = IsCategoryTask(options.task, options.model);
    const ModelKind kind = category ? ModelKind::kCategoryOvr : DetectionKind(options.model);
    ToolkitConfig config = LoadToolkitConfig(options.config, options.seed, options.lenient_tags);
    Corpus corpus = LoadCorpus(options.corpus, config.corpus_options());
    std::optional<TreeBank> trees = LoadTrees(options.trees, corpus);

    std::vector<const Document *> docs;
    for (const Document &d : corpus.documents()) docs.push_back(&d);
    ModelFile model = TrainModel(kind, docs, trees ? &*trees : nullptr, config);
    SaveModel(model, options.out);

    out << "wrote " << options.out.string() << ": " << ModelKindName(kind) << ", "
        << model.metadata.documents << " documents, " << model.metadata.sentences
        << " sentences, " << model.vocabulary.size() << " terms\n";
    for (const std::string &w : model.metadata.warnings) err << "warning: " << w << "\n";
    if (HitIterationCap(model)) {
      err << "error: training stopped at the iteration cap before convergence\n";
      return static_cast<int>(kExitNotConverged);
    }
    return static_cast<int>(kExitOk);
  });
}

int RunPredict(const PredictOptions &options, std::ostream &out, std::ostream &err) {
  return Guard(err, [&] {
    Predictor predictor(LoadModel(options.model));
    std::string text = ReadFile(options.input);
    std::optional<std::vector<ParseTree>> trees;
    if (options.trees) {
      std::vector<std::vector<ParseTree>> groups = ReadTreeGroups(*options.trees);
      if (groups.size() != 1) {
        throw Error(ErrorKind::kTreeBankMismatch,
                    "tree file for a single document must hold one group, found " +
                        std::to_string(groups.size()));
      }
      trees = std::move(groups.front());
    }
    AnalysisResult result = AnalyzeDocument(predictor, text, trees ? &*trees : nullptr);
    out << RenderAnalysisJson(result);
    for (const std::string &w : result.warnings) err << "warning: " << w << "\n";
    if (options.report) WriteHtmlReport(result, *options.report);
    return static_cast<int>(kExitOk);
  });
}

int RunEvaluate(const EvaluateOptions &options, std::ostream &out, std::ostream &err) {
  return Guard(err, [&] {
    const bool category = IsCategoryTask(options.task, options.model_kind);
    ToolkitConfig config = LoadToolkitConfig(options.config, options.seed, options.lenient_tags);
    Corpus corpus = LoadCorpus(options.corpus, config.corpus_options());
    std::optional<TreeBank> trees = LoadTrees(options.trees, corpus);
    const TreeBank *bank = trees ? &*trees : nullptr;
    MetricsReport report = category
                               ? RunCategoryEval(corpus, config, bank)
                               : RunDetectionEval(corpus, DetectionKind(options.model_kind),
                                                  config, bank);
    out << RenderMetricsText(report);
    if (options.json) WriteText(*options.json, RenderMetricsJson(report));
    return static_cast<int>(kExitOk);
  });
}

namespace {

AnalysisService *g_service = nullptr;

extern "C" void HandleStopSignal(int) {
  if (g_service != nullptr) g_service->Stop();
}

}  // namespace

int RunServe(const ServeOptions &options, std::ostream &out, std::ostream &err) {
  return Guard(err, [&] {
    ServiceOptions service_options;
    service_options.max_body_bytes = options.max_body_bytes;
    AnalysisService service(LoadModel(options.model), service_options);
    int port = service.Bind(options.host, options.port);
    if (port < 0) {
      err << "error: cannot bind " << options.host << ":" << options.port << "\n";
      return static_cast<int>(kExitFailure);
    }
    out << "listening on http://" << options.host << ":" << port << "\n" << std::flush;
    g_service = &service;
    std::signal(SIGINT, HandleStopSignal);
    std::signal(SIGTERM, HandleStopSignal);
    bool ok = service.Run();
    g_service = nullptr;
    return static_cast<int>(ok ? kExitOk : kExitFailure);
  });
}

int RunKernelSelfTest(std::uint64_t seed, std::size_t pairs, std::ostream &out,
                      std::ostream &err) {
  return Guard(err, [&] {
    KernelSelfTestResult result = claudette::RunKernelSelfTest(seed, pairs);
    out << "tree kernel self-test: " << result.comparisons << " comparisons, "
        << result.failures << " failures, max abs error " << result.max_error << "\n";
    if (result.failures > 0) {
      err << "first failure: " << result.first_failure << "\n";
      return static_cast<int>(kExitFailure);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace claudette::cli
