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

#include "claudette/model_file.h"

#include <cstdio>
#include <fstream>

#include "claudette/error.h"
#include "json.hpp"

namespace claudette {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 4> kKindNames = {"linear-bow", "kernel-sstk",
                                                        "chain", "category-ovr"};

[[noreturn]] void Bad(const std::string &message) {
  throw Error(ErrorKind::kBadModel, "malformed model file: " + message);
}

Json FeaturesToJson(const FeatureConfig &f) {
  Json orders = Json::array();
  for (int n : f.ngram_orders) orders.push_back(n);
  return Json{{"ngram_orders", std::move(orders)},
              {"use_pos", f.use_pos},
              {"min_df", f.min_df},
              {"lowercase", f.lowercase},
              {"tf", f.tf == TfMode::kLog ? "log" : "raw"}};
}

FeatureConfig FeaturesFromJson(const Json &j) {
  FeatureConfig f;
  f.ngram_orders.clear();
  for (const Json &n : j.at("ngram_orders")) f.ngram_orders.insert(n.get<int>());
  f.use_pos = j.at("use_pos").get<bool>();
  f.min_df = j.at("min_df").get<int>();
  f.lowercase = j.at("lowercase").get<bool>();
  std::string tf = j.at("tf").get<std::string>();
  if (tf != "raw" && tf != "log") Bad("tf mode " + tf);
  f.tf = tf == "log" ? TfMode::kLog : TfMode::kRaw;
  f.Validate();
  return f;
}

Json ConfigToJson(const ToolkitConfig &c) {
  Json train{{"c", c.train.c},
             {"positive_weight", c.train.positive_weight ? Json(*c.train.positive_weight)
                                                         : Json(nullptr)},
             {"tol", c.train.tol},
             {"max_iter", c.train.max_iter},
             {"epochs", c.train.epochs},
             {"seed", c.train.seed}};
  return Json{{"features", FeaturesToJson(c.features)},
              {"train", std::move(train)},
              {"lambda", c.lambda},
              {"normalize_kernel", c.normalize_kernel},
              {"positive_levels",
               c.positive == PositivePolicy::kLevel2Only ? Json::array({2}) : Json::array({2, 3})},
              {"lenient_tags", c.lenient_tags}};
}

ToolkitConfig ConfigFromJson(const Json &j) {
  ToolkitConfig c;
  c.features = FeaturesFromJson(j.at("features"));
  const Json &t = j.at("train");
  c.train.c = t.at("c").get<double>();
  if (!t.at("positive_weight").is_null()) {
    c.train.positive_weight = t.at("positive_weight").get<double>();
  }
  c.train.tol = t.at("tol").get<double>();
  c.train.max_iter = t.at("max_iter").get<int>();
  c.train.epochs = t.at("epochs").get<int>();
  c.train.seed = t.at("seed").get<std::uint64_t>();
  c.lambda = j.at("lambda").get<double>();
  c.normalize_kernel = j.at("normalize_kernel").get<bool>();
  c.positive = j.at("positive_levels").size() == 1 ? PositivePolicy::kLevel2Only
                                                   : PositivePolicy::kLevels2And3;
  c.lenient_tags = j.at("lenient_tags").get<bool>();
  c.Validate();
  return c;
}

Json SparseToJson(std::span<const double> dense) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.push_back(Json::array({i, dense[i]}));
  }
  return out;
}

void SparseFromJson(const Json &j, std::span<double> dense) {
  for (const Json &entry : j) {
    std::size_t i = entry.at(0).get<std::size_t>();
    if (i >= dense.size()) Bad("weight index out of range");
    dense[i] = entry.at(1).get<double>();
  }
}

Json LinearToJson(const LinearModel &m) {
  return Json{{"dim", m.weights.size()},
              {"bias", m.bias},
              {"converged", m.converged},
              {"epochs", m.epochs},
              {"max_violation", m.max_violation},
              {"warning", m.warning},
              {"weights", SparseToJson(m.weights)}};
}

LinearModel LinearFromJson(const Json &j) {
  LinearModel m;
  m.weights.assign(j.at("dim").get<std::size_t>(), 0.0);
  m.bias = j.at("bias").get<double>();
  m.converged = j.at("converged").get<bool>();
  m.epochs = j.at("epochs").get<int>();
  m.max_violation = j.at("max_violation").get<double>();
  m.warning = j.at("warning").get<std::string>();
  SparseFromJson(j.at("weights"), m.weights);
  return m;
}

Json KernelToJson(const KernelPayload &p) {
  const KernelModel &m = p.model;
  Json trees = Json::array();
  for (const ParseTree &t : p.support_trees) trees.push_back(t.ToString());
  return Json{{"model",
               {{"lambda", m.lambda},
                {"normalized", m.normalized},
                {"bias", m.bias},
                {"converged", m.diagnostics.converged},
                {"iterations", m.diagnostics.iterations},
                {"max_violation", m.diagnostics.max_violation},
                {"support", m.support},
                {"coefficients", m.coefficients}}},
              {"support_trees", std::move(trees)},
              {"fallback", LinearToJson(p.fallback)},
              {"warning", p.warning}};
}

KernelPayload KernelFromJson(const Json &j) {
  KernelPayload p;
  const Json &m = j.at("model");
  p.model.lambda = m.at("lambda").get<double>();
  p.model.normalized = m.at("normalized").get<bool>();
  p.model.bias = m.at("bias").get<double>();
  p.model.diagnostics.converged = m.at("converged").get<bool>();
  p.model.diagnostics.iterations = m.at("iterations").get<std::size_t>();
  p.model.diagnostics.max_violation = m.at("max_violation").get<double>();
  p.model.support = m.at("support").get<std::vector<std::size_t>>();
  p.model.coefficients = m.at("coefficients").get<std::vector<double>>();
  for (const Json &t : j.at("support_trees")) {
    p.support_trees.push_back(ParseBracketed(t.get<std::string>()));
  }
  if (p.model.support.size() != p.model.coefficients.size() ||
      p.model.support.size() != p.support_trees.size()) {
    Bad("support vectors, coefficients and trees differ in length");
  }
  p.fallback = LinearFromJson(j.at("fallback"));
  p.warning = j.at("warning").get<std::string>();
  return p;
}

Json ChainToJson(const ChainModel &m) {
  Json labels = Json::array();
  for (std::size_t y = 0; y < m.num_labels(); ++y) {
    labels.push_back(m.num_labels() == 2 ? (y == 0 ? "negative" : "positive")
                                         : std::to_string(y));
  }
  Json start = Json::array();
  Json trans = Json::array();
  Json emissions = Json::array();
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    int ia = static_cast<int>(a);
    start.push_back(m.start(ia));
    Json row = Json::array();
    for (std::size_t b = 0; b < m.num_labels(); ++b) {
      row.push_back(m.transition(ia, static_cast<int>(b)));
    }
    trans.push_back(std::move(row));
    emissions.push_back(SparseToJson(m.emission(ia)));
  }
  return Json{{"labels", std::move(labels)},
              {"dim", m.dim()},
              {"start", std::move(start)},
              {"transitions", std::move(trans)},
              {"emissions", std::move(emissions)}};
}

ChainModel ChainFromJson(const Json &j) {
  std::size_t labels = j.at("labels").size();
  ChainModel m(labels, j.at("dim").get<std::size_t>());
  const Json &start = j.at("start");
  const Json &trans = j.at("transitions");
  const Json &emissions = j.at("emissions");
  if (start.size() != labels || trans.size() != labels || emissions.size() != labels) {
    Bad("chain blocks do not match the label set");
  }
  for (std::size_t a = 0; a < labels; ++a) {
    int ia = static_cast<int>(a);
    m.start(ia) = start.at(a).get<double>();
    if (trans.at(a).size() != labels) Bad("transition row length");
    for (std::size_t b = 0; b < labels; ++b) {
      m.transition(ia, static_cast<int>(b)) = trans.at(a).at(b).get<double>();
    }
    SparseFromJson(emissions.at(a), m.emission(ia));
  }
  return m;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ModelKind> ModelKindFromName(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<ModelKind>(i);
  }
  return std::nullopt;
}

std::string SerializeModel(const ModelFile &model) {
  Json j;
  j["format_version"] = model.format_version;
  j["kind"] = ModelKindName(model.kind());
  j["feature_config"] = FeaturesToJson(model.features());

  Json terms = Json::array();
  const Vocabulary &v = model.vocabulary;
  for (std::size_t i = 0; i < v.size(); ++i) {
    terms.push_back(Json::array({v.terms()[i], i, v.df()[i]}));
  }
  j["vocabulary"] = {{"n_fit", v.n_fit()}, {"terms", std::move(terms)}};

  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearPayload>) {
          j["payload"] = LinearToJson(p.model);
        } else if constexpr (std::is_same_v<T, KernelPayload>) {
          j["payload"] = KernelToJson(p);
        } else if constexpr (std::is_same_v<T, ChainPayload>) {
          j["payload"] = ChainToJson(p.model);
        } else {
          Json models;
          for (ClauseCategory c : kAllCategories) {
            models[std::string(CategoryKey(c))] = LinearToJson(p.models[CategoryIndex(c)]);
          }
          j["payload"] = {{"models", std::move(models)}};
        }
      },
      model.payload);

  const TrainingMetadata &meta = model.metadata;
  j["metadata"] = {{"seed", meta.config.train.seed},
                   {"config", ConfigToJson(meta.config)},
                   {"corpus_fingerprint", Hex(meta.corpus_fingerprint)},
                   {"documents", meta.documents},
                   {"sentences", meta.sentences},
                   {"warnings", meta.warnings}};
  return j.dump(1) + "\n";
}

ModelFile ParseModel(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    Bad(e.what());
  }
  try {
    if (!j.is_object() || !j.contains("format_version")) Bad("missing format_version");
    int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error(ErrorKind::kVersionMismatch,
                  "model format version " + std::to_string(version) +
                      " is not supported (expected " +
                      std::to_string(kModelFormatVersion) + ")");
    }
    ModelFile model;
    model.format_version = version;
    std::optional<ModelKind> kind = ModelKindFromName(j.at("kind").get<std::string>());
    if (!kind) Bad("unknown model kind");

    const Json &meta = j.at("metadata");
    model.metadata.config = ConfigFromJson(meta.at("config"));
    if (!(FeaturesFromJson(j.at("feature_config")) == model.metadata.config.features)) {
      Bad("feature_config disagrees with metadata");
    }
    std::string fp = meta.at("corpus_fingerprint").get<std::string>();
    model.metadata.corpus_fingerprint = std::stoull(fp, nullptr, 16);
    model.metadata.documents = meta.at("documents").get<std::size_t>();
    model.metadata.sentences = meta.at("sentences").get<std::size_t>();
    model.metadata.warnings = meta.at("warnings").get<std::vector<std::string>>();

    const Json &vocab = j.at("vocabulary");
    std::vector<std::string> terms;
    std::vector<std::uint32_t> df;
    for (const Json &entry : vocab.at("terms")) {
      if (entry.at(1).get<std::size_t>() != terms.size()) Bad("vocabulary index out of order");
      terms.push_back(entry.at(0).get<std::string>());
      df.push_back(entry.at(2).get<std::uint32_t>());
    }
    model.vocabulary = Vocabulary(std::move(terms), std::move(df),
                                  vocab.at("n_fit").get<std::size_t>());

    const Json &payload = j.at("payload");
    const std::size_t dim = model.vocabulary.size();
    auto check_dim = [&](std::size_t d) {
      if (d != dim) Bad("payload width does not match the vocabulary");
    };
    switch (*kind) {
      case ModelKind::kLinearBow: {
        LinearPayload p{LinearFromJson(payload)};
        check_dim(p.model.weights.size());
        model.payload = std::move(p);
        break;
      }
      case ModelKind::kKernelSstk: {
        KernelPayload p = KernelFromJson(payload);
        check_dim(p.fallback.weights.size());
        model.payload = std::move(p);
        break;
      }
      case ModelKind::kChain: {
        ChainPayload p{ChainFromJson(payload)};
        check_dim(p.model.dim());
        model.payload = std::move(p);
        break;
      }
      case ModelKind::kCategoryOvr: {
        CategoryPayload p;
        const Json &models = payload.at("models");
        for (ClauseCategory c : kAllCategories) {
          p.models[CategoryIndex(c)] = LinearFromJson(models.at(std::string(CategoryKey(c))));
          check_dim(p.models[CategoryIndex(c)].weights.size());
        }
        model.payload = std::move(p);
        break;
      }
    }
    return model;
  } catch (const nlohmann::json::exception &e) {
    Bad(e.what());
  } catch (const std::invalid_argument &e) {
    Bad(e.what());
  }
}

void SaveModel(const ModelFile &model, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << SerializeModel(model);
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

ModelFile LoadModel(const std::filesystem::path &path) {
  return ParseModel(ReadFile(path));
}

bool HitIterationCap(const ModelFile &model) {
  return std::visit(
      [](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearPayload>) {
          return !p.model.converged;
        } else if constexpr (std::is_same_v<T, KernelPayload>) {
          return !p.model.diagnostics.converged || !p.fallback.converged;
        } else if constexpr (std::is_same_v<T, ChainPayload>) {
          return false;
        } else {
          for (const LinearModel &m : p.models) {
            if (!m.converged) return true;
          }
          return false;
        }
      },
      model.payload);
}

}  // namespace claudette
