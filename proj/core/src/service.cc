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

#include "claudette/service.h"

#include <cctype>
#include <cstdio>
#include <iostream>

#include "claudette/analysis.h"
#include "httplib.h"
#include "json.hpp"

namespace claudette {

using Json = nlohmann::ordered_json;

struct AnalysisService::Server {
  httplib::Server http;
};

namespace {

HttpReply ErrorReply(int status, const std::string &message) {
  return {status, "application/json", Json{{"error", message}}.dump() + "\n"};
}

bool IsPlainText(std::string_view content_type) {
  std::string lowered;
  for (char ch : content_type) {
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  std::string_view v = lowered;
  while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
  constexpr std::string_view kPlain = "text/plain";
  if (!v.starts_with(kPlain)) return false;
  v.remove_prefix(kPlain.size());
  return v.empty() || v.front() == ';' || v.front() == ' ';
}

}  // namespace

AnalysisService::AnalysisService(ModelFile model, ServiceOptions options)
    : predictor_(std::move(model)), options_(options), server_(std::make_unique<Server>()) {
  httplib::Server &http = server_->http;
  http.set_payload_max_length(options_.max_body_bytes);
  http.Post("/analyze", [this](const httplib::Request &req, httplib::Response &res) {
    HttpReply reply = Analyze(req.get_header_value("Content-Type"), req.body);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
  http.Get("/health", [this](const httplib::Request &, httplib::Response &res) {
    HttpReply reply = Health();
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
  http.set_error_handler([](const httplib::Request &, httplib::Response &res) {
    if (!res.body.empty()) return;
    HttpReply reply = ErrorReply(res.status, httplib::status_message(res.status));
    res.set_content(reply.body, reply.content_type);
  });
}

AnalysisService::~AnalysisService() { Stop(); }

HttpReply AnalysisService::Analyze(std::string_view content_type, std::string_view body) const {
  if (!IsPlainText(content_type)) {
    return ErrorReply(400, "content type must be text/plain");
  }
  if (body.size() > options_.max_body_bytes) {
    return ErrorReply(413, "request body exceeds " + std::to_string(options_.max_body_bytes) +
                               " bytes");
  }
  if (body.empty()) return ErrorReply(400, "empty request body");
  if (body.find('\0') != std::string_view::npos) {
    return ErrorReply(400, "request body is not text");
  }
  try {
    AnalysisResult result = AnalyzeDocument(predictor_, body, nullptr);
    return {200, "application/json", RenderAnalysisJson(result)};
  } catch (const std::exception &e) {
    char id[16];
    std::snprintf(id, sizeof(id), "E%06u", error_counter_.fetch_add(1) + 1);
    std::cerr << "claudette service error " << id << ": " << e.what() << "\n";
    return {500, "application/json",
            Json{{"error", "internal error"}, {"error_id", id}}.dump() + "\n"};
  }
}

HttpReply AnalysisService::Health() const {
  const ModelFile &model = predictor_.model();
  char fingerprint[17];
  std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                static_cast<unsigned long long>(model.metadata.corpus_fingerprint));
  Json j{{"status", "ok"},
         {"model_kind", ModelKindName(model.kind())},
         {"format_version", model.format_version},
         {"vocabulary_size", model.vocabulary.size()},
         {"training_documents", model.metadata.documents},
         {"training_sentences", model.metadata.sentences},
         {"corpus_fingerprint", fingerprint},
         {"seed", model.metadata.config.train.seed}};
  return {200, "application/json", j.dump(2) + "\n"};
}

int AnalysisService::Bind(const std::string &host, int port) {
  if (port == 0) return server_->http.bind_to_any_port(host);
  return server_->http.bind_to_port(host, port) ? port : -1;
}

bool AnalysisService::Run() { return server_->http.listen_after_bind(); }

void AnalysisService::Stop() {
  if (server_) server_->http.stop();
}

}  // namespace claudette
