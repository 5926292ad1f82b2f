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

#ifndef CLAUDETTE_SERVICE_H_
#define CLAUDETTE_SERVICE_H_

#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "claudette/model_file.h"
#include "claudette/pipeline.h"

namespace claudette {

struct ServiceOptions {
  std::size_t max_body_bytes = 1 << 20;
};

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Stateless analysis endpoint over an immutable model:
//   POST /analyze  text/plain body -> AnalysisResult JSON
//   GET  /health   -> {"status", "model_kind", "format_version", ...}
class AnalysisService {
 public:
  AnalysisService(ModelFile model, ServiceOptions options = {});
  ~AnalysisService();

  AnalysisService(const AnalysisService &) = delete;
  AnalysisService &operator=(const AnalysisService &) = delete;

  HttpReply Analyze(std::string_view content_type, std::string_view body) const;
  HttpReply Health() const;

  // Binds to host:port (port 0 picks a free port) and returns the bound
  // port, or -1 on failure.
  int Bind(const std::string &host, int port);
  // Serves on the bound socket until Stop() is called.
  bool Run();
  void Stop();

 private:
  struct Server;

  Predictor predictor_;
  ServiceOptions options_;
  std::unique_ptr<Server> server_;
  mutable std::atomic<unsigned> error_counter_{0};
};

}  // namespace claudette

#endif  // CLAUDETTE_SERVICE_H_
