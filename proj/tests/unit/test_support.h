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

#ifndef CLAUDETTE_TESTS_TEST_SUPPORT_H_
#define CLAUDETTE_TESTS_TEST_SUPPORT_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "claudette/corpus.h"
#include "claudette/features.h"

namespace claudette::testing {

inline std::filesystem::path DataDir() { return CLAUDETTE_TEST_DATA_DIR; }

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("claudette-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SparseVector Dense(std::vector<double> values) {
  std::vector<SparseVector::Entry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) entries.emplace_back(static_cast<std::uint32_t>(i), values[i]);
  }
  return SparseVector(values.size(), std::move(entries));
}

inline Corpus CorpusFromTexts(const std::vector<std::pair<std::string, std::string>> &docs,
                              const CorpusOptions &options = {}) {
  std::vector<Document> out;
  for (const auto &[name, raw] : docs) out.push_back(BuildDocument(name, raw, options));
  return Corpus(std::move(out), options.positive);
}

}  // namespace claudette::testing

#endif  // CLAUDETTE_TESTS_TEST_SUPPORT_H_
