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

#include "claudette/config.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "claudette/error.h"

namespace claudette {
namespace {

std::string_view Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void Bad(std::size_t line, const std::string &message) {
  throw Error(ErrorKind::kBadConfig, "config line " + std::to_string(line) + ": " + message);
}

double ToDouble(std::string_view v, std::size_t line) {
  std::string s(v);
  char *end = nullptr;
  errno = 0;
  double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno != 0) Bad(line, "not a number: " + s);
  return d;
}

long long ToInt(std::string_view v, std::size_t line) {
  std::string s(v);
  char *end = nullptr;
  errno = 0;
  long long i = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno != 0) Bad(line, "not an integer: " + s);
  return i;
}

bool ToBool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Bad(line, "not a boolean: " + std::string(v));
}

std::vector<long long> ToIntList(std::string_view v, std::size_t line) {
  std::vector<long long> out;
  while (!v.empty()) {
    std::size_t comma = v.find(',');
    out.push_back(ToInt(Trim(v.substr(0, comma)), line));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

std::string FormatDouble(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

}  // namespace

void ToolkitConfig::Validate() const {
  features.Validate();
  train.Validate();
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kBadConfig, "lambda must lie in (0, 1]");
  }
}

ToolkitConfig ParseConfig(std::string_view text, ToolkitConfig cfg) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) Bad(line_no, "expected key = value");
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));

    if (key == "ngram_orders") {
      cfg.features.ngram_orders.clear();
      for (long long n : ToIntList(value, line_no)) {
        if (n < 1) Bad(line_no, "n-gram order must be >= 1");
        cfg.features.ngram_orders.insert(static_cast<int>(n));
      }
    } else if (key == "use_pos") {
      cfg.features.use_pos = ToBool(value, line_no);
    } else if (key == "min_df") {
      cfg.features.min_df = static_cast<int>(ToInt(value, line_no));
    } else if (key == "lowercase") {
      cfg.features.lowercase = ToBool(value, line_no);
    } else if (key == "tf") {
      if (value == "raw") {
        cfg.features.tf = TfMode::kRaw;
      } else if (value == "log") {
        cfg.features.tf = TfMode::kLog;
      } else {
        Bad(line_no, "tf must be raw or log");
      }
    } else if (key == "c") {
      cfg.train.c = ToDouble(value, line_no);
    } else if (key == "positive_weight") {
      if (value == "balanced") {
        cfg.train.positive_weight.reset();
      } else {
        cfg.train.positive_weight = ToDouble(value, line_no);
      }
    } else if (key == "tol") {
      cfg.train.tol = ToDouble(value, line_no);
    } else if (key == "max_iter") {
      cfg.train.max_iter = static_cast<int>(ToInt(value, line_no));
    } else if (key == "epochs") {
      cfg.train.epochs = static_cast<int>(ToInt(value, line_no));
    } else if (key == "seed") {
      cfg.train.seed = static_cast<std::uint64_t>(ToInt(value, line_no));
    } else if (key == "lambda") {
      cfg.lambda = ToDouble(value, line_no);
    } else if (key == "normalize_kernel") {
      cfg.normalize_kernel = ToBool(value, line_no);
    } else if (key == "positive_levels") {
      std::vector<long long> levels = ToIntList(value, line_no);
      if (levels == std::vector<long long>{2, 3} || levels == std::vector<long long>{3, 2}) {
        cfg.positive = PositivePolicy::kLevels2And3;
      } else if (levels == std::vector<long long>{2}) {
        cfg.positive = PositivePolicy::kLevel2Only;
      } else {
        Bad(line_no, "positive_levels must be 2,3 or 2");
      }
    } else if (key == "lenient_tags") {
      cfg.lenient_tags = ToBool(value, line_no);
    } else {
      Bad(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  cfg.Validate();
  return cfg;
}

ToolkitConfig ReadConfigFile(const std::filesystem::path &path, ToolkitConfig base) {
  return ParseConfig(ReadFile(path), std::move(base));
}

std::string RenderConfig(const ToolkitConfig &cfg) {
  std::ostringstream out;
  out << "ngram_orders = ";
  bool first = true;
  for (int n : cfg.features.ngram_orders) {
    out << (first ? "" : ",") << n;
    first = false;
  }
  out << "\nuse_pos = " << (cfg.features.use_pos ? "true" : "false")
      << "\nmin_df = " << cfg.features.min_df
      << "\nlowercase = " << (cfg.features.lowercase ? "true" : "false")
      << "\ntf = " << (cfg.features.tf == TfMode::kLog ? "log" : "raw")
      << "\nc = " << FormatDouble(cfg.train.c) << "\npositive_weight = "
      << (cfg.train.positive_weight ? FormatDouble(*cfg.train.positive_weight) : "balanced")
      << "\ntol = " << FormatDouble(cfg.train.tol) << "\nmax_iter = " << cfg.train.max_iter
      << "\nepochs = " << cfg.train.epochs << "\nseed = " << cfg.train.seed
      << "\nlambda = " << FormatDouble(cfg.lambda)
      << "\nnormalize_kernel = " << (cfg.normalize_kernel ? "true" : "false")
      << "\npositive_levels = "
      << (cfg.positive == PositivePolicy::kLevel2Only ? "2" : "2,3")
      << "\nlenient_tags = " << (cfg.lenient_tags ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace claudette
