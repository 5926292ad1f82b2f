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

#ifndef CLAUDETTE_ERROR_H_
#define CLAUDETTE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace claudette {

// Every failure surfaced by the library carries one of these kinds so that
// callers (and the CLI exit-code mapping) can dispatch without parsing text.
enum class ErrorKind {
  // corpus
  kUnknownTag,
  kUnbalancedTag,
  kCrossedNesting,
  kEmptyTag,
  kEmptyCorpus,
  kIo,
  // features / tree bank
  kMissingTree,
  kTreeBankMismatch,
  // tree kernel
  kUnbalancedParens,
  kEmptyNode,
  kTrailingInput,
  kInvalidLambda,
  kDegenerateTree,
  kTooLarge,
  // learners
  kEmptyData,
  kSingleClass,
  kNotSquare,
  kDimensionMismatch,
  kLengthMismatch,
  kUnknownLabel,
  // evaluation
  kTooFewDocuments,
  // persistence / configuration
  kVersionMismatch,
  kBadModel,
  kBadConfig,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Error raised while reading annotated text; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string &message, int line, int column)
      : Error(kind, Format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string &message, int line, int column) {
    return message + " at line " + std::to_string(line) + ", column " +
           std::to_string(column);
  }

  int line_;
  int column_;
};

}  // namespace claudette

#endif  // CLAUDETTE_ERROR_H_
