// core/include/ukedit/error.hpp

// Copyright 2026  ukedit contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef UKEDIT_ERROR_HPP_
#define UKEDIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ukedit {

// Malformed input data (bad UTF-8, bad M2 block, bad JSONL line).
// line() is 1-based; 0 means "not tied to a line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Caller passed inconsistent arguments (length mismatch, bad span list).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad or incomplete configuration (missing corpus path, unknown task).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scoring preconditions violated (gold/hypothesis misalignment).
// sentence() is the 0-based sentence index; SIZE_MAX means "not per-sentence".
class ScoringError : public std::runtime_error {
 public:
  explicit ScoringError(std::string message, std::size_t sentence = static_cast<std::size_t>(-1))
      : std::runtime_error(sentence == static_cast<std::size_t>(-1)
                               ? message
                               : "sentence " + std::to_string(sentence) + ": " + message),
        sentence_(sentence) {}

  std::size_t sentence() const { return sentence_; }

 private:
  std::size_t sentence_;
};

}  // namespace ukedit

#endif  // UKEDIT_ERROR_HPP_
