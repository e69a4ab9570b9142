// core/include/ukedit/corpus.hpp

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

#ifndef UKEDIT_CORPUS_HPP_
#define UKEDIT_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ukedit/task.hpp"

namespace ukedit {

// One source sentence with its reference rewrites. Text is stored UTF-8,
// NFC-composed, and trimmed of surrounding whitespace.
struct ParallelExample {
  std::string id;
  Task task = Task::Gec;
  std::string dataset;
  Split split = Split::Train;
  std::string source;
  std::vector<std::string> references;
};

// Loads a parallel corpus. The format is auto-detected from the first line:
// JSONL objects {"id": str?, "src": str, "refs": [str, ...]} or two-column
// TSV (source <TAB> reference). Missing ids become "<dataset>:<line_no>".
// Throws ParseError with a 1-based line number on malformed input and
// ConfigError when (task, dataset) is not a known pairing.
std::vector<ParallelExample> load_corpus(const std::filesystem::path& path, Task task,
                                         std::string_view dataset, Split split);

// Same parser over an in-memory buffer.
std::vector<ParallelExample> parse_corpus(std::string_view content, Task task,
                                          std::string_view dataset, Split split);

// Writes the JSONL shape accepted by load_corpus.
void write_corpus_jsonl(const std::filesystem::path& path,
                        const std::vector<ParallelExample>& examples);

// Reads a whole file; throws ConfigError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Splits on '\n', dropping a final empty segment and trailing '\r's.
std::vector<std::string> split_lines(std::string_view content);

}  // namespace ukedit

#endif  // UKEDIT_CORPUS_HPP_
