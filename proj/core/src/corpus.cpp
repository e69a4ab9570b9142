// core/src/corpus.cpp

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

#include "ukedit/corpus.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ukedit/error.hpp"
#include "ukedit/text.hpp"

namespace ukedit {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (static_cast<unsigned char>(s[b]) <= 0x20)) ++b;
  while (e > b && (static_cast<unsigned char>(s[e - 1]) <= 0x20)) --e;
  return std::string(s.substr(b, e - b));
}

std::string clean_text(std::string_view raw, std::size_t line_no) {
  std::u32string cps;
  if (!try_decode_utf8(raw, &cps)) throw ParseError("invalid UTF-8", line_no);
  return trim(nfc(raw));
}

ParallelExample from_json_line(const std::string& line, std::size_t line_no, Task task,
                               std::string_view dataset, Split split) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
  }
  if (!obj.is_object()) throw ParseError("expected a JSON object", line_no);
  if (!obj.contains("src") || !obj["src"].is_string())
    throw ParseError("missing string field \"src\"", line_no);
  if (!obj.contains("refs") || !obj["refs"].is_array())
    throw ParseError("missing array field \"refs\"", line_no);

  ParallelExample ex;
  ex.task = task;
  ex.dataset = std::string(dataset);
  ex.split = split;
  ex.source = clean_text(obj["src"].get<std::string>(), line_no);
  for (const auto& ref : obj["refs"]) {
    if (!ref.is_string()) throw ParseError("\"refs\" entries must be strings", line_no);
    ex.references.push_back(clean_text(ref.get<std::string>(), line_no));
  }
  if (obj.contains("id")) {
    if (!obj["id"].is_string()) throw ParseError("\"id\" must be a string", line_no);
    ex.id = obj["id"].get<std::string>();
  }
  return ex;
}

ParallelExample from_tsv_line(const std::string& line, std::size_t line_no, Task task,
                              std::string_view dataset, Split split) {
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos) throw ParseError("expected source<TAB>reference", line_no);
  if (line.find('\t', tab + 1) != std::string::npos)
    throw ParseError("expected exactly two tab-separated columns", line_no);

  ParallelExample ex;
  ex.task = task;
  ex.dataset = std::string(dataset);
  ex.split = split;
  ex.source = clean_text(line.substr(0, tab), line_no);
  ex.references.push_back(clean_text(line.substr(tab + 1), line_no));
  return ex;
}

void validate(ParallelExample& ex, std::size_t line_no, std::string_view dataset) {
  if (ex.source.empty()) throw ParseError("empty source text", line_no);
  if (ex.references.empty()) throw ParseError("empty reference list", line_no);
  if (ex.id.empty()) ex.id = std::string(dataset) + ":" + std::to_string(line_no);
}

}  // namespace

std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < content.size()) lines.emplace_back(content.substr(start));
      break;
    }
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ConfigError("short write to " + path.string());
}

std::vector<ParallelExample> parse_corpus(std::string_view content, Task task,
                                          std::string_view dataset, Split split) {
  if (!is_valid_dataset(task, dataset))
    throw ConfigError("dataset \"" + std::string(dataset) + "\" is not valid for task " +
                      std::string(task_name(task)));

  std::vector<ParallelExample> out;
  std::vector<std::string> lines = split_lines(content);

  bool jsonl = false;
  for (const std::string& line : lines) {
    std::string t = trim(line);
    if (!t.empty()) {
      jsonl = t.front() == '{';
      break;
    }
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t line_no = i + 1;
    if (trim(line).empty()) throw ParseError("blank line in corpus file", line_no);
    ParallelExample ex = jsonl ? from_json_line(line, line_no, task, dataset, split)
                               : from_tsv_line(line, line_no, task, dataset, split);
    validate(ex, line_no, dataset);
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<ParallelExample> load_corpus(const std::filesystem::path& path, Task task,
                                         std::string_view dataset, Split split) {
  return parse_corpus(read_file(path), task, dataset, split);
}

void write_corpus_jsonl(const std::filesystem::path& path,
                        const std::vector<ParallelExample>& examples) {
  std::string out;
  for (const ParallelExample& ex : examples) {
    nlohmann::json obj;
    obj["id"] = ex.id;
    obj["src"] = ex.source;
    obj["refs"] = ex.references;
    out += obj.dump();
    out.push_back('\n');
  }
  write_file(path, out);
}

}  // namespace ukedit
