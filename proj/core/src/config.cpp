// core/src/config.cpp

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

#include "ukedit/config.hpp"

#include <charconv>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"

namespace ukedit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Config Config::parse(std::string_view content, const std::filesystem::path& base_dir) {
  Config cfg;
  cfg.base_dir_ = base_dir;

  std::string section;
  std::vector<std::string> lines = split_lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("unterminated section header", i + 1);
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) throw ParseError("empty section name", i + 1);
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key = value", i + 1);
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", i + 1);
    cfg.entries_.push_back({section, key, value});
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  Config cfg = parse(read_file(path), path.has_parent_path() ? path.parent_path()
                                                             : std::filesystem::path("."));
  return cfg;
}

bool Config::has_section(std::string_view section) const {
  for (const Entry& e : entries_)
    if (e.section == section) return true;
  return false;
}

std::optional<std::string> Config::get(std::string_view section, std::string_view key) const {
  for (const Entry& e : entries_)
    if (e.section == section && e.key == key) return e.value;
  return std::nullopt;
}

std::string Config::require(std::string_view section, std::string_view key) const {
  auto value = get(section, key);
  if (!value)
    throw ConfigError("missing config key [" + std::string(section) + "] " + std::string(key));
  return *value;
}

std::optional<std::int64_t> Config::get_int(std::string_view section,
                                            std::string_view key) const {
  auto value = get(section, key);
  if (!value) return std::nullopt;
  std::int64_t parsed = 0;
  auto [ptr, ec] = std::from_chars(value->data(), value->data() + value->size(), parsed);
  if (ec != std::errc{} || ptr != value->data() + value->size())
    throw ConfigError("config key [" + std::string(section) + "] " + std::string(key) +
                      " is not an integer: \"" + *value + "\"");
  return parsed;
}

std::int64_t Config::require_int(std::string_view section, std::string_view key) const {
  auto value = get_int(section, key);
  if (!value)
    throw ConfigError("missing config key [" + std::string(section) + "] " + std::string(key));
  return *value;
}

std::vector<std::pair<std::string, std::string>> Config::items(std::string_view section) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Entry& e : entries_)
    if (e.section == section) out.emplace_back(e.key, e.value);
  return out;
}

std::filesystem::path Config::resolve(const std::filesystem::path& path) const {
  if (path.is_absolute()) return path;
  return base_dir_ / path;
}

}  // namespace ukedit
