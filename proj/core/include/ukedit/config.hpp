// core/include/ukedit/config.hpp

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

#ifndef UKEDIT_CONFIG_HPP_
#define UKEDIT_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ukedit {

// Flat INI-style configuration: "[section]" headers, "key = value" lines,
// '#' or ';' comments. Keys keep file order within their section. Relative
// paths resolve against the config file's directory, so a config travels
// with its data.
class Config {
 public:
  static Config load(const std::filesystem::path& path);
  static Config parse(std::string_view content, const std::filesystem::path& base_dir = ".");

  bool has_section(std::string_view section) const;
  std::optional<std::string> get(std::string_view section, std::string_view key) const;
  std::string require(std::string_view section, std::string_view key) const;
  std::int64_t require_int(std::string_view section, std::string_view key) const;
  std::optional<std::int64_t> get_int(std::string_view section, std::string_view key) const;

  // All key/value pairs of a section, in file order.
  std::vector<std::pair<std::string, std::string>> items(std::string_view section) const;

  std::filesystem::path resolve(const std::filesystem::path& path) const;
  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  struct Entry {
    std::string section;
    std::string key;
    std::string value;
  };
  std::vector<Entry> entries_;
  std::filesystem::path base_dir_ = ".";
};

}  // namespace ukedit

#endif  // UKEDIT_CONFIG_HPP_
