// core/include/ukedit/verbalizer.hpp

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

#ifndef UKEDIT_VERBALIZER_HPP_
#define UKEDIT_VERBALIZER_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ukedit/task.hpp"

namespace ukedit {

// A Ukrainian instruction string that names an editing task. Every entry
// ends with ':' so prompts compose as "<text_uk> <source>".
struct Verbalizer {
  std::string id;
  Task task = Task::Gec;
  std::string text_uk;
  std::string gloss_en;
};

// The embedded registry: 9 GEC, 11 simplification, 7 coherence, and 13
// paraphrasing instructions (40 total).
const std::vector<Verbalizer>& load_verbalizer_registry();

// Escape hatch for experiments: JSONL rows
// {"id": str, "task": str, "text_uk": str, "gloss_en": str?}.
// Validates the ':' suffix and task names.
std::vector<Verbalizer> load_verbalizer_registry_file(const std::filesystem::path& path);

// Registry entries for one task, in registry order.
std::vector<Verbalizer> verbalizers_for_task(const std::vector<Verbalizer>& registry, Task task);

}  // namespace ukedit

#endif  // UKEDIT_VERBALIZER_HPP_
