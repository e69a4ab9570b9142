// core/include/ukedit/task.hpp

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

#ifndef UKEDIT_TASK_HPP_
#define UKEDIT_TASK_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ukedit {

// The four editing tasks the toolkit evaluates.
enum class Task { Gec, Simplification, Coherence, Paraphrasing };

inline constexpr std::array<Task, 4> kAllTasks = {Task::Gec, Task::Simplification,
                                                  Task::Coherence, Task::Paraphrasing};

std::string_view task_name(Task task);
std::optional<Task> task_from_name(std::string_view name);

enum class Split { Train, Validation, Test };

inline constexpr std::array<Split, 3> kAllSplits = {Split::Train, Split::Validation, Split::Test};

std::string_view split_name(Split split);
std::optional<Split> split_from_name(std::string_view name);

// Datasets each task may draw from. Everything else is rejected at load time.
bool is_valid_dataset(Task task, std::string_view dataset);

}  // namespace ukedit

#endif  // UKEDIT_TASK_HPP_
