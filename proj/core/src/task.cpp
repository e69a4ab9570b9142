// core/src/task.cpp

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

#include "ukedit/task.hpp"

namespace ukedit {

std::string_view task_name(Task task) {
  switch (task) {
    case Task::Gec: return "gec";
    case Task::Simplification: return "simplification";
    case Task::Coherence: return "coherence";
    case Task::Paraphrasing: return "paraphrasing";
  }
  return "";
}

std::optional<Task> task_from_name(std::string_view name) {
  if (name == "gec") return Task::Gec;
  if (name == "simplification") return Task::Simplification;
  if (name == "coherence") return Task::Coherence;
  if (name == "paraphrasing") return Task::Paraphrasing;
  return std::nullopt;
}

std::string_view split_name(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "";
}

std::optional<Split> split_from_name(std::string_view name) {
  if (name == "train") return Split::Train;
  if (name == "validation") return Split::Validation;
  if (name == "test") return Split::Test;
  return std::nullopt;
}

bool is_valid_dataset(Task task, std::string_view dataset) {
  switch (task) {
    case Task::Gec:
      return dataset == "ua-gec";
    case Task::Simplification:
      return dataset == "wikilarge" || dataset == "wikiauto" || dataset == "asset" ||
             dataset == "turk";
    case Task::Coherence:
      return dataset == "discofuse" || dataset == "iterater";
    case Task::Paraphrasing:
      return dataset == "paws" || dataset == "mrpc" || dataset == "sts" || dataset == "qqp";
  }
  return false;
}

}  // namespace ukedit
