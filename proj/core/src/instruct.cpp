// core/src/instruct.cpp

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

#include "ukedit/instruct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "ukedit/error.hpp"

namespace ukedit {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw ArgumentError("uniform_index: n must be positive");
  // Rejection sampling over the largest multiple of n below 2^64.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

std::vector<InstructionExample> assign_verbalizers(const std::vector<ParallelExample>& examples,
                                                   const std::vector<Verbalizer>& registry,
                                                   std::uint64_t seed) {
  std::map<Task, std::vector<const Verbalizer*>> by_task;
  for (const Verbalizer& v : registry) by_task[v.task].push_back(&v);

  std::mt19937_64 rng(seed);
  std::vector<InstructionExample> out;
  out.reserve(examples.size());

  for (const ParallelExample& ex : examples) {
    auto it = by_task.find(ex.task);
    if (it == by_task.end() || it->second.empty())
      throw ConfigError("registry has no verbalizer for task " +
                        std::string(task_name(ex.task)));
    const std::vector<const Verbalizer*>& pool = it->second;
    const Verbalizer& v = *pool[uniform_index(rng, pool.size())];

    InstructionExample ie;
    ie.base = ex;
    ie.verbalizer_id = v.id;
    ie.instruction = v.text_uk;
    ie.prompt = v.text_uk + " " + ex.source;
    ie.target = ex.references.front();
    out.push_back(std::move(ie));
  }
  return out;
}

std::pair<std::vector<ParallelExample>, std::vector<ParallelExample>> split_train_val(
    const std::vector<ParallelExample>& examples, std::size_t val_count, std::uint64_t seed) {
  if (val_count > examples.size())
    throw ArgumentError("val_count " + std::to_string(val_count) + " exceeds corpus size " +
                        std::to_string(examples.size()));

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);

  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(order[i - 1], order[j]);
  }

  std::vector<std::size_t> val_idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(val_count));
  std::sort(val_idx.begin(), val_idx.end());

  std::vector<bool> in_val(examples.size(), false);
  for (std::size_t i : val_idx) in_val[i] = true;

  std::pair<std::vector<ParallelExample>, std::vector<ParallelExample>> result;
  result.first.reserve(examples.size() - val_count);
  result.second.reserve(val_count);
  for (std::size_t i = 0; i < examples.size(); ++i)
    (in_val[i] ? result.second : result.first).push_back(examples[i]);
  return result;
}

Mixture build_ablation_mixture(const std::vector<InstructionExample>& full, Task held_out) {
  Mixture mix;
  mix.name = "ablate-" + std::string(task_name(held_out));
  for (Task t : kAllTasks)
    if (t != held_out) mix.included_tasks.insert(t);
  for (const InstructionExample& ie : full)
    if (ie.base.task != held_out) mix.examples.push_back(ie);
  return mix;
}

std::string instruction_jsonl(const std::vector<InstructionExample>& examples) {
  std::string out;
  for (const InstructionExample& ie : examples) {
    nlohmann::json obj;
    obj["task"] = std::string(task_name(ie.base.task));
    obj["dataset"] = ie.base.dataset;
    obj["split"] = std::string(split_name(ie.base.split));
    obj["verbalizer_id"] = ie.verbalizer_id;
    obj["instruction"] = ie.instruction;
    obj["src"] = ie.base.source;
    obj["prompt"] = ie.prompt;
    obj["tgt"] = ie.target;
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<InstructionExample> parse_instruction_jsonl(std::string_view content) {
  std::vector<InstructionExample> out;
  std::vector<std::string> lines = split_lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) throw ParseError("blank line in instruction file", i + 1);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), i + 1);
    }
    for (const char* field : {"task", "dataset", "split", "verbalizer_id", "instruction", "src",
                              "prompt", "tgt"}) {
      if (!obj.contains(field) || !obj[field].is_string())
        throw ParseError("missing string field \"" + std::string(field) + "\"", i + 1);
    }
    InstructionExample ie;
    auto task = task_from_name(obj["task"].get<std::string>());
    if (!task) throw ParseError("unknown task \"" + obj["task"].get<std::string>() + "\"", i + 1);
    auto split = split_from_name(obj["split"].get<std::string>());
    if (!split)
      throw ParseError("unknown split \"" + obj["split"].get<std::string>() + "\"", i + 1);
    ie.base.task = *task;
    ie.base.split = *split;
    ie.base.dataset = obj["dataset"].get<std::string>();
    ie.base.source = obj["src"].get<std::string>();
    ie.verbalizer_id = obj["verbalizer_id"].get<std::string>();
    ie.instruction = obj["instruction"].get<std::string>();
    ie.prompt = obj["prompt"].get<std::string>();
    ie.target = obj["tgt"].get<std::string>();
    ie.base.references.push_back(ie.target);
    ie.base.id = obj.value("id", ie.base.dataset + ":" + std::to_string(i + 1));
    out.push_back(std::move(ie));
  }
  return out;
}

}  // namespace ukedit
