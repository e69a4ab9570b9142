// core/include/ukedit/instruct.hpp

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

#ifndef UKEDIT_INSTRUCT_HPP_
#define UKEDIT_INSTRUCT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ukedit/corpus.hpp"
#include "ukedit/verbalizer.hpp"

namespace ukedit {

// Unbiased index draw in [0, n). std::uniform_int_distribution is
// implementation-defined, so splits would not reproduce across standard
// libraries; this rejection sampler is pinned instead.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);

// A prompt/target pair: "<verbalizer> <source>" -> first reference.
struct InstructionExample {
  ParallelExample base;
  std::string verbalizer_id;
  std::string instruction;  // the verbalizer text
  std::string prompt;       // instruction + " " + base.source
  std::string target;       // base.references[0]
};

// A named subset of the instruction set (used for task ablations).
struct Mixture {
  std::string name;
  std::set<Task> included_tasks;
  std::uint64_t seed = 0;
  std::vector<InstructionExample> examples;
};

// Pairs every example with a verbalizer drawn uniformly from its task's
// registry subset. One mt19937_64(seed) stream, consumed in input order, so
// identical (inputs, seed) reproduce identical outputs on any platform.
// Throws ConfigError if some example's task has no registry entry.
std::vector<InstructionExample> assign_verbalizers(const std::vector<ParallelExample>& examples,
                                                   const std::vector<Verbalizer>& registry,
                                                   std::uint64_t seed);

// Uniform partition without replacement; both sides keep the input's
// relative order. Throws ArgumentError when val_count > |examples|.
std::pair<std::vector<ParallelExample>, std::vector<ParallelExample>> split_train_val(
    const std::vector<ParallelExample>& examples, std::size_t val_count, std::uint64_t seed);

// Everything except the held-out task; included_tasks has the other three.
Mixture build_ablation_mixture(const std::vector<InstructionExample>& full, Task held_out);

// Instruction dataset JSONL: one object per line with fields
// {"task","dataset","split","verbalizer_id","instruction","src","prompt","tgt"}.
std::string instruction_jsonl(const std::vector<InstructionExample>& examples);
std::vector<InstructionExample> parse_instruction_jsonl(std::string_view content);

}  // namespace ukedit

#endif  // UKEDIT_INSTRUCT_HPP_
