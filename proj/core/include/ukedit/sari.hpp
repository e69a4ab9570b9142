// core/include/ukedit/sari.hpp

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

#ifndef UKEDIT_SARI_HPP_
#define UKEDIT_SARI_HPP_

#include <string>
#include <vector>

namespace ukedit {

// Add/keep/delete n-gram operation scores averaged over orders 1..4:
// add and keep as F1, delete as precision, per the metric's original
// published implementation (inputs lowercased, multi-reference counts
// handled by replicating source/candidate counts, 0/0 components are 0).
struct SariScore {
  double f_add = 0.0;
  double f_keep = 0.0;
  double p_del = 0.0;
  double sari = 0.0;    // (f_add + f_keep + p_del) / 3
  double scaled = 0.0;  // 100 * sari
};

struct SariExample {
  std::string source;
  std::string hypothesis;
  std::vector<std::string> references;
};

// Sentence-level SARI. References must be non-empty (ArgumentError).
SariScore sari_sentence(const std::string& source, const std::string& hypothesis,
                        const std::vector<std::string>& references);

// Same on pre-tokenized input; no tokenization or case folding is applied.
SariScore sari_sentence_tokens(const std::vector<std::string>& source,
                               const std::vector<std::string>& hypothesis,
                               const std::vector<std::vector<std::string>>& references);

// Arithmetic mean of sentence scores (sorted before summation so the result
// is independent of example order). Throws ArgumentError on an empty list.
SariScore sari_corpus(const std::vector<SariExample>& examples);

}  // namespace ukedit

#endif  // UKEDIT_SARI_HPP_
