// core/include/ukedit/bleu.hpp

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

#ifndef UKEDIT_BLEU_HPP_
#define UKEDIT_BLEU_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ukedit {

// reference_free scores hypotheses against their sources (self-BLEU);
// reference_based against the usual references. The arithmetic is identical,
// the mode records which inputs were supplied.
enum class BleuMode { ReferenceBased, ReferenceFree };

// Classical corpus BLEU: case-sensitive, 4-gram, clipped counts pooled over
// the corpus, geometric mean, no smoothing. Reference length uses the
// closest-length rule (ties -> shorter). Brevity penalty is exp(1 - r/c)
// when c < r, else 1.
struct BleuScore {
  BleuMode mode = BleuMode::ReferenceBased;
  std::array<double, 4> ngram_precisions = {0.0, 0.0, 0.0, 0.0};
  double brevity_penalty = 1.0;
  double bleu = 0.0;
  double scaled = 0.0;  // 100 * bleu
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;
};

// references_per_hyp[i] are the references for hypotheses[i] (pass sources
// there for reference-free mode). Throws ArgumentError on length mismatch,
// an empty corpus, or an empty reference list.
BleuScore bleu_corpus(const std::vector<std::string>& hypotheses,
                      const std::vector<std::vector<std::string>>& references_per_hyp,
                      BleuMode mode);

}  // namespace ukedit

#endif  // UKEDIT_BLEU_HPP_
