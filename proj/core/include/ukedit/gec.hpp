// core/include/ukedit/gec.hpp

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

#ifndef UKEDIT_GEC_HPP_
#define UKEDIT_GEC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ukedit/m2.hpp"
#include "ukedit/text.hpp"

namespace ukedit {

// One sentence's counts against its best-matching annotator.
struct GecSentenceResult {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn_ = 0;
  std::size_t chosen_annotator = 0;
};

// Corpus totals with the classic M2 conventions: undefined precision or
// recall counts as 1, and F is 0 whenever P*R is 0. That is what pins the
// copy baseline to exactly 0 on corpora where every sentence needs an edit.
struct GecCorpusScore {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn_ = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f_beta = 0.0;
  double beta = 0.5;
  double scaled = 0.0;  // 100 * f_beta
};

// Minimal-cost token alignment (match 0; substitution, insertion, deletion,
// adjacent transposition all 1; ties prefer match, then substitution,
// deletion, insertion, transposition) with maximal runs of adjacent
// non-match operations merged into single spans. Applying the result to
// `source` reproduces `hypothesis` exactly.
std::vector<EditSpan> extract_edits(const TokenSeq& source, const TokenSeq& hypothesis);

// Applies sorted, non-overlapping, in-bounds spans right to left.
// Throws ArgumentError otherwise.
TokenSeq apply_edits(const TokenSeq& source, const std::vector<EditSpan>& edits);

// Exact (start, end, replacement) matching against each annotator's set;
// returns the counts of the annotator with the best sentence-level F0.5
// (ties -> lowest index; comparison in exact integer arithmetic).
// Throws ScoringError when the annotation has no annotator sets.
GecSentenceResult score_sentence(const std::vector<EditSpan>& candidate,
                                 const GoldAnnotation& gold);

// Per-sentence extract + match, counts summed corpus wide (micro-average).
// Precondition per sentence: tokenize(source) equals the gold tokenization.
GecCorpusScore score_gec_corpus(const std::vector<std::string>& sources,
                                const std::vector<std::string>& hypotheses,
                                const std::vector<GoldAnnotation>& gold, double beta = 0.5,
                                unsigned jobs = 1);

// Same, also returning per-sentence diagnostics aligned with the input.
struct GecCorpusResult {
  GecCorpusScore score;
  std::vector<GecSentenceResult> sentences;
};
GecCorpusResult score_gec_corpus_detailed(const std::vector<std::string>& sources,
                                          const std::vector<std::string>& hypotheses,
                                          const std::vector<GoldAnnotation>& gold,
                                          double beta = 0.5, unsigned jobs = 1);

}  // namespace ukedit

#endif  // UKEDIT_GEC_HPP_
