// core/src/bleu.cpp

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

#include "ukedit/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "ukedit/error.hpp"
#include "ukedit/text.hpp"

namespace ukedit {

namespace {

using Counter = std::map<std::string, std::int64_t>;

Counter ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  Counter counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key.push_back(' ');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

BleuScore bleu_corpus(const std::vector<std::string>& hypotheses,
                      const std::vector<std::vector<std::string>>& references_per_hyp,
                      BleuMode mode) {
  if (hypotheses.size() != references_per_hyp.size())
    throw ArgumentError("hypotheses and references must have equal lengths");
  if (hypotheses.empty()) throw ArgumentError("BLEU corpus must be non-empty");

  std::array<std::int64_t, 4> matched = {0, 0, 0, 0};
  std::array<std::int64_t, 4> total = {0, 0, 0, 0};
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    if (references_per_hyp[s].empty())
      throw ArgumentError("sentence " + std::to_string(s) + " has no references");

    std::vector<std::string> hyp = tokenize(nfc(hypotheses[s])).tokens;
    std::vector<std::vector<std::string>> refs;
    refs.reserve(references_per_hyp[s].size());
    for (const std::string& r : references_per_hyp[s]) refs.push_back(tokenize(nfc(r)).tokens);

    hyp_len += static_cast<std::int64_t>(hyp.size());

    // Closest reference length; ties prefer the shorter one.
    std::int64_t best_ref = static_cast<std::int64_t>(refs.front().size());
    for (const auto& r : refs) {
      std::int64_t len = static_cast<std::int64_t>(r.size());
      std::int64_t cur = std::llabs(len - static_cast<std::int64_t>(hyp.size()));
      std::int64_t best = std::llabs(best_ref - static_cast<std::int64_t>(hyp.size()));
      if (cur < best || (cur == best && len < best_ref)) best_ref = len;
    }
    ref_len += best_ref;

    for (std::size_t n = 1; n <= 4; ++n) {
      Counter hyp_counts = ngram_counts(hyp, n);
      Counter clip;
      for (const auto& r : refs)
        for (const auto& [key, count] : ngram_counts(r, n)) {
          auto it = clip.find(key);
          if (it == clip.end() || it->second < count) clip[key] = count;
        }
      for (const auto& [key, count] : hyp_counts) {
        auto it = clip.find(key);
        if (it != clip.end()) matched[n - 1] += std::min(count, it->second);
        total[n - 1] += count;
      }
    }
  }

  BleuScore score;
  score.mode = mode;
  score.hyp_len = hyp_len;
  score.ref_len = ref_len;

  double log_sum = 0.0;
  bool zero = false;
  for (std::size_t n = 0; n < 4; ++n) {
    double p = total[n] == 0 ? 0.0
                             : static_cast<double>(matched[n]) / static_cast<double>(total[n]);
    score.ngram_precisions[n] = p;
    if (p == 0.0)
      zero = true;
    else
      log_sum += std::log(p);
  }

  if (hyp_len == 0) {
    score.brevity_penalty = 0.0;
  } else if (hyp_len < ref_len) {
    score.brevity_penalty =
        std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  } else {
    score.brevity_penalty = 1.0;
  }

  score.bleu = zero ? 0.0 : score.brevity_penalty * std::exp(log_sum / 4.0);
  score.scaled = 100.0 * score.bleu;
  return score;
}

}  // namespace ukedit
