// core/src/sari.cpp

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

#include "ukedit/sari.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

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

Counter scale(const Counter& c, std::int64_t factor) {
  Counter out = c;
  for (auto& [key, count] : out) count *= factor;
  return out;
}

// Saturating multiset intersection / difference, Counter-style: only
// strictly positive entries are kept.
Counter intersect(const Counter& a, const Counter& b) {
  Counter out;
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    if (it != b.end()) {
      std::int64_t v = std::min(count, it->second);
      if (v > 0) out[key] = v;
    }
  }
  return out;
}

Counter subtract(const Counter& a, const Counter& b) {
  Counter out;
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    std::int64_t v = count - (it == b.end() ? 0 : it->second);
    if (v > 0) out[key] = v;
  }
  return out;
}

struct OperationScores {
  double keep = 0.0;
  double del = 0.0;
  double add = 0.0;
};

double f1(double p, double r) { return (p > 0.0 || r > 0.0) ? 2.0 * p * r / (p + r) : 0.0; }

OperationScores sari_order(const std::vector<std::string>& src_tokens,
                           const std::vector<std::string>& hyp_tokens,
                           const std::vector<std::vector<std::string>>& ref_tokens,
                           std::size_t order) {
  const std::int64_t numref = static_cast<std::int64_t>(ref_tokens.size());

  Counter src = ngram_counts(src_tokens, order);
  Counter hyp = ngram_counts(hyp_tokens, order);
  Counter refs;
  for (const auto& ref : ref_tokens)
    for (const auto& [key, count] : ngram_counts(ref, order)) refs[key] += count;

  Counter src_rep = scale(src, numref);
  Counter hyp_rep = scale(hyp, numref);

  OperationScores scores;

  // KEEP: n-grams retained from the source, judged against the references.
  Counter keep_rep = intersect(src_rep, hyp_rep);
  Counter keep_good = intersect(keep_rep, refs);
  Counter keep_all = intersect(src_rep, refs);
  double keep_p_sum = 0.0, keep_r_sum = 0.0;
  for (const auto& [key, count] : keep_good) {
    keep_p_sum += static_cast<double>(count) / static_cast<double>(keep_rep.at(key));
    keep_r_sum += static_cast<double>(count) / static_cast<double>(keep_all.at(key));
  }
  double keep_p = keep_rep.empty() ? 0.0 : keep_p_sum / static_cast<double>(keep_rep.size());
  double keep_r = keep_all.empty() ? 0.0 : keep_r_sum / static_cast<double>(keep_all.size());
  scores.keep = f1(keep_p, keep_r);

  // DELETE: n-grams dropped from the source; precision only.
  Counter del_rep = subtract(src_rep, hyp_rep);
  Counter del_good = subtract(del_rep, refs);
  double del_p_sum = 0.0;
  for (const auto& [key, count] : del_good)
    del_p_sum += static_cast<double>(count) / static_cast<double>(del_rep.at(key));
  scores.del = del_rep.empty() ? 0.0 : del_p_sum / static_cast<double>(del_rep.size());

  // ADD: n-grams newly introduced; set semantics.
  std::set<std::string> add_set;
  for (const auto& [key, count] : hyp)
    if (src.find(key) == src.end()) add_set.insert(key);
  std::int64_t add_good = 0;
  for (const std::string& key : add_set)
    if (refs.find(key) != refs.end()) ++add_good;
  std::int64_t add_all = 0;
  for (const auto& [key, count] : refs)
    if (src.find(key) == src.end()) ++add_all;
  double add_p = add_set.empty() ? 0.0
                                 : static_cast<double>(add_good) / static_cast<double>(add_set.size());
  double add_r = add_all == 0 ? 0.0 : static_cast<double>(add_good) / static_cast<double>(add_all);
  scores.add = f1(add_p, add_r);

  return scores;
}

std::vector<std::string> lowered_tokens(const std::string& text) {
  std::vector<std::string> tokens = tokenize(text).tokens;
  for (std::string& t : tokens) t = lowercase(t);
  return tokens;
}

// Mean with the addends sorted first, so corpus scores do not depend on
// example order.
double stable_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

SariScore sari_sentence_tokens(const std::vector<std::string>& source,
                               const std::vector<std::string>& hypothesis,
                               const std::vector<std::vector<std::string>>& references) {
  if (references.empty()) throw ArgumentError("SARI needs at least one reference");

  SariScore score;
  for (std::size_t order = 1; order <= 4; ++order) {
    OperationScores s = sari_order(source, hypothesis, references, order);
    score.f_keep += s.keep / 4.0;
    score.p_del += s.del / 4.0;
    score.f_add += s.add / 4.0;
  }
  score.sari = (score.f_add + score.f_keep + score.p_del) / 3.0;
  score.scaled = 100.0 * score.sari;
  return score;
}

SariScore sari_sentence(const std::string& source, const std::string& hypothesis,
                        const std::vector<std::string>& references) {
  std::vector<std::vector<std::string>> ref_tokens;
  ref_tokens.reserve(references.size());
  for (const std::string& ref : references) ref_tokens.push_back(lowered_tokens(ref));
  return sari_sentence_tokens(lowered_tokens(source), lowered_tokens(hypothesis), ref_tokens);
}

SariScore sari_corpus(const std::vector<SariExample>& examples) {
  if (examples.empty()) throw ArgumentError("SARI corpus must be non-empty");

  std::vector<double> add, keep, del;
  add.reserve(examples.size());
  keep.reserve(examples.size());
  del.reserve(examples.size());
  for (const SariExample& ex : examples) {
    SariScore s = sari_sentence(ex.source, ex.hypothesis, ex.references);
    add.push_back(s.f_add);
    keep.push_back(s.f_keep);
    del.push_back(s.p_del);
  }

  SariScore out;
  out.f_add = stable_mean(std::move(add));
  out.f_keep = stable_mean(std::move(keep));
  out.p_del = stable_mean(std::move(del));
  out.sari = (out.f_add + out.f_keep + out.p_del) / 3.0;
  out.scaled = 100.0 * out.sari;
  return out;
}

}  // namespace ukedit
