// core/src/gec.cpp

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

#include "ukedit/gec.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "ukedit/error.hpp"

namespace ukedit {

namespace {

enum class Op : unsigned char { Match, Sub, Del, Ins, Transpose };

// Fill-time tie-breaking fixes the backtrace, so extraction is deterministic
// across platforms.
std::vector<Op> align(const std::vector<std::string>& src, const std::vector<std::string>& hyp) {
  const std::size_t n = src.size();
  const std::size_t m = hyp.size();
  std::vector<std::uint32_t> cost((n + 1) * (m + 1));
  std::vector<Op> op((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t i = 1; i <= n; ++i) {
    cost[at(i, 0)] = static_cast<std::uint32_t>(i);
    op[at(i, 0)] = Op::Del;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    cost[at(0, j)] = static_cast<std::uint32_t>(j);
    op[at(0, j)] = Op::Ins;
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t best;
      Op chosen;
      if (src[i - 1] == hyp[j - 1]) {
        best = cost[at(i - 1, j - 1)];
        chosen = Op::Match;
      } else {
        best = cost[at(i - 1, j - 1)] + 1;
        chosen = Op::Sub;
      }
      if (std::uint32_t c = cost[at(i - 1, j)] + 1; c < best) {
        best = c;
        chosen = Op::Del;
      }
      if (std::uint32_t c = cost[at(i, j - 1)] + 1; c < best) {
        best = c;
        chosen = Op::Ins;
      }
      if (i >= 2 && j >= 2 && src[i - 1] == hyp[j - 2] && src[i - 2] == hyp[j - 1]) {
        if (std::uint32_t c = cost[at(i - 2, j - 2)] + 1; c < best) {
          best = c;
          chosen = Op::Transpose;
        }
      }
      cost[at(i, j)] = best;
      op[at(i, j)] = chosen;
    }
  }

  std::vector<Op> path;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    Op o = op[at(i, j)];
    path.push_back(o);
    switch (o) {
      case Op::Match:
      case Op::Sub: --i; --j; break;
      case Op::Del: --i; break;
      case Op::Ins: --j; break;
      case Op::Transpose: i -= 2; j -= 2; break;
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct CountKey {
  int start;
  int end;
  std::string replacement;

  bool operator<(const CountKey& o) const {
    return std::tie(start, end, replacement) < std::tie(o.start, o.end, o.replacement);
  }
  bool operator==(const CountKey& o) const {
    return start == o.start && end == o.end && replacement == o.replacement;
  }
};

std::vector<CountKey> normalized_keys(const std::vector<EditSpan>& edits) {
  std::vector<CountKey> keys;
  keys.reserve(edits.size());
  for (const EditSpan& e : edits)
    keys.push_back({e.start, e.end, normalize_tokens(e.replacement)});
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::int64_t multiset_intersection(const std::vector<CountKey>& a, const std::vector<CountKey>& b) {
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Sentence-level F0.5 as an exact rational: with c = |candidate| and
// g = |gold|, F = 5*tp / (g + 4*c) for tp > 0, 1 for the all-empty case,
// else 0. Exact comparison keeps annotator ties deterministic.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Rational sentence_f05(std::int64_t tp, std::int64_t candidate_size, std::int64_t gold_size) {
  if (candidate_size == 0 && gold_size == 0) return {1, 1};
  if (tp == 0) return {0, 1};
  return {5 * tp, gold_size + 4 * candidate_size};
}

bool greater(const Rational& a, const Rational& b) { return a.num * b.den > b.num * a.den; }

}  // namespace

std::vector<EditSpan> extract_edits(const TokenSeq& source, const TokenSeq& hypothesis) {
  std::vector<Op> path = align(source.tokens, hypothesis.tokens);

  std::vector<EditSpan> spans;
  std::size_t i = 0, j = 0;
  bool open = false;
  std::size_t run_start = 0;
  std::vector<std::string> run_repl;

  auto close = [&] {
    if (!open) return;
    EditSpan span;
    span.start = static_cast<int>(run_start);
    span.end = static_cast<int>(i);
    span.replacement = detokenize(run_repl);
    spans.push_back(std::move(span));
    run_repl.clear();
    open = false;
  };

  for (Op o : path) {
    if (o == Op::Match) {
      close();
      ++i;
      ++j;
      continue;
    }
    if (!open) {
      run_start = i;
      open = true;
    }
    switch (o) {
      case Op::Sub:
        run_repl.push_back(hypothesis.tokens[j]);
        ++i;
        ++j;
        break;
      case Op::Del:
        ++i;
        break;
      case Op::Ins:
        run_repl.push_back(hypothesis.tokens[j]);
        ++j;
        break;
      case Op::Transpose:
        run_repl.push_back(hypothesis.tokens[j]);
        run_repl.push_back(hypothesis.tokens[j + 1]);
        i += 2;
        j += 2;
        break;
      case Op::Match:
        break;
    }
  }
  close();
  return spans;
}

TokenSeq apply_edits(const TokenSeq& source, const std::vector<EditSpan>& edits) {
  const int n = static_cast<int>(source.size());
  int prev_end = -1;
  for (const EditSpan& e : edits) {
    if (e.start < 0 || e.end < e.start || e.end > n)
      throw ArgumentError("edit span out of bounds");
    if (e.start == e.end && e.replacement.empty())
      throw ArgumentError("edit changes nothing");
    if (prev_end > e.start) throw ArgumentError("edit spans overlap or are unsorted");
    prev_end = e.end;
  }

  TokenSeq out;
  out.tokens = source.tokens;
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    std::vector<std::string> repl = tokenize(it->replacement).tokens;
    out.tokens.erase(out.tokens.begin() + it->start, out.tokens.begin() + it->end);
    out.tokens.insert(out.tokens.begin() + it->start, repl.begin(), repl.end());
  }
  out.text = detokenize(out.tokens);
  return out;
}

GecSentenceResult score_sentence(const std::vector<EditSpan>& candidate,
                                 const GoldAnnotation& gold) {
  if (gold.annotators.empty()) throw ScoringError("annotation has no annotator sets");

  std::vector<CountKey> cand_keys = normalized_keys(candidate);

  GecSentenceResult best;
  Rational best_f{-1, 1};
  for (std::size_t a = 0; a < gold.annotators.size(); ++a) {
    std::vector<CountKey> gold_keys = normalized_keys(gold.annotators[a].edits);
    std::int64_t tp = multiset_intersection(cand_keys, gold_keys);
    std::int64_t fp = static_cast<std::int64_t>(cand_keys.size()) - tp;
    std::int64_t fn = static_cast<std::int64_t>(gold_keys.size()) - tp;
    Rational f = sentence_f05(tp, static_cast<std::int64_t>(cand_keys.size()),
                              static_cast<std::int64_t>(gold_keys.size()));
    if (greater(f, best_f)) {
      best_f = f;
      best = {tp, fp, fn, a};
    }
  }
  return best;
}

namespace {

GecCorpusScore finish_corpus(std::int64_t tp, std::int64_t fp, std::int64_t fn, double beta) {
  GecCorpusScore s;
  s.tp = tp;
  s.fp = fp;
  s.fn_ = fn;
  s.beta = beta;
  s.precision = (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  s.recall = (tp + fn) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  double pr = s.precision * s.recall;
  double b2 = beta * beta;
  s.f_beta = pr == 0.0 ? 0.0 : (1.0 + b2) * pr / (b2 * s.precision + s.recall);
  s.scaled = 100.0 * s.f_beta;
  return s;
}

}  // namespace

GecCorpusResult score_gec_corpus_detailed(const std::vector<std::string>& sources,
                                          const std::vector<std::string>& hypotheses,
                                          const std::vector<GoldAnnotation>& gold, double beta,
                                          unsigned jobs) {
  if (sources.size() != hypotheses.size() || sources.size() != gold.size())
    throw ArgumentError("sources, hypotheses, and gold must have equal lengths");

  const std::size_t n = sources.size();
  std::vector<GecSentenceResult> sentences(n);
  std::vector<std::string> failures(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      TokenSeq src = tokenize(nfc(sources[k]));
      if (src.tokens != gold[k].sentence.tokens) {
        failures[k] = "source tokenization disagrees with gold S line";
        continue;
      }
      TokenSeq hyp = tokenize(nfc(hypotheses[k]));
      std::vector<EditSpan> candidate = extract_edits(src, hyp);
      try {
        sentences[k] = score_sentence(candidate, gold[k]);
      } catch (const ScoringError& e) {
        failures[k] = e.what();
      }
    }
  };

  unsigned workers = std::max(1u, jobs);
  if (workers == 1 || n < 2 * workers) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t k = 0; k < n; ++k)
    if (!failures[k].empty()) throw ScoringError(failures[k], k);

  std::int64_t tp = 0, fp = 0, fn = 0;
  for (const GecSentenceResult& r : sentences) {
    tp += r.tp;
    fp += r.fp;
    fn += r.fn_;
  }

  GecCorpusResult result;
  result.score = finish_corpus(tp, fp, fn, beta);
  result.sentences = std::move(sentences);
  return result;
}

GecCorpusScore score_gec_corpus(const std::vector<std::string>& sources,
                                const std::vector<std::string>& hypotheses,
                                const std::vector<GoldAnnotation>& gold, double beta,
                                unsigned jobs) {
  return score_gec_corpus_detailed(sources, hypotheses, gold, beta, jobs).score;
}

}  // namespace ukedit
