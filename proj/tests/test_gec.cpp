// tests/test_gec.cpp
#include "ukedit/gec.hpp"

#include <random>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"
#include "test_util.hpp"

using namespace ukedit;

namespace {

TokenSeq seq(std::initializer_list<const char*> tokens) {
  TokenSeq s;
  for (const char* t : tokens) s.tokens.emplace_back(t);
  s.text = detokenize(s.tokens);
  return s;
}

// Brute force over annotators, independent of the scorer internals: long
// double F0.5 per the plain formula plus explicit 0/0 handling.
std::size_t brute_force_choice(const std::vector<EditSpan>& candidate,
                               const GoldAnnotation& gold) {
  auto key = [](const EditSpan& e) {
    return std::make_tuple(e.start, e.end, normalize_tokens(e.replacement));
  };
  long double best_f = -1.0L;
  std::size_t best = 0;
  for (std::size_t a = 0; a < gold.annotators.size(); ++a) {
    std::vector<std::tuple<int, int, std::string>> c, g;
    for (const EditSpan& e : candidate) c.push_back(key(e));
    for (const EditSpan& e : gold.annotators[a].edits) g.push_back(key(e));
    std::sort(c.begin(), c.end());
    std::sort(g.begin(), g.end());
    std::vector<std::tuple<int, int, std::string>> inter;
    std::set_intersection(c.begin(), c.end(), g.begin(), g.end(), std::back_inserter(inter));
    long double tp = static_cast<long double>(inter.size());
    long double p = c.empty() ? 1.0L : tp / c.size();
    long double r = g.empty() ? 1.0L : tp / g.size();
    long double f = (p * r == 0.0L) ? 0.0L : 1.25L * p * r / (0.25L * p + r);
    if (f > best_f + 1e-18L) {
      best_f = f;
      best = a;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("extract_edits identity and single substitution") {
  CHECK(extract_edits(seq({"а", "б", "в"}), seq({"а", "б", "в"})).empty());
  auto spans = extract_edits(seq({"A", "B", "C"}), seq({"A", "X", "C"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == EditSpan{1, 2, "X", ""});
}

TEST_CASE("extract_edits on the documented sentence pair") {
  TokenSeq src = tokenize("А ти, батюшка, стало бути, тут в сторожі?");
  TokenSeq hyp = tokenize("А ти, батюшко, стало бути, тут у сторожі?");
  auto spans = extract_edits(src, hyp);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == EditSpan{3, 4, "батюшко", ""});
  CHECK(spans[1] == EditSpan{9, 10, "у", ""});
}

TEST_CASE("extract_edits merges adjacent non-match runs") {
  auto spans = extract_edits(seq({"а", "б", "в", "г"}), seq({"а", "х", "у", "г"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == EditSpan{1, 3, "х у", ""});

  // insertion + substitution in one run
  spans = extract_edits(seq({"а", "б"}), seq({"а", "х", "у"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].start == 1);
  CHECK(spans[0].end == 2);
  CHECK(spans[0].replacement == "х у");
}

TEST_CASE("extract_edits treats adjacent transposition as one edit") {
  auto spans = extract_edits(seq({"а", "б"}), seq({"б", "а"}));
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == EditSpan{0, 2, "б а", ""});
}

TEST_CASE("extract_edits handles pure insertions and deletions") {
  auto ins = extract_edits(seq({"а", "в"}), seq({"а", "б", "в"}));
  REQUIRE(ins.size() == 1);
  CHECK(ins[0] == EditSpan{1, 1, "б", ""});

  auto del = extract_edits(seq({"а", "б", "в"}), seq({"а", "в"}));
  REQUIRE(del.size() == 1);
  CHECK(del[0] == EditSpan{1, 2, "", ""});

  auto all = extract_edits(seq({"а"}), TokenSeq{});
  REQUIRE(all.size() == 1);
  CHECK(all[0] == EditSpan{0, 1, "", ""});
}

TEST_CASE("apply_edits basics and validation") {
  TokenSeq abc = seq({"a", "b", "c"});
  CHECK(apply_edits(abc, {}).tokens == abc.tokens);
  CHECK(apply_edits(abc, {{1, 2, "", ""}}).tokens == std::vector<std::string>{"a", "c"});
  CHECK(apply_edits(abc, {{0, 0, "x", ""}, {2, 3, "y z", ""}}).tokens ==
        std::vector<std::string>{"x", "a", "b", "y", "z"});

  CHECK_THROWS_AS(apply_edits(abc, {{2, 1, "x", ""}}), ArgumentError);
  CHECK_THROWS_AS(apply_edits(abc, {{0, 4, "x", ""}}), ArgumentError);
  CHECK_THROWS_AS(apply_edits(abc, {{1, 1, "", ""}}), ArgumentError);
  CHECK_THROWS_AS(apply_edits(abc, {{0, 2, "x", ""}, {1, 3, "y", ""}}), ArgumentError);
}

TEST_CASE("apply after extract reproduces the hypothesis (property)") {
  static const char* vocab[] = {"а", "б", "в", "г", "ґ"};
  std::mt19937 rng(2025);
  for (int iter = 0; iter < 2000; ++iter) {
    TokenSeq src, hyp;
    std::size_t n = rng() % 12;
    std::size_t m = rng() % 12;
    for (std::size_t i = 0; i < n; ++i) src.tokens.push_back(vocab[rng() % 5]);
    for (std::size_t j = 0; j < m; ++j) hyp.tokens.push_back(vocab[rng() % 5]);
    auto spans = extract_edits(src, hyp);
    CHECK(apply_edits(src, spans).tokens == hyp.tokens);
    // Extracted spans are sorted, disjoint, and never no-ops.
    for (std::size_t k = 0; k + 1 < spans.size(); ++k)
      CHECK(spans[k].end <= spans[k + 1].start);
  }
}

TEST_CASE("score_sentence trivial cases") {
  GoldAnnotation gold;
  gold.sentence = seq({"а", "б", "в"});
  AnnotatorEdits set;
  set.edits = {{0, 1, "х", ""}, {2, 3, "у", ""}};
  gold.annotators.push_back(set);

  auto perfect = score_sentence(set.edits, gold);
  CHECK(perfect.tp == 2);
  CHECK(perfect.fp == 0);
  CHECK(perfect.fn_ == 0);

  auto empty = score_sentence({}, gold);
  CHECK(empty.tp == 0);
  CHECK(empty.fp == 0);
  CHECK(empty.fn_ == 2);

  // one correct + one spurious vs gold of 1
  GoldAnnotation gold1;
  gold1.sentence = gold.sentence;
  AnnotatorEdits one;
  one.edits = {{0, 1, "х", ""}};
  gold1.annotators.push_back(one);
  auto mixed = score_sentence({{0, 1, "х", ""}, {1, 2, "щ", ""}}, gold1);
  CHECK(mixed.tp == 1);
  CHECK(mixed.fp == 1);
  CHECK(mixed.fn_ == 0);

  GoldAnnotation no_sets;
  no_sets.sentence = gold.sentence;
  CHECK_THROWS_AS(score_sentence({}, no_sets), ScoringError);
}

TEST_CASE("score_sentence prefers the noop annotator for an empty candidate") {
  GoldAnnotation gold;
  gold.sentence = seq({"а", "б"});
  AnnotatorEdits with_edit;
  with_edit.id = 0;
  with_edit.edits = {{0, 1, "х", ""}};
  AnnotatorEdits noop;
  noop.id = 1;
  noop.noop = true;
  gold.annotators = {with_edit, noop};

  auto r = score_sentence({}, gold);
  CHECK(r.chosen_annotator == 1);
  CHECK(r.tp == 0);
  CHECK(r.fn_ == 0);
}

TEST_CASE("best annotator equals brute force on fixtures") {
  auto gold = load_m2_file(fixture("gec/gold.m2"));
  auto corpus = load_corpus(fixture("gec/corpus.jsonl"), Task::Gec, "ua-gec", Split::Test);
  auto hyps = split_lines(read_file(fixture("gec/hyp_noisy.txt")));
  REQUIRE(gold.size() == corpus.size());
  REQUIRE(hyps.size() == corpus.size());

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    REQUIRE(gold[i].annotators.size() <= 3);
    auto candidate = extract_edits(tokenize(corpus[i].source), tokenize(hyps[i]));
    auto result = score_sentence(candidate, gold[i]);
    CHECK(result.chosen_annotator == brute_force_choice(candidate, gold[i]));
  }
}

TEST_CASE("corpus GEC scores match the planted-edit expectations") {
  auto gold = load_m2_file(fixture("gec/gold.m2"));
  auto corpus = load_corpus(fixture("gec/corpus.jsonl"), Task::Gec, "ua-gec", Split::Test);
  std::vector<std::string> sources;
  for (const auto& ex : corpus) sources.push_back(ex.source);

  auto expected = nlohmann::json::parse(read_file(fixture("gec/expected.json")));

  for (const char* run : {"copy", "gold0", "noisy"}) {
    auto hyps = split_lines(read_file(fixture(std::string("gec/hyp_") + run + ".txt")));
    auto result = score_gec_corpus_detailed(sources, hyps, gold);
    const auto& exp = expected[run];
    CHECK(result.score.tp == exp["tp"].get<std::int64_t>());
    CHECK(result.score.fp == exp["fp"].get<std::int64_t>());
    CHECK(result.score.fn_ == exp["fn"].get<std::int64_t>());
    CHECK(result.score.scaled == doctest::Approx(exp["scaled"].get<double>()).epsilon(1e-9));

    if (std::string(run) == "noisy") {
      for (const auto& row : expected["noisy_sentences"]) {
        std::size_t idx = row["idx"].get<std::size_t>();
        CHECK(result.sentences[idx].tp == row["tp"].get<std::int64_t>());
        CHECK(result.sentences[idx].fp == row["fp"].get<std::int64_t>());
        CHECK(result.sentences[idx].fn_ == row["fn"].get<std::int64_t>());
        CHECK(result.sentences[idx].chosen_annotator == row["annotator"].get<std::size_t>());
      }
    }
  }
}

TEST_CASE("parallel corpus scoring matches single-threaded") {
  auto gold = load_m2_file(fixture("gec/gold.m2"));
  auto corpus = load_corpus(fixture("gec/corpus.jsonl"), Task::Gec, "ua-gec", Split::Test);
  std::vector<std::string> sources;
  for (const auto& ex : corpus) sources.push_back(ex.source);
  auto hyps = split_lines(read_file(fixture("gec/hyp_noisy.txt")));

  auto one = score_gec_corpus(sources, hyps, gold, 0.5, 1);
  auto four = score_gec_corpus(sources, hyps, gold, 0.5, 4);
  CHECK(one.tp == four.tp);
  CHECK(one.fp == four.fp);
  CHECK(one.fn_ == four.fn_);
  CHECK(one.scaled == four.scaled);
}

TEST_CASE("corpus scoring validates alignment and tokenization") {
  std::vector<std::string> sources = {"а б"};
  std::vector<std::string> hyps = {"а б"};
  auto gold = parse_m2("S а в\n");
  CHECK_THROWS_AS(score_gec_corpus(sources, {}, gold), ArgumentError);
  try {
    score_gec_corpus(sources, hyps, gold);
    FAIL("expected ScoringError");
  } catch (const ScoringError& e) {
    CHECK(e.sentence() == 0);
  }
}

TEST_CASE("adding edits moves F0.5 the right way (single annotator)") {
  std::mt19937 rng(31337);
  static const char* vocab[] = {"а", "б", "в", "г", "д", "е", "ж", "з", "и", "к"};
  for (int iter = 0; iter < 300; ++iter) {
    GoldAnnotation gold;
    std::size_t n = 5 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) gold.sentence.tokens.push_back(vocab[i]);
    AnnotatorEdits set;
    std::size_t pos = 0;
    while (pos + 1 < n) {
      if (rng() % 2) set.edits.push_back({static_cast<int>(pos), static_cast<int>(pos) + 1,
                                          std::string("х") + vocab[pos], ""});
      pos += 2;
    }
    gold.annotators.push_back(set);

    std::vector<EditSpan> candidate;
    for (const EditSpan& e : set.edits)
      if (rng() % 2) candidate.push_back(e);

    auto f_of = [&](const std::vector<EditSpan>& cand) {
      auto r = score_sentence(cand, gold);
      double p = (r.tp + r.fp) == 0 ? 1.0 : double(r.tp) / double(r.tp + r.fp);
      double rec = (r.tp + r.fn_) == 0 ? 1.0 : double(r.tp) / double(r.tp + r.fn_);
      return p * rec == 0.0 ? 0.0 : 1.25 * p * rec / (0.25 * p + rec);
    };

    double base = f_of(candidate);

    // A spurious edit never helps.
    std::vector<EditSpan> spurious = candidate;
    spurious.push_back({static_cast<int>(n), static_cast<int>(n), "зайвий", ""});
    CHECK(f_of(spurious) <= base + 1e-12);

    // A missing gold edit never hurts.
    for (const EditSpan& e : set.edits) {
      bool present = false;
      for (const EditSpan& c : candidate) present = present || c == e;
      if (!present) {
        std::vector<EditSpan> better = candidate;
        better.push_back(e);
        CHECK(f_of(better) >= base - 1e-12);
        break;
      }
    }
  }
}

TEST_CASE("F0.5 respects the 0/0 conventions and stays within bounds") {
  auto run = [](const char* m2, const char* hyp) {
    auto gold = parse_m2(m2);
    return score_gec_corpus({gold[0].sentence.text}, {hyp}, gold);
  };

  // tp=0 fp=0 fn=0: unchanged hypothesis against a noop annotation.
  auto clean = run("S все добре\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n",
                   "все добре");
  CHECK(clean.precision == 1.0);
  CHECK(clean.recall == 1.0);
  CHECK(clean.scaled == 100.0);

  // tp=0 fp=0 fn>0: copy against a sentence that needs an edit.
  auto copy = run("S а б\nA 0 1|||T|||х|||REQUIRED|||-NONE-|||0\n", "а б");
  CHECK(copy.precision == 1.0);
  CHECK(copy.recall == 0.0);
  CHECK(copy.scaled == 0.0);

  // tp=0 fp>0 fn=0: spurious edit against a noop annotation.
  auto spurious = run("S а б\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n", "х б");
  CHECK(spurious.precision == 0.0);
  CHECK(spurious.recall == 1.0);
  CHECK(spurious.scaled == 0.0);

  // tp=0 fp>0 fn>0: wrong edit against a sentence that needed another.
  auto wrong = run("S а б\nA 0 1|||T|||х|||REQUIRED|||-NONE-|||0\n", "а щ");
  CHECK(wrong.scaled == 0.0);

  for (const GecCorpusScore& s : {clean, copy, spurious, wrong}) {
    CHECK(s.f_beta >= 0.0);
    CHECK(s.f_beta <= 1.0);
    CHECK(s.scaled >= 0.0);
    CHECK(s.scaled <= 100.0);
  }
}
