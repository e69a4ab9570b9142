// tests/test_sari.cpp
#include "ukedit/sari.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"
#include "test_util.hpp"

using namespace ukedit;

namespace {
bool close_abs(double a, double b, double tol = 1e-6) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("sentence SARI matches the reference fixtures within 1e-6") {
  auto data = nlohmann::json::parse(read_file(fixture("sari_fixtures.json")));
  REQUIRE(data["sentences"].size() == 50);
  for (const auto& row : data["sentences"]) {
    SariScore s = sari_sentence(row["src"].get<std::string>(), row["hyp"].get<std::string>(),
                                row["refs"].get<std::vector<std::string>>());
    const auto& exp = row["expected"];
    CHECK(close_abs(s.sari, exp["sari"].get<double>()));
    CHECK(close_abs(s.f_keep, exp["keep"].get<double>()));
    CHECK(close_abs(s.p_del, exp["del"].get<double>()));
    CHECK(close_abs(s.f_add, exp["add"].get<double>()));
    CHECK(close_abs(s.scaled, 100.0 * exp["sari"].get<double>(), 1e-4));
  }
}

TEST_CASE("corpus SARI matches the reference fixture mean within 1e-6") {
  auto data = nlohmann::json::parse(read_file(fixture("sari_fixtures.json")));
  std::vector<SariExample> examples;
  for (const auto& row : data["sentences"])
    examples.push_back({row["src"].get<std::string>(), row["hyp"].get<std::string>(),
                        row["refs"].get<std::vector<std::string>>()});
  SariScore s = sari_corpus(examples);
  const auto& exp = data["corpus"];
  CHECK(close_abs(s.sari, exp["sari"].get<double>()));
  CHECK(close_abs(s.f_keep, exp["keep"].get<double>()));
  CHECK(close_abs(s.p_del, exp["del"].get<double>()));
  CHECK(close_abs(s.f_add, exp["add"].get<double>()));
}

TEST_CASE("SARI is invariant under reference permutation") {
  std::vector<std::string> refs = {"а б в г", "а в г", "б в г д"};
  std::string src = "а б в д";
  std::string hyp = "а в г д";
  SariScore base = sari_sentence(src, hyp, refs);
  std::sort(refs.begin(), refs.end());
  do {
    SariScore s = sari_sentence(src, hyp, refs);
    CHECK(s.sari == doctest::Approx(base.sari).epsilon(1e-12));
  } while (std::next_permutation(refs.begin(), refs.end()));
}

TEST_CASE("corpus SARI is invariant under example permutation") {
  auto data = nlohmann::json::parse(read_file(fixture("sari_fixtures.json")));
  std::vector<SariExample> examples;
  for (const auto& row : data["sentences"])
    examples.push_back({row["src"].get<std::string>(), row["hyp"].get<std::string>(),
                        row["refs"].get<std::vector<std::string>>()});
  SariScore base = sari_corpus(examples);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    std::shuffle(examples.begin(), examples.end(), rng);
    SariScore s = sari_corpus(examples);
    CHECK(s.sari == base.sari);  // bit-exact under the sorted-sum rule
  }
}

TEST_CASE("SARI handles empty hypotheses and stays within bounds") {
  SariScore s = sari_sentence("а б в", "", {"а б"});
  CHECK(s.sari >= 0.0);
  CHECK(s.sari <= 1.0);
  CHECK(s.scaled >= 0.0);
  CHECK(s.scaled <= 100.0);

  std::mt19937 rng(17);
  static const char* vocab[] = {"а", "б", "в", "г", "д", "е"};
  for (int iter = 0; iter < 500; ++iter) {
    auto sentence = [&](std::size_t max_len) {
      std::string out;
      std::size_t n = rng() % (max_len + 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (!out.empty()) out += " ";
        out += vocab[rng() % 6];
      }
      return out;
    };
    std::vector<std::string> refs = {sentence(6)};
    if (rng() % 2) refs.push_back(sentence(6));
    SariScore r = sari_sentence(sentence(6), sentence(6), refs);
    CHECK(r.scaled >= 0.0);
    CHECK(r.scaled <= 100.0);
    CHECK(r.sari == doctest::Approx((r.f_add + r.f_keep + r.p_del) / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("SARI rejects empty inputs where the contract says so") {
  CHECK_THROWS_AS(sari_sentence("а", "а", {}), ArgumentError);
  CHECK_THROWS_AS(sari_corpus({}), ArgumentError);
}

TEST_CASE("single-example corpus equals the sentence score") {
  SariExample ex{"а б в г", "а в г", {"а в г", "а б г"}};
  SariScore corpus = sari_corpus({ex});
  SariScore sentence = sari_sentence(ex.source, ex.hypothesis, ex.references);
  CHECK(corpus.sari == doctest::Approx(sentence.sari).epsilon(1e-12));
}
