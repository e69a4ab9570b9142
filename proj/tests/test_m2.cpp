// tests/test_m2.cpp
#include "ukedit/m2.hpp"

#include <random>

#include <doctest.h>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"
#include "test_util.hpp"

using namespace ukedit;

TEST_CASE("parse_m2 reads a single edit") {
  auto anns = parse_m2("S а ти йдеш\nA 0 1|||Orth|||А|||REQUIRED|||-NONE-|||0\n");
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].sentence.tokens == std::vector<std::string>{"а", "ти", "йдеш"});
  REQUIRE(anns[0].annotators.size() == 1);
  const AnnotatorEdits& set = anns[0].annotators[0];
  CHECK(set.id == 0);
  CHECK(!set.noop);
  REQUIRE(set.edits.size() == 1);
  CHECK(set.edits[0] == EditSpan{0, 1, "А", "Orth"});
}

TEST_CASE("parse_m2 noop line yields an empty annotator set") {
  auto anns = parse_m2("S все добре\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n");
  REQUIRE(anns.size() == 1);
  REQUIRE(anns[0].annotators.size() == 1);
  CHECK(anns[0].annotators[0].noop);
  CHECK(anns[0].annotators[0].edits.empty());
}

TEST_CASE("parse_m2 groups edits by annotator id") {
  auto anns = parse_m2(
      "S а б в\n"
      "A 0 1|||T|||х|||REQUIRED|||-NONE-|||1\n"
      "A 2 3|||T|||у|||REQUIRED|||-NONE-|||0\n");
  REQUIRE(anns.size() == 1);
  REQUIRE(anns[0].annotators.size() == 2);
  CHECK(anns[0].annotators[0].id == 0);
  CHECK(anns[0].annotators[0].edits[0].start == 2);
  CHECK(anns[0].annotators[1].id == 1);
  CHECK(anns[0].annotators[1].edits[0].start == 0);
}

TEST_CASE("parse_m2 sentence without A lines gets one implicit empty set") {
  auto anns = parse_m2("S все добре\n");
  REQUIRE(anns.size() == 1);
  REQUIRE(anns[0].annotators.size() == 1);
  CHECK(!anns[0].annotators[0].noop);
  CHECK(anns[0].annotators[0].edits.empty());
}

TEST_CASE("parse_m2 separates blocks on blank lines") {
  auto anns = parse_m2("S а б\n\nS в г\nA 0 1|||T|||х|||REQUIRED|||-NONE-|||0\n");
  REQUIRE(anns.size() == 2);
  CHECK(anns[0].annotators[0].edits.empty());
  CHECK(anns[1].annotators[0].edits.size() == 1);
}

TEST_CASE("parse_m2 maps -NONE- corrections to deletions") {
  auto anns = parse_m2("S а б в\nA 1 2|||Del|||-NONE-|||REQUIRED|||-NONE-|||0\n");
  CHECK(anns[0].annotators[0].edits[0].replacement.empty());
}

TEST_CASE("parse_m2 rejects malformed blocks with line numbers") {
  auto line_of = [](const char* content) {
    try {
      parse_m2(content);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  CHECK(line_of("A 0 1|||T|||х|||REQUIRED|||-NONE-|||0\n") == 1);          // A before S
  CHECK(line_of("S а б\nA x 1|||T|||х|||REQUIRED|||-NONE-|||0\n") == 2);   // non-integer
  CHECK(line_of("S а б\nA 0 9|||T|||х|||REQUIRED|||-NONE-|||0\n") == 2);   // out of range
  CHECK(line_of("S а б\nA 1 0|||T|||х|||REQUIRED|||-NONE-|||0\n") == 2);   // end < start
  CHECK(line_of("S а б\nA 0 1|||T|||х|||REQUIRED|||0\n") == 2);            // 5 fields
  CHECK(line_of("S а б\nA 1 1|||T|||-NONE-|||REQUIRED|||-NONE-|||0\n") == 2);  // no-change
  CHECK(line_of("S а б\nA -1 -1|||T|||х|||REQUIRED|||-NONE-|||0\n") == 2);  // -1 -1 not noop
  CHECK(line_of("S а б\nA 0 1|||noop|||х|||REQUIRED|||-NONE-|||0\n") == 2);  // noop offsets
  CHECK(line_of("S а б\nS в г\n") == 2);                                    // second S
  CHECK(line_of("S а б\nжодна з двох\n") == 2);                             // junk line
  CHECK(line_of("S а б в\n"
                "A 0 2|||T|||х|||REQUIRED|||-NONE-|||0\n"
                "A 1 3|||T|||у|||REQUIRED|||-NONE-|||0\n") == 2);            // overlap
  CHECK(line_of("S а б\n"
                "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n"
                "A 0 1|||T|||х|||REQUIRED|||-NONE-|||0\n") == 2);            // noop + edit
}

TEST_CASE("write_m2 of an empty list is empty") { CHECK(write_m2({}).empty()); }

TEST_CASE("write_m2 emits the canonical noop line") {
  GoldAnnotation ann;
  ann.sentence = tokenize("все добре");
  AnnotatorEdits set;
  set.noop = true;
  ann.annotators.push_back(set);
  CHECK(write_m2({ann}) == "S все добре\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n");
}

TEST_CASE("write_m2 writes deletions as -NONE-") {
  GoldAnnotation ann;
  ann.sentence = tokenize("а б в");
  AnnotatorEdits set;
  set.edits.push_back({1, 2, "", "Del"});
  ann.annotators.push_back(set);
  std::string text = write_m2({ann});
  CHECK(text.find("|||-NONE-|||REQUIRED") != std::string::npos);
  CHECK(parse_m2(text) == std::vector<GoldAnnotation>{ann});
}

TEST_CASE("parse/write round trip is identity on fixtures") {
  for (const char* name : {"gec/figure_pair.m2", "gec/gold.m2"}) {
    auto parsed = parse_m2(read_file(fixture(name)));
    REQUIRE(!parsed.empty());
    CHECK(parse_m2(write_m2(parsed)) == parsed);
  }
}

TEST_CASE("fuzzed parses never yield out-of-bounds spans") {
  std::mt19937 rng(4242);
  const std::vector<std::string> pieces = {
      "S а б в г\n", "S x\n", "A ", "0 1", "-1 -1", "9 12", "1 1", "2 1",
      "|||T|||", "|||noop|||", "у", "-NONE-", "|||REQUIRED|||-NONE-|||", "0\n", "1\n",
      "\n", "junk\n"};
  for (int iter = 0; iter < 3000; ++iter) {
    std::string content;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) content += pieces[rng() % pieces.size()];
    try {
      auto anns = parse_m2(content);
      for (const GoldAnnotation& ann : anns) {
        for (const AnnotatorEdits& set : ann.annotators) {
          for (const EditSpan& e : set.edits) {
            REQUIRE(e.start >= 0);
            REQUIRE(e.start <= e.end);
            REQUIRE(static_cast<std::size_t>(e.end) <= ann.sentence.size());
            REQUIRE(!(e.start == e.end && e.replacement.empty()));
          }
        }
      }
    } catch (const ParseError&) {
      // rejection is the only acceptable failure mode
    }
  }
}
