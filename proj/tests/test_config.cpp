// tests/test_config.cpp
#include "ukedit/config.hpp"

#include <doctest.h>

#include "ukedit/error.hpp"

using namespace ukedit;

TEST_CASE("config parses sections, comments, and values with spaces") {
  Config cfg = Config::parse(
      "# comment\n"
      "[build]\n"
      "seed = 42\n"
      "out_dir = my out dir\n"
      "; another comment\n"
      "[corpus]\n"
      "gec/ua-gec/train = data/train.jsonl\n"
      "gec/ua-gec/test = data/test.jsonl\n",
      "/base");
  CHECK(cfg.require_int("build", "seed") == 42);
  CHECK(cfg.require("build", "out_dir") == "my out dir");
  CHECK(!cfg.get("build", "missing"));
  CHECK(cfg.has_section("corpus"));
  CHECK(!cfg.has_section("endpoint"));

  auto items = cfg.items("corpus");
  REQUIRE(items.size() == 2);
  CHECK(items[0].first == "gec/ua-gec/train");  // file order preserved
  CHECK(items[1].first == "gec/ua-gec/test");
}

TEST_CASE("config resolves relative paths against its directory") {
  Config cfg = Config::parse("[a]\nk = v\n", "/base/dir");
  CHECK(cfg.resolve("data/x.jsonl") == std::filesystem::path("/base/dir/data/x.jsonl"));
  CHECK(cfg.resolve("/abs/x.jsonl") == std::filesystem::path("/abs/x.jsonl"));
}

TEST_CASE("config rejects malformed lines") {
  CHECK_THROWS_AS(Config::parse("[unterminated\n"), ParseError);
  CHECK_THROWS_AS(Config::parse("[]\n"), ParseError);
  CHECK_THROWS_AS(Config::parse("no equals sign\n"), ParseError);
  CHECK_THROWS_AS(Config::parse("= value\n"), ParseError);
}

TEST_CASE("config integer accessors validate") {
  Config cfg = Config::parse("[a]\nn = 7\nbad = seven\n");
  CHECK(cfg.require_int("a", "n") == 7);
  CHECK(cfg.get_int("a", "missing") == std::nullopt);
  CHECK_THROWS_AS(cfg.require_int("a", "bad"), ConfigError);
  CHECK_THROWS_AS(cfg.require("a", "missing"), ConfigError);
}
