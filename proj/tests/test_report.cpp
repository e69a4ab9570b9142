// tests/test_report.cpp
#include "ukedit/report.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "ukedit/error.hpp"
#include "ukedit/m2.hpp"
#include "test_util.hpp"

using namespace ukedit;

namespace {

std::vector<ParallelExample> load_pair(const char* a, const char* b, Task task,
                                       const char* da, const char* db) {
  auto first = load_corpus(fixture(a), task, da, Split::Test);
  auto second = load_corpus(fixture(b), task, db, Split::Test);
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

std::vector<std::string> copy_outputs(const std::vector<ParallelExample>& corpus) {
  std::vector<std::string> out;
  for (const auto& ex : corpus) out.push_back(ex.source);
  return out;
}

}  // namespace

TEST_CASE("score_task dispatches SARI for simplification with per-dataset rows") {
  auto corpus = load_pair("build/simplification_asset_test.jsonl",
                          "build/simplification_turk_test.jsonl", Task::Simplification,
                          "asset", "turk");
  TaskReport report = score_task(Task::Simplification, copy_outputs(corpus), corpus);
  CHECK(report.datasets.size() == 2);
  CHECK(report.datasets.count("asset") == 1);
  CHECK(report.datasets.count("turk") == 1);
  CHECK(report.aggregate.count(kMetricSari) == 1);

  // Aggregate is the example-weighted pooling of the per-dataset values.
  double asset = report.datasets["asset"][kMetricSari];
  double turk = report.datasets["turk"][kMetricSari];
  double pooled = (8.0 * asset + 7.0 * turk) / 15.0;
  CHECK(report.aggregate[kMetricSari] == doctest::Approx(pooled).epsilon(1e-9));
}

TEST_CASE("score_task paraphrasing carries exactly the two BLEU values") {
  auto corpus = load_pair("build/paraphrasing_mrpc_test.jsonl",
                          "build/paraphrasing_sts_test.jsonl", Task::Paraphrasing, "mrpc", "sts");
  TaskReport report = score_task(Task::Paraphrasing, copy_outputs(corpus), corpus);
  CHECK(report.aggregate.size() == 2);
  CHECK(report.aggregate.count(kMetricBleuRefFree) == 1);
  CHECK(report.aggregate.count(kMetricBleuRefBased) == 1);
  CHECK(report.aggregate[kMetricBleuRefFree] == 100.0);  // copy run
  for (const auto& [dataset, values] : report.datasets) CHECK(values.size() == 2);
}

TEST_CASE("score_task GEC needs gold and produces diagnostics") {
  auto corpus = load_corpus(fixture("gec/corpus.jsonl"), Task::Gec, "ua-gec", Split::Test);
  auto gold = load_m2_file(fixture("gec/gold.m2"));
  CHECK_THROWS_AS(score_task(Task::Gec, copy_outputs(corpus), corpus, nullptr), ConfigError);

  TaskReport report = score_task(Task::Gec, copy_outputs(corpus), corpus, &gold);
  CHECK(report.aggregate[kMetricF05] == 0.0);
  CHECK(report.gec_sentences.size() == corpus.size());
}

TEST_CASE("score_task validates alignment and task membership") {
  auto corpus = load_corpus(fixture("build/paraphrasing_qqp_test.jsonl"), Task::Paraphrasing,
                            "qqp", Split::Test);
  std::vector<std::string> outputs = copy_outputs(corpus);
  outputs.pop_back();
  CHECK_THROWS_AS(score_task(Task::Paraphrasing, outputs, corpus), ArgumentError);
  CHECK_THROWS_AS(score_task(Task::Coherence, copy_outputs(corpus), corpus), ArgumentError);
  CHECK_THROWS_AS(score_task(Task::Paraphrasing, {}, {}), ArgumentError);
}

TEST_CASE("task report JSON rounds to two decimals at serialization") {
  auto corpus = load_corpus(fixture("build/coherence_discofuse_test.jsonl"), Task::Coherence,
                            "discofuse", Split::Test);
  TaskReport report = score_task(Task::Coherence, copy_outputs(corpus), corpus);
  auto parsed = nlohmann::json::parse(task_report_json(report));
  CHECK(parsed["task"] == "coherence");
  double serialized = parsed["aggregate"][kMetricSari].get<double>();
  double rounded = std::round(report.aggregate[kMetricSari] * 100.0) / 100.0;
  CHECK(serialized == doctest::Approx(rounded).epsilon(1e-12));
}

TEST_CASE("score report JSON keeps full precision and round trips") {
  auto corpus = load_corpus(fixture("build/coherence_iterater_test.jsonl"), Task::Coherence,
                            "iterater", Split::Test);
  TaskReport task_report = score_task(Task::Coherence, copy_outputs(corpus), corpus);
  ScoreReport report = make_score_report("copy", task_report);
  report.metadata["tool"] = "ukedit test";

  ScoreReport parsed = score_report_from_json(score_report_json(report));
  REQUIRE(parsed.rows.size() == report.rows.size());
  bool found = false;
  for (const ScoreRow& row : parsed.rows) {
    if (row.dataset == "aggregate") {
      found = true;
      CHECK(row.values.at(kMetricSari) == task_report.aggregate.at(kMetricSari));
    }
    CHECK(row.system == "copy");
  }
  CHECK(found);
  CHECK(parsed.metadata.at("tool") == "ukedit test");
}

TEST_CASE("render_table lays out one row per system with slash-joined BLEU") {
  ScoreReport a;
  a.rows.push_back({"copy", Task::Gec, "aggregate", {{kMetricF05, 0.0}}});
  a.rows.push_back({"copy", Task::Paraphrasing, "aggregate",
                    {{kMetricBleuRefFree, 100.0}, {kMetricBleuRefBased, 31.4}}});
  ScoreReport b;
  b.rows.push_back({"system-x", Task::Coherence, "aggregate", {{kMetricSari, 48.51}}});

  std::string table = render_table({a, b});
  CHECK(table.find("Model") != std::string::npos);
  CHECK(table.find("copy") != std::string::npos);
  CHECK(table.find("100.00/31.40") != std::string::npos);
  CHECK(table.find("system-x") != std::string::npos);
  CHECK(table.find("48.51") != std::string::npos);
  CHECK(table.find("0.00") != std::string::npos);
}

TEST_CASE("format_score renders two decimals") {
  CHECK(format_score(0.0) == "0.00");
  CHECK(format_score(21.984) == "21.98");
  CHECK(format_score(100.0) == "100.00");
}
