// core/include/ukedit/report.hpp

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

#ifndef UKEDIT_REPORT_HPP_
#define UKEDIT_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ukedit/corpus.hpp"
#include "ukedit/gec.hpp"

namespace ukedit {

// Metric keys used in reports.
inline constexpr const char* kMetricF05 = "f05";
inline constexpr const char* kMetricSari = "sari";
inline constexpr const char* kMetricBleuRefFree = "bleu_ref_free";
inline constexpr const char* kMetricBleuRefBased = "bleu_ref_based";

// Scores for one task: per-dataset values plus the example-weighted pooled
// aggregate. All values are on the 0..100 scale.
struct TaskReport {
  Task task = Task::Gec;
  std::map<std::string, std::map<std::string, double>> datasets;
  std::map<std::string, double> aggregate;
  std::size_t example_count = 0;
  std::vector<GecSentenceResult> gec_sentences;  // filled for GEC only
};

// Dispatches to the task's metric: F0.5 for GEC (gold required), SARI for
// simplification and coherence, both BLEU modes for paraphrasing.
// run_outputs must align with test_corpus; GEC gold must align too.
TaskReport score_task(Task task, const std::vector<std::string>& run_outputs,
                      const std::vector<ParallelExample>& test_corpus,
                      const std::vector<GoldAnnotation>* gold_m2 = nullptr, unsigned jobs = 1);

// {"task", "datasets": {...}, "aggregate": {...}} with values rounded to two
// decimals at serialization.
std::string task_report_json(const TaskReport& report);

// One line of the summary table.
struct ScoreRow {
  std::string system;
  Task task = Task::Gec;
  std::string dataset;  // "aggregate" for the pooled row
  std::map<std::string, double> values;
};

// Full-precision machine-readable report; the text table derives from it.
struct ScoreReport {
  std::vector<ScoreRow> rows;
  std::map<std::string, std::string> metadata;
};

ScoreReport make_score_report(const std::string& system, const TaskReport& report);

std::string score_report_json(const ScoreReport& report);
ScoreReport score_report_from_json(const std::string& json_text);

// Fixed-width table shaped like the summary results table: one row per
// system, one column per task, paraphrasing as "ref-free/ref-based".
std::string render_table(const std::vector<ScoreReport>& reports);

// Two-decimal fixed formatting used everywhere a score is printed.
std::string format_score(double value);

}  // namespace ukedit

#endif  // UKEDIT_REPORT_HPP_
