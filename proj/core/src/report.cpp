// core/src/report.cpp

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

#include "ukedit/report.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "ukedit/bleu.hpp"
#include "ukedit/error.hpp"
#include "ukedit/sari.hpp"

namespace ukedit {

namespace {

using nlohmann::json;

// Slice indices per dataset, preserving corpus order.
std::map<std::string, std::vector<std::size_t>> group_by_dataset(
    const std::vector<ParallelExample>& corpus) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < corpus.size(); ++i) groups[corpus[i].dataset].push_back(i);
  return groups;
}

TaskReport score_gec_task(const std::vector<std::string>& outputs,
                          const std::vector<ParallelExample>& corpus,
                          const std::vector<GoldAnnotation>* gold, unsigned jobs) {
  if (gold == nullptr)
    throw ConfigError("GEC scoring requires gold M2 annotations");
  if (gold->size() != corpus.size())
    throw ArgumentError("gold annotation count does not match corpus size");

  std::vector<std::string> sources;
  sources.reserve(corpus.size());
  for (const ParallelExample& ex : corpus) sources.push_back(ex.source);

  GecCorpusResult result = score_gec_corpus_detailed(sources, outputs, *gold, 0.5, jobs);

  TaskReport report;
  report.task = Task::Gec;
  report.example_count = corpus.size();
  report.aggregate[kMetricF05] = result.score.scaled;
  report.gec_sentences = result.sentences;

  // Per-dataset slices reuse the per-sentence counts.
  for (const auto& [dataset, idx] : group_by_dataset(corpus)) {
    std::int64_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i : idx) {
      tp += result.sentences[i].tp;
      fp += result.sentences[i].fp;
      fn += result.sentences[i].fn_;
    }
    double p = (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    double r = (tp + fn) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    double f = p * r == 0.0 ? 0.0 : 1.25 * p * r / (0.25 * p + r);
    report.datasets[dataset][kMetricF05] = 100.0 * f;
  }
  return report;
}

TaskReport score_sari_task(Task task, const std::vector<std::string>& outputs,
                           const std::vector<ParallelExample>& corpus) {
  TaskReport report;
  report.task = task;
  report.example_count = corpus.size();

  std::vector<SariExample> pooled(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    pooled[i] = {corpus[i].source, outputs[i], corpus[i].references};

  report.aggregate[kMetricSari] = sari_corpus(pooled).scaled;
  for (const auto& [dataset, idx] : group_by_dataset(corpus)) {
    std::vector<SariExample> slice;
    slice.reserve(idx.size());
    for (std::size_t i : idx) slice.push_back(pooled[i]);
    report.datasets[dataset][kMetricSari] = sari_corpus(slice).scaled;
  }
  return report;
}

TaskReport score_paraphrase_task(const std::vector<std::string>& outputs,
                                 const std::vector<ParallelExample>& corpus) {
  TaskReport report;
  report.task = Task::Paraphrasing;
  report.example_count = corpus.size();

  std::vector<std::vector<std::string>> source_refs(corpus.size());
  std::vector<std::vector<std::string>> gold_refs(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    source_refs[i] = {corpus[i].source};
    gold_refs[i] = corpus[i].references;
  }

  report.aggregate[kMetricBleuRefFree] =
      bleu_corpus(outputs, source_refs, BleuMode::ReferenceFree).scaled;
  report.aggregate[kMetricBleuRefBased] =
      bleu_corpus(outputs, gold_refs, BleuMode::ReferenceBased).scaled;

  for (const auto& [dataset, idx] : group_by_dataset(corpus)) {
    std::vector<std::string> hyp_slice;
    std::vector<std::vector<std::string>> src_slice, ref_slice;
    for (std::size_t i : idx) {
      hyp_slice.push_back(outputs[i]);
      src_slice.push_back(source_refs[i]);
      ref_slice.push_back(gold_refs[i]);
    }
    report.datasets[dataset][kMetricBleuRefFree] =
        bleu_corpus(hyp_slice, src_slice, BleuMode::ReferenceFree).scaled;
    report.datasets[dataset][kMetricBleuRefBased] =
        bleu_corpus(hyp_slice, ref_slice, BleuMode::ReferenceBased).scaled;
  }
  return report;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

TaskReport score_task(Task task, const std::vector<std::string>& run_outputs,
                      const std::vector<ParallelExample>& test_corpus,
                      const std::vector<GoldAnnotation>* gold_m2, unsigned jobs) {
  if (run_outputs.size() != test_corpus.size())
    throw ArgumentError("outputs (" + std::to_string(run_outputs.size()) +
                        ") do not align with corpus (" + std::to_string(test_corpus.size()) + ")");
  if (test_corpus.empty()) throw ArgumentError("empty test corpus");
  for (const ParallelExample& ex : test_corpus)
    if (ex.task != task)
      throw ArgumentError("corpus example " + ex.id + " does not belong to task " +
                          std::string(task_name(task)));

  switch (task) {
    case Task::Gec:
      return score_gec_task(run_outputs, test_corpus, gold_m2, jobs);
    case Task::Simplification:
    case Task::Coherence:
      return score_sari_task(task, run_outputs, test_corpus);
    case Task::Paraphrasing:
      return score_paraphrase_task(run_outputs, test_corpus);
  }
  throw ArgumentError("unknown task");
}

std::string task_report_json(const TaskReport& report) {
  json out;
  out["task"] = std::string(task_name(report.task));
  json datasets = json::object();
  for (const auto& [name, metrics] : report.datasets) {
    json m = json::object();
    for (const auto& [metric, value] : metrics) m[metric] = round2(value);
    datasets[name] = m;
  }
  out["datasets"] = datasets;
  json agg = json::object();
  for (const auto& [metric, value] : report.aggregate) agg[metric] = round2(value);
  out["aggregate"] = agg;
  return out.dump(2) + "\n";
}

ScoreReport make_score_report(const std::string& system, const TaskReport& report) {
  ScoreReport sr;
  for (const auto& [dataset, metrics] : report.datasets)
    sr.rows.push_back({system, report.task, dataset, metrics});
  sr.rows.push_back({system, report.task, "aggregate", report.aggregate});
  return sr;
}

std::string score_report_json(const ScoreReport& report) {
  json rows = json::array();
  for (const ScoreRow& row : report.rows) {
    json r;
    r["system"] = row.system;
    r["task"] = std::string(task_name(row.task));
    r["dataset"] = row.dataset;
    json values = json::object();
    for (const auto& [metric, value] : row.values) values[metric] = value;
    r["values"] = values;
    rows.push_back(r);
  }
  json out;
  out["rows"] = rows;
  out["metadata"] = report.metadata;
  return out.dump(2) + "\n";
}

ScoreReport score_report_from_json(const std::string& json_text) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  ScoreReport report;
  for (const auto& r : obj.at("rows")) {
    ScoreRow row;
    row.system = r.at("system").get<std::string>();
    auto task = task_from_name(r.at("task").get<std::string>());
    if (!task) throw ParseError("unknown task in report: " + r.at("task").get<std::string>());
    row.task = *task;
    row.dataset = r.at("dataset").get<std::string>();
    for (const auto& [metric, value] : r.at("values").items())
      row.values[metric] = value.get<double>();
    report.rows.push_back(std::move(row));
  }
  if (obj.contains("metadata"))
    for (const auto& [key, value] : obj.at("metadata").items())
      report.metadata[key] = value.get<std::string>();
  return report;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string render_table(const std::vector<ScoreReport>& reports) {
  // system -> task -> aggregate cell text
  std::map<std::string, std::map<Task, std::string>> cells;
  std::vector<std::string> order;
  for (const ScoreReport& report : reports) {
    for (const ScoreRow& row : report.rows) {
      if (row.dataset != "aggregate") continue;
      if (cells.find(row.system) == cells.end()) order.push_back(row.system);
      std::string text;
      if (row.task == Task::Paraphrasing) {
        text = format_score(row.values.count(kMetricBleuRefFree) ? row.values.at(kMetricBleuRefFree) : 0.0) +
               "/" +
               format_score(row.values.count(kMetricBleuRefBased) ? row.values.at(kMetricBleuRefBased) : 0.0);
      } else if (!row.values.empty()) {
        text = format_score(row.values.begin()->second);
      }
      cells[row.system][row.task] = text;
    }
  }

  static constexpr const char* kHeaders[] = {"Model", "GEC", "Simplification", "Coherence",
                                             "Paraphrasing"};
  std::vector<std::size_t> widths;
  for (const char* h : kHeaders) widths.push_back(std::string(h).size());
  for (const std::string& system : order) {
    widths[0] = std::max(widths[0], system.size());
    int col = 1;
    for (Task t : kAllTasks) {
      auto it = cells[system].find(t);
      if (it != cells[system].end()) widths[col] = std::max(widths[col], it->second.size());
      ++col;
    }
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };

  std::string out;
  for (std::size_t c = 0; c < 5; ++c) out += pad(kHeaders[c], widths[c]) + (c + 1 < 5 ? "  " : "");
  out += "\n";
  for (std::size_t c = 0; c < 5; ++c)
    out += std::string(widths[c], '-') + (c + 1 < 5 ? "  " : "");
  out += "\n";
  for (const std::string& system : order) {
    out += pad(system, widths[0]) + "  ";
    int col = 1;
    for (Task t : kAllTasks) {
      auto it = cells[system].find(t);
      std::string cell = it == cells[system].end() ? "-" : it->second;
      out += pad(cell, widths[col]) + (col + 1 < 5 ? "  " : "");
      ++col;
    }
    out += "\n";
  }
  return out;
}

}  // namespace ukedit
