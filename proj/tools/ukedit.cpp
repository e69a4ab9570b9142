// tools/ukedit.cpp

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

// Command-line surface: build / score / sweep / ablate / report.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ukedit/config.hpp"
#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"
#include "ukedit/gec.hpp"
#include "ukedit/instruct.hpp"
#include "ukedit/m2.hpp"
#include "ukedit/modelclient.hpp"
#include "ukedit/report.hpp"
#include "ukedit/verbalizer.hpp"
#include "ukedit/version.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ukedit;

std::string now_rfc3339() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Task parse_task_or_throw(const std::string& name) {
  auto task = task_from_name(name);
  if (!task)
    throw ConfigError("unknown task \"" + name + "\" (expected gec, simplification, "
                      "coherence, or paraphrasing)");
  return *task;
}

// "dataset=path" or a bare path (GEC only, defaults to ua-gec).
std::pair<std::string, std::string> parse_corpus_arg(const std::string& arg, Task task) {
  std::size_t eq = arg.find('=');
  if (eq == std::string::npos) {
    if (task == Task::Gec) return {"ua-gec", arg};
    throw ConfigError("--corpus for this task needs the form dataset=path: " + arg);
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

struct LoadedCorpus {
  std::vector<ParallelExample> examples;
  std::vector<std::string> sources;
};

LoadedCorpus load_eval_corpus(const std::vector<std::string>& corpus_args, Task task) {
  LoadedCorpus out;
  for (const std::string& arg : corpus_args) {
    auto [dataset, path] = parse_corpus_arg(arg, task);
    auto part = load_corpus(path, task, dataset, Split::Test);
    out.examples.insert(out.examples.end(), part.begin(), part.end());
  }
  for (const ParallelExample& ex : out.examples) out.sources.push_back(ex.source);
  return out;
}

std::vector<std::string> load_hyp_lines(const fs::path& path, std::size_t expected) {
  std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty()) throw ConfigError("hypothesis file " + path.string() + " is empty");
  if (lines.size() != expected)
    throw ConfigError("hypothesis file " + path.string() + " has " +
                      std::to_string(lines.size()) + " lines, corpus has " +
                      std::to_string(expected));
  return lines;
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

struct CorpusKey {
  Task task;
  std::string dataset;
  bool operator<(const CorpusKey& o) const {
    if (task != o.task) return static_cast<int>(task) < static_cast<int>(o.task);
    return dataset < o.dataset;
  }
};

int cmd_build(const fs::path& config_path, std::optional<std::string> out_dir_flag,
              std::optional<std::uint64_t> seed_flag) {
  Config cfg = Config::load(config_path);

  std::uint64_t seed = seed_flag ? *seed_flag
                                 : static_cast<std::uint64_t>(
                                       cfg.get_int("build", "seed").value_or(0));
  fs::path out_dir = out_dir_flag ? fs::path(*out_dir_flag)
                                  : cfg.resolve(cfg.get("build", "out_dir").value_or("out"));

  const std::vector<Verbalizer>* registry = &load_verbalizer_registry();
  std::vector<Verbalizer> file_registry;
  if (auto reg_path = cfg.get("build", "verbalizer_registry")) {
    file_registry = load_verbalizer_registry_file(cfg.resolve(*reg_path));
    registry = &file_registry;
  }

  // Load every corpus in config order; remember first-seen dataset order.
  std::map<CorpusKey, std::map<Split, std::vector<ParallelExample>>> buckets;
  std::vector<CorpusKey> order;
  for (const auto& [key, value] : cfg.items("corpus")) {
    std::size_t a = key.find('/');
    std::size_t b = a == std::string::npos ? std::string::npos : key.find('/', a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw ConfigError("[corpus] keys must look like task/dataset/split: " + key);
    Task task = parse_task_or_throw(key.substr(0, a));
    std::string dataset = key.substr(a + 1, b - a - 1);
    auto split = split_from_name(key.substr(b + 1));
    if (!split) throw ConfigError("unknown split in [corpus] key: " + key);

    CorpusKey ck{task, dataset};
    if (buckets.find(ck) == buckets.end()) order.push_back(ck);
    auto loaded = load_corpus(cfg.resolve(value), task, dataset, *split);
    auto& dest = buckets[ck][*split];
    dest.insert(dest.end(), loaded.begin(), loaded.end());
  }
  if (order.empty()) throw ConfigError("config has no [corpus] section");

  // Carve validation sets out of train where requested.
  for (const auto& [key, value] : cfg.items("split")) {
    std::size_t a = key.find('/');
    if (a == std::string::npos)
      throw ConfigError("[split] keys must look like task/dataset: " + key);
    CorpusKey ck{parse_task_or_throw(key.substr(0, a)), key.substr(a + 1)};
    auto it = buckets.find(ck);
    if (it == buckets.end() || it->second[Split::Train].empty())
      throw ConfigError("[split] " + key + " has no train corpus to split");
    std::size_t val_count = static_cast<std::size_t>(cfg.require_int("split", key));
    auto [train, val] = split_train_val(it->second[Split::Train], val_count, seed);
    for (ParallelExample& ex : val) ex.split = Split::Validation;
    it->second[Split::Train] = std::move(train);
    auto& vdest = it->second[Split::Validation];
    vdest.insert(vdest.end(), val.begin(), val.end());
  }

  // Assemble split-major example lists in config order.
  std::map<Split, std::vector<ParallelExample>> by_split;
  for (Split s : kAllSplits)
    for (const CorpusKey& ck : order) {
      auto& src = buckets[ck][s];
      auto& dst = by_split[s];
      dst.insert(dst.end(), src.begin(), src.end());
    }

  // Counts and manifest.
  json counts = json::object();
  std::map<std::string, std::map<std::string, std::size_t>> tally;
  for (Split s : kAllSplits) {
    std::size_t total = 0;
    for (const ParallelExample& ex : by_split[s]) {
      ++tally[std::string(split_name(s))][std::string(task_name(ex.task))];
      ++total;
    }
    tally[std::string(split_name(s))]["total"] = total;
  }
  for (const auto& [split, per_task] : tally) {
    for (const auto& [task, n] : per_task) counts[split][task] = n;
  }

  // Instruction assignment per split (seed offset by split index).
  std::map<Split, std::uint64_t> split_seed = {{Split::Train, seed},
                                               {Split::Validation, seed + 1},
                                               {Split::Test, seed + 2}};
  for (Split s : kAllSplits) {
    auto assigned = assign_verbalizers(by_split[s], *registry, split_seed[s]);
    write_file(out_dir / (std::string(split_name(s)) + ".jsonl"), instruction_jsonl(assigned));
  }

  json verbalizer_counts = json::object();
  for (Task t : kAllTasks)
    verbalizer_counts[std::string(task_name(t))] = verbalizers_for_task(*registry, t).size();
  verbalizer_counts["total"] = registry->size();

  json manifest;
  manifest["tool"] = std::string("ukedit ") + kVersion;
  manifest["seed"] = seed;
  manifest["counts"] = counts;
  manifest["verbalizers"] = verbalizer_counts;
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");

  // Expectations: any mismatch is a hard failure.
  int failures = 0;
  for (const auto& [key, value] : cfg.items("expect")) {
    std::size_t a = key.find('/');
    if (a == std::string::npos)
      throw ConfigError("[expect] keys must look like split/task: " + key);
    std::string split = key.substr(0, a);
    std::string task = key.substr(a + 1);
    std::size_t expected = static_cast<std::size_t>(cfg.require_int("expect", key));
    std::size_t actual = tally.count(split) && tally[split].count(task) ? tally[split][task] : 0;
    if (actual != expected) {
      std::cerr << "ukedit build: expectation failed: " << key << " = " << actual
                << ", expected " << expected << "\n";
      ++failures;
    }
  }

  std::cout << "wrote " << (out_dir / "manifest.json").string() << "\n";
  for (Split s : kAllSplits)
    std::cout << "  " << split_name(s) << ": " << by_split[s].size() << " examples\n";
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

ScoreReport finish_report(const std::string& system, const TaskReport& task_report,
                          std::optional<std::uint64_t> seed) {
  ScoreReport report = make_score_report(system, task_report);
  report.metadata["tool"] = std::string("ukedit ") + kVersion;
  report.metadata["timestamp"] = now_rfc3339();
  if (seed) report.metadata["seed"] = std::to_string(*seed);
  return report;
}

void write_score_outputs(const fs::path& out_dir, const TaskReport& task_report,
                         const ScoreReport& report) {
  write_file(out_dir / ("score_" + std::string(task_name(task_report.task)) + ".json"),
             task_report_json(task_report));
  write_file(out_dir / "report.json", score_report_json(report));
  std::string table = render_table({report});
  write_file(out_dir / "report.txt", table);
  std::cout << table;

  if (task_report.task == Task::Gec && !task_report.gec_sentences.empty()) {
    std::string diag;
    for (std::size_t i = 0; i < task_report.gec_sentences.size(); ++i) {
      const GecSentenceResult& r = task_report.gec_sentences[i];
      json row;
      row["idx"] = i;
      row["tp"] = r.tp;
      row["fp"] = r.fp;
      row["fn"] = r.fn_;
      row["annotator"] = r.chosen_annotator;
      diag += row.dump();
      diag.push_back('\n');
    }
    write_file(out_dir / "gec_sentences.jsonl", diag);
  }
}

int cmd_score(const std::string& task_name_arg, const std::vector<std::string>& corpus_args,
              const fs::path& hyp_path, std::optional<std::string> gold_path,
              const std::string& system, const fs::path& out_dir, unsigned jobs,
              std::optional<std::uint64_t> seed) {
  Task task = parse_task_or_throw(task_name_arg);
  LoadedCorpus corpus = load_eval_corpus(corpus_args, task);
  if (corpus.examples.empty()) throw ConfigError("no corpus examples loaded");
  std::vector<std::string> hyps = load_hyp_lines(hyp_path, corpus.examples.size());

  std::vector<GoldAnnotation> gold;
  const std::vector<GoldAnnotation>* gold_ptr = nullptr;
  if (gold_path) {
    gold = load_m2_file(*gold_path);
    gold_ptr = &gold;
  }

  TaskReport task_report = score_task(task, hyps, corpus.examples, gold_ptr, jobs);
  write_score_outputs(out_dir, task_report, finish_report(system, task_report, seed));
  return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

EndpointConfig endpoint_from_config(const Config& cfg) {
  EndpointConfig ep;
  ep.base_url = cfg.require("endpoint", "base_url");
  ep.model_name = cfg.get("endpoint", "model").value_or("default");
  ep.api_key_env = cfg.get("endpoint", "api_key_env").value_or("");
  ep.max_in_flight = static_cast<int>(cfg.get_int("endpoint", "max_in_flight").value_or(4));
  ep.timeout = std::chrono::milliseconds(cfg.get_int("endpoint", "timeout_ms").value_or(30000));
  ep.retries = static_cast<int>(cfg.get_int("endpoint", "retries").value_or(2));
  ep.backoff = std::chrono::milliseconds(cfg.get_int("endpoint", "backoff_ms").value_or(100));
  if (auto t = cfg.get("endpoint", "temperature")) ep.temperature = std::stod(*t);
  return ep;
}

int cmd_sweep(const std::string& task_name_arg, const fs::path& config_path,
              const std::vector<std::string>& corpus_args, std::optional<std::string> gold_path,
              fs::path ledger_path, bool replay, const fs::path& out_dir, unsigned jobs) {
  Task task = parse_task_or_throw(task_name_arg);

  LoadedCorpus corpus = load_eval_corpus(corpus_args, task);
  if (corpus.examples.empty()) throw ConfigError("no corpus examples loaded");

  std::vector<GoldAnnotation> gold;
  if (task == Task::Gec) {
    if (!gold_path) throw ConfigError("GEC sweeps require --gold");
    gold = load_m2_file(*gold_path);
  }

  // Ranking scalar per task: F0.5, SARI, or reference-based BLEU.
  SweepScorer scorer = [&](const std::vector<std::string>& outputs) {
    TaskReport r = score_task(task, outputs, corpus.examples,
                              task == Task::Gec ? &gold : nullptr, jobs);
    switch (task) {
      case Task::Gec: return r.aggregate.at(kMetricF05);
      case Task::Simplification:
      case Task::Coherence: return r.aggregate.at(kMetricSari);
      case Task::Paraphrasing: return r.aggregate.at(kMetricBleuRefBased);
    }
    return 0.0;
  };

  const std::vector<Verbalizer>& registry = load_verbalizer_registry();
  if (ledger_path.empty()) ledger_path = out_dir / "ledger.jsonl";

  SweepResult result;
  if (replay) {
    auto records = RunLedger::load(ledger_path);
    result = sweep_verbalizers_replay(records, corpus.examples, registry, task, scorer);
  } else {
    Config cfg = Config::load(config_path);
    RunLedger ledger(ledger_path);
    result = sweep_verbalizers(endpoint_from_config(cfg), corpus.examples, registry, task,
                               scorer, &ledger);
  }

  json out;
  out["task"] = std::string(task_name(task));
  json rows = json::array();
  for (const auto& [id, score] : result.per_verbalizer_scores)
    rows.push_back({{"verbalizer_id", id}, {"score", score}});
  out["per_verbalizer"] = rows;
  out["best"] = {{"verbalizer_id", result.best_verbalizer_id}, {"score", result.best_score}};
  write_file(out_dir / "sweep.json", out.dump(2) + "\n");

  std::cout << "best verbalizer: " << result.best_verbalizer_id << " ("
            << format_score(result.best_score) << ")\n";
  for (const auto& [id, score] : result.per_verbalizer_scores)
    std::cout << "  " << id << "  " << format_score(score) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ablate
// ---------------------------------------------------------------------------

int cmd_ablate(const fs::path& dataset_path, const std::string& hold_out_name,
               const fs::path& out_dir) {
  Task held_out = parse_task_or_throw(hold_out_name);
  std::vector<InstructionExample> full = parse_instruction_jsonl(read_file(dataset_path));
  Mixture mix = build_ablation_mixture(full, held_out);

  write_file(out_dir / (mix.name + ".jsonl"), instruction_jsonl(mix.examples));

  std::map<std::string, std::size_t> per_task;
  for (const InstructionExample& ie : mix.examples)
    ++per_task[std::string(task_name(ie.base.task))];

  json manifest;
  manifest["tool"] = std::string("ukedit ") + kVersion;
  manifest["name"] = mix.name;
  manifest["held_out"] = std::string(task_name(held_out));
  json inc = json::array();
  for (Task t : mix.included_tasks) inc.push_back(std::string(task_name(t)));
  manifest["included_tasks"] = inc;
  manifest["counts"] = per_task;
  manifest["total"] = mix.examples.size();
  write_file(out_dir / (mix.name + ".manifest.json"), manifest.dump(2) + "\n");

  std::cout << mix.name << ": " << mix.examples.size() << " examples\n";
  return 0;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& inputs, const fs::path& out_dir) {
  std::vector<ScoreReport> reports;
  ScoreReport merged;
  for (const std::string& path : inputs) {
    ScoreReport r = score_report_from_json(read_file(path));
    merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
    reports.push_back(std::move(r));
  }
  merged.metadata["tool"] = std::string("ukedit ") + kVersion;
  merged.metadata["timestamp"] = now_rfc3339();

  std::string table = render_table(reports);
  write_file(out_dir / "combined.json", score_report_json(merged));
  write_file(out_dir / "combined.txt", table);
  std::cout << table;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ukedit — evaluation toolkit for Ukrainian text editing"};
  app.set_version_flag("--version", std::string("ukedit ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir_flag;
  std::optional<std::string> config_flag;
  unsigned jobs = 1;
  app.add_option("--seed", seed, "Seed for all randomized steps");
  app.add_option("--out-dir", out_dir_flag, "Output directory");
  app.add_option("--config", config_flag, "Configuration file");
  app.add_option("--jobs", jobs, "Worker threads for scoring");

  auto* build = app.add_subcommand("build", "Build the instruction dataset from task corpora");

  auto* score = app.add_subcommand("score", "Score system outputs for one task");
  std::string score_task_name, score_system = "system";
  std::vector<std::string> score_corpus;
  std::string score_hyp;
  std::optional<std::string> score_gold;
  score->add_option("--task", score_task_name, "gec|simplification|coherence|paraphrasing")
      ->required();
  score->add_option("--corpus", score_corpus, "Corpus as dataset=path (repeatable)")->required();
  score->add_option("--hyp", score_hyp, "Hypothesis file, one line per corpus example")
      ->required();
  score->add_option("--gold", score_gold, "Gold M2 file (GEC)");
  score->add_option("--system", score_system, "System name for report rows");

  auto* sweep = app.add_subcommand("sweep", "Zero-shot verbalizer sweep against an endpoint");
  std::string sweep_task_name;
  std::vector<std::string> sweep_corpus;
  std::optional<std::string> sweep_gold;
  std::string sweep_ledger;
  bool sweep_replay = false;
  sweep->add_option("--task", sweep_task_name, "Task to sweep")->required();
  sweep->add_option("--corpus", sweep_corpus, "Corpus as dataset=path (repeatable)")->required();
  sweep->add_option("--gold", sweep_gold, "Gold M2 file (GEC)");
  sweep->add_option("--ledger", sweep_ledger, "Run ledger path (JSONL)");
  sweep->add_flag("--replay", sweep_replay, "Re-score from the ledger; no network calls");

  auto* ablate = app.add_subcommand("ablate", "Write a task-ablation training mixture");
  std::string ablate_dataset, ablate_hold_out;
  ablate->add_option("--dataset", ablate_dataset, "Full instruction dataset (JSONL)")->required();
  ablate->add_option("--hold-out", ablate_hold_out, "Task to hold out")->required();

  auto* report = app.add_subcommand("report", "Merge score reports into one table");
  std::vector<std::string> report_inputs;
  report->add_option("--input", report_inputs, "report.json files (repeatable)")->required();

  CLI11_PARSE(app, argc, argv);

  fs::path out_dir = out_dir_flag.value_or("out");

  try {
    if (build->parsed()) {
      if (!config_flag) throw ConfigError("build requires --config");
      return cmd_build(*config_flag, out_dir_flag, seed);
    }
    if (score->parsed())
      return cmd_score(score_task_name, score_corpus, score_hyp, score_gold, score_system,
                       out_dir, jobs, seed);
    if (sweep->parsed()) {
      if (!sweep_replay && !config_flag)
        throw ConfigError("sweep requires --config with an [endpoint] section");
      fs::path cfg_path = config_flag.value_or("");
      return cmd_sweep(sweep_task_name, cfg_path, sweep_corpus, sweep_gold, sweep_ledger,
                       sweep_replay, out_dir, jobs);
    }
    if (ablate->parsed()) return cmd_ablate(ablate_dataset, ablate_hold_out, out_dir);
    if (report->parsed()) return cmd_report(report_inputs, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "ukedit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
