// core/include/ukedit/modelclient.hpp

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

#ifndef UKEDIT_MODELCLIENT_HPP_
#define UKEDIT_MODELCLIENT_HPP_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ukedit/corpus.hpp"
#include "ukedit/verbalizer.hpp"

namespace ukedit {

// A chat-completions endpoint. base_url includes any path prefix (e.g.
// "http://127.0.0.1:8080/v1"); requests POST to <base_url>/chat/completions.
// The API key is read from the environment variable named by api_key_env
// (empty = unauthenticated endpoint) and is never logged.
struct EndpointConfig {
  std::string base_url;
  std::string model_name;
  std::string api_key_env;
  int max_in_flight = 4;
  std::chrono::milliseconds timeout{30000};
  int retries = 2;
  std::chrono::milliseconds backoff{100};
  std::optional<double> temperature;  // omitted from requests unless set
};

enum class RunStatus { Ok, Filtered, Error, Timeout };

std::string_view run_status_name(RunStatus status);
std::optional<RunStatus> run_status_from_name(std::string_view name);

// One completed request. status == Ok exactly when response_text is present.
struct RunRecord {
  std::string example_id;
  std::string prompt;
  std::optional<std::string> response_text;
  RunStatus status = RunStatus::Error;
  std::chrono::milliseconds latency{0};
  std::string detail;  // short failure description, never the API key
};

// Issues one chat completion with the prompt as the sole user message.
// Transient failures are retried with exponential backoff; every outcome
// (including missing API key or unreachable host) lands in the RunRecord,
// nothing escapes as an exception.
RunRecord complete(const EndpointConfig& cfg, const std::string& prompt,
                   const std::string& example_id = "");

// Receives every RunRecord of a batch run, tagged with the verbalizer used.
// append() must tolerate concurrent calls.
class RunSink {
 public:
  virtual ~RunSink() = default;
  virtual void append(const std::string& verbalizer_id, const RunRecord& record) = 0;
};

// JSONL run ledger; a single synchronized writer appends
// {"verbalizer_id","example_id","prompt","status","response","latency_ms"}.
class RunLedger : public RunSink {
 public:
  explicit RunLedger(const std::filesystem::path& path);
  ~RunLedger() override;
  void append(const std::string& verbalizer_id, const RunRecord& record) override;

  // (verbalizer_id, example_id) -> record, for offline replay.
  static std::map<std::pair<std::string, std::string>, RunRecord> load(
      const std::filesystem::path& path);

 private:
  struct Impl;
  Impl* impl_;
};

// Prompts every example with "<verbalizer> <source>" under bounded
// concurrency (cfg.max_in_flight). Outputs come back in input order; any
// non-ok request falls back to the unchanged input. Throws ArgumentError if
// the verbalizer's task does not match every example.
std::vector<std::pair<std::string, std::string>> run_zero_shot(
    const EndpointConfig& cfg, const std::vector<ParallelExample>& examples,
    const Verbalizer& verbalizer, RunSink* sink = nullptr);

// Reconstructs run_zero_shot outputs from a loaded ledger without any
// network traffic. Missing or non-ok records fall back to the source.
std::vector<std::pair<std::string, std::string>> replay_zero_shot(
    const std::map<std::pair<std::string, std::string>, RunRecord>& ledger,
    const std::vector<ParallelExample>& examples, const Verbalizer& verbalizer);

struct SweepResult {
  std::string best_verbalizer_id;
  double best_score = 0.0;
  std::vector<std::pair<std::string, double>> per_verbalizer_scores;  // registry order
};

// Scores outputs of one full zero-shot run; higher is better.
using SweepScorer = std::function<double(const std::vector<std::string>& outputs)>;

// Runs run_zero_shot once per registry verbalizer of `task` and returns the
// argmax (ties -> lowest verbalizer id).
SweepResult sweep_verbalizers(const EndpointConfig& cfg,
                              const std::vector<ParallelExample>& examples,
                              const std::vector<Verbalizer>& registry, Task task,
                              const SweepScorer& scorer, RunSink* sink = nullptr);

// Replay-mode sweep over a previously recorded ledger.
SweepResult sweep_verbalizers_replay(
    const std::map<std::pair<std::string, std::string>, RunRecord>& ledger,
    const std::vector<ParallelExample>& examples, const std::vector<Verbalizer>& registry,
    Task task, const SweepScorer& scorer);

}  // namespace ukedit

#endif  // UKEDIT_MODELCLIENT_HPP_
