// core/src/modelclient.cpp

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

#include "ukedit/modelclient.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "ukedit/error.hpp"

namespace ukedit {

namespace {

using nlohmann::json;

struct ParsedUrl {
  std::string host_port;  // scheme://host[:port]
  std::string prefix;     // path prefix, no trailing slash
};

ParsedUrl parse_base_url(const std::string& base_url) {
  std::size_t scheme = base_url.find("://");
  std::size_t path = scheme == std::string::npos ? base_url.find('/')
                                                 : base_url.find('/', scheme + 3);
  ParsedUrl out;
  if (path == std::string::npos) {
    out.host_port = base_url;
  } else {
    out.host_port = base_url.substr(0, path);
    out.prefix = base_url.substr(path);
    while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  }
  return out;
}

std::string strip_response(std::string text) {
  // One trailing end-of-text marker, then surrounding whitespace.
  auto trim = [](std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  trim(text);
  for (const char* marker : {"<|endoftext|>", "</s>"}) {
    std::string m = marker;
    if (text.size() >= m.size() && text.compare(text.size() - m.size(), m.size(), m) == 0) {
      text.erase(text.size() - m.size());
      break;
    }
  }
  trim(text);
  return text;
}

bool looks_filtered(int status, const std::string& body) {
  if (status != 400 && status != 403 && status != 451) return false;
  return body.find("content_filter") != std::string::npos ||
         body.find("content management policy") != std::string::npos ||
         body.find("content policy") != std::string::npos;
}

bool retryable_status(int status) {
  return status == 408 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

std::string_view run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Filtered: return "filtered";
    case RunStatus::Error: return "error";
    case RunStatus::Timeout: return "timeout";
  }
  return "";
}

std::optional<RunStatus> run_status_from_name(std::string_view name) {
  if (name == "ok") return RunStatus::Ok;
  if (name == "filtered") return RunStatus::Filtered;
  if (name == "error") return RunStatus::Error;
  if (name == "timeout") return RunStatus::Timeout;
  return std::nullopt;
}

RunRecord complete(const EndpointConfig& cfg, const std::string& prompt,
                   const std::string& example_id) {
  RunRecord record;
  record.example_id = example_id;
  record.prompt = prompt;
  auto started = std::chrono::steady_clock::now();
  auto finish = [&](RunStatus status, std::optional<std::string> text, std::string detail) {
    record.status = status;
    record.response_text = std::move(text);
    record.detail = std::move(detail);
    record.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return record;
  };

  std::string api_key;
  if (!cfg.api_key_env.empty()) {
    const char* key = std::getenv(cfg.api_key_env.c_str());
    if (key == nullptr || *key == '\0')
      return finish(RunStatus::Error, std::nullopt,
                    "environment variable " + cfg.api_key_env + " is not set");
    api_key = key;
  }

  ParsedUrl url = parse_base_url(cfg.base_url);

  json body;
  body["model"] = cfg.model_name;
  body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
  if (cfg.temperature) body["temperature"] = *cfg.temperature;
  std::string payload = body.dump();

  httplib::Headers headers;
  if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

  bool saw_timeout = false;
  std::string last_detail = "request failed";

  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    if (attempt > 0) {
      auto delay = cfg.backoff * (1 << std::min(attempt - 1, 6));
      std::this_thread::sleep_for(std::min<std::chrono::milliseconds>(
          std::chrono::duration_cast<std::chrono::milliseconds>(delay),
          std::chrono::milliseconds(5000)));
    }

    httplib::Client client(url.host_port);
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(cfg.timeout);
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(cfg.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());

    httplib::Result res =
        client.Post(url.prefix + "/chat/completions", headers, payload, "application/json");

    if (!res) {
      saw_timeout = saw_timeout || res.error() == httplib::Error::ConnectionTimeout ||
                    res.error() == httplib::Error::Read;
      last_detail = std::string("transport error: ") + httplib::to_string(res.error());
      continue;  // transport failures are transient
    }

    if (res->status == 200) {
      json reply;
      try {
        reply = json::parse(res->body);
      } catch (const json::exception& e) {
        return finish(RunStatus::Error, std::nullopt,
                      std::string("unparseable response body: ") + e.what());
      }
      if (!reply.contains("choices") || !reply["choices"].is_array() ||
          reply["choices"].empty())
        return finish(RunStatus::Error, std::nullopt, "response has no choices");
      const json& choice = reply["choices"][0];
      std::string finish_reason = choice.value("finish_reason", "");
      if (finish_reason == "content_filter")
        return finish(RunStatus::Filtered, std::nullopt, "content filter");
      if (!choice.contains("message") || !choice["message"].contains("content") ||
          !choice["message"]["content"].is_string())
        return finish(RunStatus::Error, std::nullopt, "response has no message content");
      return finish(RunStatus::Ok,
                    strip_response(choice["message"]["content"].get<std::string>()), "");
    }

    if (looks_filtered(res->status, res->body))
      return finish(RunStatus::Filtered, std::nullopt,
                    "content filter (HTTP " + std::to_string(res->status) + ")");

    last_detail = "HTTP " + std::to_string(res->status);
    if (!retryable_status(res->status))
      return finish(RunStatus::Error, std::nullopt, last_detail);
  }

  return finish(saw_timeout ? RunStatus::Timeout : RunStatus::Error, std::nullopt, last_detail);
}

struct RunLedger::Impl {
  std::ofstream out;
  std::mutex mu;
};

RunLedger::RunLedger(const std::filesystem::path& path) : impl_(new Impl) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  impl_->out.open(path, std::ios::app | std::ios::binary);
  if (!impl_->out) {
    delete impl_;
    throw ConfigError("cannot open run ledger " + path.string());
  }
}

RunLedger::~RunLedger() { delete impl_; }

void RunLedger::append(const std::string& verbalizer_id, const RunRecord& record) {
  json obj;
  obj["verbalizer_id"] = verbalizer_id;
  obj["example_id"] = record.example_id;
  obj["prompt"] = record.prompt;
  obj["status"] = std::string(run_status_name(record.status));
  if (record.response_text) obj["response"] = *record.response_text;
  obj["latency_ms"] = record.latency.count();
  if (!record.detail.empty()) obj["detail"] = record.detail;

  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->out << obj.dump() << "\n";
  impl_->out.flush();
}

std::map<std::pair<std::string, std::string>, RunRecord> RunLedger::load(
    const std::filesystem::path& path) {
  std::map<std::pair<std::string, std::string>, RunRecord> out;
  std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    json obj;
    try {
      obj = json::parse(lines[i]);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad ledger JSON: ") + e.what(), i + 1);
    }
    RunRecord record;
    record.example_id = obj.value("example_id", "");
    record.prompt = obj.value("prompt", "");
    auto status = run_status_from_name(obj.value("status", ""));
    if (!status) throw ParseError("unknown status \"" + obj.value("status", "") + "\"", i + 1);
    record.status = *status;
    if (obj.contains("response")) record.response_text = obj["response"].get<std::string>();
    if (record.status == RunStatus::Ok && !record.response_text)
      throw ParseError("ok record without response", i + 1);
    record.latency = std::chrono::milliseconds(obj.value("latency_ms", 0));
    record.detail = obj.value("detail", "");
    out[{obj.value("verbalizer_id", ""), record.example_id}] = std::move(record);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> run_zero_shot(
    const EndpointConfig& cfg, const std::vector<ParallelExample>& examples,
    const Verbalizer& verbalizer, RunSink* sink) {
  for (const ParallelExample& ex : examples)
    if (ex.task != verbalizer.task)
      throw ArgumentError("example " + ex.id + " does not match verbalizer task " +
                          std::string(task_name(verbalizer.task)));

  std::vector<std::pair<std::string, std::string>> outputs(examples.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= examples.size()) return;
      const ParallelExample& ex = examples[i];
      std::string prompt = verbalizer.text_uk + " " + ex.source;
      RunRecord record = complete(cfg, prompt, ex.id);
      if (sink != nullptr) sink->append(verbalizer.id, record);
      // Unreachable, filtered, or failed requests leave the input unchanged.
      outputs[i] = {ex.id,
                    record.status == RunStatus::Ok ? *record.response_text : ex.source};
    }
  };

  unsigned workers = static_cast<unsigned>(std::max(1, cfg.max_in_flight));
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, examples.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return outputs;
}

std::vector<std::pair<std::string, std::string>> replay_zero_shot(
    const std::map<std::pair<std::string, std::string>, RunRecord>& ledger,
    const std::vector<ParallelExample>& examples, const Verbalizer& verbalizer) {
  std::vector<std::pair<std::string, std::string>> outputs;
  outputs.reserve(examples.size());
  for (const ParallelExample& ex : examples) {
    auto it = ledger.find({verbalizer.id, ex.id});
    bool ok = it != ledger.end() && it->second.status == RunStatus::Ok;
    outputs.emplace_back(ex.id, ok ? *it->second.response_text : ex.source);
  }
  return outputs;
}

namespace {

SweepResult pick_best(std::vector<std::pair<std::string, double>> scores) {
  SweepResult result;
  result.per_verbalizer_scores = std::move(scores);
  bool first = true;
  for (const auto& [id, score] : result.per_verbalizer_scores) {
    bool better = first || score > result.best_score ||
                  (score == result.best_score && id < result.best_verbalizer_id);
    if (better) {
      result.best_verbalizer_id = id;
      result.best_score = score;
      first = false;
    }
  }
  return result;
}

}  // namespace

SweepResult sweep_verbalizers(const EndpointConfig& cfg,
                              const std::vector<ParallelExample>& examples,
                              const std::vector<Verbalizer>& registry, Task task,
                              const SweepScorer& scorer, RunSink* sink) {
  std::vector<Verbalizer> pool = verbalizers_for_task(registry, task);
  if (pool.empty())
    throw ConfigError("registry has no verbalizer for task " + std::string(task_name(task)));

  std::vector<std::pair<std::string, double>> scores;
  for (const Verbalizer& v : pool) {
    auto outputs = run_zero_shot(cfg, examples, v, sink);
    std::vector<std::string> texts;
    texts.reserve(outputs.size());
    for (auto& [id, text] : outputs) texts.push_back(text);
    scores.emplace_back(v.id, scorer(texts));
  }
  return pick_best(std::move(scores));
}

SweepResult sweep_verbalizers_replay(
    const std::map<std::pair<std::string, std::string>, RunRecord>& ledger,
    const std::vector<ParallelExample>& examples, const std::vector<Verbalizer>& registry,
    Task task, const SweepScorer& scorer) {
  std::vector<Verbalizer> pool = verbalizers_for_task(registry, task);
  if (pool.empty())
    throw ConfigError("registry has no verbalizer for task " + std::string(task_name(task)));

  std::vector<std::pair<std::string, double>> scores;
  for (const Verbalizer& v : pool) {
    auto outputs = replay_zero_shot(ledger, examples, v);
    std::vector<std::string> texts;
    texts.reserve(outputs.size());
    for (auto& [id, text] : outputs) texts.push_back(text);
    scores.emplace_back(v.id, scorer(texts));
  }
  return pick_best(std::move(scores));
}

}  // namespace ukedit
