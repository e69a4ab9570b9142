// core/src/verbalizer.cpp

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

#include "ukedit/verbalizer.hpp"

#include <nlohmann/json.hpp>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"

namespace ukedit {

namespace {

// Some instructions repeat verbatim in the released registry; ids keep the
// entries distinct so sampling weights follow the registry, not the text.
std::vector<Verbalizer> build_registry() {
  return {
      {"gec-01", Task::Gec, "Виправте граматику в цьому реченні:",
       "Correct the grammar in this sentence:"},
      {"gec-02", Task::Gec, "Виправте граматичні помилки в цьому реченні:",
       "Correct the grammatical errors in this sentence:"},
      {"gec-03", Task::Gec, "Удосконаліть граматику цього тексту:",
       "Improve the grammar of this text:"},
      {"gec-04", Task::Gec, "Виправте всі граматичні помилки:",
       "Correct all grammatical errors:"},
      {"gec-05", Task::Gec, "Зробіть речення граматичним:",
       "Make the sentence grammatical:"},
      {"gec-06", Task::Gec, "Видаліть граматичні помилки:",
       "Remove grammatical errors:"},
      {"gec-07", Task::Gec, "Виправте помилки в цьому тексті:",
       "Correct the errors in this text:"},
      {"gec-08", Task::Gec, "Виправте граматичні помилки:",
       "Correct the grammatical errors:"},
      {"gec-09", Task::Gec, "Виправити граматику:", "Correct the grammar:"},

      {"simp-01", Task::Simplification, "Спростіть речення:", "Simplify the sentences:"},
      {"simp-02", Task::Simplification, "Напишіть простішу версію для речення:",
       "Write a simpler version for the sentence:"},
      {"simp-03", Task::Simplification, "Спростіть це речення:", "Simplify this sentence:"},
      {"simp-04", Task::Simplification, "Зробіть речення простим:", "Make the sentence simple:"},
      {"simp-05", Task::Simplification, "Спростіть цей текст:", "Simplify this text:"},
      {"simp-06", Task::Simplification, "Перепишіть речення так, щоб воно було простішим:",
       "Rewrite the sentence so that it is simpler:"},
      {"simp-07", Task::Simplification, "Перепишіть це речення простіше:",
       "Rewrite this sentence more simply:"},
      {"simp-08", Task::Simplification, "Зробіть речення простіше:",
       "Make the sentences simpler:"},
      {"simp-09", Task::Simplification, "Спростіть цей текст:", "Simplify this text:"},
      {"simp-10", Task::Simplification, "Використовуйте простіші слова:", "Use simpler words:"},
      {"simp-11", Task::Simplification, "Зробіть цей текст легше для розуміння:",
       "Make this text easier to understand:"},

      {"coh-01", Task::Coherence, "Виправте зв'язність в реченні:",
       "Correct the coherence in the sentence:"},
      {"coh-02", Task::Coherence, "Покращіть зв'язність тексту:", "Improve text coherence:"},
      {"coh-03", Task::Coherence, "Виправте зв'язність в цьому тексті:",
       "Correct the coherence in this text:"},
      {"coh-04", Task::Coherence, "Виправте відсутність зв'язності в реченні:",
       "Correct the lack of coherence in the sentence:"},
      {"coh-05", Task::Coherence, "Виправте зв'язність в тексті:",
       "Correct the coherence in the text:"},
      {"coh-06", Task::Coherence, "Виправте зв'язність речення:",
       "Correct the coherence of the sentence:"},
      {"coh-07", Task::Coherence, "Зробіть текст більш зв'язним:",
       "Make the text more coherent:"},

      {"para-01", Task::Paraphrasing, "Перефразуйте речення:", "Rephrase the sentence:"},
      {"para-02", Task::Paraphrasing, "Перепишіть речення іншими словами:",
       "Rewrite the sentence in other words:"},
      {"para-03", Task::Paraphrasing, "Перефразуйте цей текст:", "Paraphrase this text:"},
      {"para-04", Task::Paraphrasing, "Перефразуйте це речення:", "Rephrase this sentence:"},
      {"para-05", Task::Paraphrasing, "Перефразуйте:", "Paraphrase:"},
      {"para-06", Task::Paraphrasing, "Напишіть перефраз для речення:",
       "Write a paraphrase for the sentence:"},
      {"para-07", Task::Paraphrasing, "Напишіть перефразовану версію речення:",
       "Write a paraphrased version of the sentence:"},
      {"para-08", Task::Paraphrasing, "Перепишіть це речення:", "Rewrite this sentence:"},
      {"para-09", Task::Paraphrasing, "Перепишіть цей текст:", "Rewrite this text:"},
      {"para-10", Task::Paraphrasing, "Переформулюйте це речення:", "Rephrase this sentence:"},
      {"para-11", Task::Paraphrasing, "Перефразуйте це речення:", "Paraphrase this sentence:"},
      {"para-12", Task::Paraphrasing, "Переформулюйте цей текст:", "Rephrase this text:"},
      {"para-13", Task::Paraphrasing, "Напишіть перефраз для цього тексту:",
       "Write a paraphrase for this text:"},
  };
}

void validate_entry(const Verbalizer& v, std::size_t line_no) {
  if (v.id.empty()) throw ParseError("verbalizer id must be non-empty", line_no);
  if (v.text_uk.empty() || v.text_uk.back() != ':')
    throw ParseError("verbalizer text must end with ':'", line_no);
}

}  // namespace

const std::vector<Verbalizer>& load_verbalizer_registry() {
  static const std::vector<Verbalizer> registry = build_registry();
  return registry;
}

std::vector<Verbalizer> load_verbalizer_registry_file(const std::filesystem::path& path) {
  std::vector<Verbalizer> out;
  std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), i + 1);
    }
    Verbalizer v;
    v.id = obj.value("id", "");
    auto task = task_from_name(obj.value("task", ""));
    if (!task) throw ParseError("unknown task \"" + obj.value("task", "") + "\"", i + 1);
    v.task = *task;
    v.text_uk = obj.value("text_uk", "");
    v.gloss_en = obj.value("gloss_en", "");
    validate_entry(v, i + 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verbalizer> verbalizers_for_task(const std::vector<Verbalizer>& registry, Task task) {
  std::vector<Verbalizer> out;
  for (const Verbalizer& v : registry)
    if (v.task == task) out.push_back(v);
  return out;
}

}  // namespace ukedit
