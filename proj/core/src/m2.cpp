// core/src/m2.cpp

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

#include "ukedit/m2.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "ukedit/corpus.hpp"
#include "ukedit/error.hpp"

namespace ukedit {

namespace {

constexpr std::string_view kNone = "-NONE-";
constexpr std::string_view kSep = "|||";

std::vector<std::string> split_fields(std::string_view s) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(kSep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(s.substr(start));
      break;
    }
    fields.emplace_back(s.substr(start, pos - start));
    start = pos + kSep.size();
  }
  return fields;
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) tokens.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view s, std::size_t line_no, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("non-integer " + std::string(what) + " \"" + std::string(s) + "\"", line_no);
  return value;
}

struct PendingEdit {
  EditSpan span;
  bool noop = false;
  std::size_t line_no = 0;
};

GoldAnnotation finish_block(std::vector<std::string> tokens, std::string sentence_text,
                            std::map<int, std::vector<PendingEdit>>& by_annotator) {
  GoldAnnotation ann;
  ann.sentence.tokens = std::move(tokens);
  ann.sentence.text = std::move(sentence_text);

  if (by_annotator.empty()) {
    ann.annotators.push_back(AnnotatorEdits{});
    return ann;
  }

  for (auto& [id, pending] : by_annotator) {
    AnnotatorEdits set;
    set.id = id;
    for (PendingEdit& pe : pending) {
      if (pe.noop) {
        if (set.noop) throw ParseError("duplicate noop line for annotator", pe.line_no);
        set.noop = true;
      } else {
        set.edits.push_back(std::move(pe.span));
      }
    }
    if (set.noop && !set.edits.empty())
      throw ParseError("annotator " + std::to_string(id) + " mixes noop with edits",
                       pending.front().line_no);

    std::stable_sort(set.edits.begin(), set.edits.end(),
                     [](const EditSpan& a, const EditSpan& b) {
                       return a.start != b.start ? a.start < b.start : a.end < b.end;
                     });
    for (std::size_t i = 1; i < set.edits.size(); ++i) {
      if (set.edits[i - 1].end > set.edits[i].start)
        throw ParseError("overlapping edits for annotator " + std::to_string(id),
                         pending.front().line_no);
    }
    ann.annotators.push_back(std::move(set));
  }
  return ann;
}

}  // namespace

std::vector<GoldAnnotation> parse_m2(std::string_view content) {
  std::vector<GoldAnnotation> annotations;
  std::vector<std::string> lines = split_lines(content);

  bool in_block = false;
  std::vector<std::string> tokens;
  std::string sentence_text;
  std::map<int, std::vector<PendingEdit>> by_annotator;

  auto flush = [&] {
    if (!in_block) return;
    annotations.push_back(finish_block(std::move(tokens), std::move(sentence_text), by_annotator));
    tokens.clear();
    sentence_text.clear();
    by_annotator.clear();
    in_block = false;
  };

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t line_no = i + 1;

    if (line.empty()) {
      flush();
      continue;
    }

    if (line.rfind("S ", 0) == 0 || line == "S") {
      if (in_block) throw ParseError("second S line inside a block", line_no);
      // NFC on load, same as corpus text, so offsets and equality agree.
      sentence_text = line.size() > 2 ? nfc(line.substr(2)) : std::string();
      tokens = split_tokens(sentence_text);
      if (tokens.empty()) throw ParseError("empty S line", line_no);
      in_block = true;
      continue;
    }

    if (line.rfind("A ", 0) == 0) {
      if (!in_block) throw ParseError("A line before any S line", line_no);
      std::vector<std::string> fields = split_fields(std::string_view(line).substr(2));
      if (fields.size() != 6)
        throw ParseError("expected 6 |||-separated fields, got " + std::to_string(fields.size()),
                         line_no);

      std::vector<std::string> offsets = split_tokens(fields[0]);
      if (offsets.size() != 2) throw ParseError("expected \"<start> <end>\" offsets", line_no);
      int start = parse_int(offsets[0], line_no, "start offset");
      int end = parse_int(offsets[1], line_no, "end offset");
      const std::string& type = fields[1];
      const std::string& correction = fields[2];
      int annotator = parse_int(fields[5], line_no, "annotator id");
      if (annotator < 0) throw ParseError("negative annotator id", line_no);

      PendingEdit pe;
      pe.line_no = line_no;
      if (start == -1 && end == -1) {
        if (type != "noop") throw ParseError("offsets -1 -1 require type \"noop\"", line_no);
        pe.noop = true;
      } else {
        if (type == "noop") throw ParseError("noop edits must use offsets -1 -1", line_no);
        if (start < 0 || end < start || static_cast<std::size_t>(end) > tokens.size())
          throw ParseError("edit offsets out of range", line_no);
        pe.span.start = start;
        pe.span.end = end;
        pe.span.replacement = correction == kNone ? std::string() : nfc(correction);
        pe.span.type_label = type;
        if (pe.span.start == pe.span.end && pe.span.replacement.empty())
          throw ParseError("edit changes nothing", line_no);
      }
      by_annotator[annotator].push_back(std::move(pe));
      continue;
    }

    throw ParseError("expected S line, A line, or blank separator", line_no);
  }
  flush();
  return annotations;
}

std::string write_m2(const std::vector<GoldAnnotation>& annotations) {
  std::string out;
  bool first = true;
  for (const GoldAnnotation& ann : annotations) {
    if (ann.sentence.empty()) throw ArgumentError("cannot write an annotation with no tokens");
    if (ann.annotators.empty()) throw ArgumentError("annotation has no annotator sets");

    if (!first) out.push_back('\n');
    first = false;

    out += "S " + detokenize(ann.sentence) + "\n";
    for (const AnnotatorEdits& set : ann.annotators) {
      if (set.noop) {
        if (!set.edits.empty()) throw ArgumentError("noop set carries edits");
        out += "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||" + std::to_string(set.id) + "\n";
        continue;
      }
      if (set.edits.empty()) {
        if (ann.annotators.size() > 1 || set.id != 0)
          throw ArgumentError("empty non-noop set is only representable as sole annotator 0");
        continue;  // implicit: no A lines
      }
      for (const EditSpan& e : set.edits) {
        out += "A " + std::to_string(e.start) + " " + std::to_string(e.end);
        out += kSep;
        out += e.type_label;
        out += kSep;
        out += e.replacement.empty() ? std::string(kNone) : e.replacement;
        out += kSep;
        out += "REQUIRED";
        out += kSep;
        out += kNone;
        out += kSep;
        out += std::to_string(set.id) + "\n";
      }
    }
  }
  return out;
}

std::vector<GoldAnnotation> load_m2_file(const std::filesystem::path& path) {
  return parse_m2(read_file(path));
}

}  // namespace ukedit
