// core/include/ukedit/m2.hpp

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

#ifndef UKEDIT_M2_HPP_
#define UKEDIT_M2_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ukedit/text.hpp"

namespace ukedit {

// A token-offset edit: replace tokens [start, end) with `replacement`
// (space-joined tokens; empty means deletion; start == end means insertion
// before `start`). A span must change something: zero-width spans with an
// empty replacement are invalid. `type_label` is carried opaquely.
struct EditSpan {
  int start = 0;
  int end = 0;
  std::string replacement;
  std::string type_label;

  bool operator==(const EditSpan& o) const {
    return start == o.start && end == o.end && replacement == o.replacement;
  }
  bool operator<(const EditSpan& o) const {
    if (start != o.start) return start < o.start;
    if (end != o.end) return end < o.end;
    return replacement < o.replacement;
  }
};

// One annotator's full correction of a sentence. A noop set is an explicit
// "this sentence needs no edits" statement and carries zero edits; an empty
// non-noop set only appears as the sole implicit set of an unannotated
// sentence.
struct AnnotatorEdits {
  int id = 0;
  bool noop = false;
  std::vector<EditSpan> edits;

  bool operator==(const AnnotatorEdits& o) const {
    return id == o.id && noop == o.noop && edits == o.edits;
  }
};

// A gold-annotated sentence: its tokenization plus one edit set per
// annotator, sorted by annotator id.
struct GoldAnnotation {
  TokenSeq sentence;
  std::vector<AnnotatorEdits> annotators;

  bool operator==(const GoldAnnotation& o) const {
    return sentence == o.sentence && annotators == o.annotators;
  }
};

// Parses M2 content: blocks separated by blank lines, each holding one
// "S <tokens...>" line and zero or more
// "A <start> <end>|||<type>|||<correction>|||<required>|||<comment>|||<annotator>"
// lines. "-NONE-" corrections map to the empty replacement; "A -1 -1|||noop"
// lines declare an empty annotator set. Throws ParseError with the offending
// 1-based line number.
std::vector<GoldAnnotation> parse_m2(std::string_view content);

// Canonical inverse of parse_m2: annotators ascending, edits sorted, empty
// replacements written as "-NONE-". parse_m2(write_m2(x)) == x.
std::string write_m2(const std::vector<GoldAnnotation>& annotations);

std::vector<GoldAnnotation> load_m2_file(const std::filesystem::path& path);

}  // namespace ukedit

#endif  // UKEDIT_M2_HPP_
