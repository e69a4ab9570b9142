// core/include/ukedit/text.hpp

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

#ifndef UKEDIT_TEXT_HPP_
#define UKEDIT_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ukedit {

// UTF-8 <-> codepoints. decode throws ParseError on malformed input.
std::u32string decode_utf8(std::string_view text);
bool try_decode_utf8(std::string_view text, std::u32string* out);
std::string encode_utf8(const std::u32string& codepoints);

// Canonical composition pass (NFC for the scripts handled by the embedded
// tables: full BMP composition pairs incl. Cyrillic and Latin). Combining
// sequences are canonically reordered, then composed. Compatibility and
// singleton decompositions are not applied; already-NFC text is unchanged.
std::string nfc(std::string_view text);

// Simple one-to-one lowercase (ASCII + BMP table). No full case folding.
char32_t lowercase_cp(char32_t cp);
std::string lowercase(std::string_view text);

// A tokenized sentence. Tokens never contain whitespace; `text` keeps the
// originating string for diagnostics.
struct TokenSeq {
  std::vector<std::string> tokens;
  std::string text;

  bool operator==(const TokenSeq& other) const { return tokens == other.tokens; }
  bool operator!=(const TokenSeq& other) const { return !(*this == other); }
  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Whitespace split with punctuation detached into single-codepoint tokens.
// Apostrophes (' U+0027, ’, ʼ) and hyphens (- U+002D, ‑) stay
// word-internal when flanked by word characters on both sides, so Ukrainian
// forms like "зв'язність" survive as one token. Idempotent under
// tokenize(detokenize(t)).
TokenSeq tokenize(std::string_view text);

// Joins tokens with single spaces.
std::string detokenize(const std::vector<std::string>& tokens);
std::string detokenize(const TokenSeq& seq);

// tokenize + rejoin; canonical spelling of a free-form string in token space.
// Used to compare edit replacements from different sources.
std::string normalize_tokens(std::string_view text);

namespace unicode {
bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_hyphen(char32_t cp);
// Anything that is not space/punct/apostrophe/hyphen: letters, digits, marks.
bool is_word(char32_t cp);
}  // namespace unicode

}  // namespace ukedit

#endif  // UKEDIT_TEXT_HPP_
