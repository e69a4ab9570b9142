// core/src/text.cpp

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

#include "ukedit/text.hpp"

#include <algorithm>
#include <iterator>

#include "ukedit/error.hpp"

namespace ukedit {

namespace {
#include "unicode_tables.inc"

unsigned char combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(kCombiningClasses), std::end(kCombiningClasses), cp,
                             [](const CombiningClassEntry& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kCombiningClasses) && it->cp == cp) return it->ccc;
  return 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
  auto it = std::lower_bound(
      std::begin(kCompositionPairs), std::end(kCompositionPairs), std::pair<char32_t, char32_t>{a, b},
      [](const CompositionPair& e, const std::pair<char32_t, char32_t>& key) {
        return e.first != key.first ? e.first < key.first : e.second < key.second;
      });
  if (it != std::end(kCompositionPairs) && it->first == a && it->second == b) return it->composed;
  return 0;
}
}  // namespace

bool try_decode_utf8(std::string_view text, std::u32string* out) {
  out->clear();
  out->reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlongs, surrogates, and out-of-range values.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    out->push_back(cp);
    i += len;
  }
  return true;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  if (!try_decode_utf8(text, &out)) throw ParseError("invalid UTF-8");
  return out;
}

std::string encode_utf8(const std::u32string& codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string nfc(std::string_view text) {
  std::u32string cps = decode_utf8(text);

  // Canonical ordering: stable-sort each run of nonzero-ccc marks.
  for (std::size_t i = 1; i < cps.size(); ++i) {
    unsigned char cc = combining_class(cps[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      unsigned char prev = combining_class(cps[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(cps[j - 1], cps[j]);
      --j;
    }
  }

  // Composition pass.
  std::u32string out;
  out.reserve(cps.size());
  std::ptrdiff_t last_starter = -1;
  unsigned char prev_cc = 0;
  for (char32_t cp : cps) {
    unsigned char cc = combining_class(cp);
    if (last_starter >= 0) {
      bool adjacent = static_cast<std::size_t>(last_starter) + 1 == out.size();
      bool blocked = !adjacent && prev_cc >= cc;
      if (!blocked) {
        if (char32_t composed = compose_pair(out[last_starter], cp)) {
          out[last_starter] = composed;
          continue;
        }
      }
    }
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size());
    prev_cc = cc;
    out.push_back(cp);
  }
  return encode_utf8(out);
}

char32_t lowercase_cp(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
  auto it = std::lower_bound(std::begin(kLowercasePairs), std::end(kLowercasePairs), cp,
                             [](const LowercasePair& e, char32_t c) { return e.upper < c; });
  if (it != std::end(kLowercasePairs) && it->upper == cp) return it->lower;
  return cp;
}

std::string lowercase(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  for (char32_t& cp : cps) cp = lowercase_cp(cp);
  return encode_utf8(cps);
}

namespace unicode {

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x2060: case 0x3000: case 0xFEFF:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200F);
  }
}

bool is_apostrophe(char32_t cp) { return cp == 0x27 || cp == 0x2019 || cp == 0x02BC; }

bool is_hyphen(char32_t cp) { return cp == 0x2D || cp == 0x2011; }

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  return (cp >= 0xA1 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x20A0 && cp <= 0x20BF) || (cp >= 0x2190 && cp <= 0x22FF) ||
         (cp >= 0x2500 && cp <= 0x27BF) || (cp >= 0x2E00 && cp <= 0x2E7F) ||
         (cp >= 0x3001 && cp <= 0x303F) || (cp >= 0xFE50 && cp <= 0xFE6F) ||
         (cp >= 0xFF01 && cp <= 0xFF0F) || (cp >= 0xFF1A && cp <= 0xFF20) ||
         (cp >= 0xFF3B && cp <= 0xFF40) || (cp >= 0xFF5B && cp <= 0xFF65);
}

bool is_word(char32_t cp) {
  return !is_space(cp) && !is_punct(cp) && !is_apostrophe(cp) && !is_hyphen(cp);
}

}  // namespace unicode

TokenSeq tokenize(std::string_view text) {
  TokenSeq seq;
  seq.text.assign(text);
  std::u32string cps = decode_utf8(text);

  std::u32string word;
  auto flush = [&] {
    if (!word.empty()) {
      seq.tokens.push_back(encode_utf8(word));
      word.clear();
    }
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (unicode::is_space(cp)) {
      flush();
    } else if (unicode::is_apostrophe(cp) || unicode::is_hyphen(cp)) {
      bool prev_word = !word.empty();
      bool next_word = i + 1 < cps.size() && unicode::is_word(cps[i + 1]);
      if (prev_word && next_word) {
        word.push_back(cp);
      } else {
        flush();
        seq.tokens.push_back(encode_utf8(std::u32string(1, cp)));
      }
    } else if (unicode::is_punct(cp)) {
      flush();
      seq.tokens.push_back(encode_utf8(std::u32string(1, cp)));
    } else {
      word.push_back(cp);
    }
  }
  flush();
  return seq;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string detokenize(const TokenSeq& seq) { return detokenize(seq.tokens); }

std::string normalize_tokens(std::string_view text) { return detokenize(tokenize(text)); }

}  // namespace ukedit
