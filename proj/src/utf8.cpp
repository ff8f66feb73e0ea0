// Copyright 2026 The tacs Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tacs/utf8.hpp"

namespace tacs::utf8 {

namespace {

struct Range {
  char32_t lo;
  char32_t hi;
};

bool InRanges(char32_t cp, const Range* begin, const Range* end) {
  for (const Range* r = begin; r != end; ++r) {
    if (cp >= r->lo && cp <= r->hi) return true;
  }
  return false;
}

// Non-ASCII code points that are not letters for tagging purposes.
constexpr Range kNonLetterRanges[] = {
    {0x0080, 0x00BF},    // C1 controls, Latin-1 punctuation and symbols
    {0x00D7, 0x00D7},    // multiplication sign
    {0x00F7, 0x00F7},    // division sign
    {0x02B0, 0x036F},    // modifier letters, combining diacritics
    {0x0660, 0x0669},    // Arabic-Indic digits
    {0x06F0, 0x06F9},    // extended Arabic-Indic digits
    {0x0966, 0x096F},    // Devanagari digits
    {0x0BE6, 0x0BFA},    // Tamil digits, numerics and symbols
    {0x2000, 0x206F},    // general punctuation (includes ZWJ/ZWNJ)
    {0x2070, 0x209F},    // super/subscripts
    {0x20A0, 0x20CF},    // currency
    {0x20D0, 0x20FF},    // combining marks for symbols
    {0x2100, 0x214F},    // letterlike symbols
    {0x2150, 0x218F},    // number forms
    {0x2190, 0x2BFF},    // arrows, math, technical, box drawing, dingbats
    {0x2E00, 0x2E7F},    // supplemental punctuation
    {0x3000, 0x303F},    // CJK symbols and punctuation
    {0xFE00, 0xFE0F},    // variation selectors
    {0xFE10, 0xFE6F},    // vertical forms, small forms
    {0xFEFF, 0xFEFF},    // byte order mark
    {0xFF01, 0xFF20},    // fullwidth punctuation and digits
    {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},
    {0xFFF0, 0xFFFF},    // specials, including U+FFFD
    {0x1D400, 0x1D7FF},  // mathematical alphanumerics
    {0x1F000, 0x1FAFF},  // mahjong, cards, emoji, pictographs
    {0xE0000, 0xE007F},  // tags
};

constexpr Range kWhitespaceRanges[] = {
    {0x0009, 0x000D}, {0x0020, 0x0020}, {0x0085, 0x0085},
    {0x00A0, 0x00A0}, {0x1680, 0x1680}, {0x2000, 0x200A},
    {0x2028, 0x2029}, {0x202F, 0x202F}, {0x205F, 0x205F},
    {0x3000, 0x3000},
};

}  // namespace

char32_t Next(std::string_view text, std::size_t* pos) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  const std::size_t i = *pos;
  const unsigned char lead = s[i];
  if (lead < 0x80) {
    *pos = i + 1;
    return lead;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  }
  bool ok = len > 0 && i + len <= n;
  for (std::size_t k = 1; ok && k < len; ++k) {
    const unsigned char c = s[i + k];
    if ((c & 0xC0) != 0x80) {
      ok = false;
    } else {
      cp = (cp << 6) | (c & 0x3F);
    }
  }
  if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) {
    ok = false;
  }
  if (!ok) {
    *pos = i + 1;
    return kReplacement;
  }
  *pos = i + len;
  return cp;
}

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(Next(text, &pos));
  return out;
}

void AppendEncoded(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) AppendEncoded(cp, &out);
  return out;
}

bool IsWhitespace(char32_t cp) {
  return InRanges(cp, std::begin(kWhitespaceRanges),
                  std::end(kWhitespaceRanges));
}

bool IsLetter(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  return !InRanges(cp, std::begin(kNonLetterRanges),
                   std::end(kNonLetterRanges));
}

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  return cp;
}

}  // namespace tacs::utf8
