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

#ifndef TACS_UTF8_HPP_
#define TACS_UTF8_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tacs::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes UTF-8. Malformed sequences (bad lead byte, truncated or overlong
// sequences, surrogates, values past U+10FFFF) decode to U+FFFD, one per
// offending byte, so decoding never fails.
std::u32string Decode(std::string_view text);

// Decodes the code point starting at byte offset *pos and advances *pos past
// it (one byte for a malformed sequence). *pos must be < text.size().
char32_t Next(std::string_view text, std::size_t* pos);

void AppendEncoded(char32_t cp, std::string* out);
std::string Encode(std::u32string_view cps);

// Unicode White_Space property.
bool IsWhitespace(char32_t cp);

// Approximate letter test without a Unicode database: ASCII letters, plus
// any non-ASCII code point outside the digit, punctuation, symbol, emoji,
// format and combining-mark ranges listed in the implementation.
bool IsLetter(char32_t cp);

// Lowercases ASCII and Latin-1 Supplement capitals; other code points pass
// through unchanged.
char32_t ToLower(char32_t cp);

}  // namespace tacs::utf8

#endif  // TACS_UTF8_HPP_
