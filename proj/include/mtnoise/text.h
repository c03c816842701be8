//
// Copyright 2026 The mtnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MTNOISE_TEXT_H_
#define MTNOISE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mtnoise {

// Byte range of one whitespace-delimited token inside a sentence.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Tokens are maximal runs of bytes that are not ASCII whitespace
// (space, \t, \n, \v, \f, \r).
bool IsSpace(char c);
std::vector<TokenSpan> TokenSpans(std::string_view sentence);
std::vector<std::string> Tokenize(std::string_view sentence);
std::size_t CountTokens(std::string_view sentence);
std::string JoinTokens(const std::vector<std::string>& tokens);

// Collapses runs of whitespace to single spaces and trims both ends.
std::string NormalizeSpaces(std::string_view text);

bool ContainsWhitespace(std::string_view text);
bool ContainsLineBreak(std::string_view text);

// Strict UTF-8 validation: rejects overlongs, surrogates and code points
// beyond U+10FFFF.
bool IsValidUtf8(std::string_view text);

// Splits valid UTF-8 into one string per code point. Behaviour on invalid
// input is unspecified; validate first.
std::vector<std::string> SplitCodePoints(std::string_view text);

// ASCII-only case mapping; other bytes pass through.
std::string AsciiUpper(std::string_view text);
std::string AsciiLower(std::string_view text);

}  // namespace mtnoise

#endif  // MTNOISE_TEXT_H_
