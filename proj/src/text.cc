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

#include "mtnoise/text.h"

#include <cstdint>

namespace mtnoise {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' ||
         c == '\r';
}

std::vector<TokenSpan> TokenSpans(std::string_view sentence) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  while (i < n) {
    while (i < n && IsSpace(sentence[i])) ++i;
    if (i == n) break;
    const std::size_t begin = i;
    while (i < n && !IsSpace(sentence[i])) ++i;
    spans.push_back({begin, i});
  }
  return spans;
}

std::vector<std::string> Tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  for (const TokenSpan& span : TokenSpans(sentence)) {
    tokens.emplace_back(sentence.substr(span.begin, span.end - span.begin));
  }
  return tokens;
}

std::size_t CountTokens(std::string_view sentence) {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : sentence) {
    const bool space = IsSpace(c);
    if (!space && !in_token) ++count;
    in_token = !space;
  }
  return count;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string NormalizeSpaces(std::string_view text) {
  return JoinTokens(Tokenize(text));
}

bool ContainsWhitespace(std::string_view text) {
  for (char c : text) {
    if (IsSpace(c)) return true;
  }
  return false;
}

bool ContainsLineBreak(std::string_view text) {
  return text.find('\n') != std::string_view::npos ||
         text.find('\r') != std::string_view::npos;
}

namespace {

// Length of the UTF-8 sequence introduced by lead byte `b`, or 0 if `b`
// cannot start a sequence.
std::size_t SequenceLength(unsigned char b) {
  if (b < 0x80) return 1;
  if (b >= 0xC2 && b <= 0xDF) return 2;
  if (b >= 0xE0 && b <= 0xEF) return 3;
  if (b >= 0xF0 && b <= 0xF4) return 4;
  return 0;
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto lead = static_cast<unsigned char>(text[i]);
    const std::size_t len = SequenceLength(lead);
    if (len == 0 || i + len > n) return false;
    std::uint32_t cp = len == 1   ? lead
                       : len == 2 ? (lead & 0x1Fu)
                       : len == 3 ? (lead & 0x0Fu)
                                  : (lead & 0x07u);
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3Fu);
    }
    if (len == 3 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) {
      return false;
    }
    if (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) return false;
    i += len;
  }
  return true;
}

std::vector<std::string> SplitCodePoints(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = SequenceLength(static_cast<unsigned char>(text[i]));
    if (len == 0 || i + len > text.size()) len = 1;
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::string AsciiUpper(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace mtnoise
