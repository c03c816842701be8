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

#ifndef MTNOISE_REPORT_H_
#define MTNOISE_REPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace mtnoise {

enum class NoiseKind { kSpelling = 0, kProfanity, kGrammar, kEmoticon };

inline constexpr std::array<NoiseKind, 4> kAllNoiseKinds = {
    NoiseKind::kSpelling, NoiseKind::kProfanity, NoiseKind::kGrammar,
    NoiseKind::kEmoticon};

std::string_view NoiseKindName(NoiseKind kind);
// Throws InvalidArgumentError on an unknown name.
NoiseKind ParseNoiseKind(std::string_view name);

enum class Side { kSource, kTarget };

struct SpellingEdit {
  enum class Op { kAdd, kDrop };
  Op op = Op::kAdd;
  std::size_t position = 0;  // in code points
  std::string character;     // inserted or dropped code point

  bool operator==(const SpellingEdit&) const = default;
};

struct SpellingDetail {
  Side side = Side::kSource;
  SpellingEdit edit;

  bool operator==(const SpellingDetail&) const = default;
};

// Both-sides insertion. Boundaries are in [0, token count] of the original
// sentence on each side.
struct InsertionDetail {
  std::string src_form;
  std::string tgt_form;
  std::size_t src_boundary = 0;
  std::size_t tgt_boundary = 0;

  bool operator==(const InsertionDetail&) const = default;
};

struct NoiseEvent {
  std::size_t pair_index = 0;
  // Spelling: the edited token on its side. Insertions: the source token
  // whose draw triggered them.
  std::size_t token_index = 0;
  NoiseKind kind = NoiseKind::kSpelling;
  std::variant<SpellingDetail, InsertionDetail> detail;

  bool operator==(const NoiseEvent&) const = default;
};

// Realized noise over a corpus. Source-side draws cover every kind; the
// target side only draws spelling, so its counts are kept apart.
struct NoiseReport {
  std::size_t pairs = 0;
  std::size_t token_draws = 0;         // source tokens
  std::size_t target_token_draws = 0;  // target tokens
  std::array<std::size_t, 4> events{};  // source-draw events, by NoiseKind
  std::size_t target_spelling_events = 0;
  std::size_t chars_added = 0;
  std::size_t chars_dropped = 0;
  std::size_t src_tokens_before = 0;
  std::size_t src_tokens_after = 0;
  std::size_t tgt_tokens_before = 0;
  std::size_t tgt_tokens_after = 0;

  std::size_t Events(NoiseKind kind) const {
    return events[static_cast<std::size_t>(kind)];
  }
  std::size_t TotalEvents() const;
  std::size_t InsertionEvents() const;
  // events / token_draws; 0 when nothing was drawn.
  double Rate(NoiseKind kind) const;
  double TotalRate() const;
  double TargetSpellingRate() const;

  // Commutative and associative; used to combine per-pair reports.
  void Merge(const NoiseReport& other);

  // Adds the counts carried by `events` (not the token totals).
  void CountEvents(std::span<const NoiseEvent> noise_events);

  std::string ToJson() const;

  bool operator==(const NoiseReport&) const = default;
};

}  // namespace mtnoise

#endif  // MTNOISE_REPORT_H_
