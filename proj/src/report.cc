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

#include "mtnoise/report.h"

#include "json.hpp"
#include "mtnoise/errors.h"

namespace mtnoise {

std::string_view NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kSpelling:
      return "spelling";
    case NoiseKind::kProfanity:
      return "profanity";
    case NoiseKind::kGrammar:
      return "grammar";
    case NoiseKind::kEmoticon:
      return "emoticon";
  }
  return "unknown";
}

NoiseKind ParseNoiseKind(std::string_view name) {
  for (NoiseKind kind : kAllNoiseKinds) {
    if (NoiseKindName(kind) == name) return kind;
  }
  // Accept the plural used in prose.
  if (name == "emoticons") return NoiseKind::kEmoticon;
  throw InvalidArgumentError("unknown noise kind '" + std::string(name) +
                             "'");
}

std::size_t NoiseReport::TotalEvents() const {
  std::size_t total = 0;
  for (std::size_t n : events) total += n;
  return total;
}

std::size_t NoiseReport::InsertionEvents() const {
  return TotalEvents() - Events(NoiseKind::kSpelling);
}

double NoiseReport::Rate(NoiseKind kind) const {
  return token_draws == 0 ? 0.0
                          : static_cast<double>(Events(kind)) /
                                static_cast<double>(token_draws);
}

double NoiseReport::TotalRate() const {
  return token_draws == 0 ? 0.0
                          : static_cast<double>(TotalEvents()) /
                                static_cast<double>(token_draws);
}

double NoiseReport::TargetSpellingRate() const {
  return target_token_draws == 0
             ? 0.0
             : static_cast<double>(target_spelling_events) /
                   static_cast<double>(target_token_draws);
}

void NoiseReport::Merge(const NoiseReport& other) {
  pairs += other.pairs;
  token_draws += other.token_draws;
  target_token_draws += other.target_token_draws;
  for (std::size_t k = 0; k < events.size(); ++k) events[k] += other.events[k];
  target_spelling_events += other.target_spelling_events;
  chars_added += other.chars_added;
  chars_dropped += other.chars_dropped;
  src_tokens_before += other.src_tokens_before;
  src_tokens_after += other.src_tokens_after;
  tgt_tokens_before += other.tgt_tokens_before;
  tgt_tokens_after += other.tgt_tokens_after;
}

void NoiseReport::CountEvents(std::span<const NoiseEvent> noise_events) {
  for (const NoiseEvent& event : noise_events) {
    if (const auto* spelling = std::get_if<SpellingDetail>(&event.detail)) {
      if (spelling->edit.op == SpellingEdit::Op::kAdd) {
        ++chars_added;
      } else {
        ++chars_dropped;
      }
      if (spelling->side == Side::kTarget) {
        ++target_spelling_events;
        continue;
      }
    }
    ++events[static_cast<std::size_t>(event.kind)];
  }
}

std::string NoiseReport::ToJson() const {
  nlohmann::ordered_json j;
  j["pairs"] = pairs;
  j["token_draws"] = token_draws;
  j["target_token_draws"] = target_token_draws;
  nlohmann::ordered_json counts;
  nlohmann::ordered_json rates;
  for (NoiseKind kind : kAllNoiseKinds) {
    const std::string name(NoiseKindName(kind));
    counts[name] = Events(kind);
    rates[name] = Rate(kind);
  }
  j["events"] = counts;
  j["rates"] = rates;
  j["target_spelling_events"] = target_spelling_events;
  j["target_spelling_rate"] = TargetSpellingRate();
  j["chars_added"] = chars_added;
  j["chars_dropped"] = chars_dropped;
  j["src_tokens_before"] = src_tokens_before;
  j["src_tokens_after"] = src_tokens_after;
  j["tgt_tokens_before"] = tgt_tokens_before;
  j["tgt_tokens_after"] = tgt_tokens_after;
  return j.dump(2);
}

}  // namespace mtnoise
