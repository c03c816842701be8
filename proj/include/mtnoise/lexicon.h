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

#ifndef MTNOISE_LEXICON_H_
#define MTNOISE_LEXICON_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtnoise/random.h"

namespace mtnoise {

enum class LexiconKind { kProfanity, kStopword };

std::string_view LexiconKindName(LexiconKind kind);

// A source-language form and its target-language translation. Forms may
// span several tokens ("par exemple"); they are stored with single spaces.
struct BilingualEntry {
  std::string src_form;
  std::string tgt_form;

  bool operator==(const BilingualEntry&) const = default;
};

class BilingualLexicon {
 public:
  // Throws DataError when `entries` is empty, contains duplicates, or a form
  // is empty or carries a tab/line break.
  BilingualLexicon(LexiconKind kind, std::vector<BilingualEntry> entries);

  LexiconKind kind() const { return kind_; }
  std::span<const BilingualEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  LexiconKind kind_;
  std::vector<BilingualEntry> entries_;
};

// Emoticons are single tokens: no whitespace inside an entry.
class EmoticonList {
 public:
  explicit EmoticonList(std::vector<std::string> entries);

  std::span<const std::string> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::string> entries_;
};

// TSV, one "src<TAB>tgt" entry per line.
BilingualLexicon LoadBilingualLexicon(const std::filesystem::path& path,
                                      LexiconKind kind);

// One emoticon per line; blank lines are an error.
EmoticonList LoadEmoticons(const std::filesystem::path& path);

// Uniform pick. Both collections are non-empty by construction.
const BilingualEntry& Pick(const BilingualLexicon& lexicon,
                           RandomSource& rng);
const std::string& Pick(const EmoticonList& list, RandomSource& rng);

// Insertion material for the profanity, grammar and emoticon noise kinds.
// A null member is only acceptable when the matching kind has probability 0.
struct NoiseLexicons {
  const BilingualLexicon* profanity = nullptr;
  const BilingualLexicon* stopwords = nullptr;
  const EmoticonList* emoticons = nullptr;
};

}  // namespace mtnoise

#endif  // MTNOISE_LEXICON_H_
