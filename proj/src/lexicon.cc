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

#include "mtnoise/lexicon.h"

#include <set>
#include <utility>

#include "mtnoise/corpus.h"
#include "mtnoise/errors.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

bool HasTabOrBreak(std::string_view s) {
  return s.find('\t') != std::string_view::npos || ContainsLineBreak(s);
}

std::string Where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line + 1) + ": ";
}

}  // namespace

std::string_view LexiconKindName(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kProfanity:
      return "profanity";
    case LexiconKind::kStopword:
      return "stopword";
  }
  return "unknown";
}

BilingualLexicon::BilingualLexicon(LexiconKind kind,
                                   std::vector<BilingualEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw DataError(std::string(LexiconKindName(kind_)) +
                    " lexicon has no entries");
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (BilingualEntry& entry : entries_) {
    if (HasTabOrBreak(entry.src_form) || HasTabOrBreak(entry.tgt_form)) {
      throw DataError("lexicon form contains a tab or line break");
    }
    entry.src_form = NormalizeSpaces(entry.src_form);
    entry.tgt_form = NormalizeSpaces(entry.tgt_form);
    if (entry.src_form.empty() || entry.tgt_form.empty()) {
      throw DataError("lexicon entry has an empty form");
    }
    if (!seen.emplace(entry.src_form, entry.tgt_form).second) {
      throw DataError("duplicate lexicon entry: " + entry.src_form + "\t" +
                      entry.tgt_form);
    }
  }
}

EmoticonList::EmoticonList(std::vector<std::string> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DataError("emoticon list has no entries");
  std::set<std::string> seen;
  for (const std::string& e : entries_) {
    if (e.empty()) throw DataError("emoticon list has an empty entry");
    if (ContainsWhitespace(e)) {
      throw DataError("emoticon contains whitespace: '" + e + "'");
    }
    if (!seen.insert(e).second) throw DataError("duplicate emoticon: " + e);
  }
}

BilingualLexicon LoadBilingualLexicon(const std::filesystem::path& path,
                                      LexiconKind kind) {
  const std::vector<std::string> lines = ReadLines(path);
  if (lines.empty()) throw DataError(path.string() + ": empty lexicon file");
  std::vector<BilingualEntry> entries;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw DataError(Where(path, i) + "expected exactly two tab-separated "
                                       "fields");
    }
    BilingualEntry entry{NormalizeSpaces(line.substr(0, tab)),
                         NormalizeSpaces(line.substr(tab + 1))};
    if (entry.src_form.empty() || entry.tgt_form.empty()) {
      throw DataError(Where(path, i) + "empty field");
    }
    if (!seen.emplace(entry.src_form, entry.tgt_form).second) {
      throw DataError(Where(path, i) + "duplicate entry");
    }
    entries.push_back(std::move(entry));
  }
  return BilingualLexicon(kind, std::move(entries));
}

EmoticonList LoadEmoticons(const std::filesystem::path& path) {
  std::vector<std::string> lines = ReadLines(path);
  if (lines.empty()) throw DataError(path.string() + ": empty emoticon file");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) throw DataError(Where(path, i) + "blank line");
    if (ContainsWhitespace(lines[i])) {
      throw DataError(Where(path, i) + "emoticon contains whitespace");
    }
    if (!seen.insert(lines[i]).second) {
      throw DataError(Where(path, i) + "duplicate emoticon");
    }
  }
  return EmoticonList(std::move(lines));
}

const BilingualEntry& Pick(const BilingualLexicon& lexicon,
                           RandomSource& rng) {
  return lexicon.entries()[rng.UniformIndex(lexicon.size())];
}

const std::string& Pick(const EmoticonList& list, RandomSource& rng) {
  return list.entries()[rng.UniformIndex(list.size())];
}

}  // namespace mtnoise
