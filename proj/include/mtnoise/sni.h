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

#ifndef MTNOISE_SNI_H_
#define MTNOISE_SNI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mtnoise/corpus.h"
#include "mtnoise/lexicon.h"
#include "mtnoise/random.h"
#include "mtnoise/report.h"

namespace mtnoise {

struct NoiseProfileEntry {
  NoiseKind kind;
  double probability = 0.0;

  bool operator==(const NoiseProfileEntry&) const = default;
};

// Ordered (kind, probability) pairs. The constructor checks each entry
// (finite, in [0, 1], kind listed once); the total mass is checked by
// BuildDensity and ScaleProfile.
class NoiseProfile {
 public:
  NoiseProfile() = default;
  explicit NoiseProfile(std::vector<NoiseProfileEntry> entries);

  // spelling 0.04, profanity 0.007, grammar 0.015, emoticon 0.002.
  static NoiseProfile Default();

  // "spelling=0.04,profanity=0.007"; an empty string is the empty profile.
  static NoiseProfile Parse(std::string_view text);
  std::string ToString() const;

  std::span<const NoiseProfileEntry> entries() const { return entries_; }
  double Probability(NoiseKind kind) const;
  // Sum of the probabilities, correctly rounded.
  double TotalMass() const;

  bool operator==(const NoiseProfile&) const = default;

 private:
  std::vector<NoiseProfileEntry> entries_;
};

// [o, p1, ..., pk] with o = 1 - sum(p) the mass of leaving a token alone.
struct DiscreteDensity {
  std::vector<double> weights;
  std::vector<NoiseKind> kinds;  // kinds[i] goes with weights[i + 1]

  double keep_probability() const { return weights.front(); }
};

// Throws InvalidArgumentError when the profile mass exceeds 1.
DiscreteDensity BuildDensity(const NoiseProfile& profile);

// Draws an index j from the density; j == 0 (keep the token) yields nullopt.
std::optional<NoiseKind> DrawNoiseKind(const DiscreteDensity& density,
                                       RandomSource& rng);

NoiseProfile ScaleProfile(const NoiseProfile& profile, double multiplier);

struct SpellingOptions {
  // Characters the add branch may insert, one code point per string.
  std::vector<std::string> alphabet = DefaultAlphabet();
  // Also allow any character already present in the word.
  bool include_word_chars = true;

  static std::vector<std::string> DefaultAlphabet();
};

// Returns `word` with `edit` applied. Positions count code points.
// Throws DataError if the edit does not fit the word.
std::string ApplySpellingEdit(std::string_view word, const SpellingEdit& edit);

// Chooses drop or add with equal odds (add only, for one-character words),
// then a uniform position and, for add, a uniform character.
SpellingEdit DrawSpellingEdit(std::string_view word, RandomSource& rng,
                              const SpellingOptions& options = {});

std::string SpellingNoise(std::string_view word, RandomSource& rng,
                          const SpellingOptions& options = {});

// Inserts src_form at a uniform token boundary of pair.src and tgt_form at an
// independent uniform boundary of pair.tgt.
std::pair<SentencePair, NoiseEvent> InsertBilingual(
    const SentencePair& pair, const BilingualEntry& entry, NoiseKind kind,
    RandomSource& rng);

// Inserts the same emoticon token on both sides at independent boundaries.
std::pair<SentencePair, NoiseEvent> InsertEmoticon(const SentencePair& pair,
                                                   std::string_view emoticon,
                                                   RandomSource& rng);

// Replays events against the original pair. Token indices and boundaries
// refer to the original tokenization; several insertions at one boundary
// appear in event order.
SentencePair ApplyEvents(const SentencePair& original,
                         std::span<const NoiseEvent> events);

// Replays a whole corpus; events may come in any pair order.
ParallelCorpus ReplayEvents(const ParallelCorpus& original,
                            std::span<const NoiseEvent> events);

struct NoisedPair {
  SentencePair pair;
  std::vector<NoiseEvent> events;
};

struct NoiseResult {
  ParallelCorpus corpus;
  std::vector<NoiseEvent> events;
  NoiseReport report;
};

// Validated noising setup shared by AddNoise and NoiseCorpus.
class NoiseInducer {
 public:
  // Throws InvalidArgumentError when the profile is invalid or a kind with
  // nonzero probability has no lexicon to draw from.
  NoiseInducer(const NoiseProfile& profile, NoiseLexicons lexicons,
               SpellingOptions spelling = {});

  // One density draw per source token, positions fixed before any edit.
  // Spelling is additionally drawn once per target token with the spelling
  // probability. Insertion kinds edit both sides at once.
  NoisedPair Apply(const SentencePair& pair, RandomSource& rng) const;

  // Pair i uses RandomSource(seed, i), so the output does not depend on
  // `workers`.
  NoiseResult ApplyCorpus(const ParallelCorpus& corpus, std::uint64_t seed,
                          unsigned workers = 1) const;

  const DiscreteDensity& density() const { return density_; }

 private:
  DiscreteDensity density_;
  double spelling_probability_;
  NoiseLexicons lexicons_;
  SpellingOptions spelling_;
};

NoisedPair AddNoise(const SentencePair& pair, const NoiseProfile& profile,
                    const NoiseLexicons& lexicons, RandomSource& rng);

NoiseResult NoiseCorpus(const ParallelCorpus& corpus,
                        const NoiseProfile& profile,
                        const NoiseLexicons& lexicons, std::uint64_t seed,
                        unsigned workers = 1);

// Newline-delimited JSON audit trail, one event per line:
// {"pair_index":..,"token_index":..,"kind":"..","detail":{..}}
std::string EventToJson(const NoiseEvent& event);
NoiseEvent EventFromJson(std::string_view line);
void WriteEvents(const std::filesystem::path& path,
                 std::span<const NoiseEvent> events);
std::vector<NoiseEvent> ReadEvents(const std::filesystem::path& path);

}  // namespace mtnoise

#endif  // MTNOISE_SNI_H_
