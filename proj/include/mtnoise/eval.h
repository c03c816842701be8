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

#ifndef MTNOISE_EVAL_H_
#define MTNOISE_EVAL_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtnoise/corpus.h"
#include "mtnoise/lexicon.h"
#include "mtnoise/report.h"
#include "mtnoise/sni.h"

namespace mtnoise {

// Builds a NoiseReport from the event stream and checks it against the two
// corpora: per pair, the token-count growth on each side must equal the
// token count of the forms inserted there. Throws AlignmentError on a pair
// count mismatch and DataError on any inconsistency.
NoiseReport CompareCorpora(const ParallelCorpus& original,
                           const ParallelCorpus& noised,
                           std::span<const NoiseEvent> events);

// Unsmoothed, case-sensitive corpus BLEU-4 over whitespace tokens with a
// single reference per sentence.
//
// p_n = clipped n-gram matches / hypothesis n-grams, summed over the corpus.
// When neither hypotheses nor references have any n-gram of order n, p_n is
// taken as 1 (nothing to match, nothing missed); when only the hypotheses
// have none, p_n = 0. BP = 1 if c > r, else exp(1 - r/c), with BP = 1 for
// c = r = 0 and BP = 0 for c = 0 < r. score = BP * exp(mean(log p_n)), or 0
// if any p_n is 0.
struct BleuScore {
  double score = 0.0;
  std::array<double, 4> precisions{};
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  double brevity_penalty = 0.0;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  std::string ToJson() const;
};

// Throws InvalidArgumentError on empty or unequal-length inputs.
BleuScore Bleu(std::span<const std::string> hypotheses,
               std::span<const std::string> references);

struct SweepLevel {
  double multiplier = 0.0;
  NoiseReport report;
  std::optional<std::filesystem::path> src_path;
  std::optional<std::filesystem::path> tgt_path;
};

struct SweepResult {
  std::vector<SweepLevel> levels;

  std::string ToJson() const;
};

struct SweepOptions {
  // When set, level m is written to <dir>/<prefix>.m<m>.{src,tgt}.
  std::optional<std::filesystem::path> output_dir;
  std::string prefix = "sweep";
  unsigned workers = 1;
};

// Noises `corpus` once per multiplier with ScaleProfile(base, m). Level i
// uses seed DeriveSeed(seed, i). Multipliers must be strictly increasing.
SweepResult Sweep(const ParallelCorpus& corpus, const NoiseProfile& base,
                  std::span<const double> multipliers,
                  const NoiseLexicons& lexicons, std::uint64_t seed,
                  const SweepOptions& options = {});

// Shortest round-trip decimal form, as used in sweep filenames.
std::string FormatMultiplier(double multiplier);

}  // namespace mtnoise

#endif  // MTNOISE_EVAL_H_
