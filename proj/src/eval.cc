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

#include "mtnoise/eval.h"

#include <charconv>
#include <cmath>
#include <map>

#include "json.hpp"
#include "mtnoise/errors.h"
#include "mtnoise/random.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts CountNgrams(const std::vector<std::string>& tokens,
                        std::size_t order) {
  NgramCounts counts;
  if (tokens.size() < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + order)];
  }
  return counts;
}

}  // namespace

NoiseReport CompareCorpora(const ParallelCorpus& original,
                           const ParallelCorpus& noised,
                           std::span<const NoiseEvent> events) {
  if (original.size() != noised.size()) {
    throw AlignmentError("original has " + std::to_string(original.size()) +
                         " pairs, noised has " +
                         std::to_string(noised.size()));
  }
  std::vector<long long> src_growth(original.size(), 0);
  std::vector<long long> tgt_growth(original.size(), 0);
  for (const NoiseEvent& event : events) {
    if (event.pair_index >= original.size()) {
      throw DataError("event references pair " +
                      std::to_string(event.pair_index) + " of " +
                      std::to_string(original.size()));
    }
    if (const auto* ins = std::get_if<InsertionDetail>(&event.detail)) {
      src_growth[event.pair_index] +=
          static_cast<long long>(CountTokens(ins->src_form));
      tgt_growth[event.pair_index] +=
          static_cast<long long>(CountTokens(ins->tgt_form));
    }
  }

  NoiseReport report;
  report.pairs = original.size();
  for (std::size_t i = 0; i < original.size(); ++i) {
    const std::size_t src_before = CountTokens(original[i].src);
    const std::size_t tgt_before = CountTokens(original[i].tgt);
    const std::size_t src_after = CountTokens(noised[i].src);
    const std::size_t tgt_after = CountTokens(noised[i].tgt);
    if (static_cast<long long>(src_after) -
                static_cast<long long>(src_before) !=
            src_growth[i] ||
        static_cast<long long>(tgt_after) -
                static_cast<long long>(tgt_before) !=
            tgt_growth[i]) {
      throw DataError("pair " + std::to_string(i) +
                      ": token counts do not match the recorded insertions");
    }
    report.token_draws += src_before;
    report.target_token_draws += tgt_before;
    report.src_tokens_before += src_before;
    report.tgt_tokens_before += tgt_before;
    report.src_tokens_after += src_after;
    report.tgt_tokens_after += tgt_after;
  }
  report.CountEvents(events);
  return report;
}

BleuScore Bleu(std::span<const std::string> hypotheses,
               std::span<const std::string> references) {
  if (hypotheses.empty()) throw InvalidArgumentError("BLEU needs >= 1 sentence");
  if (hypotheses.size() != references.size()) {
    throw InvalidArgumentError(
        "BLEU: " + std::to_string(hypotheses.size()) + " hypotheses vs " +
        std::to_string(references.size()) + " references");
  }
  BleuScore bleu;
  std::array<std::size_t, 4> ref_totals{};
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const std::vector<std::string> hyp = Tokenize(hypotheses[s]);
    const std::vector<std::string> ref = Tokenize(references[s]);
    bleu.hyp_length += hyp.size();
    bleu.ref_length += ref.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      const NgramCounts hyp_counts = CountNgrams(hyp, n);
      const NgramCounts ref_counts = CountNgrams(ref, n);
      for (const auto& [gram, count] : hyp_counts) {
        const auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) {
          bleu.matches[n - 1] += std::min(count, it->second);
        }
      }
      if (hyp.size() >= n) bleu.totals[n - 1] += hyp.size() - n + 1;
      if (ref.size() >= n) ref_totals[n - 1] += ref.size() - n + 1;
    }
  }

  bool any_zero = false;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    double p;
    if (bleu.totals[n] == 0) {
      p = ref_totals[n] == 0 ? 1.0 : 0.0;
    } else {
      p = static_cast<double>(bleu.matches[n]) /
          static_cast<double>(bleu.totals[n]);
    }
    bleu.precisions[n] = p;
    if (p == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(p);
    }
  }

  const double c = static_cast<double>(bleu.hyp_length);
  const double r = static_cast<double>(bleu.ref_length);
  if (bleu.hyp_length == 0) {
    bleu.brevity_penalty = bleu.ref_length == 0 ? 1.0 : 0.0;
  } else {
    bleu.brevity_penalty = c > r ? 1.0 : std::exp(1.0 - r / c);
  }
  bleu.score = any_zero ? 0.0 : bleu.brevity_penalty * std::exp(log_sum / 4.0);
  return bleu;
}

std::string BleuScore::ToJson() const {
  nlohmann::ordered_json j;
  j["bleu"] = score;
  j["precisions"] = precisions;
  j["matches"] = matches;
  j["totals"] = totals;
  j["brevity_penalty"] = brevity_penalty;
  j["hyp_length"] = hyp_length;
  j["ref_length"] = ref_length;
  return j.dump(2);
}

std::string FormatMultiplier(double multiplier) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), multiplier);
  return std::string(buf, res.ptr);
}

SweepResult Sweep(const ParallelCorpus& corpus, const NoiseProfile& base,
                  std::span<const double> multipliers,
                  const NoiseLexicons& lexicons, std::uint64_t seed,
                  const SweepOptions& options) {
  if (multipliers.empty()) throw InvalidArgumentError("no sweep multipliers");
  for (std::size_t i = 1; i < multipliers.size(); ++i) {
    if (!(multipliers[i] > multipliers[i - 1])) {
      throw InvalidArgumentError("sweep multipliers must be strictly increasing");
    }
  }
  // Validate every level before doing any work.
  std::vector<NoiseProfile> profiles;
  for (double m : multipliers) profiles.push_back(ScaleProfile(base, m));

  if (options.output_dir) {
    std::filesystem::create_directories(*options.output_dir);
  }
  SweepResult result;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    NoiseResult noised = NoiseCorpus(corpus, profiles[i], lexicons,
                                     DeriveSeed(seed, i), options.workers);
    SweepLevel level;
    level.multiplier = multipliers[i];
    level.report = noised.report;
    if (options.output_dir) {
      const std::string stem =
          options.prefix + ".m" + FormatMultiplier(multipliers[i]);
      level.src_path = *options.output_dir / (stem + ".src");
      level.tgt_path = *options.output_dir / (stem + ".tgt");
      WriteParallel(noised.corpus, *level.src_path, *level.tgt_path);
    }
    result.levels.push_back(std::move(level));
  }
  return result;
}

std::string SweepResult::ToJson() const {
  nlohmann::ordered_json j;
  j["levels"] = nlohmann::ordered_json::array();
  for (const SweepLevel& level : levels) {
    nlohmann::ordered_json l;
    l["multiplier"] = level.multiplier;
    if (level.src_path) l["src"] = level.src_path->string();
    if (level.tgt_path) l["tgt"] = level.tgt_path->string();
    l["total_rate"] = level.report.TotalRate();
    l["report"] = nlohmann::ordered_json::parse(level.report.ToJson());
    j["levels"].push_back(std::move(l));
  }
  return j.dump(2);
}

}  // namespace mtnoise
