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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Standalone on purpose so the output reads as a checklist.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mtnoise/backtrans.h"
#include "mtnoise/corpus.h"
#include "mtnoise/errors.h"
#include "mtnoise/eval.h"
#include "mtnoise/random.h"
#include "mtnoise/sni.h"
#include "mtnoise/text.h"
#include "mtnoise/translator.h"
#include "test_util.h"

namespace mtnoise {
namespace {

using testing::DefaultLexicons;
using testing::ReadFile;
using testing::ReferenceBleu;
using testing::SyntheticCorpus;
using testing::SyntheticCorpusWithTokens;
using testing::TempDir;
using testing::WriteFile;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // Records a failed check; returns `cond` for chaining.
  bool Check(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
    return cond;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double Band(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

// A fixture with awkward but legal text: tabs, repeated spaces, empty sides,
// multi-byte characters.
ParallelCorpus AwkwardFixture() {
  return ParallelCorpus::FromTexts(
      "awkward", {{"", ""},
                  {"  le\tchat  ", "the  cat"},
                  {"été 😂 ça", "summer"},
                  {"x", ""},
                  {"a\t\tb c", "d"}});
}

// ---------------------------------------------------------------------------

void Identity(Outcome& o) {
  const DefaultLexicons lex;
  TempDir dir;
  const NoiseProfile zero = ScaleProfile(NoiseProfile::Default(), 0);
  WriteParallel(SyntheticCorpus(1000, 40, 1), dir / "fix.src", dir / "fix.tgt");

  const auto start = Clock::now();
  const ParallelCorpus fixture = LoadParallel(dir / "fix.src", dir / "fix.tgt", "fix");
  const NoiseResult r = NoiseCorpus(fixture, zero, lex.view(), 12345);
  WriteParallel(r.corpus, dir / "out.src", dir / "out.tgt");
  const double elapsed = Seconds(start);

  o.Check(ReadFile(dir / "out.src") == ReadFile(dir / "fix.src") &&
              ReadFile(dir / "out.tgt") == ReadFile(dir / "fix.tgt"),
          "1k fixture not byte-identical");
  o.Check(r.events.empty(), "events recorded at multiplier 0");
  o.Check(elapsed < 1.0, "1k fixture took " + std::to_string(elapsed) + " s");

  const ParallelCorpus awkward = AwkwardFixture();
  WriteParallel(awkward, dir / "awk.src", dir / "awk.tgt");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const NoiseResult a = NoiseCorpus(awkward, zero, lex.view(), seed, 3);
    WriteParallel(a.corpus, dir / "awk_out.src", dir / "awk_out.tgt");
    if (!o.Check(ReadFile(dir / "awk_out.src") == ReadFile(dir / "awk.src") &&
                     ReadFile(dir / "awk_out.tgt") == ReadFile(dir / "awk.tgt"),
                 "whitespace fixture changed")) {
      break;
    }
  }
  o.detail << "1k pairs in " << elapsed << " s";
}

void Density(Outcome& o) {
  const DiscreteDensity d = BuildDensity(NoiseProfile::Default());
  o.Check(d.keep_probability() == 0.936, "o != 0.936");
  o.Check(d.weights.size() == 5 && d.weights[1] == 0.04 && d.weights[2] == 0.007 &&
              d.weights[3] == 0.015 && d.weights[4] == 0.002,
          "weights differ from the profile");
  double sum = 0;
  for (double w : d.weights) sum += w;
  o.Check(std::fabs(sum - 1.0) <= 1e-12, "weights do not sum to 1");

  auto rejected = [](auto make) {
    try {
      make();
    } catch (const InvalidArgumentError&) {
      return true;
    }
    return false;
  };
  o.Check(rejected([] {
            BuildDensity(NoiseProfile({{NoiseKind::kSpelling, 0.7},
                                       {NoiseKind::kGrammar, 0.5}}));
          }),
          "sum 1.2 accepted");
  o.Check(rejected([] { NoiseProfile({{NoiseKind::kSpelling, -0.01}}); }),
          "negative p accepted");
  o.Check(rejected([] { NoiseProfile({{NoiseKind::kSpelling, std::nan("")}}); }),
          "NaN accepted");
  o.Check(rejected([] { ScaleProfile(NoiseProfile::Default(), 16); }),
          "overfull scaled profile accepted");
  o.detail << "o = " << d.keep_probability();
}

void RateConvergence(Outcome& o) {
  const auto start = Clock::now();
  const DefaultLexicons lex;
  const NoiseProfile profile = NoiseProfile::Default();
  const ParallelCorpus c = SyntheticCorpusWithTokens(100000, 2026);
  const NoiseResult r = NoiseCorpus(c, profile, lex.view(), 2026, 4);
  const double n = static_cast<double>(r.report.token_draws);
  for (const NoiseProfileEntry& e : profile.entries()) {
    const double rate = r.report.Rate(e.kind);
    o.Check(std::fabs(rate - e.probability) <= Band(e.probability, n),
            std::string(NoiseKindName(e.kind)) + " rate " + std::to_string(rate));
    o.detail << NoiseKindName(e.kind) << "=" << rate << " ";
  }

  const DiscreteDensity d = BuildDensity(profile);
  RandomSource rng(2026, 1);
  constexpr int kDraws = 1000000;
  std::vector<double> counts(d.weights.size(), 0.0);
  for (int i = 0; i < kDraws; ++i) {
    const auto kind = DrawNoiseKind(d, rng);
    counts[kind ? 1 + static_cast<std::size_t>(*kind) : 0] += 1;
  }
  double chi2 = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const double expected = d.weights[j] * kDraws;
    chi2 += (counts[j] - expected) * (counts[j] - expected) / expected;
  }
  // 4 degrees of freedom, significance 0.001.
  o.Check(chi2 < 18.467, "chi-square " + std::to_string(chi2));
  const double elapsed = Seconds(start);
  o.Check(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  o.detail << "(n=" << n << ") chi2=" << chi2 << " in " << elapsed << " s";
}

void Determinism(Outcome& o) {
  const DefaultLexicons lex;
  TempDir dir;
  const ParallelCorpus c = SyntheticCorpus(3000, 40, 3);
  const NoiseProfile p = ScaleProfile(NoiseProfile::Default(), 4);
  const NoiseResult one = NoiseCorpus(c, p, lex.view(), 77, 1);
  const NoiseResult eight = NoiseCorpus(c, p, lex.view(), 77, 8);
  WriteParallel(one.corpus, dir / "1.src", dir / "1.tgt");
  WriteParallel(eight.corpus, dir / "8.src", dir / "8.tgt");
  WriteEvents(dir / "1.jsonl", one.events);
  WriteEvents(dir / "8.jsonl", eight.events);
  o.Check(ReadFile(dir / "1.src") == ReadFile(dir / "8.src") &&
              ReadFile(dir / "1.tgt") == ReadFile(dir / "8.tgt"),
          "corpora differ");
  o.Check(ReadFile(dir / "1.jsonl") == ReadFile(dir / "8.jsonl"), "event trails differ");
  o.Check(one.report == eight.report && one.report.ToJson() == eight.report.ToJson(),
          "reports differ");
  o.Check(!(NoiseCorpus(c, p, lex.view(), 78, 8).corpus == one.corpus),
          "seed has no effect");
  o.detail << c.size() << " pairs, " << one.events.size() << " events";
}

void AlignmentAndReplay(Outcome& o) {
  const DefaultLexicons lex;
  TempDir dir;
  const ParallelCorpus c = SyntheticCorpus(2000, 30, 5);

  // Full profile, amplified so every kind fires often.
  const NoiseResult r = NoiseCorpus(c, ScaleProfile(NoiseProfile::Default(), 6),
                                    lex.view(), 5, 4);
  o.Check(r.corpus.size() == c.size(), "pair count changed");
  for (std::size_t i = 0; i < r.corpus.size(); ++i) {
    if (!o.Check(r.corpus[i].index == i, "pair order changed")) break;
  }
  WriteEvents(dir / "events.jsonl", r.events);
  const std::vector<NoiseEvent> events = ReadEvents(dir / "events.jsonl");
  o.Check(ReplayEvents(c, events) == r.corpus, "replay differs from noised corpus");
  try {
    o.Check(CompareCorpora(c, r.corpus, events) == r.report,
            "audit report differs");
  } catch (const Error& e) {
    o.Check(false, std::string("audit failed: ") + e.what());
  }

  // Insertions only: original tokens survive, so the token multiset gained on
  // each side must be exactly the inserted forms, one per event and side.
  const NoiseProfile inserts({{NoiseKind::kProfanity, 0.04},
                              {NoiseKind::kGrammar, 0.04},
                              {NoiseKind::kEmoticon, 0.04}});
  const NoiseResult ins = NoiseCorpus(c, inserts, lex.view(), 6, 4);
  std::vector<std::map<std::string, long>> src(c.size()), tgt(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& t : Tokenize(ins.corpus[i].src)) ++src[i][t];
    for (const auto& t : Tokenize(c[i].src)) --src[i][t];
    for (const auto& t : Tokenize(ins.corpus[i].tgt)) ++tgt[i][t];
    for (const auto& t : Tokenize(c[i].tgt)) --tgt[i][t];
  }
  for (const NoiseEvent& e : ins.events) {
    const auto& d = std::get<InsertionDetail>(e.detail);
    for (const auto& t : Tokenize(d.src_form)) --src[e.pair_index][t];
    for (const auto& t : Tokenize(d.tgt_form)) --tgt[e.pair_index][t];
  }
  bool balanced = true;
  for (std::size_t i = 0; i < c.size() && balanced; ++i) {
    for (const auto& [t, n] : src[i]) balanced &= n == 0;
    for (const auto& [t, n] : tgt[i]) balanced &= n == 0;
  }
  o.Check(balanced, "insertion multiset mismatch");
  o.detail << r.events.size() << " events replayed, " << ins.events.size()
           << " insertions balanced";
}

void Pruning(Outcome& o) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ParallelCorpus c = SyntheticCorpus(2000, 90, seed);
    const ParallelCorpus p = Prune(c, 50);
    bool bounded = true;
    for (const SentencePair& pair : p) {
      bounded &= CountTokens(pair.src) <= 50 && CountTokens(pair.tgt) <= 50;
    }
    std::size_t expected = 0;
    for (const SentencePair& pair : c) {
      expected += CountTokens(pair.src) <= 50 && CountTokens(pair.tgt) <= 50;
    }
    o.Check(bounded, "pair over 50 tokens kept");
    o.Check(p.size() == expected, "kept a different number of pairs");
    o.Check(Prune(p, 50) == p, "not idempotent");
  }

  // Optional: real datasets, one pair of files per environment variable pair.
  struct Dataset {
    const char* name;
    const char* src_env;
    const char* tgt_env;
    double pruned;
  };
  const Dataset datasets[] = {
      {"europarl", "MTNOISE_EUROPARL_SRC", "MTNOISE_EUROPARL_TGT", 1859898},
      {"ted", "MTNOISE_TED_SRC", "MTNOISE_TED_TGT", 181582},
      {"mtnt", "MTNOISE_MTNT_SRC", "MTNOISE_MTNT_TGT", 18112}};
  int checked = 0;
  for (const Dataset& d : datasets) {
    const char* src = std::getenv(d.src_env);
    const char* tgt = std::getenv(d.tgt_env);
    if (!src || !tgt || !*src || !*tgt) continue;
    ++checked;
    const ParallelCorpus c = LoadParallel(src, tgt, d.name);
    const double kept = static_cast<double>(Prune(c, 50).size());
    o.Check(std::fabs(kept - d.pruned) <= 0.005 * d.pruned,
            std::string(d.name) + " kept " + std::to_string(kept));
    o.detail << d.name << " " << c.size() << " -> " << kept << "; ";
  }
  o.detail << "properties on 5 corpora; dataset counts "
           << (checked ? "checked" : "skipped (no data)");
}

void BackTranslationHygiene(Outcome& o) {
  const ParallelCorpus c = SyntheticCorpus(1000, 30, 8);
  std::vector<std::string> in;
  for (const SentencePair& p : c) in.push_back(p.src);
  const DomainTag tag;
  const auto id = MockTranslator::Identity();
  auto ep = [](Direction d, std::shared_ptr<const Translator> t, std::size_t batch = 64) {
    return TranslatorEndpoint{d, std::move(t), batch, 2};
  };

  const auto ubt = RoundTripUntagged(in, ep(Direction::kSrcToPivot, id),
                                     ep(Direction::kPivotToSrc, id));
  const auto tbt = RoundTripTagged(in, ep(Direction::kSrcToPivot, id),
                                   ep(Direction::kPivotToSrc, id), tag);
  bool identity = ubt.size() == in.size() && tbt.size() == in.size();
  bool clean = true;
  for (std::size_t i = 0; identity && i < in.size(); ++i) {
    identity &= ubt[i].noised == in[i] && tbt[i].noised == in[i];
    clean &= !tag.OccursIn(tbt[i].pivot) && !tag.OccursIn(tbt[i].noised);
  }
  o.Check(identity, "identity mocks changed text");

  // A transport that leaks the tag into its output everywhere.
  const auto leaky = std::make_shared<MockTranslator>(
      MockTranslator::CaseMap::kNone,
      std::vector<MockTranslator::Rule>{{" ", " <MTNT> ", MockTranslator::When::kAlways}});
  for (const RoundTripResult& r : RoundTripTagged(in, ep(Direction::kSrcToPivot, leaky),
                                                  ep(Direction::kPivotToSrc, leaky), tag)) {
    clean &= !tag.OccursIn(r.pivot) && !tag.OccursIn(r.noised);
  }
  o.Check(clean, "tag token in TBT output");

  bool round_trip = true;
  for (TagSides sides : {TagSides::kSourceOnly, TagSides::kBoth}) {
    round_trip &= StripTag(TagCorpus(c, tag, sides), tag) == c;
  }
  o.Check(round_trip, "tag/strip round trip failed");

  const auto upper = std::make_shared<MockTranslator>(MockTranslator::CaseMap::kUpper,
                                                      std::vector<MockTranslator::Rule>{});
  const auto lower = std::make_shared<MockTranslator>(MockTranslator::CaseMap::kLower,
                                                      std::vector<MockTranslator::Rule>{});
  for (bool tagged : {false, true}) {
    RoundTripOptions opt;
    if (tagged) opt.tag = tag;
    const auto b1 = RunRoundTrip(in, ep(Direction::kSrcToPivot, upper, 1),
                                 ep(Direction::kPivotToSrc, lower, 1), opt);
    const auto b64 = RunRoundTrip(in, ep(Direction::kSrcToPivot, upper, 64),
                                  ep(Direction::kPivotToSrc, lower, 64), opt);
    o.Check(b1 == b64, "batch size changed results");
  }

  const auto sensitive = std::make_shared<MockTranslator>(
      MockTranslator::CaseMap::kNone,
      std::vector<MockTranslator::Rule>{{"chat", "chaaat", MockTranslator::When::kTagged}});
  const auto u = RoundTripUntagged(in, ep(Direction::kSrcToPivot, sensitive),
                                   ep(Direction::kPivotToSrc, id));
  const auto t = RoundTripTagged(in, ep(Direction::kSrcToPivot, sensitive),
                                 ep(Direction::kPivotToSrc, id), tag);
  std::size_t touched = 0;
  bool separated = true;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool fires = in[i].find("chat") != std::string::npos;
    touched += fires;
    separated &= (u[i].noised != t[i].noised) == fires;
  }
  o.Check(separated && touched > 0, "TBT/UBT difference does not track the rule");
  o.detail << in.size() << " sentences; tag-sensitive rule touched " << touched;
}

void BleuOracle(Outcome& o) {
  using S = std::vector<std::string>;
  const S same = {"le chat est là", "il pleut"};
  o.Check(Bleu(same, same).score == 1.0, "identical corpora not 1.0");
  o.Check(Bleu(S{"a b c d"}, S{"e f g h"}).score == 0.0, "disjoint not 0");
  const BleuScore clipped = Bleu(S{"the the the the the the the"},
                                 S{"the cat is on the mat"});
  o.Check(std::fabs(clipped.precisions[0] - 2.0 / 7.0) <= 1e-9, "p1 != 2/7");
  o.Check(std::fabs(Bleu(S{"a b c d e"}, S{"a b c d e f"}).score - std::exp(-0.2)) <= 1e-9,
          "brevity case");
  o.Check(std::fabs(Bleu(S{"a b c d", "x y"}, S{"a b c d", "x z"}).score -
                    std::pow(5.0 / 6.0 * 3.0 / 4.0, 0.25)) <= 1e-9,
          "pooled-count case");

  static const char* kWords[] = {"le", "chat", "a", "mangé", "la", "souris", "noire"};
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomSource rng(seed, 99);
    S hyp, ref;
    for (int i = 0; i < 10; ++i) {
      std::vector<std::string> h, r;
      const std::size_t len = 4 + rng.UniformIndex(12);
      for (std::size_t k = 0; k < len; ++k) h.push_back(kWords[rng.UniformIndex(7)]);
      for (const std::string& w : h) {
        r.push_back(rng.Bernoulli(0.25) ? kWords[rng.UniformIndex(7)] : w);
      }
      if (rng.Bernoulli(0.5)) r.push_back("fin");
      hyp.push_back(JoinTokens(h));
      ref.push_back(JoinTokens(r));
    }
    const double got = Bleu(hyp, ref).score;
    const double want = ReferenceBleu(hyp, ref).score;
    o.Check(got > 0.0, "random case degenerate");
    worst = std::max(worst, std::fabs(got - want));
  }
  o.Check(worst <= 1e-9, "brute-force mismatch " + std::to_string(worst));
  o.detail << "max |diff| vs brute force = " << worst;
}

void SweepMonotonicity(Outcome& o) {
  const DefaultLexicons lex;
  const ParallelCorpus c = SyntheticCorpusWithTokens(100000, 9);
  const std::vector<double> m = {0, 0.5, 1, 2};
  const SweepResult r = Sweep(c, NoiseProfile::Default(), m, lex.view(), 9, {std::nullopt, "sweep", 4});
  const double n = static_cast<double>(r.levels.at(0).report.token_draws);
  for (std::size_t i = 0; i + 1 < r.levels.size(); ++i) {
    const double lo = r.levels[i].report.TotalRate();
    const double hi = r.levels[i + 1].report.TotalRate();
    o.Check(lo + Band(lo, n) < hi - Band(hi, n),
            "levels " + std::to_string(i) + "/" + std::to_string(i + 1) + " overlap");
  }
  o.detail << "rates";
  for (const SweepLevel& l : r.levels) {
    o.detail << " m" << FormatMultiplier(l.multiplier) << "=" << l.report.TotalRate();
  }
  o.detail << " (n=" << n << ")";
}

}  // namespace
}  // namespace mtnoise

int main() {
  using mtnoise::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"identity", mtnoise::Identity},
      {"density", mtnoise::Density},
      {"rate-convergence", mtnoise::RateConvergence},
      {"determinism", mtnoise::Determinism},
      {"alignment-replay", mtnoise::AlignmentAndReplay},
      {"pruning", mtnoise::Pruning},
      {"backtranslation-hygiene", mtnoise::BackTranslationHygiene},
      {"bleu-oracle", mtnoise::BleuOracle},
      {"sweep-monotonicity", mtnoise::SweepMonotonicity},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.Check(false, std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
