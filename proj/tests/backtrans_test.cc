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

#include "mtnoise/backtrans.h"

#include <gtest/gtest.h>

#include <atomic>
#include <fstream>

#include "mtnoise/errors.h"
#include "mtnoise/text.h"
#include "test_util.h"

namespace mtnoise {
namespace {

using testing::SyntheticCorpus;
using testing::TempDir;

TranslatorEndpoint Endpoint(Direction d, std::shared_ptr<const Translator> t,
                            std::size_t batch = 64, unsigned concurrency = 1) {
  return {d, std::move(t), batch, concurrency};
}

std::shared_ptr<const Translator> Mock(MockTranslator::CaseMap c,
                                       std::vector<MockTranslator::Rule> rules = {}) {
  return std::make_shared<MockTranslator>(c, std::move(rules));
}

std::vector<std::string> Sources(const ParallelCorpus& c) {
  std::vector<std::string> out;
  for (const SentencePair& p : c) out.push_back(p.src);
  return out;
}

// Echoes its input verbatim, including the tag wherever it appears, and
// sprinkles extra copies of the tag into the middle of the sentence.
class TagLeakingTranslator : public Translator {
 public:
  std::vector<std::string> Translate(
      Direction, std::span<const std::string> sentences) const override {
    std::vector<std::string> out;
    for (const std::string& s : sentences) out.push_back(s + " <MTNT> fin");
    return out;
  }
};

// Identity transport that fails every call after the first `budget`.
class FlakyTranslator : public Translator {
 public:
  explicit FlakyTranslator(int budget) : budget_(budget) {}
  std::vector<std::string> Translate(
      Direction, std::span<const std::string> sentences) const override {
    if (calls_++ >= budget_) throw TransportError("connection reset");
    std::vector<std::string> out;
    for (const std::string& s : sentences) out.push_back(AsciiUpper(s));
    return out;
  }
  int calls() const { return calls_; }

 private:
  int budget_;
  mutable std::atomic<int> calls_{0};
};

TEST(DomainTagTest, ApplyStripScrub) {
  const DomainTag tag;
  EXPECT_EQ(tag.token(), "<MTNT>");
  EXPECT_EQ(tag.Apply("salut"), "<MTNT> salut");
  EXPECT_EQ(tag.Apply(""), "<MTNT> ");
  EXPECT_EQ(tag.StripLeading("<MTNT> salut"), "salut");
  EXPECT_EQ(tag.StripLeading("<MTNT>"), "");
  EXPECT_EQ(tag.StripLeading("salut <MTNT> toi"), "salut <MTNT> toi");
  EXPECT_EQ(tag.StripLeading("<MTNT>x"), "<MTNT>x");
  EXPECT_EQ(tag.Scrub("<MTNT> a <MTNT> b <MTNT>"), "a b");
  EXPECT_FALSE(tag.OccursIn(tag.Scrub("<MTNT><MTNT> a")));
  EXPECT_THROW(DomainTag(""), InvalidArgumentError);
  EXPECT_THROW(DomainTag("<A B>"), InvalidArgumentError);
}

TEST(RoundTripTest, IdentityMocksAreIdentity) {
  const ParallelCorpus c = SyntheticCorpus(1000, 30, 1);
  const auto in = Sources(c);
  const auto id = MockTranslator::Identity();
  const auto fwd = Endpoint(Direction::kSrcToPivot, id);
  const auto bwd = Endpoint(Direction::kPivotToSrc, id);
  const auto ubt = RoundTripUntagged(in, fwd, bwd);
  const auto tbt = RoundTripTagged(in, fwd, bwd, DomainTag());
  ASSERT_EQ(ubt.size(), in.size());
  ASSERT_EQ(tbt.size(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    EXPECT_EQ(ubt[i], (RoundTripResult{in[i], in[i], in[i]}));
    EXPECT_EQ(tbt[i], (RoundTripResult{in[i], in[i], in[i]}));
  }
}

TEST(RoundTripTest, StagesCompose) {
  const std::vector<std::string> in = {"Le Chat", "été 2019", "OK ok"};
  const auto fwd = Endpoint(Direction::kSrcToPivot, Mock(MockTranslator::CaseMap::kUpper));
  const auto bwd = Endpoint(Direction::kPivotToSrc, Mock(MockTranslator::CaseMap::kLower));
  for (const auto& results :
       {RoundTripUntagged(in, fwd, bwd), RoundTripTagged(in, fwd, bwd, DomainTag())}) {
    for (std::size_t i = 0; i < in.size(); ++i) {
      EXPECT_EQ(results[i].original, in[i]);
      EXPECT_EQ(results[i].pivot, AsciiUpper(in[i]));
      EXPECT_EQ(results[i].noised, AsciiLower(AsciiUpper(in[i])));
    }
  }
}

TEST(RoundTripTest, EchoedTagIsNotRecorded) {
  const std::vector<std::string> in = {"bonjour", "ça va"};
  const auto echo = Mock(MockTranslator::CaseMap::kNone);
  const auto r = RoundTripTagged(in, Endpoint(Direction::kSrcToPivot, echo),
                                 Endpoint(Direction::kPivotToSrc, echo), DomainTag());
  EXPECT_EQ(r[0].pivot, "bonjour");
  EXPECT_EQ(r[1].noised, "ça va");
}

TEST(RoundTripTest, LeakedTagsAreScrubbed) {
  const auto leak = std::make_shared<TagLeakingTranslator>();
  const DomainTag tag;
  const auto r = RoundTripTagged(Sources(SyntheticCorpus(200, 10, 2)),
                                 Endpoint(Direction::kSrcToPivot, leak),
                                 Endpoint(Direction::kPivotToSrc, leak), tag);
  for (const RoundTripResult& x : r) {
    EXPECT_FALSE(tag.OccursIn(x.pivot)) << x.pivot;
    EXPECT_FALSE(tag.OccursIn(x.noised)) << x.noised;
    EXPECT_EQ(x.noised, x.original + " fin fin");
  }
}

TEST(RoundTripTest, TagCollision) {
  const auto id = MockTranslator::Identity();
  const std::vector<std::string> in = {"ok", "déjà <MTNT> vu"};
  EXPECT_THROW(RoundTripTagged(in, Endpoint(Direction::kSrcToPivot, id),
                               Endpoint(Direction::kPivotToSrc, id), DomainTag()),
               TagCollisionError);
  EXPECT_NO_THROW(RoundTripUntagged(in, Endpoint(Direction::kSrcToPivot, id),
                                    Endpoint(Direction::kPivotToSrc, id)));
}

TEST(RoundTripTest, WrongDirectionsAreRejected) {
  const auto id = MockTranslator::Identity();
  const std::vector<std::string> in = {"a"};
  EXPECT_THROW(RoundTripUntagged(in, Endpoint(Direction::kPivotToSrc, id),
                                 Endpoint(Direction::kPivotToSrc, id)),
               InvalidArgumentError);
}

TEST(RoundTripTest, BatchSizeDoesNotMatter) {
  const auto in = Sources(SyntheticCorpus(300, 15, 3));
  const auto up = Mock(MockTranslator::CaseMap::kUpper,
                       {{"É", "E", MockTranslator::When::kTagged}});
  const auto low = Mock(MockTranslator::CaseMap::kLower);
  for (bool tagged : {false, true}) {
    std::optional<std::vector<RoundTripResult>> first;
    for (std::size_t batch : {1u, 64u}) {
      for (unsigned conc : {1u, 4u}) {
        RoundTripOptions o;
        if (tagged) o.tag = DomainTag();
        const auto r = RunRoundTrip(in, Endpoint(Direction::kSrcToPivot, up, batch, conc),
                                    Endpoint(Direction::kPivotToSrc, low, batch, conc), o);
        if (!first) first = r;
        EXPECT_EQ(r, *first) << batch << " " << conc;
      }
    }
  }
}

TEST(RoundTripTest, TagSensitiveMockSeparatesPipelines) {
  // The forward model rewrites "chat" only when it sees the tag, so TBT and
  // UBT must differ exactly on the sentences containing "chat".
  const auto fwd = Endpoint(Direction::kSrcToPivot,
                            Mock(MockTranslator::CaseMap::kNone,
                                 {{"chat", "chaaat", MockTranslator::When::kTagged}}));
  const auto bwd = Endpoint(Direction::kPivotToSrc, MockTranslator::Identity());
  const auto in = Sources(SyntheticCorpus(1000, 12, 4));
  const auto ubt = RoundTripUntagged(in, fwd, bwd);
  const auto tbt = RoundTripTagged(in, fwd, bwd, DomainTag());
  std::size_t touched = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool rule_fires = in[i].find("chat") != std::string::npos;
    touched += rule_fires;
    EXPECT_EQ(ubt[i].noised != tbt[i].noised, rule_fires) << in[i];
    EXPECT_EQ(ubt[i].noised, in[i]);
  }
  EXPECT_GT(touched, 10u);
}

TEST(RoundTripTest, ResumesFromCheckpoint) {
  TempDir dir;
  const auto in = Sources(SyntheticCorpus(95, 8, 5));
  RoundTripOptions o;
  o.checkpoint = dir / "run.ckpt";
  o.run_id = "r1";
  o.block_size = 10;
  // Two calls per block (forward and backward); fail during block 4.
  auto flaky = std::make_shared<FlakyTranslator>(7);
  EXPECT_THROW(RunRoundTrip(in, Endpoint(Direction::kSrcToPivot, flaky, 10),
                            Endpoint(Direction::kPivotToSrc, flaky, 10), o),
               TransportError);
  const auto cp = ReadCheckpoint(*o.checkpoint);
  ASSERT_TRUE(cp.has_value());
  EXPECT_EQ(cp->last_completed_batch, 2);
  EXPECT_EQ(cp->run_id, "r1");

  // Simulate a crash after results were appended but before the checkpoint
  // moved on.
  {
    std::ofstream extra(CheckpointResultsPath(*o.checkpoint), std::ios::app);
    extra << R"({"original":"x","pivot":"y","noised":"z"})" << '\n';
  }

  auto healthy = std::make_shared<FlakyTranslator>(1000);
  const auto resumed = RunRoundTrip(in, Endpoint(Direction::kSrcToPivot, healthy, 10),
                                    Endpoint(Direction::kPivotToSrc, healthy, 10), o);
  EXPECT_EQ(healthy->calls(), 2 * 7);  // blocks 3..9
  const auto fresh = RoundTripUntagged(
      in, Endpoint(Direction::kSrcToPivot, healthy, 10),
      Endpoint(Direction::kPivotToSrc, healthy, 10));
  EXPECT_EQ(resumed, fresh);
  EXPECT_EQ(ReadCheckpoint(*o.checkpoint)->last_completed_batch, 9);

  // The results file now holds exactly the finished run.
  std::ifstream results(CheckpointResultsPath(*o.checkpoint));
  std::size_t lines = 0;
  for (std::string line; std::getline(results, line);) ++lines;
  EXPECT_EQ(lines, in.size());

  RoundTripOptions other = o;
  other.run_id = "r2";
  EXPECT_THROW(RunRoundTrip(in, Endpoint(Direction::kSrcToPivot, healthy, 10),
                            Endpoint(Direction::kPivotToSrc, healthy, 10), other),
               DataError);
}

TEST(TagCorpusTest, Examples) {
  const ParallelCorpus c = ParallelCorpus::FromTexts(
      "c", {{"salut", "hi"}, {"", "empty"}});
  const DomainTag tag;
  const ParallelCorpus src = TagCorpus(c, tag, TagSides::kSourceOnly);
  EXPECT_EQ(src[0].src, "<MTNT> salut");
  EXPECT_EQ(src[0].tgt, "hi");
  const ParallelCorpus both = TagCorpus(c, tag, TagSides::kBoth);
  EXPECT_EQ(both[1].tgt, "<MTNT> empty");
  EXPECT_EQ(StripTag(src, tag), c);
  EXPECT_EQ(StripTag(both, tag), c);
  EXPECT_EQ(StripTag(c, tag), c);
}

TEST(TagCorpusTest, RoundTripsOnSyntheticCorpora) {
  const DomainTag tag("<TED>");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ParallelCorpus c = SyntheticCorpus(500, 20, seed);
    for (TagSides sides : {TagSides::kSourceOnly, TagSides::kBoth}) {
      const ParallelCorpus tagged = TagCorpus(c, tag, sides);
      EXPECT_EQ(StripTag(tagged, tag), c);
      EXPECT_EQ(TagCorpus(StripTag(tagged, tag), tag, sides), tagged);
    }
  }
}

TEST(TagCorpusTest, StripLeavesInteriorTags) {
  const ParallelCorpus c = ParallelCorpus::FromTexts(
      "c", {{"<MTNT> a <MTNT> b", "x <MTNT>"}});
  const ParallelCorpus s = StripTag(c, DomainTag());
  EXPECT_EQ(s[0].src, "a <MTNT> b");
  EXPECT_EQ(s[0].tgt, "x <MTNT>");
}

TEST(TagCorpusTest, Collisions) {
  const DomainTag tag;
  EXPECT_THROW(TagCorpus(ParallelCorpus::FromTexts("c", {{"a", "<MTNT>"}}), tag,
                         TagSides::kSourceOnly),
               TagCollisionError);
}

TEST(MixtureTest, ConcatenatesInOrder) {
  const ParallelCorpus ted = ParallelCorpus::FromTexts("ted", {{"a", "A"}, {"b", "B"}});
  const ParallelCorpus mtnt = ParallelCorpus::FromTexts("mtnt", {{"c", "C"}});
  const std::vector<std::pair<ParallelCorpus, DomainTag>> parts = {
      {ted, DomainTag("<TED>")}, {mtnt, DomainTag("<MTNT>")}};
  const ParallelCorpus m = BuildTaggedMixture(parts);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0].src, "<TED> a");
  EXPECT_EQ(m[1].src, "<TED> b");
  EXPECT_EQ(m[2].src, "<MTNT> c");
  EXPECT_EQ(m[2].tgt, "C");
  EXPECT_EQ(m[2].index, 2u);
  EXPECT_EQ(m.name(), "mixture");
}

TEST(MixtureTest, Errors) {
  const ParallelCorpus a = ParallelCorpus::FromTexts("a", {{"x", "y"}});
  const ParallelCorpus b = ParallelCorpus::FromTexts("b", {{"<A> x", "y"}});
  const std::vector<std::pair<ParallelCorpus, DomainTag>> dup = {
      {a, DomainTag("<A>")}, {a, DomainTag("<A>")}};
  EXPECT_THROW(BuildTaggedMixture(dup), InvalidArgumentError);
  const std::vector<std::pair<ParallelCorpus, DomainTag>> clash = {
      {a, DomainTag("<A>")}, {b, DomainTag("<B>")}};
  EXPECT_THROW(BuildTaggedMixture(clash), TagCollisionError);
}

}  // namespace
}  // namespace mtnoise
