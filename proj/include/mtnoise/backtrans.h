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

#ifndef MTNOISE_BACKTRANS_H_
#define MTNOISE_BACKTRANS_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtnoise/corpus.h"
#include "mtnoise/translator.h"

namespace mtnoise {

// A reserved token marking a sentence's origin corpus.
class DomainTag {
 public:
  // Throws InvalidArgumentError on an empty token or one with whitespace.
  explicit DomainTag(std::string token = "<MTNT>");

  const std::string& token() const { return token_; }

  // "<tag> " + text.
  std::string Apply(std::string_view text) const;

  // Removes a leading "<tag> " (or a sentence that is just the tag);
  // anything else is returned unchanged.
  std::string StripLeading(std::string_view text) const;

  // StripLeading, then removes any remaining occurrence of the tag and
  // re-normalizes spacing if one was found. Used on translator output.
  std::string Scrub(std::string_view text) const;

  bool OccursIn(std::string_view text) const {
    return text.find(token_) != std::string_view::npos;
  }

  bool operator==(const DomainTag&) const = default;

 private:
  std::string token_;
};

struct RoundTripResult {
  std::string original;
  std::string pivot;
  std::string noised;

  bool operator==(const RoundTripResult&) const = default;
};

// noised = bwd(fwd(original)), aligned with the input.
std::vector<RoundTripResult> RoundTripUntagged(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd);

// Each stage sees "<tag> " + sentence; the tag is scrubbed from every stage's
// output before it is stored or passed on. Throws TagCollisionError when an
// input already contains the tag.
std::vector<RoundTripResult> RoundTripTagged(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd, const DomainTag& tag);

struct RoundTripOptions {
  std::optional<DomainTag> tag;  // set for the tagged pipeline
  // When set, progress is persisted after every block and a rerun with the
  // same run_id resumes after the last completed block.
  std::optional<std::filesystem::path> checkpoint;
  std::string run_id;
  // Sentences per checkpointed block; 0 means fwd.batch_size.
  std::size_t block_size = 0;
};

std::vector<RoundTripResult> RunRoundTrip(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd, const RoundTripOptions& options);

// Checkpoint record: {"run_id": "...", "block_size": n, "sentences": n,
// "last_completed_batch": k}. Completed results live next to it in
// "<checkpoint>.results.jsonl".
struct Checkpoint {
  std::string run_id;
  std::size_t block_size = 0;
  std::size_t sentences = 0;
  long long last_completed_batch = -1;
};
std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path);
std::filesystem::path CheckpointResultsPath(const std::filesystem::path& path);

enum class TagSides { kSourceOnly, kBoth };

// Throws TagCollisionError if the tag already occurs anywhere in the corpus.
ParallelCorpus TagCorpus(const ParallelCorpus& corpus, const DomainTag& tag,
                         TagSides sides);

// Removes a leading tag from both sides; interior occurrences stay.
ParallelCorpus StripTag(const ParallelCorpus& corpus, const DomainTag& tag);

// Concatenates the corpora, each source side prefixed with its own tag.
// Tags must be distinct and must not occur in any of the corpora.
ParallelCorpus BuildTaggedMixture(
    std::span<const std::pair<ParallelCorpus, DomainTag>> corpora);

}  // namespace mtnoise

#endif  // MTNOISE_BACKTRANS_H_
