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

#include <fstream>
#include <set>

#include "json.hpp"
#include "mtnoise/errors.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

void RequireDirection(const TranslatorEndpoint& endpoint, Direction expected,
                      const char* role) {
  if (endpoint.direction != expected) {
    throw InvalidArgumentError(std::string(role) + " endpoint must translate " +
                               std::string(DirectionName(expected)));
  }
}

void CheckNoCollision(const ParallelCorpus& corpus, const DomainTag& tag) {
  for (const SentencePair& pair : corpus) {
    if (tag.OccursIn(pair.src) || tag.OccursIn(pair.tgt)) {
      throw TagCollisionError("tag " + tag.token() + " already occurs in " +
                              (corpus.name().empty() ? std::string("corpus")
                                                     : corpus.name()) +
                              " pair " + std::to_string(pair.index));
    }
  }
}

std::string ResultToJson(const RoundTripResult& r) {
  nlohmann::ordered_json j;
  j["original"] = r.original;
  j["pivot"] = r.pivot;
  j["noised"] = r.noised;
  return j.dump();
}

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& c) {
  nlohmann::ordered_json j;
  j["run_id"] = c.run_id;
  j["block_size"] = c.block_size;
  j["sentences"] = c.sentences;
  j["last_completed_batch"] = c.last_completed_batch;
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

DomainTag::DomainTag(std::string token) : token_(std::move(token)) {
  if (token_.empty() || ContainsWhitespace(token_)) {
    throw InvalidArgumentError("domain tag must be a single non-empty token");
  }
}

std::string DomainTag::Apply(std::string_view text) const {
  std::string out = token_;
  out.push_back(' ');
  out += text;
  return out;
}

std::string DomainTag::StripLeading(std::string_view text) const {
  if (text == token_) return "";
  if (text.size() > token_.size() && text.substr(0, token_.size()) == token_ &&
      text[token_.size()] == ' ') {
    return std::string(text.substr(token_.size() + 1));
  }
  return std::string(text);
}

std::string DomainTag::Scrub(std::string_view text) const {
  std::string out = StripLeading(text);
  if (!OccursIn(out)) return out;
  std::size_t pos;
  while ((pos = out.find(token_)) != std::string::npos) {
    out.erase(pos, token_.size());
  }
  return NormalizeSpaces(out);
}

std::vector<RoundTripResult> RoundTripUntagged(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd) {
  return RunRoundTrip(sentences, fwd, bwd, {});
}

std::vector<RoundTripResult> RoundTripTagged(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd, const DomainTag& tag) {
  RoundTripOptions options;
  options.tag = tag;
  return RunRoundTrip(sentences, fwd, bwd, options);
}

std::filesystem::path CheckpointResultsPath(const std::filesystem::path& path) {
  return path.string() + ".results.jsonl";
}

std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    Checkpoint c;
    c.run_id = j.at("run_id").get<std::string>();
    c.block_size = j.at("block_size").get<std::size_t>();
    c.sentences = j.at("sentences").get<std::size_t>();
    c.last_completed_batch = j.at("last_completed_batch").get<long long>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

std::vector<RoundTripResult> RunRoundTrip(
    std::span<const std::string> sentences, const TranslatorEndpoint& fwd,
    const TranslatorEndpoint& bwd, const RoundTripOptions& options) {
  RequireDirection(fwd, Direction::kSrcToPivot, "forward");
  RequireDirection(bwd, Direction::kPivotToSrc, "backward");
  if (options.tag) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (options.tag->OccursIn(sentences[i])) {
        throw TagCollisionError("tag " + options.tag->token() +
                                " already occurs in input sentence " +
                                std::to_string(i));
      }
    }
  }
  const std::size_t block =
      options.block_size > 0 ? options.block_size : fwd.batch_size;
  if (block == 0) throw InvalidArgumentError("block size is 0");

  std::vector<RoundTripResult> results;
  results.reserve(sentences.size());
  std::size_t next_block = 0;

  if (options.checkpoint) {
    if (std::optional<Checkpoint> cp = ReadCheckpoint(*options.checkpoint)) {
      if (cp->run_id != options.run_id || cp->block_size != block ||
          cp->sentences != sentences.size()) {
        throw DataError("checkpoint " + options.checkpoint->string() +
                        " belongs to a different run");
      }
      next_block = static_cast<std::size_t>(cp->last_completed_batch + 1);
      const std::size_t done = std::min(sentences.size(), next_block * block);
      std::ifstream in(CheckpointResultsPath(*options.checkpoint),
                       std::ios::binary);
      std::string line;
      while (results.size() < done && std::getline(in, line)) {
        try {
          const nlohmann::json j = nlohmann::json::parse(line);
          results.push_back({j.at("original").get<std::string>(),
                             j.at("pivot").get<std::string>(),
                             j.at("noised").get<std::string>()});
        } catch (const nlohmann::json::exception& e) {
          throw DataError(std::string("corrupt checkpoint results: ") +
                          e.what());
        }
      }
      if (results.size() != done) {
        throw DataError("checkpoint results file is shorter than recorded");
      }
      for (std::size_t i = 0; i < done; ++i) {
        if (results[i].original != sentences[i]) {
          throw DataError("checkpoint results do not match the input");
        }
      }
    }
  }

  std::ofstream results_out;
  if (options.checkpoint) {
    // Rewrite the completed prefix: a run killed between appending results
    // and updating the checkpoint leaves extra lines behind.
    results_out.open(CheckpointResultsPath(*options.checkpoint),
                     std::ios::binary | std::ios::trunc);
    if (!results_out) throw IoError("cannot write checkpoint results");
    for (const RoundTripResult& r : results) {
      results_out << ResultToJson(r) << '\n';
    }
  }

  auto prepare = [&](std::span<const std::string> texts) {
    std::vector<std::string> in;
    in.reserve(texts.size());
    for (const std::string& t : texts) {
      in.push_back(options.tag ? options.tag->Apply(t) : t);
    }
    return in;
  };
  auto clean = [&](std::vector<std::string> texts) {
    if (options.tag) {
      for (std::string& t : texts) t = options.tag->Scrub(t);
    }
    return texts;
  };

  for (std::size_t begin = next_block * block; begin < sentences.size();
       begin += block, ++next_block) {
    const std::size_t end = std::min(sentences.size(), begin + block);
    const auto originals = sentences.subspan(begin, end - begin);
    const std::vector<std::string> pivots =
        clean(TranslateBatch(fwd, prepare(originals)));
    const std::vector<std::string> noised =
        clean(TranslateBatch(bwd, prepare(pivots)));
    for (std::size_t i = 0; i < originals.size(); ++i) {
      results.push_back({originals[i], pivots[i], noised[i]});
      if (options.checkpoint) results_out << ResultToJson(results.back()) << '\n';
    }
    if (options.checkpoint) {
      results_out.flush();
      if (!results_out) throw IoError("cannot append checkpoint results");
      WriteCheckpoint(*options.checkpoint,
                      {options.run_id, block, sentences.size(),
                       static_cast<long long>(next_block)});
    }
  }
  return results;
}

ParallelCorpus TagCorpus(const ParallelCorpus& corpus, const DomainTag& tag,
                         TagSides sides) {
  CheckNoCollision(corpus, tag);
  std::vector<SentencePair> pairs;
  pairs.reserve(corpus.size());
  for (const SentencePair& pair : corpus) {
    pairs.push_back({tag.Apply(pair.src),
                     sides == TagSides::kBoth ? tag.Apply(pair.tgt) : pair.tgt,
                     pair.index});
  }
  return ParallelCorpus(corpus.name(), std::move(pairs));
}

ParallelCorpus StripTag(const ParallelCorpus& corpus, const DomainTag& tag) {
  std::vector<SentencePair> pairs;
  pairs.reserve(corpus.size());
  for (const SentencePair& pair : corpus) {
    pairs.push_back(
        {tag.StripLeading(pair.src), tag.StripLeading(pair.tgt), pair.index});
  }
  return ParallelCorpus(corpus.name(), std::move(pairs));
}

ParallelCorpus BuildTaggedMixture(
    std::span<const std::pair<ParallelCorpus, DomainTag>> corpora) {
  std::set<std::string> tags;
  for (const auto& [corpus, tag] : corpora) {
    if (!tags.insert(tag.token()).second) {
      throw InvalidArgumentError("duplicate tag in mixture: " + tag.token());
    }
  }
  for (const auto& [corpus, ignored] : corpora) {
    for (const auto& [other, tag] : corpora) CheckNoCollision(corpus, tag);
  }
  std::vector<SentencePair> pairs;
  for (const auto& [corpus, tag] : corpora) {
    const ParallelCorpus tagged = TagCorpus(corpus, tag, TagSides::kSourceOnly);
    pairs.insert(pairs.end(), tagged.begin(), tagged.end());
  }
  return ParallelCorpus("mixture", std::move(pairs));
}

}  // namespace mtnoise
