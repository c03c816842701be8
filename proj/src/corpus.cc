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

#include "mtnoise/corpus.h"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "mtnoise/errors.h"
#include "mtnoise/random.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

void ValidateSide(const std::string& text, std::size_t index,
                  const char* side) {
  if (ContainsLineBreak(text)) {
    throw DataError("pair " + std::to_string(index) + ": " + side +
                    " side contains a line break");
  }
  if (!IsValidUtf8(text)) {
    throw EncodingError("pair " + std::to_string(index) + ": " + side +
                        " side is not valid UTF-8");
  }
}

}  // namespace

ParallelCorpus::ParallelCorpus(std::string name,
                               std::vector<SentencePair> pairs)
    : name_(std::move(name)), pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    pairs_[i].index = i;
    ValidateSide(pairs_[i].src, i, "source");
    ValidateSide(pairs_[i].tgt, i, "target");
  }
}

ParallelCorpus ParallelCorpus::FromTexts(
    std::string name,
    const std::vector<std::pair<std::string, std::string>>& texts) {
  std::vector<SentencePair> pairs;
  pairs.reserve(texts.size());
  for (const auto& [src, tgt] : texts) pairs.push_back({src, tgt, 0});
  return ParallelCorpus(std::move(name), std::move(pairs));
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t nl = data.find('\n', start);
    if (nl == std::string::npos) nl = data.size();
    std::size_t stop = nl;
    if (stop > start && data[stop - 1] == '\r') --stop;
    lines.emplace_back(data, start, stop - start);
    start = nl + 1;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!IsValidUtf8(lines[i])) {
      throw EncodingError(path.string() + ":" + std::to_string(i + 1) +
                          ": invalid UTF-8");
    }
  }
  return lines;
}

void WriteLines(const std::filesystem::path& path,
                std::span<const std::string> lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const std::string& line : lines) {
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
  }
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

ParallelCorpus LoadParallel(const std::filesystem::path& src_path,
                            const std::filesystem::path& tgt_path,
                            std::string name) {
  std::vector<std::string> src = ReadLines(src_path);
  std::vector<std::string> tgt = ReadLines(tgt_path);
  if (src.size() != tgt.size()) {
    throw AlignmentError("misaligned corpus: " + src_path.string() + " has " +
                         std::to_string(src.size()) + " lines, " +
                         tgt_path.string() + " has " +
                         std::to_string(tgt.size()));
  }
  std::vector<SentencePair> pairs;
  pairs.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    pairs.push_back({std::move(src[i]), std::move(tgt[i]), i});
  }
  return ParallelCorpus(std::move(name), std::move(pairs));
}

void WriteParallel(const ParallelCorpus& corpus,
                   const std::filesystem::path& src_path,
                   const std::filesystem::path& tgt_path) {
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  src.reserve(corpus.size());
  tgt.reserve(corpus.size());
  for (const SentencePair& pair : corpus) {
    src.push_back(pair.src);
    tgt.push_back(pair.tgt);
  }
  WriteLines(src_path, src);
  WriteLines(tgt_path, tgt);
}

ParallelCorpus Prune(const ParallelCorpus& corpus, std::size_t max_len) {
  if (max_len == 0) throw InvalidArgumentError("max_len must be >= 1");
  std::vector<SentencePair> kept;
  for (const SentencePair& pair : corpus) {
    if (CountTokens(pair.src) <= max_len && CountTokens(pair.tgt) <= max_len) {
      kept.push_back(pair);
    }
  }
  return ParallelCorpus(corpus.name(), std::move(kept));
}

ParallelCorpus Sample(const ParallelCorpus& corpus, std::size_t n,
                      std::uint64_t seed) {
  if (n > corpus.size()) {
    throw InvalidArgumentError("sample size " + std::to_string(n) +
                               " exceeds corpus size " +
                               std::to_string(corpus.size()));
  }
  // Selection sampling (Knuth's Algorithm S): one pass, output already in
  // corpus order.
  RandomSource rng(seed);
  std::vector<SentencePair> chosen;
  chosen.reserve(n);
  std::size_t remaining = corpus.size();
  for (const SentencePair& pair : corpus) {
    const std::size_t needed = n - chosen.size();
    if (needed == 0) break;
    if (rng.UniformIndex(remaining) < needed) chosen.push_back(pair);
    --remaining;
  }
  return ParallelCorpus(corpus.name(), std::move(chosen));
}

CorpusStats ComputeStats(const ParallelCorpus& corpus) {
  CorpusStats stats;
  stats.sentence_count = corpus.size();
  for (const SentencePair& pair : corpus) {
    const std::size_t ns = CountTokens(pair.src);
    const std::size_t nt = CountTokens(pair.tgt);
    stats.token_count_src += ns;
    stats.token_count_tgt += nt;
    stats.max_len_src = std::max(stats.max_len_src, ns);
    stats.max_len_tgt = std::max(stats.max_len_tgt, nt);
  }
  return stats;
}

}  // namespace mtnoise
