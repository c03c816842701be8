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

#ifndef MTNOISE_CORPUS_H_
#define MTNOISE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mtnoise {

struct SentencePair {
  std::string src;
  std::string tgt;
  std::size_t index = 0;

  bool operator==(const SentencePair&) const = default;
};

// An aligned, immutable list of sentence pairs. Construction validates that
// every side is single-line UTF-8 and renumbers indices to 0..size-1.
class ParallelCorpus {
 public:
  ParallelCorpus() = default;
  ParallelCorpus(std::string name, std::vector<SentencePair> pairs);

  // Convenience for literals and tests.
  static ParallelCorpus FromTexts(
      std::string name,
      const std::vector<std::pair<std::string, std::string>>& texts);

  const std::string& name() const { return name_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::span<const SentencePair> pairs() const { return pairs_; }
  const SentencePair& operator[](std::size_t i) const { return pairs_[i]; }
  auto begin() const { return pairs_.cbegin(); }
  auto end() const { return pairs_.cend(); }

  // Content equality; the name is a label and is ignored.
  bool operator==(const ParallelCorpus& other) const {
    return pairs_ == other.pairs_;
  }

 private:
  std::string name_;
  std::vector<SentencePair> pairs_;
};

struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t token_count_src = 0;
  std::size_t token_count_tgt = 0;
  std::size_t max_len_src = 0;
  std::size_t max_len_tgt = 0;

  bool operator==(const CorpusStats&) const = default;
};

// Reads a one-sentence-per-line UTF-8 file. A trailing carriage return on
// each line is dropped; a missing final newline is tolerated.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

// Writes each line followed by a single '\n'.
void WriteLines(const std::filesystem::path& path,
                std::span<const std::string> lines);

ParallelCorpus LoadParallel(const std::filesystem::path& src_path,
                            const std::filesystem::path& tgt_path,
                            std::string name);

void WriteParallel(const ParallelCorpus& corpus,
                   const std::filesystem::path& src_path,
                   const std::filesystem::path& tgt_path);

// Keeps pairs whose source AND target token counts are both <= max_len.
ParallelCorpus Prune(const ParallelCorpus& corpus, std::size_t max_len);

// n pairs uniformly without replacement, returned in corpus order.
ParallelCorpus Sample(const ParallelCorpus& corpus, std::size_t n,
                      std::uint64_t seed);

CorpusStats ComputeStats(const ParallelCorpus& corpus);

}  // namespace mtnoise

#endif  // MTNOISE_CORPUS_H_
