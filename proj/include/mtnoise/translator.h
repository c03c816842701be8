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

#ifndef MTNOISE_TRANSLATOR_H_
#define MTNOISE_TRANSLATOR_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtnoise {

enum class Direction { kSrcToPivot, kPivotToSrc };

// Wire names: "src-pivot" and "pivot-src".
std::string_view DirectionName(Direction direction);
Direction ParseDirection(std::string_view name);

// A sentence-batch translation capability. Implementations must return one
// output per input, in order, and be safe to call from several threads.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::vector<std::string> Translate(
      Direction direction, std::span<const std::string> sentences) const = 0;
};

// Deterministic rule-based stand-in for a trained model.
//
// A sentence whose first token looks like a tag ("<...>") is "tagged": the
// tag is echoed unchanged and the remaining text is transformed. The case
// mapping runs first, then the rewrite rules in order; each rule replaces
// every occurrence of `find` and may be limited to tagged or untagged
// input.
class MockTranslator : public Translator {
 public:
  enum class CaseMap { kNone, kUpper, kLower };
  enum class When { kAlways, kTagged, kUntagged };

  struct Rule {
    std::string find;
    std::string replace;
    When when = When::kAlways;
  };

  MockTranslator() = default;
  MockTranslator(CaseMap case_map, std::vector<Rule> rules);

  static std::shared_ptr<MockTranslator> Identity();

  // {"case": "none|upper|lower",
  //  "rules": [{"find": "...", "replace": "...", "when": "always|tagged|untagged"}]}
  static MockTranslator FromJson(std::string_view json);
  static MockTranslator FromFile(const std::filesystem::path& path);

  std::vector<std::string> Translate(
      Direction direction,
      std::span<const std::string> sentences) const override;

  std::string TranslateOne(const std::string& sentence) const;

 private:
  CaseMap case_map_ = CaseMap::kNone;
  std::vector<Rule> rules_;
};

// Talks to a translation server over HTTP:
//   POST <url>  {"direction": "src-pivot", "sentences": [...]}
//   200         {"translations": [...]}
// Connection failures and non-200 statuses are retried; a body that does not
// parse or carries the wrong number of translations is not.
class HttpTranslator : public Translator {
 public:
  struct Options {
    std::string url;
    int timeout_ms = 30000;
    int retries = 3;
    int retry_delay_ms = 200;
  };

  explicit HttpTranslator(Options options);

  std::vector<std::string> Translate(
      Direction direction,
      std::span<const std::string> sentences) const override;

  const Options& options() const { return options_; }

 private:
  Options options_;
  std::string host_;
  int port_ = 80;
  std::string path_;
};

struct TranslatorEndpoint {
  Direction direction = Direction::kSrcToPivot;
  std::shared_ptr<const Translator> transport;
  std::size_t batch_size = 64;
  // Batches allowed in flight at once.
  unsigned concurrency = 1;
};

// Splits `sentences` into batches of endpoint.batch_size and reassembles the
// outputs in input order. Transport errors are rethrown with the failing
// batch's index range. Throws InvalidArgumentError on an empty input.
std::vector<std::string> TranslateBatch(const TranslatorEndpoint& endpoint,
                                        std::span<const std::string> sentences);

}  // namespace mtnoise

#endif  // MTNOISE_TRANSLATOR_H_
