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

#include "mtnoise/translator.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iterator>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "mtnoise/errors.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

bool LooksLikeTag(std::string_view token) {
  return token.size() >= 3 && token.front() == '<' && token.back() == '>';
}

void ReplaceAll(std::string& text, const std::string& find,
                const std::string& replace) {
  std::size_t pos = 0;
  while ((pos = text.find(find, pos)) != std::string::npos) {
    text.replace(pos, find.size(), replace);
    pos += replace.size();
  }
}

}  // namespace

std::string_view DirectionName(Direction direction) {
  return direction == Direction::kSrcToPivot ? "src-pivot" : "pivot-src";
}

Direction ParseDirection(std::string_view name) {
  if (name == "src-pivot") return Direction::kSrcToPivot;
  if (name == "pivot-src") return Direction::kPivotToSrc;
  throw InvalidArgumentError("unknown direction '" + std::string(name) + "'");
}

MockTranslator::MockTranslator(CaseMap case_map, std::vector<Rule> rules)
    : case_map_(case_map), rules_(std::move(rules)) {
  for (const Rule& rule : rules_) {
    if (rule.find.empty()) {
      throw InvalidArgumentError("mock rule with empty 'find'");
    }
  }
}

std::shared_ptr<MockTranslator> MockTranslator::Identity() {
  return std::make_shared<MockTranslator>();
}

MockTranslator MockTranslator::FromJson(std::string_view json) {
  try {
    const nlohmann::json j = nlohmann::json::parse(json);
    CaseMap case_map = CaseMap::kNone;
    const std::string case_name = j.value("case", std::string("none"));
    if (case_name == "upper") {
      case_map = CaseMap::kUpper;
    } else if (case_name == "lower") {
      case_map = CaseMap::kLower;
    } else if (case_name != "none") {
      throw InvalidArgumentError("unknown mock case map '" + case_name + "'");
    }
    std::vector<Rule> rules;
    for (const nlohmann::json& r : j.value("rules", nlohmann::json::array())) {
      Rule rule;
      rule.find = r.at("find").get<std::string>();
      rule.replace = r.value("replace", std::string());
      const std::string when = r.value("when", std::string("always"));
      if (when == "tagged") {
        rule.when = When::kTagged;
      } else if (when == "untagged") {
        rule.when = When::kUntagged;
      } else if (when != "always") {
        throw InvalidArgumentError("unknown rule condition '" + when + "'");
      }
      rules.push_back(std::move(rule));
    }
    return MockTranslator(case_map, std::move(rules));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("bad mock rules: ") + e.what());
  }
}

MockTranslator MockTranslator::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return FromJson(data);
}

std::string MockTranslator::TranslateOne(const std::string& sentence) const {
  std::string_view view(sentence);
  std::string tag;
  const std::vector<TokenSpan> spans = TokenSpans(view);
  if (!spans.empty() && spans[0].begin == 0) {
    const std::string_view first = view.substr(0, spans[0].end);
    if (LooksLikeTag(first)) {
      tag = std::string(first);
      view.remove_prefix(spans[0].end);
    }
  }
  std::string body(view);
  if (case_map_ == CaseMap::kUpper) body = AsciiUpper(body);
  if (case_map_ == CaseMap::kLower) body = AsciiLower(body);
  const bool tagged = !tag.empty();
  for (const Rule& rule : rules_) {
    if (rule.when == When::kTagged && !tagged) continue;
    if (rule.when == When::kUntagged && tagged) continue;
    ReplaceAll(body, rule.find, rule.replace);
  }
  return tag + body;
}

std::vector<std::string> MockTranslator::Translate(
    Direction, std::span<const std::string> sentences) const {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const std::string& s : sentences) out.push_back(TranslateOne(s));
  return out;
}

HttpTranslator::HttpTranslator(Options options) : options_(std::move(options)) {
  std::string_view url(options_.url);
  constexpr std::string_view kScheme = "http://";
  if (url.substr(0, kScheme.size()) != kScheme) {
    throw InvalidArgumentError("translator URL must start with http://: " +
                               options_.url);
  }
  url.remove_prefix(kScheme.size());
  const std::size_t slash = url.find('/');
  std::string_view authority = url.substr(0, slash);
  path_ = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
  const std::size_t colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    const std::string port(authority.substr(colon + 1));
    try {
      port_ = std::stoi(port);
    } catch (const std::exception&) {
      throw InvalidArgumentError("bad port in translator URL: " + port);
    }
    authority = authority.substr(0, colon);
  }
  host_ = std::string(authority);
  if (host_.empty()) {
    throw InvalidArgumentError("translator URL has no host: " + options_.url);
  }
  if (options_.retries < 0 || options_.timeout_ms <= 0) {
    throw InvalidArgumentError("retries must be >= 0 and timeout > 0");
  }
}

std::vector<std::string> HttpTranslator::Translate(
    Direction direction, std::span<const std::string> sentences) const {
  nlohmann::json request;
  request["direction"] = DirectionName(direction);
  request["sentences"] = std::vector<std::string>(sentences.begin(),
                                                  sentences.end());
  const std::string body = request.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    if (attempt > 0 && options_.retry_delay_ms > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(options_.retry_delay_ms * attempt));
    }
    httplib::Client client(host_, port_);
    const auto timeout = std::chrono::milliseconds(options_.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    const httplib::Result res =
        client.Post(path_, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    std::vector<std::string> translations;
    try {
      const nlohmann::json reply = nlohmann::json::parse(res->body);
      translations =
          reply.at("translations").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw MalformedResponseError(std::string("unparseable response: ") +
                                   e.what());
    }
    if (translations.size() != sentences.size()) {
      throw MalformedResponseError(
          "expected " + std::to_string(sentences.size()) +
          " translations, got " + std::to_string(translations.size()));
    }
    return translations;
  }
  throw TransportError("translator at " + options_.url + " failed after " +
                       std::to_string(options_.retries + 1) +
                       " attempts: " + last_error);
}

std::vector<std::string> TranslateBatch(const TranslatorEndpoint& endpoint,
                                        std::span<const std::string> sentences) {
  if (sentences.empty()) throw InvalidArgumentError("empty translation batch");
  if (!endpoint.transport) throw InvalidArgumentError("endpoint has no transport");
  if (endpoint.batch_size == 0) throw InvalidArgumentError("batch size is 0");

  const std::size_t n = sentences.size();
  const std::size_t batches = (n + endpoint.batch_size - 1) / endpoint.batch_size;
  std::vector<std::vector<std::string>> outputs(batches);

  auto run_batch = [&](std::size_t b) {
    const std::size_t begin = b * endpoint.batch_size;
    const std::size_t end = std::min(n, begin + endpoint.batch_size);
    const std::string range =
        "sentences [" + std::to_string(begin) + ", " + std::to_string(end) +
        ")";
    std::vector<std::string> out;
    try {
      out = endpoint.transport->Translate(endpoint.direction,
                                          sentences.subspan(begin, end - begin));
    } catch (const MalformedResponseError& e) {
      throw MalformedResponseError(range + ": " + e.what());
    } catch (const TransportError& e) {
      throw TransportError(range + ": " + e.what());
    }
    if (out.size() != end - begin) {
      throw MalformedResponseError(range + ": expected " +
                                   std::to_string(end - begin) +
                                   " translations, got " +
                                   std::to_string(out.size()));
    }
    outputs[b] = std::move(out);
  };

  const std::size_t in_flight =
      std::max<std::size_t>(1, std::min<std::size_t>(endpoint.concurrency,
                                                      batches));
  for (std::size_t first = 0; first < batches; first += in_flight) {
    const std::size_t last = std::min(batches, first + in_flight);
    if (last - first == 1) {
      run_batch(first);
      continue;
    }
    std::vector<std::future<void>> futures;
    for (std::size_t b = first; b < last; ++b) {
      futures.push_back(std::async(std::launch::async, run_batch, b));
    }
    // Wait for all before rethrowing so no task outlives `outputs`.
    for (auto& f : futures) f.wait();
    for (auto& f : futures) f.get();
  }

  std::vector<std::string> result;
  result.reserve(n);
  for (auto& batch : outputs) {
    std::move(batch.begin(), batch.end(), std::back_inserter(result));
  }
  return result;
}

}  // namespace mtnoise
