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

#include "mtnoise/sni.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

#include "json.hpp"
#include "mtnoise/errors.h"
#include "mtnoise/text.h"

namespace mtnoise {
namespace {

constexpr double kMassSlack = 1e-12;

// Shewchuk's exact summation; the result is the correctly rounded sum in all
// but pathological half-way cases.
double ExactSum(std::span<const double> values) {
  std::vector<double> partials;
  for (double x : values) {
    std::size_t i = 0;
    for (double y : partials) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  double total = 0.0;
  for (auto it = partials.rbegin(); it != partials.rend(); ++it) total += *it;
  return total;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

void CheckMass(double mass) {
  if (mass > 1.0 + kMassSlack) {
    throw InvalidArgumentError("noise probabilities sum to " +
                               std::to_string(mass) + " > 1");
  }
}

// Per-side edit plan against the original tokenization.
struct SideEdits {
  explicit SideEdits(std::size_t tokens)
      : replaced(tokens), inserted(tokens + 1) {}

  bool empty() const {
    return std::none_of(replaced.begin(), replaced.end(),
                        [](const auto& r) { return r.has_value(); }) &&
           std::all_of(inserted.begin(), inserted.end(),
                       [](const auto& v) { return v.empty(); });
  }

  std::vector<std::optional<std::string>> replaced;
  std::vector<std::vector<std::string>> inserted;
};

// Rebuilds a sentence from its original text, keeping the original
// whitespace between untouched tokens. Inserted forms are separated from
// their neighbours by single spaces.
std::string Render(const std::string& original,
                   const std::vector<TokenSpan>& spans,
                   const SideEdits& edits) {
  if (edits.empty()) return original;
  const std::size_t n = spans.size();
  std::string out;
  if (n == 0) {
    out = original;
    for (std::size_t k = 0; k < edits.inserted[0].size(); ++k) {
      if (k > 0) out.push_back(' ');
      out += edits.inserted[0][k];
    }
    return out;
  }
  std::size_t prev = 0;
  for (std::size_t b = 0; b < n; ++b) {
    out.append(original, prev, spans[b].begin - prev);
    for (const std::string& form : edits.inserted[b]) {
      out += form;
      out.push_back(' ');
    }
    if (edits.replaced[b]) {
      out += *edits.replaced[b];
    } else {
      out.append(original, spans[b].begin, spans[b].end - spans[b].begin);
    }
    prev = spans[b].end;
  }
  for (const std::string& form : edits.inserted[n]) {
    out.push_back(' ');
    out += form;
  }
  out.append(original, prev, std::string::npos);
  return out;
}

std::vector<std::string> AddAlphabet(const std::vector<std::string>& chars,
                                     const SpellingOptions& options) {
  std::vector<std::string> alphabet = options.alphabet;
  if (options.include_word_chars) {
    for (const std::string& c : chars) {
      if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end()) {
        alphabet.push_back(c);
      }
    }
  }
  return alphabet;
}

void ValidateAlphabet(const SpellingOptions& options) {
  for (const std::string& c : options.alphabet) {
    if (!IsValidUtf8(c) || SplitCodePoints(c).size() != 1 ||
        ContainsWhitespace(c)) {
      throw InvalidArgumentError(
          "spelling alphabet entries must be single non-space code points");
    }
  }
  if (options.alphabet.empty() && !options.include_word_chars) {
    throw InvalidArgumentError("spelling alphabet is empty");
  }
}

InsertionDetail DrawInsertion(std::string src_form, std::string tgt_form,
                              std::size_t src_tokens, std::size_t tgt_tokens,
                              RandomSource& rng) {
  InsertionDetail detail;
  detail.src_form = std::move(src_form);
  detail.tgt_form = std::move(tgt_form);
  detail.src_boundary = rng.UniformIndex(src_tokens + 1);
  detail.tgt_boundary = rng.UniformIndex(tgt_tokens + 1);
  return detail;
}

}  // namespace

NoiseProfile::NoiseProfile(std::vector<NoiseProfileEntry> entries)
    : entries_(std::move(entries)) {
  std::array<bool, 4> seen{};
  for (const NoiseProfileEntry& e : entries_) {
    if (!std::isfinite(e.probability) || e.probability < 0.0 ||
        e.probability > 1.0) {
      throw InvalidArgumentError("probability for " +
                                 std::string(NoiseKindName(e.kind)) +
                                 " must lie in [0, 1]");
    }
    bool& flag = seen[static_cast<std::size_t>(e.kind)];
    if (flag) {
      throw InvalidArgumentError("noise kind listed twice: " +
                                 std::string(NoiseKindName(e.kind)));
    }
    flag = true;
  }
}

NoiseProfile NoiseProfile::Default() {
  return NoiseProfile({{NoiseKind::kSpelling, 0.04},
                       {NoiseKind::kProfanity, 0.007},
                       {NoiseKind::kGrammar, 0.015},
                       {NoiseKind::kEmoticon, 0.002}});
}

NoiseProfile NoiseProfile::Parse(std::string_view text) {
  std::vector<NoiseProfileEntry> entries;
  text = Trim(text);
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = Trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgumentError("expected kind=probability, got '" +
                                 std::string(item) + "'");
    }
    const NoiseKind kind = ParseNoiseKind(Trim(item.substr(0, eq)));
    const std::string_view value = Trim(item.substr(eq + 1));
    double p = 0.0;
    const auto [end, ec] =
        std::from_chars(value.data(), value.data() + value.size(), p);
    if (ec != std::errc() || end != value.data() + value.size()) {
      throw InvalidArgumentError("bad probability '" + std::string(value) +
                                 "'");
    }
    entries.push_back({kind, p});
  }
  return NoiseProfile(std::move(entries));
}

std::string NoiseProfile::ToString() const {
  std::string out;
  for (const NoiseProfileEntry& e : entries_) {
    if (!out.empty()) out.push_back(',');
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), e.probability);
    out += NoiseKindName(e.kind);
    out.push_back('=');
    out.append(buf, res.ptr);
  }
  return out;
}

double NoiseProfile::Probability(NoiseKind kind) const {
  for (const NoiseProfileEntry& e : entries_) {
    if (e.kind == kind) return e.probability;
  }
  return 0.0;
}

double NoiseProfile::TotalMass() const {
  std::vector<double> ps;
  for (const NoiseProfileEntry& e : entries_) ps.push_back(e.probability);
  return ExactSum(ps);
}

DiscreteDensity BuildDensity(const NoiseProfile& profile) {
  CheckMass(profile.TotalMass());
  DiscreteDensity density;
  std::vector<double> terms = {1.0};
  for (const NoiseProfileEntry& e : profile.entries()) {
    terms.push_back(-e.probability);
  }
  density.weights.push_back(std::max(0.0, ExactSum(terms)));
  for (const NoiseProfileEntry& e : profile.entries()) {
    density.weights.push_back(e.probability);
    density.kinds.push_back(e.kind);
  }
  return density;
}

std::optional<NoiseKind> DrawNoiseKind(const DiscreteDensity& density,
                                       RandomSource& rng) {
  const double u = rng.UniformDouble();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < density.weights.size(); ++j) {
    if (density.weights[j] <= 0.0) continue;
    cumulative += density.weights[j];
    last_positive = j;
    if (u < cumulative) {
      if (j == 0) return std::nullopt;
      return density.kinds[j - 1];
    }
  }
  // Rounding left u above the accumulated total.
  if (last_positive == 0) return std::nullopt;
  return density.kinds[last_positive - 1];
}

NoiseProfile ScaleProfile(const NoiseProfile& profile, double multiplier) {
  if (!std::isfinite(multiplier) || multiplier < 0.0) {
    throw InvalidArgumentError("multiplier must be a non-negative number");
  }
  std::vector<double> ps;
  for (const NoiseProfileEntry& e : profile.entries()) {
    ps.push_back(e.probability * multiplier);
  }
  CheckMass(ExactSum(ps));
  std::vector<NoiseProfileEntry> scaled;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    scaled.push_back({profile.entries()[i].kind, std::min(ps[i], 1.0)});
  }
  return NoiseProfile(std::move(scaled));
}

std::vector<std::string> SpellingOptions::DefaultAlphabet() {
  std::vector<std::string> letters;
  for (char c = 'a'; c <= 'z'; ++c) letters.emplace_back(1, c);
  return letters;
}

std::string ApplySpellingEdit(std::string_view word, const SpellingEdit& edit) {
  std::vector<std::string> chars = SplitCodePoints(word);
  if (edit.op == SpellingEdit::Op::kDrop) {
    if (edit.position >= chars.size() || chars.size() < 2) {
      throw DataError("drop position out of range for '" + std::string(word) +
                      "'");
    }
    if (!edit.character.empty() && chars[edit.position] != edit.character) {
      throw DataError("dropped character does not match '" +
                      std::string(word) + "'");
    }
    chars.erase(chars.begin() + static_cast<std::ptrdiff_t>(edit.position));
  } else {
    if (edit.position > chars.size()) {
      throw DataError("add position out of range for '" + std::string(word) +
                      "'");
    }
    if (edit.character.empty() || ContainsWhitespace(edit.character)) {
      throw DataError("added character must be a non-space code point");
    }
    chars.insert(chars.begin() + static_cast<std::ptrdiff_t>(edit.position),
                 edit.character);
  }
  std::string out;
  for (const std::string& c : chars) out += c;
  return out;
}

SpellingEdit DrawSpellingEdit(std::string_view word, RandomSource& rng,
                              const SpellingOptions& options) {
  const std::vector<std::string> chars = SplitCodePoints(word);
  SpellingEdit edit;
  const bool drop = chars.size() >= 2 && rng.Bernoulli(0.5);
  if (drop) {
    edit.op = SpellingEdit::Op::kDrop;
    edit.position = rng.UniformIndex(chars.size());
    edit.character = chars[edit.position];
  } else {
    const std::vector<std::string> alphabet = AddAlphabet(chars, options);
    edit.op = SpellingEdit::Op::kAdd;
    edit.position = rng.UniformIndex(chars.size() + 1);
    edit.character = alphabet[rng.UniformIndex(alphabet.size())];
  }
  return edit;
}

std::string SpellingNoise(std::string_view word, RandomSource& rng,
                          const SpellingOptions& options) {
  return ApplySpellingEdit(word, DrawSpellingEdit(word, rng, options));
}

std::pair<SentencePair, NoiseEvent> InsertBilingual(
    const SentencePair& pair, const BilingualEntry& entry, NoiseKind kind,
    RandomSource& rng) {
  NoiseEvent event;
  event.pair_index = pair.index;
  event.kind = kind;
  event.detail = DrawInsertion(entry.src_form, entry.tgt_form,
                               CountTokens(pair.src), CountTokens(pair.tgt),
                               rng);
  SentencePair noised = ApplyEvents(pair, std::span(&event, 1));
  return {std::move(noised), std::move(event)};
}

std::pair<SentencePair, NoiseEvent> InsertEmoticon(const SentencePair& pair,
                                                   std::string_view emoticon,
                                                   RandomSource& rng) {
  if (emoticon.empty() || ContainsWhitespace(emoticon)) {
    throw InvalidArgumentError("emoticon must be a single token");
  }
  NoiseEvent event;
  event.pair_index = pair.index;
  event.kind = NoiseKind::kEmoticon;
  event.detail =
      DrawInsertion(std::string(emoticon), std::string(emoticon),
                    CountTokens(pair.src), CountTokens(pair.tgt), rng);
  SentencePair noised = ApplyEvents(pair, std::span(&event, 1));
  return {std::move(noised), std::move(event)};
}

SentencePair ApplyEvents(const SentencePair& original,
                         std::span<const NoiseEvent> events) {
  const std::vector<TokenSpan> src_spans = TokenSpans(original.src);
  const std::vector<TokenSpan> tgt_spans = TokenSpans(original.tgt);
  SideEdits src_edits(src_spans.size());
  SideEdits tgt_edits(tgt_spans.size());

  for (const NoiseEvent& event : events) {
    if (event.pair_index != original.index) {
      throw DataError("event for pair " + std::to_string(event.pair_index) +
                      " applied to pair " + std::to_string(original.index));
    }
    if (const auto* spelling = std::get_if<SpellingDetail>(&event.detail)) {
      if (event.kind != NoiseKind::kSpelling) {
        throw DataError("spelling detail on a non-spelling event");
      }
      const bool source = spelling->side == Side::kSource;
      const std::string& text = source ? original.src : original.tgt;
      const auto& spans = source ? src_spans : tgt_spans;
      SideEdits& edits = source ? src_edits : tgt_edits;
      if (event.token_index >= spans.size()) {
        throw DataError("spelling event token index out of range in pair " +
                        std::to_string(original.index));
      }
      auto& slot = edits.replaced[event.token_index];
      if (slot) throw DataError("token edited twice");
      const TokenSpan& span = spans[event.token_index];
      slot = ApplySpellingEdit(
          std::string_view(text).substr(span.begin, span.end - span.begin),
          spelling->edit);
    } else {
      const auto& insertion = std::get<InsertionDetail>(event.detail);
      if (event.kind == NoiseKind::kSpelling) {
        throw DataError("insertion detail on a spelling event");
      }
      if (insertion.src_boundary > src_spans.size() ||
          insertion.tgt_boundary > tgt_spans.size()) {
        throw DataError("insertion boundary out of range in pair " +
                        std::to_string(original.index));
      }
      if (insertion.src_form.empty() || insertion.tgt_form.empty() ||
          ContainsLineBreak(insertion.src_form) ||
          ContainsLineBreak(insertion.tgt_form)) {
        throw DataError("invalid insertion form");
      }
      src_edits.inserted[insertion.src_boundary].push_back(insertion.src_form);
      tgt_edits.inserted[insertion.tgt_boundary].push_back(insertion.tgt_form);
    }
  }
  return {Render(original.src, src_spans, src_edits),
          Render(original.tgt, tgt_spans, tgt_edits), original.index};
}

ParallelCorpus ReplayEvents(const ParallelCorpus& original,
                            std::span<const NoiseEvent> events) {
  std::map<std::size_t, std::vector<NoiseEvent>> by_pair;
  for (const NoiseEvent& event : events) {
    if (event.pair_index >= original.size()) {
      throw DataError("event references pair " +
                      std::to_string(event.pair_index) + " of " +
                      std::to_string(original.size()));
    }
    by_pair[event.pair_index].push_back(event);
  }
  std::vector<SentencePair> pairs(original.begin(), original.end());
  for (const auto& [index, pair_events] : by_pair) {
    pairs[index] = ApplyEvents(original[index], pair_events);
  }
  return ParallelCorpus(original.name(), std::move(pairs));
}

NoiseInducer::NoiseInducer(const NoiseProfile& profile, NoiseLexicons lexicons,
                           SpellingOptions spelling)
    : density_(BuildDensity(profile)),
      spelling_probability_(profile.Probability(NoiseKind::kSpelling)),
      lexicons_(lexicons),
      spelling_(std::move(spelling)) {
  ValidateAlphabet(spelling_);
  auto require = [&](NoiseKind kind, const void* material) {
    if (profile.Probability(kind) > 0.0 && material == nullptr) {
      throw InvalidArgumentError("no insertion material for noise kind " +
                                 std::string(NoiseKindName(kind)));
    }
  };
  require(NoiseKind::kProfanity, lexicons_.profanity);
  require(NoiseKind::kGrammar, lexicons_.stopwords);
  require(NoiseKind::kEmoticon, lexicons_.emoticons);
}

NoisedPair NoiseInducer::Apply(const SentencePair& pair,
                               RandomSource& rng) const {
  const std::vector<std::string> src_tokens = Tokenize(pair.src);
  const std::vector<std::string> tgt_tokens = Tokenize(pair.tgt);
  std::vector<NoiseEvent> events;

  for (std::size_t i = 0; i < src_tokens.size(); ++i) {
    const std::optional<NoiseKind> kind = DrawNoiseKind(density_, rng);
    if (!kind) continue;
    NoiseEvent event;
    event.pair_index = pair.index;
    event.token_index = i;
    event.kind = *kind;
    switch (*kind) {
      case NoiseKind::kSpelling:
        event.detail = SpellingDetail{
            Side::kSource, DrawSpellingEdit(src_tokens[i], rng, spelling_)};
        break;
      case NoiseKind::kProfanity:
      case NoiseKind::kGrammar: {
        const BilingualLexicon& lexicon = *kind == NoiseKind::kProfanity
                                              ? *lexicons_.profanity
                                              : *lexicons_.stopwords;
        const BilingualEntry& entry = Pick(lexicon, rng);
        event.detail = DrawInsertion(entry.src_form, entry.tgt_form,
                                     src_tokens.size(), tgt_tokens.size(),
                                     rng);
        break;
      }
      case NoiseKind::kEmoticon: {
        const std::string& emoticon = Pick(*lexicons_.emoticons, rng);
        event.detail = DrawInsertion(emoticon, emoticon, src_tokens.size(),
                                     tgt_tokens.size(), rng);
        break;
      }
    }
    events.push_back(std::move(event));
  }

  if (spelling_probability_ > 0.0) {
    for (std::size_t j = 0; j < tgt_tokens.size(); ++j) {
      if (!rng.Bernoulli(spelling_probability_)) continue;
      NoiseEvent event;
      event.pair_index = pair.index;
      event.token_index = j;
      event.kind = NoiseKind::kSpelling;
      event.detail = SpellingDetail{
          Side::kTarget, DrawSpellingEdit(tgt_tokens[j], rng, spelling_)};
      events.push_back(std::move(event));
    }
  }

  if (events.empty()) return {pair, {}};
  return {ApplyEvents(pair, events), std::move(events)};
}

NoiseResult NoiseInducer::ApplyCorpus(const ParallelCorpus& corpus,
                                      std::uint64_t seed,
                                      unsigned workers) const {
  const std::size_t n = corpus.size();
  std::vector<NoisedPair> noised(n);
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<NoiseReport> partial(threads);
  std::vector<std::exception_ptr> failures(threads);

  auto work = [&](std::size_t t) {
    try {
      const std::size_t begin = n * t / threads;
      const std::size_t end = n * (t + 1) / threads;
      for (std::size_t i = begin; i < end; ++i) {
        RandomSource rng(seed, i);
        noised[i] = Apply(corpus[i], rng);
        NoiseReport& r = partial[t];
        r.pairs += 1;
        const std::size_t src_before = CountTokens(corpus[i].src);
        const std::size_t tgt_before = CountTokens(corpus[i].tgt);
        r.token_draws += src_before;
        r.target_token_draws += tgt_before;
        r.src_tokens_before += src_before;
        r.tgt_tokens_before += tgt_before;
        r.src_tokens_after += CountTokens(noised[i].pair.src);
        r.tgt_tokens_after += CountTokens(noised[i].pair.tgt);
        r.CountEvents(noised[i].events);
      }
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  NoiseResult result;
  std::vector<SentencePair> pairs;
  pairs.reserve(n);
  for (NoisedPair& np : noised) {
    pairs.push_back(std::move(np.pair));
    for (NoiseEvent& e : np.events) result.events.push_back(std::move(e));
  }
  result.corpus = ParallelCorpus(corpus.name(), std::move(pairs));
  for (const NoiseReport& r : partial) result.report.Merge(r);
  return result;
}

NoisedPair AddNoise(const SentencePair& pair, const NoiseProfile& profile,
                    const NoiseLexicons& lexicons, RandomSource& rng) {
  return NoiseInducer(profile, lexicons).Apply(pair, rng);
}

NoiseResult NoiseCorpus(const ParallelCorpus& corpus,
                        const NoiseProfile& profile,
                        const NoiseLexicons& lexicons, std::uint64_t seed,
                        unsigned workers) {
  return NoiseInducer(profile, lexicons).ApplyCorpus(corpus, seed, workers);
}

std::string EventToJson(const NoiseEvent& event) {
  nlohmann::ordered_json j;
  j["pair_index"] = event.pair_index;
  j["token_index"] = event.token_index;
  j["kind"] = NoiseKindName(event.kind);
  nlohmann::ordered_json detail;
  if (const auto* s = std::get_if<SpellingDetail>(&event.detail)) {
    detail["side"] = s->side == Side::kSource ? "source" : "target";
    detail["op"] = s->edit.op == SpellingEdit::Op::kAdd ? "add" : "drop";
    detail["position"] = s->edit.position;
    detail["char"] = s->edit.character;
  } else {
    const auto& ins = std::get<InsertionDetail>(event.detail);
    detail["src_form"] = ins.src_form;
    detail["tgt_form"] = ins.tgt_form;
    detail["src_boundary"] = ins.src_boundary;
    detail["tgt_boundary"] = ins.tgt_boundary;
  }
  j["detail"] = std::move(detail);
  return j.dump();
}

NoiseEvent EventFromJson(std::string_view line) {
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    NoiseEvent event;
    event.pair_index = j.at("pair_index").get<std::size_t>();
    event.token_index = j.at("token_index").get<std::size_t>();
    event.kind = ParseNoiseKind(j.at("kind").get<std::string>());
    const nlohmann::json& d = j.at("detail");
    if (d.contains("op")) {
      SpellingDetail s;
      const std::string side = d.at("side").get<std::string>();
      if (side != "source" && side != "target") {
        throw DataError("bad side '" + side + "'");
      }
      s.side = side == "source" ? Side::kSource : Side::kTarget;
      const std::string op = d.at("op").get<std::string>();
      if (op != "add" && op != "drop") throw DataError("bad op '" + op + "'");
      s.edit.op = op == "add" ? SpellingEdit::Op::kAdd : SpellingEdit::Op::kDrop;
      s.edit.position = d.at("position").get<std::size_t>();
      s.edit.character = d.at("char").get<std::string>();
      event.detail = std::move(s);
    } else {
      InsertionDetail ins;
      ins.src_form = d.at("src_form").get<std::string>();
      ins.tgt_form = d.at("tgt_form").get<std::string>();
      ins.src_boundary = d.at("src_boundary").get<std::size_t>();
      ins.tgt_boundary = d.at("tgt_boundary").get<std::size_t>();
      event.detail = std::move(ins);
    }
    return event;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed event record: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw DataError(std::string("malformed event record: ") + e.what());
  }
}

void WriteEvents(const std::filesystem::path& path,
                 std::span<const NoiseEvent> events) {
  std::vector<std::string> lines;
  lines.reserve(events.size());
  for (const NoiseEvent& e : events) lines.push_back(EventToJson(e));
  WriteLines(path, lines);
}

std::vector<NoiseEvent> ReadEvents(const std::filesystem::path& path) {
  std::vector<NoiseEvent> events;
  for (const std::string& line : ReadLines(path)) {
    if (Trim(line).empty()) continue;
    events.push_back(EventFromJson(line));
  }
  return events;
}

}  // namespace mtnoise
