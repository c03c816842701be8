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

#include "mtnoise/cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtnoise/backtrans.h"
#include "mtnoise/corpus.h"
#include "mtnoise/errors.h"
#include "mtnoise/eval.h"
#include "mtnoise/lexicon.h"
#include "mtnoise/sni.h"
#include "mtnoise/text.h"
#include "mtnoise/translator.h"

namespace mtnoise {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string Sha256File(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 unavailable");
  }
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) {
      EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

fs::path DefaultDataDir() {
  if (const char* env = std::getenv("MTNOISE_DATA_DIR"); env && *env) {
    return env;
  }
  return MTNOISE_DATA_DIR;
}

namespace {

// Resolves settings for one subcommand: an explicit flag wins over the JSON
// config file, which wins over the built-in default. Every resolved value is
// echoed into the run manifest.
class Settings {
 public:
  Settings(CLI::App* sub, nlohmann::json file)
      : sub_(sub), file_(std::move(file)) {}

  template <typename T>
  std::optional<T> Lookup(const std::string& name) {
    std::optional<T> value;
    const CLI::Option* opt = sub_->get_option_no_throw("--" + name);
    try {
      if (opt != nullptr && opt->count() > 0) {
        if constexpr (std::is_same_v<T, bool>) {
          value = true;
        } else {
          value = opt->as<T>();
        }
      } else if (file_.contains(name)) {
        value = file_.at(name).get<T>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgumentError("config key '" + name + "': " + e.what());
    } catch (const CLI::Error& e) {
      throw InvalidArgumentError("--" + name + ": " + e.what());
    }
    if (value) echo_[name] = *value;
    return value;
  }

  template <typename T>
  T Get(const std::string& name, T fallback) {
    if (std::optional<T> v = Lookup<T>(name)) return *v;
    echo_[name] = fallback;
    return fallback;
  }

  std::string Require(const std::string& name) {
    if (auto v = Lookup<std::string>(name)) return *v;
    throw InvalidArgumentError("missing required option --" + name);
  }

  const ordered_json& echo() const { return echo_; }

 private:
  CLI::App* sub_;
  nlohmann::json file_;
  ordered_json echo_;
};

class Manifest {
 public:
  void Input(const fs::path& path) { inputs_[path.string()] = Sha256File(path); }
  void Artifact(const fs::path& path) { artifacts_.push_back(path.string()); }

  const std::vector<std::string>& artifacts() const { return artifacts_; }

  void Write(const fs::path& path, const std::string& subcommand,
             const ordered_json& config) const {
    ordered_json j;
    j["tool"] = "mtnoise";
    j["subcommand"] = subcommand;
    j["config"] = config;
    j["seed"] = config.contains("seed") ? config["seed"] : ordered_json();
    j["inputs"] = ordered_json::object();
    for (const auto& [p, sha] : inputs_) j["inputs"][p] = sha;
    j["artifacts"] = artifacts_;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest " + path.string());
    out << j.dump(2) << '\n';
  }

 private:
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> artifacts_;
};

struct Invocation {
  Settings& settings;
  Manifest& manifest;
  std::ostream& out;
};

void CheckDistinct(const std::vector<fs::path>& inputs,
                   const std::vector<fs::path>& outputs) {
  auto canon = [](const fs::path& p) { return fs::weakly_canonical(p); };
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (const fs::path& in : inputs) {
      if (canon(outputs[i]) == canon(in)) {
        throw InvalidArgumentError("output " + outputs[i].string() +
                                   " would overwrite input " + in.string());
      }
    }
    for (std::size_t k = i + 1; k < outputs.size(); ++k) {
      if (canon(outputs[i]) == canon(outputs[k])) {
        throw InvalidArgumentError("output path used twice: " +
                                   outputs[i].string());
      }
    }
  }
}

ParallelCorpus LoadInputCorpus(Invocation& inv, const std::string& src_key,
                               const std::string& tgt_key) {
  const fs::path src = inv.settings.Require(src_key);
  const fs::path tgt = inv.settings.Require(tgt_key);
  const std::string name = inv.settings.Get<std::string>("name", "corpus");
  ParallelCorpus corpus = LoadParallel(src, tgt, name);
  inv.manifest.Input(src);
  inv.manifest.Input(tgt);
  return corpus;
}

std::pair<fs::path, fs::path> OutputPair(Invocation& inv) {
  return {inv.settings.Require("out-src"), inv.settings.Require("out-tgt")};
}

void WriteCorpusArtifact(Invocation& inv, const ParallelCorpus& corpus,
                         const std::vector<fs::path>& inputs) {
  const auto [out_src, out_tgt] = OutputPair(inv);
  CheckDistinct(inputs, {out_src, out_tgt});
  WriteParallel(corpus, out_src, out_tgt);
  inv.manifest.Artifact(out_src);
  inv.manifest.Artifact(out_tgt);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text << '\n';
  if (!out) throw IoError("error writing " + path.string());
}

std::string StatsJson(const CorpusStats& s) {
  ordered_json j;
  j["sentence_count"] = s.sentence_count;
  j["token_count_src"] = s.token_count_src;
  j["token_count_tgt"] = s.token_count_tgt;
  j["max_len_src"] = s.max_len_src;
  j["max_len_tgt"] = s.max_len_tgt;
  return j.dump(2);
}

std::vector<double> ParseMultipliers(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = NormalizeSpaces(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgumentError("bad multiplier '" + item + "'");
    }
  }
  return values;
}

// Lexicons are loaded only for kinds that can actually fire.
struct LoadedLexicons {
  std::optional<BilingualLexicon> profanity;
  std::optional<BilingualLexicon> stopwords;
  std::optional<EmoticonList> emoticons;

  NoiseLexicons view() const {
    return {profanity ? &*profanity : nullptr,
            stopwords ? &*stopwords : nullptr,
            emoticons ? &*emoticons : nullptr};
  }
};

LoadedLexicons LoadLexicons(Invocation& inv, const NoiseProfile& profile) {
  const fs::path data = DefaultDataDir();
  const fs::path profanity = inv.settings.Get<std::string>(
      "profanity", (data / "profanity.fr-en.tsv").string());
  const fs::path stopwords = inv.settings.Get<std::string>(
      "stopwords", (data / "stopwords.fr-en.tsv").string());
  const fs::path emoticons = inv.settings.Get<std::string>(
      "emoticons", (data / "emoticons.txt").string());
  LoadedLexicons lex;
  if (profile.Probability(NoiseKind::kProfanity) > 0) {
    lex.profanity = LoadBilingualLexicon(profanity, LexiconKind::kProfanity);
    inv.manifest.Input(profanity);
  }
  if (profile.Probability(NoiseKind::kGrammar) > 0) {
    lex.stopwords = LoadBilingualLexicon(stopwords, LexiconKind::kStopword);
    inv.manifest.Input(stopwords);
  }
  if (profile.Probability(NoiseKind::kEmoticon) > 0) {
    lex.emoticons = LoadEmoticons(emoticons);
    inv.manifest.Input(emoticons);
  }
  return lex;
}

NoiseProfile BaseProfile(Invocation& inv) {
  return NoiseProfile::Parse(inv.settings.Get<std::string>(
      "profile", NoiseProfile::Default().ToString()));
}

unsigned Workers(Invocation& inv) {
  const int workers = inv.settings.Get<int>("workers", 1);
  if (workers < 1) throw InvalidArgumentError("--workers must be >= 1");
  return static_cast<unsigned>(workers);
}

void CmdPrune(Invocation& inv) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const int max_len = inv.settings.Get<int>("max-len", 50);
  if (max_len < 1) throw InvalidArgumentError("--max-len must be >= 1");
  const ParallelCorpus pruned = Prune(corpus, static_cast<std::size_t>(max_len));
  WriteCorpusArtifact(inv, pruned,
                      {inv.settings.Require("src"), inv.settings.Require("tgt")});
  inv.out << "kept " << pruned.size() << " of " << corpus.size() << " pairs\n";
}

void CmdSample(Invocation& inv) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const auto n = inv.settings.Lookup<long long>("size");
  if (!n || *n < 1) throw InvalidArgumentError("--size must be >= 1");
  const auto seed = inv.settings.Get<std::uint64_t>("seed", 0);
  const ParallelCorpus sampled =
      Sample(corpus, static_cast<std::size_t>(*n), seed);
  WriteCorpusArtifact(inv, sampled,
                      {inv.settings.Require("src"), inv.settings.Require("tgt")});
  inv.out << "sampled " << sampled.size() << " of " << corpus.size()
          << " pairs\n";
}

void CmdStats(Invocation& inv) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const std::string json = StatsJson(ComputeStats(corpus));
  if (auto output = inv.settings.Lookup<std::string>("output")) {
    WriteText(*output, json);
    inv.manifest.Artifact(*output);
  }
  inv.out << json << '\n';
}

void CmdNoise(Invocation& inv) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const double multiplier = inv.settings.Get<double>("multiplier", 1.0);
  const NoiseProfile profile = ScaleProfile(BaseProfile(inv), multiplier);
  const LoadedLexicons lexicons = LoadLexicons(inv, profile);
  const auto seed = inv.settings.Get<std::uint64_t>("seed", 0);
  const unsigned workers = Workers(inv);
  const auto events_path = inv.settings.Lookup<std::string>("events");
  const auto report_path = inv.settings.Lookup<std::string>("report");

  const NoiseResult result =
      NoiseCorpus(corpus, profile, lexicons.view(), seed, workers);
  WriteCorpusArtifact(inv, result.corpus,
                      {inv.settings.Require("src"), inv.settings.Require("tgt")});
  if (events_path) {
    WriteEvents(*events_path, result.events);
    inv.manifest.Artifact(*events_path);
  }
  const std::string report = result.report.ToJson();
  if (report_path) {
    WriteText(*report_path, report);
    inv.manifest.Artifact(*report_path);
  }
  inv.out << report << '\n';
}

void CmdTag(Invocation& inv, bool strip) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const DomainTag tag(inv.settings.Get<std::string>("tag", "<MTNT>"));
  ParallelCorpus result;
  if (strip) {
    result = StripTag(corpus, tag);
  } else {
    const std::string sides = inv.settings.Get<std::string>("sides", "source");
    if (sides != "source" && sides != "both") {
      throw InvalidArgumentError("--sides must be 'source' or 'both'");
    }
    result = TagCorpus(corpus, tag,
                       sides == "both" ? TagSides::kBoth : TagSides::kSourceOnly);
  }
  WriteCorpusArtifact(inv, result,
                      {inv.settings.Require("src"), inv.settings.Require("tgt")});
  inv.out << (strip ? "stripped " : "tagged ") << result.size() << " pairs\n";
}

void CmdMixture(Invocation& inv) {
  const auto specs = inv.settings.Lookup<std::vector<std::string>>("input");
  if (!specs || specs->empty()) {
    throw InvalidArgumentError("mixture needs at least one --input SRC,TGT,TAG");
  }
  std::vector<std::pair<ParallelCorpus, DomainTag>> parts;
  std::vector<fs::path> inputs;
  for (const std::string& spec : *specs) {
    std::vector<std::string> fields;
    std::stringstream ss(spec);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 3) {
      throw InvalidArgumentError("--input expects SRC,TGT,TAG, got '" + spec +
                                 "'");
    }
    parts.emplace_back(LoadParallel(fields[0], fields[1], fields[2]),
                       DomainTag(fields[2]));
    inv.manifest.Input(fields[0]);
    inv.manifest.Input(fields[1]);
    inputs.emplace_back(fields[0]);
    inputs.emplace_back(fields[1]);
  }
  const ParallelCorpus mixture = BuildTaggedMixture(parts);
  WriteCorpusArtifact(inv, mixture, inputs);
  inv.out << "mixture of " << mixture.size() << " pairs\n";
}

std::shared_ptr<const Translator> MakeTransport(Invocation& inv,
                                                const std::string& transport,
                                                const std::string& rules_key,
                                                const std::string& url_key) {
  if (transport == "mock") {
    if (auto rules = inv.settings.Lookup<std::string>(rules_key)) {
      inv.manifest.Input(*rules);
      return std::make_shared<MockTranslator>(MockTranslator::FromFile(*rules));
    }
    return MockTranslator::Identity();
  }
  if (transport == "network") {
    HttpTranslator::Options options;
    auto url = inv.settings.Lookup<std::string>(url_key);
    if (!url) url = inv.settings.Lookup<std::string>("url");
    if (!url) throw InvalidArgumentError("network transport needs --url");
    options.url = *url;
    options.timeout_ms = inv.settings.Get<int>("timeout-ms", 30000);
    options.retries = inv.settings.Get<int>("retries", 3);
    return std::make_shared<HttpTranslator>(options);
  }
  throw InvalidArgumentError("--transport must be 'mock' or 'network'");
}

void CmdBacktranslate(Invocation& inv) {
  const fs::path input = inv.settings.Require("input");
  const fs::path output = inv.settings.Require("output");
  const bool tagged = inv.settings.Get<bool>("tagged", false);
  const std::string tag_token = inv.settings.Get<std::string>("tag", "<MTNT>");
  const std::string transport = inv.settings.Get<std::string>("transport", "mock");
  const int batch_size = inv.settings.Get<int>("batch-size", 64);
  if (batch_size < 1) throw InvalidArgumentError("--batch-size must be >= 1");
  const unsigned workers = Workers(inv);
  const auto pivot_output = inv.settings.Lookup<std::string>("pivot-output");
  const auto checkpoint = inv.settings.Lookup<std::string>("checkpoint");

  const std::vector<std::string> sentences = ReadLines(input);
  inv.manifest.Input(input);

  TranslatorEndpoint fwd{Direction::kSrcToPivot,
                         MakeTransport(inv, transport, "fwd-rules", "fwd-url"),
                         static_cast<std::size_t>(batch_size), workers};
  TranslatorEndpoint bwd{Direction::kPivotToSrc,
                         MakeTransport(inv, transport, "bwd-rules", "bwd-url"),
                         static_cast<std::size_t>(batch_size), workers};

  std::vector<fs::path> outputs = {output};
  if (pivot_output) outputs.emplace_back(*pivot_output);
  CheckDistinct({input}, outputs);

  RoundTripOptions options;
  if (tagged) options.tag = DomainTag(tag_token);
  if (checkpoint) {
    options.checkpoint = fs::path(*checkpoint);
    options.block_size = static_cast<std::size_t>(batch_size) * workers;
    std::ostringstream run;
    run << Sha256File(input) << ':' << inv.settings.echo().dump();
    options.run_id = run.str();
  }

  std::vector<RoundTripResult> results;
  if (sentences.empty()) {
    results = {};
  } else {
    results = RunRoundTrip(sentences, fwd, bwd, options);
  }
  std::vector<std::string> noised;
  std::vector<std::string> pivots;
  for (const RoundTripResult& r : results) {
    noised.push_back(r.noised);
    pivots.push_back(r.pivot);
  }
  WriteLines(output, noised);
  inv.manifest.Artifact(output);
  if (pivot_output) {
    WriteLines(*pivot_output, pivots);
    inv.manifest.Artifact(*pivot_output);
  }
  inv.out << (tagged ? "tagged" : "untagged") << " round trip of "
          << results.size() << " sentences\n";
}

void CmdSweep(Invocation& inv) {
  const ParallelCorpus corpus = LoadInputCorpus(inv, "src", "tgt");
  const NoiseProfile base = BaseProfile(inv);
  const std::vector<double> multipliers = ParseMultipliers(
      inv.settings.Get<std::string>("multipliers", "0,0.5,1,2"));
  const fs::path out_dir = inv.settings.Require("out-dir");
  const auto seed = inv.settings.Get<std::uint64_t>("seed", 0);

  double max_multiplier = 0.0;
  for (double m : multipliers) max_multiplier = std::max(max_multiplier, m);
  const LoadedLexicons lexicons =
      LoadLexicons(inv, ScaleProfile(base, max_multiplier));

  SweepOptions options;
  options.output_dir = out_dir;
  options.prefix = inv.settings.Get<std::string>("prefix", "sweep");
  options.workers = Workers(inv);
  const SweepResult result =
      Sweep(corpus, base, multipliers, lexicons.view(), seed, options);
  const fs::path summary = out_dir / (options.prefix + ".json");
  const std::string json = result.ToJson();
  WriteText(summary, json);
  for (const SweepLevel& level : result.levels) {
    inv.manifest.Artifact(*level.src_path);
    inv.manifest.Artifact(*level.tgt_path);
  }
  inv.manifest.Artifact(summary);
  inv.out << json << '\n';
}

void CmdBleu(Invocation& inv) {
  const fs::path hyp = inv.settings.Require("hyp");
  const fs::path ref = inv.settings.Require("ref");
  const std::vector<std::string> hyps = ReadLines(hyp);
  const std::vector<std::string> refs = ReadLines(ref);
  inv.manifest.Input(hyp);
  inv.manifest.Input(ref);
  if (hyps.size() != refs.size()) {
    throw AlignmentError(hyp.string() + " and " + ref.string() +
                         " differ in line count");
  }
  const std::string json = Bleu(hyps, refs).ToJson();
  if (auto output = inv.settings.Lookup<std::string>("output")) {
    WriteText(*output, json);
    inv.manifest.Artifact(*output);
  }
  inv.out << json << '\n';
}

void CmdReport(Invocation& inv) {
  const ParallelCorpus original = LoadInputCorpus(inv, "src", "tgt");
  const fs::path noised_src = inv.settings.Require("noised-src");
  const fs::path noised_tgt = inv.settings.Require("noised-tgt");
  const fs::path events_path = inv.settings.Require("events");
  const ParallelCorpus noised = LoadParallel(noised_src, noised_tgt, "noised");
  const std::vector<NoiseEvent> events = ReadEvents(events_path);
  inv.manifest.Input(noised_src);
  inv.manifest.Input(noised_tgt);
  inv.manifest.Input(events_path);
  const std::string json = CompareCorpora(original, noised, events).ToJson();
  if (auto output = inv.settings.Lookup<std::string>("output")) {
    WriteText(*output, json);
    inv.manifest.Artifact(*output);
  }
  inv.out << json << '\n';
}

struct Command {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> options;
  std::vector<std::pair<std::string, std::string>> flags;
  std::function<void(Invocation&)> run;
};

std::vector<Command> Commands() {
  const std::vector<std::pair<std::string, std::string>> corpus_io = {
      {"src", "source-side input file"},
      {"tgt", "target-side input file"},
      {"out-src", "source-side output file"},
      {"out-tgt", "target-side output file"},
      {"name", "corpus label"}};
  const std::vector<std::pair<std::string, std::string>> lexicon_opts = {
      {"profile", "noise profile, e.g. spelling=0.04,profanity=0.007"},
      {"profanity", "profanity lexicon (TSV)"},
      {"stopwords", "stop-word lexicon (TSV)"},
      {"emoticons", "emoticon list"},
      {"seed", "random seed (default 0)"},
      {"workers", "parallel workers"}};
  auto concat = [](auto a, const auto& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  std::vector<Command> cmds;
  cmds.push_back({"prune", "Drop pairs longer than --max-len tokens",
                  concat(corpus_io, std::vector<std::pair<std::string, std::string>>{
                                        {"max-len", "token bound (default 50)"}}),
                  {}, CmdPrune});
  cmds.push_back({"sample", "Sample --size pairs without replacement",
                  concat(corpus_io, std::vector<std::pair<std::string, std::string>>{
                                        {"size", "number of pairs"},
                                        {"seed", "random seed (default 0)"}}),
                  {}, CmdSample});
  cmds.push_back({"stats", "Print corpus statistics as JSON",
                  {{"src", "source-side file"},
                   {"tgt", "target-side file"},
                   {"name", "corpus label"},
                   {"output", "also write the JSON here"}},
                  {}, CmdStats});
  cmds.push_back({"noise", "Inject synthetic noise",
                  concat(concat(corpus_io, lexicon_opts),
                         std::vector<std::pair<std::string, std::string>>{
                             {"multiplier", "scale the profile (default 1)"},
                             {"events", "write the event audit trail (NDJSON)"},
                             {"report", "write the noise report (JSON)"}}),
                  {}, CmdNoise});
  cmds.push_back({"tag", "Prepend a domain tag",
                  concat(corpus_io, std::vector<std::pair<std::string, std::string>>{
                                        {"tag", "tag token (default <MTNT>)"},
                                        {"sides", "source|both (default source)"}}),
                  {}, [](Invocation& inv) { CmdTag(inv, false); }});
  cmds.push_back({"strip-tag", "Remove a leading domain tag",
                  concat(corpus_io, std::vector<std::pair<std::string, std::string>>{
                                        {"tag", "tag token (default <MTNT>)"}}),
                  {}, [](Invocation& inv) { CmdTag(inv, true); }});
  cmds.push_back({"mixture", "Concatenate corpora with per-corpus source tags",
                  {{"input", "SRC,TGT,TAG (repeatable)"},
                   {"out-src", "source-side output file"},
                   {"out-tgt", "target-side output file"}},
                  {}, CmdMixture});
  cmds.push_back({"backtranslate", "Round-trip sentences through translators",
                  {{"input", "one sentence per line"},
                   {"output", "noised sentences"},
                   {"pivot-output", "intermediate translations"},
                   {"tag", "tag token (default <MTNT>)"},
                   {"transport", "mock|network (default mock)"},
                   {"fwd-rules", "mock rules for the forward model"},
                   {"bwd-rules", "mock rules for the backward model"},
                   {"url", "translation server URL"},
                   {"fwd-url", "forward server URL (overrides --url)"},
                   {"bwd-url", "backward server URL (overrides --url)"},
                   {"timeout-ms", "request timeout (default 30000)"},
                   {"retries", "retries per batch (default 3)"},
                   {"batch-size", "sentences per request (default 64)"},
                   {"workers", "batches in flight"},
                   {"checkpoint", "checkpoint file for resumable runs"}},
                  {{"tagged", "use the tagged pipeline"}}, CmdBacktranslate});
  cmds.push_back({"sweep", "Noise at several profile multipliers",
                  concat(lexicon_opts,
                         std::vector<std::pair<std::string, std::string>>{
                             {"src", "source-side input file"},
                             {"tgt", "target-side input file"},
                             {"name", "corpus label"},
                             {"multipliers", "comma list (default 0,0.5,1,2)"},
                             {"out-dir", "output directory"},
                             {"prefix", "file prefix (default sweep)"}}),
                  {}, CmdSweep});
  cmds.push_back({"bleu", "Corpus BLEU-4 of hypotheses against references",
                  {{"hyp", "hypothesis file"},
                   {"ref", "reference file"},
                   {"output", "also write the JSON here"}},
                  {}, CmdBleu});
  cmds.push_back({"report", "Audit a noised corpus against its event trail",
                  {{"src", "original source-side file"},
                   {"tgt", "original target-side file"},
                   {"name", "corpus label"},
                   {"noised-src", "noised source-side file"},
                   {"noised-tgt", "noised target-side file"},
                   {"events", "event trail (NDJSON)"},
                   {"output", "also write the JSON here"}},
                  {}, CmdReport});
  return cmds;
}

nlohmann::json LoadConfigFile(const fs::path& path,
                              const std::string& subcommand) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError("config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw InvalidArgumentError("config " + path.string() + " is not an object");
  }
  // A run manifest is accepted as a config: its "config" member is used.
  if (j.contains("subcommand") && j["subcommand"] != subcommand) {
    throw InvalidArgumentError("config " + path.string() + " is for '" +
                               j["subcommand"].get<std::string>() + "'");
  }
  if (j.contains("config") && j["config"].is_object()) return j["config"];
  return j;
}

int Fail(std::ostream& err, int code, const std::string& what,
         const std::string& message) {
  err << "mtnoise: " << what << ": " << message << '\n';
  return code;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Synthetic noise and back-translation toolkit for parallel "
               "corpora",
               "mtnoise"};
  app.require_subcommand(1);
  const std::vector<Command> commands = Commands();
  std::map<CLI::App*, const Command*> by_app;
  for (const Command& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
    sub->add_option("--config", "JSON config or run manifest");
    sub->add_option("--manifest", "where to write the run manifest");
    for (const auto& [name, help] : cmd.options) {
      if (sub->get_option_no_throw("--" + name) != nullptr) continue;
      CLI::Option* opt = sub->add_option("--" + name, help);
      if (cmd.name == "mixture" && name == "input") {
        opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      }
    }
    for (const auto& [name, help] : cmd.flags) sub->add_flag("--" + name, help);
    by_app[sub] = &cmd;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Fail(err, kExitUsage, "usage error", e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  const Command& cmd = *by_app.at(sub);
  try {
    nlohmann::json file = nlohmann::json::object();
    if (auto* config = sub->get_option("--config"); config->count() > 0) {
      file = LoadConfigFile(config->as<std::string>(), cmd.name);
    }
    Settings settings(sub, std::move(file));
    Manifest manifest;
    Invocation inv{settings, manifest, out};
    cmd.run(inv);

    std::optional<fs::path> manifest_path;
    if (auto* opt = sub->get_option("--manifest"); opt->count() > 0) {
      manifest_path = opt->as<std::string>();
    } else if (!manifest.artifacts().empty()) {
      manifest_path = manifest.artifacts().front() + ".manifest.json";
    }
    if (manifest_path) manifest.Write(*manifest_path, cmd.name, settings.echo());
    return kExitOk;
  } catch (const TransportError& e) {
    return Fail(err, kExitTransport, "transport failure", e.what());
  } catch (const TagCollisionError& e) {
    return Fail(err, kExitData, "tag collision", e.what());
  } catch (const AlignmentError& e) {
    return Fail(err, kExitData, "alignment error", e.what());
  } catch (const IoError& e) {
    return Fail(err, kExitData, "file error", e.what());
  } catch (const DataError& e) {
    return Fail(err, kExitData, "data error", e.what());
  } catch (const InvalidArgumentError& e) {
    return Fail(err, kExitUsage, "usage error", e.what());
  } catch (const fs::filesystem_error& e) {
    return Fail(err, kExitData, "file error", e.what());
  } catch (const std::exception& e) {
    return Fail(err, kExitData, "error", e.what());
  }
}

}  // namespace mtnoise
