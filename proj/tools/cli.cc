/* Copyright 2026 The WOGLI Generator Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wogli/analysis.h"
#include "wogli/augment.h"
#include "wogli/dataset_io.h"
#include "wogli/error.h"
#include "wogli/generator.h"
#include "wogli/lexicon.h"
#include "wogli/patterns.h"

namespace wogli::cli {
namespace {

constexpr const char* kFormatsHelp = R"(Formats:
  pairs (jsonl)   one JSON object per line: id, subset, premise, hypothesis,
                  label (entailed|non-entailed), hyp_kind (H1-SO|H2-OS|H3-OS|
                  H1-SiO|H2-iOS), pattern, metadata {subject, object, verb,
                  direct_object, noun_forms}. UTF-8, '\n' line ends.
  pairs (tsv)     header "id subset premise hypothesis label hyp_kind pattern",
                  tab separated; no metadata. Tabs and newlines inside text
                  fields are rejected in both formats.
  predictions     "id<TAB>run_index<TAB>label", optional header starting
                  with "id"; label in entailment|neutral|contradiction|
                  entailed|non-entailed.
  scores          "sentence_id<TAB>score"; premise ids are pair ids without
                  the trailing -h1/-h2/-h3.
  training file   "premise<TAB>hypothesis<TAB>label" (3-class).
  lexicon         TSV "class lemma form2 form3 attrs" rows or JSON; see
                  docs/formats.md.
Environment:
  WOGLI_LEXICON   default lexicon path when --lexicon is not given.
Exit codes: 0 success, 1 usage error, 2 data or validation error.
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Lexicon ResolveLexicon(const std::string& path) {
  if (!path.empty()) return LoadLexiconFile(path);
  if (const char* env = std::getenv("WOGLI_LEXICON"); env && *env) return LoadLexiconFile(env);
  return BundledLexicon();
}

// Writes `text` to `path`, or to `out` for "-".
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + path);
  file << text;
  if (!file) throw Error(ErrorCode::kIo, "write failed: " + path);
}

std::string PairsText(std::span<const PairRecord> records, const std::string& format) {
  auto f = ParsePairFormat(format);
  if (!f) throw UsageError("unknown format '" + format + "' (jsonl|tsv)");
  std::ostringstream s;
  WritePairs(records, *f, s);
  return s.str();
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

// Sizes of the published sets.
std::size_t DefaultPerPattern(DatasetName name) {
  switch (name) {
    case DatasetName::kDative: return 150;
    case DatasetName::kDitransitive: return 500;
    default: return 1000;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generator and analyzer for German word-order NLI challenge sets.", "wogli"};
  app.footer(kFormatsHelp);
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a challenge set (wogli|p-subject|dative|ditransitive|os-hard).");
  std::string set_name, lexicon_path, out_path = "-", format = "jsonl";
  std::uint64_t seed = 0;
  std::optional<std::size_t> per_pattern;
  std::size_t workers = 1;
  bool with_replacement = false, spaced = false, keep_names = false;
  gen->add_option("set", set_name, "Dataset to generate")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--per-pattern", per_pattern,
                  "Premises per pattern (default: dative 150, ditransitive 500, otherwise 1000)");
  gen->add_option("--lexicon", lexicon_path, "Lexicon file (TSV or JSON)");
  gen->add_option("--out", out_path, "Output file, '-' for stdout")->capture_default_str();
  gen->add_option("--format", format, "jsonl|tsv")->capture_default_str();
  gen->add_option("--workers", workers, "Worker threads (output does not depend on it)")->capture_default_str();
  gen->add_flag("--with-replacement-dedup", with_replacement,
                "Sample with replacement, then drop duplicate premises");
  gen->add_flag("--spaced-period", spaced, "Separate the final period by a space");
  gen->add_flag("--keep-name-objects", keep_names,
                "p-subject: keep premises whose object is a proper name");

  // derive os-hard
  auto* derive = app.add_subcommand("derive", "Derive a set from an existing one (os-hard).");
  std::string derive_target, from_path;
  derive->add_option("target", derive_target, "Only 'os-hard'")->required();
  derive->add_option("--from", from_path, "WOGLI pairs in jsonl")->required();
  derive->add_option("--out", out_path, "Output file")->capture_default_str();
  derive->add_option("--format", format, "jsonl|tsv")->capture_default_str();
  derive->add_option("--lexicon", lexicon_path, "Lexicon file");

  // sample-augmentation
  auto* aug = app.add_subcommand("sample-augmentation", "Sample a stratified augmentation subset.");
  std::string plan_name, in_path, pool_path, out_aug, out_rest;
  std::optional<std::size_t> verb_min, verb_max;
  std::size_t retry_budget = 10000;
  bool all_nouns = false;
  aug->add_option("--plan", plan_name, "1037|102|custom")->required();
  aug->add_option("--seed", seed, "Random seed")->required();
  aug->add_option("--in", in_path, "WOGLI pairs (jsonl)")->required();
  aug->add_option("--pool", pool_path, "Draw premises from this subset of --in (e.g. a 1037 sample)");
  aug->add_option("--out-aug", out_aug, "Augmentation output")->required();
  aug->add_option("--out-rest", out_rest, "Remainder output")->required();
  aug->add_option("--format", format, "jsonl|tsv")->capture_default_str();
  aug->add_option("--per-pattern", per_pattern, "custom: premises per pattern");
  aug->add_option("--verb-min", verb_min, "custom: minimum premises per verb");
  aug->add_option("--verb-max", verb_max, "custom: maximum premises per verb");
  aug->add_flag("--all-noun-forms", all_nouns, "custom: require every noun form");
  aug->add_option("--retry-budget", retry_budget, "Swap attempts before giving up")->capture_default_str();

  // merge
  auto* merge = app.add_subcommand("merge", "Merge augmentation pairs into a 3-class training file.");
  std::string base_path, ne_label = "neutral";
  merge->add_option("--base", base_path, "premise<TAB>hypothesis<TAB>label file")->required();
  merge->add_option("--aug", in_path, "Augmentation pairs")->required();
  merge->add_option("--ne-label", ne_label, "neutral|contradiction")->capture_default_str();
  merge->add_option("--seed", seed, "Shuffle seed")->required();
  merge->add_option("--out", out_path, "Output file")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Accuracy breakdowns over gold pairs and predictions.");
  std::string gold_path, pred_path, report_format = "text", sd_name = "population", tie = "error";
  std::size_t runs = 1;
  std::vector<std::string> groups{"all"};
  analyze->add_option("--gold", gold_path, "Gold pairs (jsonl)")->required();
  analyze->add_option("--predictions", pred_path, "Predictions TSV")->required();
  analyze->add_option("--runs", runs, "Number of runs")->capture_default_str();
  analyze->add_option("--groups", groups, "all|gender|definiteness|number")->capture_default_str();
  analyze->add_option("--out", out_path, "Report file")->capture_default_str();
  analyze->add_option("--report-format", report_format, "text|jsonl")->capture_default_str();
  analyze->add_option("--sd", sd_name, "population|sample")->capture_default_str();
  analyze->add_option("--tie-break", tie, "error|not-entailed")->capture_default_str();

  // pll
  auto* pll = app.add_subcommand("pll", "Aggregate external sentence scores per premise/H1/H2/H3.");
  std::string scores_path;
  pll->add_option("--scores", scores_path, "sentence_id<TAB>score file")->required();
  pll->add_option("--gold", gold_path, "Gold pairs")->required();
  pll->add_option("--sd", sd_name, "population|sample")->capture_default_str();
  pll->add_option("--out", out_path, "Output file")->capture_default_str();

  // validate-lexicon
  auto* validate = app.add_subcommand("validate-lexicon", "Check a lexicon against its invariants.");
  std::string profile = "full";
  validate->add_option("--in", lexicon_path, "Lexicon file (default: WOGLI_LEXICON or bundled)");
  validate->add_option("--profile", profile, "full|toy")->capture_default_str();

  // patterns
  auto* patterns = app.add_subcommand("patterns", "List pattern inventories.");
  std::string inventory = "wogli";
  patterns->add_option("inventory", inventory, "wogli|dative|ditransitive|excluded")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error[E_USAGE]: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*gen) {
      auto name = ParseDatasetName(set_name);
      if (!name) throw UsageError("unknown set '" + set_name + "'");
      if (!ParsePairFormat(format)) throw UsageError("unknown format '" + format + "'");
      GenerateOptions options;
      options.seed = seed;
      options.per_pattern = per_pattern.value_or(DefaultPerPattern(*name));
      options.with_replacement_dedup = with_replacement;
      options.spaced_period = spaced;
      options.keep_name_objects = keep_names;
      options.workers = workers;
      Lexicon lex = ResolveLexicon(lexicon_path);
      auto records = GenerateSet(*name, lex, options);
      Emit(out_path, PairsText(records, format), out);
    } else if (*derive) {
      if (derive_target != "os-hard") throw UsageError("derive supports only 'os-hard'");
      if (!ParsePairFormat(format)) throw UsageError("unknown format '" + format + "'");
      Lexicon lex = ResolveLexicon(lexicon_path);
      auto wogli = ReadPairsFile(from_path);
      auto records = DeriveOsHard(wogli, lex);
      Emit(out_path, PairsText(records, format), out);
    } else if (*aug) {
      if (!ParsePairFormat(format)) throw UsageError("unknown format '" + format + "'");
      AugmentationPlan plan;
      if (plan_name == "1037") {
        plan = Plan1037(seed);
      } else if (plan_name == "102") {
        plan = Plan102(seed);
      } else if (plan_name == "custom") {
        if (!per_pattern) throw UsageError("custom plan needs --per-pattern");
        if (verb_min.has_value() != verb_max.has_value())
          throw UsageError("--verb-min and --verb-max go together");
        plan.premises_per_pattern = *per_pattern;
        if (verb_min) plan.verb_range = VerbRange{*verb_min, *verb_max};
        plan.require_all_noun_forms = all_nouns;
        plan.seed = seed;
      } else {
        throw UsageError("unknown plan '" + plan_name + "' (1037|102|custom)");
      }
      plan.retry_budget = retry_budget;
      auto data = ReadPairsFile(in_path);
      std::optional<std::vector<PairRecord>> pool;
      if (!pool_path.empty()) pool = ReadPairsFile(pool_path);
      auto split = pool ? SampleAugmentation(data, plan, std::span<const PairRecord>(*pool))
                        : SampleAugmentation(data, plan);
      Emit(out_aug, PairsText(split.augmentation, format), out);
      Emit(out_rest, PairsText(split.remainder, format), out);
      err << "augmentation: " << split.augmentation.size() << " pairs, remainder: "
          << split.remainder.size() << " pairs\n";
    } else if (*merge) {
      NeLabel ne;
      if (ne_label == "neutral") {
        ne = NeLabel::kNeutral;
      } else if (ne_label == "contradiction") {
        ne = NeLabel::kContradiction;
      } else {
        throw UsageError("unknown --ne-label '" + ne_label + "'");
      }
      auto base_in = OpenIn(base_path);
      auto base = ReadNliTsv(base_in);
      auto augmentation = ReadPairsFile(in_path);
      auto rows = MergeTraining(std::move(base), augmentation, ne, seed);
      std::ostringstream s;
      WriteNliTsv(rows, s);
      Emit(out_path, s.str(), out);
    } else if (*analyze) {
      ReportOptions options;
      options.gender = options.definiteness = options.number = false;
      for (const auto& g : groups) {
        if (g == "all") {
          options.gender = options.definiteness = options.number = true;
        } else if (g == "gender") {
          options.gender = true;
        } else if (g == "definiteness") {
          options.definiteness = true;
        } else if (g == "number") {
          options.number = true;
        } else {
          throw UsageError("unknown group '" + g + "'");
        }
      }
      if (sd_name != "population" && sd_name != "sample") throw UsageError("unknown --sd '" + sd_name + "'");
      options.sd = sd_name == "sample" ? SdKind::kSample : SdKind::kPopulation;
      if (tie != "error" && tie != "not-entailed") throw UsageError("unknown --tie-break '" + tie + "'");
      options.tie_break = tie == "error" ? TieBreak::kError : TieBreak::kNotEntailed;
      if (report_format != "text" && report_format != "jsonl")
        throw UsageError("unknown --report-format '" + report_format + "'");
      auto gold = ReadPairsFile(gold_path);
      auto preds = ReadPredictionsFile(pred_path, runs);
      auto report = Analyze(gold, preds, options);
      Emit(out_path, report_format == "text" ? FormatReportText(report) : FormatReportJsonl(report), out);
    } else if (*pll) {
      if (sd_name != "population" && sd_name != "sample") throw UsageError("unknown --sd '" + sd_name + "'");
      auto in = OpenIn(scores_path);
      auto scores = ReadScores(in);
      auto gold = ReadPairsFile(gold_path);
      auto stats = PllAggregate(scores, gold, sd_name == "sample" ? SdKind::kSample : SdKind::kPopulation);
      std::ostringstream s;
      s << "group\tn\tmean\tsd\n";
      for (const auto& [group, m] : stats) s << group << '\t' << m.n << '\t' << m.mean << '\t' << m.sd << '\n';
      Emit(out_path, s.str(), out);
    } else if (*validate) {
      ValidationProfile p;
      if (profile == "full") {
        p = ValidationProfile::kFull;
      } else if (profile == "toy") {
        p = ValidationProfile::kToy;
      } else {
        throw UsageError("unknown profile '" + profile + "' (full|toy)");
      }
      Lexicon lex = ResolveLexicon(lexicon_path);
      auto problems = ValidateLexicon(lex, p);
      for (const auto& msg : problems) err << "error[E_VALIDATION]: " << msg << '\n';
      if (!problems.empty()) return 2;
      out << "ok: " << lex.verbs_acc.size() << " acc, " << lex.verbs_dat.size() << " dat, "
          << lex.verbs_ditrans.size() << " ditransitive verbs; " << SurfaceFormCount(lex)
          << " noun forms; " << lex.thing_nouns.size() << " thing nouns\n";
    } else if (*patterns) {
      std::vector<Pattern> list;
      if (inventory == "wogli") {
        list = WogliPatterns();
      } else if (inventory == "dative") {
        list = ExtendedPatterns(Government::kDative);
      } else if (inventory == "ditransitive") {
        list = ExtendedPatterns(Government::kDitransitive);
      } else if (inventory == "excluded") {
        list = ExcludedPatterns();
      } else {
        throw UsageError("unknown inventory '" + inventory + "'");
      }
      out << ExportPatterns(list);
    }
  } catch (const UsageError& e) {
    err << "error[E_USAGE]: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error[" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error[E_INTERNAL]: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace wogli::cli
