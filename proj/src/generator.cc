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

#include "wogli/generator.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include "wogli/error.h"
#include "wogli/random.h"

namespace wogli {
namespace {

void Capitalize(std::string& token) {
  if (!token.empty() && token[0] >= 'a' && token[0] <= 'z') {
    token[0] = static_cast<char>(token[0] - 'a' + 'A');
  }
}

void Append(std::vector<std::string>& out, std::vector<std::string> tokens) {
  for (auto& t : tokens) out.push_back(std::move(t));
}

Case ObjectCaseOf(const PremiseInstance& p) { return ObjectCase(p.pattern.government); }

std::vector<std::string> MarkedOrderTokens(const PremiseInstance& p) {
  std::vector<std::string> tokens = RenderNp(p.object, ObjectCaseOf(p));
  tokens.push_back(AgreeVerb(p.verb, p.subject.number));
  Append(tokens, RenderNp(p.subject, Case::kNom));
  if (p.direct_object) Append(tokens, RenderNp(*p.direct_object, Case::kAcc));
  return tokens;
}

// Noun token (never an article or pronoun) of a human argument, if any.
std::optional<std::string> NounToken(const NpSpec& np, Case c) {
  if (np.IsPronoun() || np.IsThing()) return std::nullopt;
  return RenderNp(np, c).back();
}

ArgumentInfo DescribeArgument(const NpSpec& np) {
  ArgumentInfo info;
  info.lemma = np.Lemma();
  info.kind = np.IsPronoun() ? ArgumentKind::kPronoun
                             : (np.IsProper() ? ArgumentKind::kProper : ArgumentKind::kCommon);
  info.gender = np.gender;
  info.number = np.number;
  info.article = np.article;
  info.definite = np.article != ArticleKind::kIndef;
  return info;
}

const std::vector<NounEntry>* NounsFor(NpClass c, const Lexicon& lex) {
  switch (c) {
    case NpClass::kProperMasc: return &lex.masc_proper;
    case NpClass::kProperFem: return &lex.fem_proper;
    case NpClass::kSingMasc:
    case NpClass::kPluralMasc: return &lex.masc_common;
    case NpClass::kSingFem:
    case NpClass::kPluralFem: return &lex.fem_common;
    case NpClass::kProper: return nullptr;
  }
  return nullptr;
}

std::vector<ArticleKind> ArticlesFor(NpClass c) {
  if (IsProperClass(c)) return {ArticleKind::kNone};
  if (ClassNumber(c) == Number::kPl) return {ArticleKind::kDef, ArticleKind::kDem};
  return {ArticleKind::kDef, ArticleKind::kIndef, ArticleKind::kDem};
}

// Everything the sampler needs for one argument slot.
class SlotSampler {
 public:
  SlotSampler(NpClass c, const Lexicon& lex) : class_(c), articles_(ArticlesFor(c)) {
    if (c == NpClass::kProper) {
      if (!lex.masc_proper.empty()) groups_.push_back(&lex.masc_proper);
      if (!lex.fem_proper.empty()) groups_.push_back(&lex.fem_proper);
    } else if (const auto* nouns = NounsFor(c, lex); nouns && !nouns->empty()) {
      groups_.push_back(nouns);
    }
  }

  bool Empty() const { return groups_.empty(); }

  NpSpec Draw(Rng& rng) const {
    // Proper names: gender first, then a name of that gender.
    const auto& group = *groups_[groups_.size() == 1 ? 0 : rng.Below(groups_.size())];
    const NounEntry& noun = group[rng.Below(group.size())];
    if (IsProperClass(class_)) return ProperNp(noun);
    ArticleKind article = articles_[rng.Below(articles_.size())];
    return CommonNp(noun, ClassNumber(class_), article);
  }

  // lemma -> number of distinct noun phrases with that lemma.
  std::map<std::string, std::uint64_t> Weights() const {
    std::map<std::string, std::uint64_t> out;
    for (const auto* group : groups_) {
      for (const auto& n : *group) out[n.lemma] += articles_.size();
    }
    return out;
  }

 private:
  NpClass class_;
  std::vector<ArticleKind> articles_;
  std::vector<const std::vector<NounEntry>*> groups_;
};

std::vector<const ThingNounEntry*> CompatibleThings(const VerbEntry& verb, const Lexicon& lex) {
  std::vector<const ThingNounEntry*> out;
  if (!verb.category) return out;
  for (const auto& t : lex.thing_nouns) {
    if (t.compatible_categories.count(*verb.category)) out.push_back(&t);
  }
  return out;
}

std::vector<PremiseInstance> SamplePattern(const Pattern& pattern, std::size_t pattern_index,
                                           const Lexicon& lex, const GenerateOptions& options) {
  SlotSampler subjects(pattern.subject, lex);
  SlotSampler objects(pattern.object, lex);
  const auto& verbs = lex.Verbs(pattern.government);
  if (subjects.Empty() || objects.Empty() || verbs.empty())
    throw Error(ErrorCode::kExhausted, "lexicon cannot lexicalize pattern " + pattern.Name());
  std::vector<std::vector<const ThingNounEntry*>> things;
  if (pattern.government == Government::kDitransitive) {
    for (const auto& v : verbs) things.push_back(CompatibleThings(v, lex));
  }

  const std::uint64_t available = LexicalizationCount(pattern, lex);
  if (available == 0 || (!options.with_replacement_dedup && options.per_pattern > available)) {
    throw Error(ErrorCode::kExhausted,
                "pattern " + pattern.Name() + " has " + std::to_string(available) +
                    " distinct lexicalizations, " + std::to_string(options.per_pattern) + " requested");
  }

  Rng rng(StreamSeed(options.seed, pattern_index));
  std::vector<PremiseInstance> out;
  out.reserve(options.per_pattern);
  std::unordered_set<std::string> seen;
  std::size_t draw = 0;
  while (out.size() < options.per_pattern) {
    PremiseInstance inst{pattern, subjects.Draw(rng), {}, {}, std::nullopt, {}};
    std::size_t v = rng.Below(verbs.size());
    inst.verb = verbs[v];
    inst.object = objects.Draw(rng);
    if (pattern.government == Government::kDitransitive) {
      if (things[v].empty()) continue;
      inst.direct_object = ThingNp(*things[v][rng.Below(things[v].size())]);
    }
    if (inst.subject.Lemma() == inst.object.Lemma()) continue;
    if (options.with_replacement_dedup) {
      inst.seed_path = {pattern_index, draw++};
      out.push_back(std::move(inst));
      continue;
    }
    if (!seen.insert(RealizePremise(inst)).second) continue;
    inst.seed_path = {pattern_index, out.size()};
    out.push_back(std::move(inst));
  }
  return out;
}

std::string PremiseIdFor(std::string_view subset, const SeedPath& path) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "-%02zu-%04zu", path.pattern_index, path.draw_index);
  return std::string(subset) + buf;
}

// Keeps the first instance of each distinct premise string.
std::vector<PremiseInstance> DedupPremises(std::vector<PremiseInstance> instances) {
  std::unordered_set<std::string> seen;
  std::vector<PremiseInstance> out;
  out.reserve(instances.size());
  for (auto& inst : instances) {
    if (seen.insert(RealizePremise(inst)).second) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<PairRecord> RecordsFor(const std::vector<PremiseInstance>& instances,
                                   std::string_view subset, const std::vector<HypKind>& kinds,
                                   const RealizeOptions& options) {
  std::vector<PairRecord> out;
  out.reserve(instances.size() * kinds.size());
  for (const auto& inst : instances) {
    auto pairs = PairsForPremise(inst, subset, PremiseIdFor(subset, inst.seed_path), kinds, options);
    for (auto& r : pairs) out.push_back(std::move(r));
  }
  return out;
}

NpSpec NpFromInfo(const ArgumentInfo& info, const Lexicon& lex) {
  switch (info.kind) {
    case ArgumentKind::kPronoun: return PronounNp(info.gender, info.number);
    case ArgumentKind::kProper: {
      const NounEntry* n = lex.FindNoun(info.lemma, NounKind::kProper, info.gender);
      if (!n) throw Error(ErrorCode::kInvalidArgument, "unknown proper name '" + info.lemma + "'");
      return ProperNp(*n);
    }
    case ArgumentKind::kCommon: {
      const NounEntry* n = lex.FindNoun(info.lemma, NounKind::kCommon, info.gender);
      if (!n) throw Error(ErrorCode::kInvalidArgument, "unknown common noun '" + info.lemma + "'");
      return CommonNp(*n, info.number, info.article);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "bad argument kind");
}

}  // namespace

void CheckInstance(const PremiseInstance& p) {
  CheckNpSpec(p.subject);
  CheckNpSpec(p.object);
  if (p.verb.government != p.pattern.government)
    throw Error(ErrorCode::kInvalidArgument, "verb " + p.verb.lemma + " does not match the pattern government");
  bool ditrans = p.pattern.government == Government::kDitransitive;
  if (p.direct_object.has_value() != ditrans)
    throw Error(ErrorCode::kInvalidArgument, "direct object must be present iff the verb is ditransitive");
  if (p.direct_object) {
    CheckNpSpec(*p.direct_object);
    if (p.direct_object->article != ArticleKind::kDef)
      throw Error(ErrorCode::kInvalidArgument, "direct objects take the definite article");
  }
}

std::vector<std::string> PremiseTokens(const PremiseInstance& p) {
  std::vector<std::string> tokens = RenderNp(p.subject, Case::kNom);
  tokens.push_back(AgreeVerb(p.verb, p.subject.number));
  Append(tokens, RenderNp(p.object, ObjectCaseOf(p)));
  if (p.direct_object) Append(tokens, RenderNp(*p.direct_object, Case::kAcc));
  return tokens;
}

std::string JoinSentence(const std::vector<std::string>& tokens, const RealizeOptions& options) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string token = tokens[i];
    if (i == 0) {
      Capitalize(token);
    } else {
      out += ' ';
    }
    out += token;
  }
  out += options.spaced_period ? " ." : ".";
  return out;
}

std::string RealizePremise(const PremiseInstance& p, const RealizeOptions& options) {
  return JoinSentence(PremiseTokens(p), options);
}

PremiseInstance SwapArguments(const PremiseInstance& p) {
  PremiseInstance out = p;
  std::swap(out.subject, out.object);
  std::swap(out.pattern.subject, out.pattern.object);
  return out;
}

std::string DeriveH1(const PremiseInstance& p, const RealizeOptions& options) {
  return RealizePremise(SwapArguments(p), options);
}

std::string DeriveH2(const PremiseInstance& p, const RealizeOptions& options) {
  return JoinSentence(MarkedOrderTokens(p), options);
}

std::string DeriveH3(const PremiseInstance& p, const RealizeOptions& options) {
  if (p.pattern.government != Government::kAccusative)
    throw Error(ErrorCode::kInvalidArgument, "H3 hypotheses are defined for accusative premises only");
  return DeriveH2(SwapArguments(p), options);
}

PremiseInstance Pronominalize(const PremiseInstance& p) {
  if (p.pattern.government != Government::kAccusative)
    throw Error(ErrorCode::kInvalidArgument, "pronoun subjects are defined for accusative premises only");
  PremiseInstance out = p;
  out.subject = PronounNp(p.subject.gender, p.subject.number);
  return out;
}

std::string_view ToString(DatasetName name) {
  switch (name) {
    case DatasetName::kWogli: return "wogli";
    case DatasetName::kPSubject: return "p-subject";
    case DatasetName::kDative: return "dative";
    case DatasetName::kDitransitive: return "ditransitive";
    case DatasetName::kOsHard: return "os-hard";
  }
  return "?";
}

std::optional<DatasetName> ParseDatasetName(std::string_view s) {
  for (DatasetName n : {DatasetName::kWogli, DatasetName::kPSubject, DatasetName::kDative,
                        DatasetName::kDitransitive, DatasetName::kOsHard}) {
    if (ToString(n) == s) return n;
  }
  return std::nullopt;
}

std::string_view SubsetName(DatasetName name) {
  switch (name) {
    case DatasetName::kWogli: return "wogli";
    case DatasetName::kPSubject: return "wogli-p-subject";
    case DatasetName::kDative: return "wogli-dative";
    case DatasetName::kDitransitive: return "wogli-ditransitive";
    case DatasetName::kOsHard: return "wogli-os-hard";
  }
  return "?";
}

std::uint64_t LexicalizationCount(const Pattern& p, const Lexicon& lex) {
  auto subject_weights = SlotSampler(p.subject, lex).Weights();
  auto object_weights = SlotSampler(p.object, lex).Weights();
  std::uint64_t subjects = 0;
  std::uint64_t objects = 0;
  std::uint64_t same_lemma = 0;
  for (const auto& [lemma, w] : subject_weights) {
    subjects += w;
    if (auto it = object_weights.find(lemma); it != object_weights.end()) same_lemma += w * it->second;
  }
  for (const auto& [lemma, w] : object_weights) objects += w;
  std::uint64_t verb_factor = 0;
  for (const auto& v : lex.Verbs(p.government)) {
    verb_factor += p.government == Government::kDitransitive ? CompatibleThings(v, lex).size() : 1;
  }
  return (subjects * objects - same_lemma) * verb_factor;
}

std::vector<PremiseInstance> SamplePremises(std::span<const Pattern> patterns, const Lexicon& lex,
                                            const GenerateOptions& options) {
  if (options.per_pattern == 0)
    throw Error(ErrorCode::kInvalidArgument, "per_pattern must be at least 1");
  std::vector<std::vector<PremiseInstance>> per_pattern(patterns.size());
  std::vector<std::exception_ptr> errors(patterns.size());
  auto work = [&](std::size_t i) {
    try {
      per_pattern[i] = SamplePattern(patterns[i], i, lex, options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(patterns.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < patterns.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < patterns.size(); i += workers) work(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<PremiseInstance> out;
  for (auto& chunk : per_pattern) {
    for (auto& inst : chunk) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<PairRecord> PairsForPremise(const PremiseInstance& p, std::string_view subset,
                                        std::string_view premise_id,
                                        const std::vector<HypKind>& kinds,
                                        const RealizeOptions& options) {
  const std::string premise = RealizePremise(p, options);
  const Case object_case = ObjectCaseOf(p);
  std::set<std::string> premise_forms;
  std::set<std::string> swapped_forms;
  for (auto form : {NounToken(p.subject, Case::kNom), NounToken(p.object, object_case)}) {
    if (form) premise_forms.insert(*form);
  }
  for (auto form : {NounToken(p.object, Case::kNom), NounToken(p.subject, object_case)}) {
    if (form) swapped_forms.insert(*form);
  }

  PairMetadata base;
  base.subject = DescribeArgument(p.subject);
  base.object = DescribeArgument(p.object);
  base.verb_lemma = p.verb.lemma;
  if (p.direct_object) base.direct_object_lemma = p.direct_object->Lemma();

  std::vector<PairRecord> out;
  for (HypKind kind : kinds) {
    PairRecord r;
    std::string suffix;
    bool swapped = false;
    switch (kind) {
      case HypKind::kH1SO:
      case HypKind::kH1SiO:
        r.hypothesis = DeriveH1(p, options);
        suffix = "-h1";
        swapped = true;
        break;
      case HypKind::kH2OS:
      case HypKind::kH2iOS:
        r.hypothesis = DeriveH2(p, options);
        suffix = "-h2";
        break;
      case HypKind::kH3OS:
        r.hypothesis = DeriveH3(p, options);
        suffix = "-h3";
        swapped = true;
        break;
    }
    r.id = std::string(premise_id) + suffix;
    r.subset = subset;
    r.premise = premise;
    r.hyp_kind = kind;
    r.label = LabelFor(kind);
    r.pattern = p.pattern.Name();
    PairMetadata meta = base;
    std::set<std::string> forms = premise_forms;
    if (swapped) forms.insert(swapped_forms.begin(), swapped_forms.end());
    meta.noun_forms.assign(forms.begin(), forms.end());
    r.metadata = std::move(meta);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PairRecord> GenerateSet(DatasetName name, const Lexicon& lex,
                                    const GenerateOptions& options) {
  const RealizeOptions realize{options.spaced_period};
  const std::string_view subset = SubsetName(name);
  switch (name) {
    case DatasetName::kWogli:
    case DatasetName::kOsHard: {
      auto patterns = WogliPatterns();
      auto instances = SamplePremises(patterns, lex, options);
      if (options.with_replacement_dedup) instances = DedupPremises(std::move(instances));
      if (name == DatasetName::kWogli)
        return RecordsFor(instances, subset, {HypKind::kH1SO, HypKind::kH2OS}, realize);
      return RecordsFor(instances, subset, {HypKind::kH3OS}, realize);
    }
    case DatasetName::kPSubject: {
      auto patterns = WogliPatterns();
      auto instances = SamplePremises(patterns, lex, options);
      if (options.with_replacement_dedup) instances = DedupPremises(std::move(instances));
      std::vector<PremiseInstance> pronominal;
      pronominal.reserve(instances.size());
      for (const auto& inst : instances) {
        if (!options.keep_name_objects && inst.object.IsProper()) continue;
        pronominal.push_back(Pronominalize(inst));
      }
      return RecordsFor(DedupPremises(std::move(pronominal)), subset,
                        {HypKind::kH1SO, HypKind::kH2OS}, realize);
    }
    case DatasetName::kDative: {
      auto patterns = ExtendedPatterns(Government::kDative);
      auto instances = SamplePremises(patterns, lex, options);
      if (options.with_replacement_dedup) instances = DedupPremises(std::move(instances));
      return RecordsFor(instances, subset, {HypKind::kH1SO, HypKind::kH2OS}, realize);
    }
    case DatasetName::kDitransitive: {
      auto patterns = ExtendedPatterns(Government::kDitransitive);
      auto instances = SamplePremises(patterns, lex, options);
      if (options.with_replacement_dedup) instances = DedupPremises(std::move(instances));
      return RecordsFor(instances, subset, {HypKind::kH1SiO, HypKind::kH2iOS}, realize);
    }
  }
  return {};
}

PremiseInstance InstanceFromRecord(const PairRecord& record, const Lexicon& lex) {
  if (!record.metadata)
    throw Error(ErrorCode::kInvalidArgument, "record " + record.id + " carries no metadata");
  const PairMetadata& meta = *record.metadata;
  const VerbEntry* verb = lex.FindVerb(meta.verb_lemma);
  if (!verb) throw Error(ErrorCode::kInvalidArgument, "unknown verb '" + meta.verb_lemma + "'");
  PremiseInstance inst;
  inst.pattern = ParsePattern(record.pattern, verb->government);
  inst.verb = *verb;
  inst.subject = NpFromInfo(meta.subject, lex);
  inst.object = NpFromInfo(meta.object, lex);
  if (!meta.direct_object_lemma.empty()) {
    const ThingNounEntry* thing = lex.FindThing(meta.direct_object_lemma);
    if (!thing)
      throw Error(ErrorCode::kInvalidArgument, "unknown direct object '" + meta.direct_object_lemma + "'");
    inst.direct_object = ThingNp(*thing);
  }
  CheckInstance(inst);
  return inst;
}

std::vector<PairRecord> DeriveOsHard(std::span<const PairRecord> wogli, const Lexicon& lex) {
  const std::string_view subset = SubsetName(DatasetName::kOsHard);
  std::unordered_set<std::string> seen;
  std::vector<PairRecord> out;
  for (const auto& record : wogli) {
    std::string premise_id(record.PremiseId());
    if (!seen.insert(premise_id).second) continue;
    PremiseInstance inst = InstanceFromRecord(record, lex);
    RealizeOptions options{record.premise.size() >= 2 &&
                           record.premise.compare(record.premise.size() - 2, 2, " .") == 0};
    if (RealizePremise(inst, options) != record.premise)
      throw Error(ErrorCode::kInvalidArgument,
                  "metadata of " + record.id + " does not reproduce its premise");
    std::string id = premise_id;
    if (id.starts_with(record.subset + "-")) {
      id = std::string(subset) + id.substr(record.subset.size());
    } else {
      id = std::string(subset) + "-" + id;
    }
    for (auto& r : PairsForPremise(inst, subset, id, {HypKind::kH3OS}, options)) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace wogli
