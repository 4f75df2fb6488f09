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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <unordered_set>

#include "oracle.h"
#include "wogli/error.h"

namespace wogli {
namespace {

const Lexicon& Toy() {
  static const Lexicon lex = LoadLexiconFile(WOGLI_SOURCE_DIR "/data/lexicon/wogli_toy.tsv");
  return lex;
}

const NounEntry& N(const std::string& lemma) {
  const Lexicon& lex = Toy();
  for (const auto* inv : {&lex.masc_common, &lex.fem_common, &lex.masc_proper, &lex.fem_proper}) {
    for (const auto& n : *inv) {
      if (n.lemma == lemma) return n;
    }
  }
  throw std::runtime_error("no noun " + lemma);
}

const VerbEntry& V(const std::string& lemma) { return *Toy().FindVerb(lemma); }

PremiseInstance Instance(const std::string& pattern, Government g, NpSpec s, const std::string& verb, NpSpec o,
                         std::optional<NpSpec> direct = std::nullopt) {
  return PremiseInstance{ParsePattern(pattern, g), std::move(s), std::move(o), V(verb), std::move(direct), {}};
}

// Golden rows transcribed from the published example tables.
TEST(Realize, AccusativeAllSingular) {
  struct Row {
    ArticleKind a;
    const char *premise, *h1, *h2, *h3;
  };
  const Row rows[] = {
      {ArticleKind::kDef, "Der Arzt warnt den Kunden.", "Der Kunde warnt den Arzt.", "Den Kunden warnt der Arzt.",
       "Den Arzt warnt der Kunde."},
      {ArticleKind::kDem, "Dieser Arzt warnt diesen Kunden.", "Dieser Kunde warnt diesen Arzt.",
       "Diesen Kunden warnt dieser Arzt.", "Diesen Arzt warnt dieser Kunde."},
      {ArticleKind::kIndef, "Ein Arzt warnt einen Kunden.", "Ein Kunde warnt einen Arzt.",
       "Einen Kunden warnt ein Arzt.", "Einen Arzt warnt ein Kunde."},
  };
  for (const auto& row : rows) {
    auto p = Instance("sing_masc_v_sing_masc", Government::kAccusative, CommonNp(N("Arzt"), Number::kSg, row.a),
                      "warnen", CommonNp(N("Kunde"), Number::kSg, row.a));
    EXPECT_EQ(RealizePremise(p), row.premise);
    EXPECT_EQ(DeriveH1(p), row.h1);
    EXPECT_EQ(DeriveH2(p), row.h2);
    EXPECT_EQ(DeriveH3(p), row.h3);
  }
}

TEST(Realize, AccusativeSingularPlural) {
  auto p = Instance("sing_masc_v_plural_fem", Government::kAccusative,
                    CommonNp(N("Minister"), Number::kSg, ArticleKind::kDef), "empfehlen",
                    CommonNp(N("Autorin"), Number::kPl, ArticleKind::kDef));
  EXPECT_EQ(RealizePremise(p), "Der Minister empfiehlt die Autorinnen.");
  EXPECT_EQ(DeriveH1(p), "Die Autorinnen empfehlen den Minister.");
  EXPECT_EQ(DeriveH2(p), "Die Autorinnen empfiehlt der Minister.");
  EXPECT_EQ(DeriveH3(p), "Den Minister empfehlen die Autorinnen.");
}

TEST(Realize, PronounSubject) {
  auto p = Instance("sing_masc_v_sing_masc", Government::kAccusative,
                    CommonNp(N("Arzt"), Number::kSg, ArticleKind::kDef), "warnen",
                    CommonNp(N("Gast"), Number::kSg, ArticleKind::kDef));
  auto q = Pronominalize(p);
  EXPECT_EQ(RealizePremise(q), "Er warnt den Gast.");
  EXPECT_EQ(DeriveH1(q), "Der Gast warnt ihn.");
  EXPECT_EQ(DeriveH2(q), "Den Gast warnt er.");
}

TEST(Realize, PronounSubjectsCollapse) {
  // Masculine and feminine plural subjects share "sie".
  const NounEntry aerztin{"Ärztin", Gender::kFem, "Ärztinnen", false, NounKind::kCommon, true};
  auto a = Instance("plural_masc_v_sing_masc", Government::kAccusative,
                    CommonNp(N("Arzt"), Number::kPl, ArticleKind::kDef), "warnen",
                    CommonNp(N("Kunde"), Number::kSg, ArticleKind::kDef));
  auto b = Instance("plural_fem_v_sing_masc", Government::kAccusative, CommonNp(aerztin, Number::kPl, ArticleKind::kDef),
                    "warnen", CommonNp(N("Kunde"), Number::kSg, ArticleKind::kDef));
  EXPECT_EQ(RealizePremise(a), "Die Ärzte warnen den Kunden.");
  EXPECT_EQ(RealizePremise(b), "Die Ärztinnen warnen den Kunden.");
  EXPECT_EQ(RealizePremise(Pronominalize(a)), "Sie warnen den Kunden.");
  EXPECT_EQ(RealizePremise(Pronominalize(a)), RealizePremise(Pronominalize(b)));
}

TEST(Realize, Dative) {
  auto p = Instance("sing_masc_v_plural_masc", Government::kDative,
                    CommonNp(N("Richter"), Number::kSg, ArticleKind::kIndef), "gratulieren",
                    CommonNp(N("Berater"), Number::kPl, ArticleKind::kDem));
  EXPECT_EQ(RealizePremise(p), "Ein Richter gratuliert diesen Beratern.");
  EXPECT_EQ(DeriveH1(p), "Diese Berater gratulieren einem Richter.");
  EXPECT_EQ(DeriveH2(p), "Diesen Beratern gratuliert ein Richter.");
  EXPECT_THROW(DeriveH3(p), Error);
  EXPECT_THROW(Pronominalize(p), Error);
}

TEST(Realize, Ditransitive) {
  auto p = Instance("plural_fem_v_sing_masc", Government::kDitransitive,
                    CommonNp(N("Kellnerin"), Number::kPl, ArticleKind::kDef), "geben",
                    CommonNp(N("Händler"), Number::kSg, ArticleKind::kIndef), ThingNp(*Toy().FindThing("Kuchen")));
  EXPECT_EQ(RealizePremise(p), "Die Kellnerinnen geben einem Händler den Kuchen.");
  EXPECT_EQ(DeriveH1(p), "Ein Händler gibt den Kellnerinnen den Kuchen.");
  EXPECT_EQ(DeriveH2(p), "Einem Händler geben die Kellnerinnen den Kuchen.");
}

TEST(Realize, SpacedPeriodAndNames) {
  auto p = Instance("pnoun_v_sing_fem", Government::kAccusative, ProperNp(N("Walter")), "begrüßen",
                    CommonNp(N("Freundin"), Number::kSg, ArticleKind::kIndef));
  EXPECT_EQ(RealizePremise(p, {true}), "Walter begrüßt eine Freundin .");
  EXPECT_EQ(DeriveH1(p), "Eine Freundin begrüßt Walter.");
}

TEST(Realize, ExcludedPatternsGiveIdenticalHypotheses) {
  struct Row {
    const char* pattern;
    NpSpec s, o;
    const char *premise, *hypothesis;
  };
  auto def = [](const char* lemma, Number n) { return CommonNp(N(lemma), n, ArticleKind::kDef); };
  const Row rows[] = {
      {"sing_fem_v_pnoun", def("Freundin", Number::kSg), ProperNp(N("David")), "Die Freundin begrüßt David .",
       "David begrüßt die Freundin ."},
      {"pnoun_v_sing_fem", ProperNp(N("David")), def("Freundin", Number::kSg), "David begrüßt die Freundin .",
       "Die Freundin begrüßt David ."},
      {"pnoun_v_pnoun", ProperNp(N("Walter")), ProperNp(N("David")), "Walter begrüßt David .",
       "David begrüßt Walter ."},
      {"sing_fem_v_sing_fem", def("Mitbewohnerin", Number::kSg), def("Freundin", Number::kSg),
       "Die Mitbewohnerin begrüßt die Freundin .", "Die Freundin begrüßt die Mitbewohnerin ."},
      {"plural_fem_v_plural_fem", def("Freundin", Number::kPl), def("Mitbewohnerin", Number::kPl),
       "Die Freundinnen begrüßen die Mitbewohnerinnen .", "Die Mitbewohnerinnen begrüßen die Freundinnen ."},
      {"plural_masc_v_plural_masc", def("Freund", Number::kPl), def("Mitbewohner", Number::kPl),
       "Die Freunde begrüßen die Mitbewohner .", "Die Mitbewohner begrüßen die Freunde ."},
      {"plural_masc_v_plural_fem", def("Freund", Number::kPl), def("Mitbewohnerin", Number::kPl),
       "Die Freunde begrüßen die Mitbewohnerinnen .", "Die Mitbewohnerinnen begrüßen die Freunde ."},
      {"plural_fem_v_plural_masc", def("Freundin", Number::kPl), def("Mitbewohner", Number::kPl),
       "Die Freundinnen begrüßen die Mitbewohner .", "Die Mitbewohner begrüßen die Freundinnen ."},
  };
  for (const auto& row : rows) {
    auto p = Instance(row.pattern, Government::kAccusative, row.s, "begrüßen", row.o);
    EXPECT_EQ(RealizePremise(p, {true}), row.premise);
    EXPECT_EQ(DeriveH1(p, {true}), row.hypothesis);
    EXPECT_EQ(DeriveH2(p, {true}), row.hypothesis);
  }
}

TEST(CheckInstance, Rejections) {
  auto p = Instance("plural_fem_v_sing_masc", Government::kDitransitive,
                    CommonNp(N("Kellnerin"), Number::kPl, ArticleKind::kDef), "geben",
                    CommonNp(N("Händler"), Number::kSg, ArticleKind::kIndef),
                    ThingNp(*Toy().FindThing("Kuchen"), ArticleKind::kIndef));
  EXPECT_THROW(CheckInstance(p), Error);
  p.direct_object.reset();
  EXPECT_THROW(CheckInstance(p), Error);
}

// ---- generated sets: invariants checked with the oracle ----

struct SetCase {
  DatasetName name;
  std::size_t per_pattern;
  std::size_t patterns;
};

void PrintTo(const SetCase& c, std::ostream* os) { *os << ToString(c.name) << "x" << c.per_pattern; }

class GeneratedSet : public ::testing::TestWithParam<SetCase> {};

TEST_P(GeneratedSet, Invariants) {
  const auto& c = GetParam();
  const Lexicon& lex = BundledLexicon();
  GenerateOptions opt;
  opt.seed = 7;
  opt.per_pattern = c.per_pattern;
  auto records = GenerateSet(c.name, lex, opt);
  oracle::Analyzer an(lex);

  std::map<std::string, std::vector<const PairRecord*>> by_premise;
  std::set<std::string> ids;
  for (const auto& r : records) {
    ASSERT_TRUE(ids.insert(r.id).second) << r.id;
    by_premise[std::string(r.PremiseId())].push_back(&r);
    EXPECT_EQ(r.subset, SubsetName(c.name));
    EXPECT_EQ(r.label, LabelFor(r.hyp_kind));
    ASSERT_TRUE(r.metadata);
    const auto& m = *r.metadata;
    EXPECT_NE(m.subject.lemma, m.object.lemma) << r.premise;
    // Same lemmas in every sentence of a pair; premise and hypothesis differ.
    EXPECT_EQ(an.LemmaBag(r.premise), an.LemmaBag(r.hypothesis)) << r.premise << " / " << r.hypothesis;
    EXPECT_NE(r.premise, r.hypothesis);
    auto words = oracle::Words(r.premise);
    std::size_t extra = c.name == DatasetName::kDitransitive ? 2 : 0;
    EXPECT_GE(words.size(), 4 + extra) << r.premise;
    EXPECT_LE(words.size(), 5 + extra) << r.premise;
    // The finite verb agrees with the premise subject.
    const VerbEntry* v = lex.FindVerb(m.verb_lemma);
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(an.VerbOf(r.premise), m.subject.number == Number::kSg ? v->form_3sg : v->form_3pl) << r.premise;
    // Noun forms: exactly the human-noun tokens of the two sentences,
    // minus the H2 case where the hypothesis only reorders.
    std::set<std::string> forms;
    auto collect = [&](const std::string& s) {
      for (const auto& w : oracle::Words(s)) {
        for (const auto& l : an.Lemmas(w)) {
          if (l.rfind("N:", 0) == 0) forms.insert(w);
        }
      }
    };
    collect(r.premise);
    collect(r.hypothesis);
    EXPECT_EQ(std::vector<std::string>(forms.begin(), forms.end()), m.noun_forms) << r.id;
    if (c.name == DatasetName::kPSubject) {
      EXPECT_EQ(m.subject.kind, ArgumentKind::kPronoun);
      EXPECT_NE(m.object.kind, ArgumentKind::kProper);
      std::string first = oracle::Lower(words[0]);
      EXPECT_TRUE(first == "er" || first == "sie") << r.premise;
    } else {
      // Articles match the hand table.
      if (m.subject.kind == ArgumentKind::kCommon) {
        char g = m.subject.gender == Gender::kMasc ? 'M' : 'F';
        std::string kind(ToString(m.subject.article));
        EXPECT_EQ(oracle::Lower(words[0]), oracle::Article(kind, g, m.subject.number == Number::kPl, "NOM"))
            << r.premise;
      }
    }
  }

  // Token bags: H2 reorders the premise; H3 reorders H1.
  std::map<std::string, std::string> h1_of;
  if (c.name == DatasetName::kWogli) {
    for (const auto& r : records) {
      if (r.hyp_kind == HypKind::kH1SO) h1_of[std::string(r.PremiseId()).substr(6)] = r.hypothesis;
    }
    for (const auto& r : DeriveOsHard(records, lex)) {
      EXPECT_EQ(oracle::LowerBag(r.hypothesis), oracle::LowerBag(h1_of.at(std::string(r.PremiseId()).substr(14))));
    }
  }
  for (const auto& r : records) {
    if (r.hyp_kind == HypKind::kH2OS || r.hyp_kind == HypKind::kH2iOS)
      EXPECT_EQ(oracle::LowerBag(r.premise), oracle::LowerBag(r.hypothesis)) << r.id;
  }

  std::size_t per_premise = c.name == DatasetName::kOsHard ? 1 : 2;
  std::unordered_set<std::string> premises;
  for (const auto& [pid, rs] : by_premise) {
    ASSERT_EQ(rs.size(), per_premise) << pid;
    EXPECT_TRUE(premises.insert(rs[0]->premise).second) << rs[0]->premise;
    if (per_premise == 2) {
      EXPECT_NE(rs[0]->hypothesis, rs[1]->hypothesis);
      EXPECT_NE(rs[0]->label, rs[1]->label);
      // The verb changes between the hypotheses iff the arguments differ in
      // number. Plural-plural patterns count as singular-plural but keep the verb.
      Pattern pat = ParsePattern(rs[0]->pattern, Government::kAccusative);
      bool changed = an.VerbOf(rs[0]->hypothesis) != an.VerbOf(rs[1]->hypothesis);
      EXPECT_EQ(changed, ClassNumber(pat.subject) != ClassNumber(pat.object)) << pid;
      if (c.name != DatasetName::kDative && c.name != DatasetName::kDitransitive)
        EXPECT_EQ(changed, ClassifyNumber(pat) == NumberClass::kSingularPlural) << pid;
    }
  }
  if (c.name != DatasetName::kPSubject) {
    EXPECT_EQ(by_premise.size(), c.per_pattern * c.patterns);
  } else {
    EXPECT_LE(by_premise.size(), c.per_pattern * c.patterns);
  }
}

INSTANTIATE_TEST_SUITE_P(Sets, GeneratedSet,
                         ::testing::Values(SetCase{DatasetName::kWogli, 60, 17}, SetCase{DatasetName::kOsHard, 60, 17},
                                           SetCase{DatasetName::kPSubject, 60, 17},
                                           SetCase{DatasetName::kDative, 40, 24},
                                           SetCase{DatasetName::kDitransitive, 40, 24}),
                         [](const auto& info) {
                           std::string s(ToString(info.param.name));
                           s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
                           return s;
                         });

TEST(Generate, DeterministicAcrossWorkers) {
  GenerateOptions a;
  a.seed = 3;
  a.per_pattern = 120;
  GenerateOptions b = a;
  b.workers = 8;
  EXPECT_EQ(GenerateSet(DatasetName::kWogli, BundledLexicon(), a), GenerateSet(DatasetName::kWogli, BundledLexicon(), b));
  EXPECT_EQ(GenerateSet(DatasetName::kDitransitive, BundledLexicon(), a),
            GenerateSet(DatasetName::kDitransitive, BundledLexicon(), b));
  GenerateOptions c = a;
  c.seed = 4;
  EXPECT_NE(GenerateSet(DatasetName::kWogli, BundledLexicon(), a), GenerateSet(DatasetName::kWogli, BundledLexicon(), c));
}

TEST(Generate, PatternStreamsAreIndependent) {
  // Sampling a single pattern gives the same premises as within the full run.
  GenerateOptions opt;
  opt.seed = 11;
  opt.per_pattern = 30;
  auto all = WogliPatterns();
  auto full = SamplePremises(all, BundledLexicon(), opt);
  std::vector<Pattern> first(all.begin(), all.begin() + 1);
  auto one = SamplePremises(first, BundledLexicon(), opt);
  ASSERT_EQ(one.size(), 30u);
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i], full[i]);
  for (std::size_t i = 0; i < full.size(); ++i) {
    EXPECT_EQ(full[i].seed_path.pattern_index, i / 30);
    EXPECT_EQ(full[i].seed_path.draw_index, i % 30);
  }
}

TEST(Generate, SeedSensitivity) {
  GenerateOptions a;
  a.per_pattern = 50;
  a.seed = 0;
  GenerateOptions b = a;
  b.seed = 1;
  auto x = GenerateSet(DatasetName::kWogli, BundledLexicon(), a);
  auto y = GenerateSet(DatasetName::kWogli, BundledLexicon(), b);
  std::set<std::string> px, py;
  for (const auto& r : x) px.insert(r.premise);
  for (const auto& r : y) py.insert(r.premise);
  std::size_t shared = 0;
  for (const auto& s : px) shared += py.count(s);
  EXPECT_LT(shared, px.size() / 10);
}

TEST(Generate, OsHardMatchesDerivation) {
  GenerateOptions opt;
  opt.seed = 5;
  opt.per_pattern = 40;
  auto wogli = GenerateSet(DatasetName::kWogli, BundledLexicon(), opt);
  EXPECT_EQ(DeriveOsHard(wogli, BundledLexicon()), GenerateSet(DatasetName::kOsHard, BundledLexicon(), opt));
  opt.spaced_period = true;
  auto spaced = GenerateSet(DatasetName::kWogli, BundledLexicon(), opt);
  auto hard = DeriveOsHard(spaced, BundledLexicon());
  ASSERT_EQ(hard.size(), 17u * 40u);
  for (const auto& r : hard) {
    EXPECT_EQ(r.hypothesis.substr(r.hypothesis.size() - 2), " .");
    EXPECT_EQ(r.hyp_kind, HypKind::kH3OS);
    EXPECT_EQ(r.id.rfind("wogli-os-hard-", 0), 0u);
  }
}

TEST(Generate, InstanceRoundTripsThroughMetadata) {
  GenerateOptions opt;
  opt.seed = 2;
  opt.per_pattern = 10;
  for (DatasetName name : {DatasetName::kWogli, DatasetName::kDative, DatasetName::kDitransitive}) {
    for (const auto& r : GenerateSet(name, BundledLexicon(), opt)) {
      EXPECT_EQ(RealizePremise(InstanceFromRecord(r, BundledLexicon())), r.premise);
    }
  }
}

TEST(Generate, DeriveOsHardNeedsMetadata) {
  GenerateOptions opt;
  opt.per_pattern = 1;
  auto wogli = GenerateSet(DatasetName::kWogli, BundledLexicon(), opt);
  wogli[0].metadata.reset();
  EXPECT_THROW(DeriveOsHard(wogli, BundledLexicon()), Error);
}

TEST(Generate, WithReplacementDedup) {
  GenerateOptions opt;
  opt.seed = 9;
  opt.per_pattern = 1000;
  opt.with_replacement_dedup = true;
  auto records = GenerateSet(DatasetName::kWogli, BundledLexicon(), opt);
  std::set<std::string> premises;
  for (const auto& r : records) premises.insert(r.premise);
  EXPECT_EQ(premises.size() * 2, records.size());
  EXPECT_LT(premises.size(), 17000u);
  EXPECT_GT(premises.size(), 16800u);
}

TEST(Generate, PSubjectNameObjects) {
  GenerateOptions opt;
  opt.seed = 1;
  opt.per_pattern = 50;
  opt.keep_name_objects = true;
  auto records = GenerateSet(DatasetName::kPSubject, BundledLexicon(), opt);
  bool saw_three = false;
  for (const auto& r : records) saw_three |= oracle::Words(r.premise).size() == 3;
  EXPECT_TRUE(saw_three);
}

// Distinct premise strings of a pattern by enumeration with the hand tables.
std::size_t EnumerateDistinct(const Pattern& p, const Lexicon& lex) {
  auto nps = [&](NpClass c, const std::string& cs) {
    std::vector<std::pair<std::string, std::string>> out;  // (lemma, rendering)
    auto names = [&](const std::vector<NounEntry>& v) {
      for (const auto& n : v) out.push_back({n.lemma, n.lemma});
    };
    auto common = [&](const std::vector<NounEntry>& v, bool pl) {
      for (const auto& n : v) {
        for (const char* a : {"DEF", "INDEF", "DEM"}) {
          if (pl && std::string(a) == "INDEF") continue;
          char g = n.gender == Gender::kMasc ? 'M' : 'F';
          out.push_back({n.lemma, oracle::Article(a, g, pl, cs) + " " + oracle::NounForm(n, pl, cs)});
        }
      }
    };
    switch (c) {
      case NpClass::kProper: names(lex.masc_proper); names(lex.fem_proper); break;
      case NpClass::kProperMasc: names(lex.masc_proper); break;
      case NpClass::kProperFem: names(lex.fem_proper); break;
      case NpClass::kSingMasc: common(lex.masc_common, false); break;
      case NpClass::kSingFem: common(lex.fem_common, false); break;
      case NpClass::kPluralMasc: common(lex.masc_common, true); break;
      case NpClass::kPluralFem: common(lex.fem_common, true); break;
    }
    return out;
  };
  std::string oc = p.government == Government::kAccusative ? "ACC" : "DAT";
  auto subjects = nps(p.subject, "NOM");
  auto objects = nps(p.object, oc);
  std::unordered_set<std::string> seen;
  for (const auto& v : lex.Verbs(p.government)) {
    std::vector<std::string> tails{""};
    if (p.government == Government::kDitransitive) {
      tails.clear();
      for (const auto& t : lex.thing_nouns) {
        if (v.category && t.compatible_categories.count(*v.category)) tails.push_back(" " + t.lemma);
      }
    }
    for (const auto& [sl, s] : subjects) {
      const std::string& form = ClassNumber(p.subject) == Number::kPl ? v.form_3pl : v.form_3sg;
      for (const auto& [ol, o] : objects) {
        if (sl == ol) continue;
        for (const auto& t : tails) seen.insert(s + " " + form + " " + o + t);
      }
    }
  }
  return seen.size();
}

TEST(LexicalizationCount, MatchesEnumeration) {
  const Lexicon& toy = Toy();
  for (Government g : {Government::kDative, Government::kDitransitive}) {
    for (const auto& p : ExtendedPatterns(g)) EXPECT_EQ(LexicalizationCount(p, toy), EnumerateDistinct(p, toy)) << p.Name();
  }
  for (const auto& p : WogliPatterns()) {
    EXPECT_EQ(LexicalizationCount(p, toy), EnumerateDistinct(p, toy)) << p.Name();
  }
  auto p = ParsePattern("pnoun_v_plural_fem", Government::kAccusative);
  EXPECT_EQ(LexicalizationCount(p, BundledLexicon()), EnumerateDistinct(p, BundledLexicon()));
}

TEST(Generate, ExhaustsExactlyAtLexicalizationCount) {
  const Lexicon& toy = Toy();
  auto p = ParsePattern("pnoun_v_sing_masc", Government::kAccusative);
  std::uint64_t n = LexicalizationCount(p, toy);
  ASSERT_EQ(n, 4u * 27u * 3u);
  GenerateOptions opt;
  opt.seed = 1;
  opt.per_pattern = n;
  std::vector<Pattern> one{p};
  auto all = SamplePremises(one, toy, opt);
  std::set<std::string> premises;
  for (const auto& i : all) premises.insert(RealizePremise(i));
  EXPECT_EQ(premises.size(), n);
  opt.per_pattern = n + 1;
  try {
    SamplePremises(one, toy, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExhausted);
  }
  opt.per_pattern = 1000;
  EXPECT_THROW(GenerateSet(DatasetName::kWogli, toy, opt), Error);
  opt.per_pattern = 0;
  EXPECT_THROW(GenerateSet(DatasetName::kWogli, toy, opt), Error);
}

TEST(Generate, ProperNameGenderIsBalanced) {
  GenerateOptions opt;
  opt.seed = 21;
  opt.per_pattern = 1000;
  std::vector<Pattern> one{ParsePattern("pnoun_v_sing_masc", Government::kAccusative)};
  auto all = SamplePremises(one, BundledLexicon(), opt);
  std::size_t fem = 0;
  for (const auto& i : all) fem += i.subject.gender == Gender::kFem;
  EXPECT_GT(fem, 420u);
  EXPECT_LT(fem, 580u);
}

TEST(DatasetName, Names) {
  for (DatasetName n : {DatasetName::kWogli, DatasetName::kPSubject, DatasetName::kDative, DatasetName::kDitransitive,
                        DatasetName::kOsHard}) {
    EXPECT_EQ(ParseDatasetName(ToString(n)), n);
  }
  EXPECT_EQ(ParseDatasetName("wogli-x"), std::nullopt);
}

}  // namespace
}  // namespace wogli
