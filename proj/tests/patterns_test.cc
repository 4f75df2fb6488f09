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

#include "wogli/patterns.h"

#include <gtest/gtest.h>

#include <set>

#include "oracle.h"
#include "wogli/error.h"

namespace wogli {

void PrintTo(Government g, std::ostream* os) { *os << ToString(g); }

namespace {

// Brute-force ambiguity: render H1 and H2 for every noun, article and verb
// with the hand tables and look for a lexicalization where they differ.
struct Np {
  const NounEntry* noun;
  std::string article;  // "" for names
  bool plural;
};

std::vector<Np> Enumerate(NpClass c, const Lexicon& lex) {
  std::vector<Np> out;
  auto names = [&](const std::vector<NounEntry>& v) {
    for (const auto& n : v) out.push_back({&n, "", false});
  };
  auto common = [&](const std::vector<NounEntry>& v, bool plural) {
    for (const auto& n : v) {
      for (const char* a : {"DEF", "INDEF", "DEM"}) {
        if (plural && std::string(a) == "INDEF") continue;
        out.push_back({&n, a, plural});
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
}

std::string Render(const Np& np, const std::string& c) {
  std::string noun = oracle::NounForm(*np.noun, np.plural, c);
  if (np.article.empty()) return noun;
  char g = np.noun->gender == Gender::kMasc ? 'M' : 'F';
  return oracle::Article(np.article, g, np.plural, c) + " " + noun;
}

bool BruteForceAmbiguous(const Pattern& p, const Lexicon& lex) {
  std::string oc = p.government == Government::kAccusative ? "ACC" : "DAT";
  auto subjects = Enumerate(p.subject, lex);
  auto objects = Enumerate(p.object, lex);
  for (const auto& v : lex.Verbs(p.government)) {
    for (const auto& s : subjects) {
      for (const auto& o : objects) {
        if (s.noun->lemma == o.noun->lemma) continue;
        const std::string& v_obj = o.plural ? v.form_3pl : v.form_3sg;
        const std::string& v_subj = s.plural ? v.form_3pl : v.form_3sg;
        std::string h1 = Render(o, "NOM") + " " + v_obj + " " + Render(s, oc);
        std::string h2 = Render(o, oc) + " " + v_subj + " " + Render(s, "NOM");
        if (oracle::Lower(h1) != oracle::Lower(h2)) return false;
      }
    }
  }
  return true;
}

std::vector<Pattern> AllClassPairs(Government g) {
  const NpClass classes[] = {NpClass::kProper,   NpClass::kProperMasc, NpClass::kProperFem, NpClass::kSingMasc,
                             NpClass::kSingFem,  NpClass::kPluralMasc, NpClass::kPluralFem};
  std::vector<Pattern> out;
  for (auto s : classes) {
    for (auto o : classes) out.push_back(Pattern{s, o, g});
  }
  return out;
}

TEST(Patterns, InventorySizesAndOrder) {
  auto w = WogliPatterns();
  ASSERT_EQ(w.size(), 17u);
  EXPECT_EQ(w.front().Name(), "pnoun_v_sing_masc");
  EXPECT_EQ(w.back().Name(), "sing_fem_v_plural_masc");
  EXPECT_EQ(ExtendedPatterns(Government::kDative).size(), 24u);
  EXPECT_EQ(ExtendedPatterns(Government::kDitransitive).size(), 24u);
  EXPECT_EQ(ExcludedPatterns().size(), 8u);
  EXPECT_THROW(ExtendedPatterns(Government::kAccusative), Error);
}

TEST(Patterns, NamesRoundTrip) {
  for (const auto& p : AllClassPairs(Government::kDative)) {
    EXPECT_EQ(ParsePattern(p.Name(), Government::kDative), p);
  }
  EXPECT_THROW(ParsePattern("pnoun_sing_masc", Government::kAccusative), Error);
  EXPECT_THROW(ParsePattern("pnoun_v_dual", Government::kAccusative), Error);
}

TEST(Patterns, WogliAndExcludedPartitionCandidates) {
  std::set<std::string> wogli, excluded;
  for (const auto& p : WogliPatterns()) wogli.insert(p.Name());
  for (const auto& p : ExcludedPatterns()) excluded.insert(p.Name());
  EXPECT_EQ(wogli.size(), 17u);
  for (const auto& n : excluded) EXPECT_EQ(wogli.count(n), 0u) << n;
}

TEST(Patterns, ExtendedContainsReGovernedWogli) {
  for (Government g : {Government::kDative, Government::kDitransitive}) {
    auto ext = ExtendedPatterns(g);
    for (auto p : WogliPatterns()) {
      p.government = g;
      EXPECT_NE(std::find(ext.begin(), ext.end(), p), ext.end()) << p.Name();
    }
  }
}

TEST(IsAmbiguous, CitedCases) {
  const Lexicon& lex = BundledLexicon();
  EXPECT_FALSE(IsAmbiguous(ParsePattern("sing_fem_v_sing_fem", Government::kDative), lex));
  EXPECT_TRUE(IsAmbiguous(ParsePattern("pnoun_v_pnoun", Government::kAccusative), lex));
  EXPECT_FALSE(IsAmbiguous(ParsePattern("sing_masc_v_sing_masc", Government::kAccusative), lex));
  // Names carry no case marking under dative government either.
  EXPECT_TRUE(IsAmbiguous(ParsePattern("pnoun_v_pnoun", Government::kDative), lex));
}

TEST(IsAmbiguous, WogliNeverAmbiguousExcludedAlways) {
  const Lexicon& lex = BundledLexicon();
  for (const auto& p : WogliPatterns()) EXPECT_FALSE(IsAmbiguous(p, lex)) << p.Name();
  for (const auto& p : ExcludedPatterns()) EXPECT_TRUE(IsAmbiguous(p, lex)) << p.Name();
  for (Government g : {Government::kDative, Government::kDitransitive}) {
    for (const auto& p : ExtendedPatterns(g)) EXPECT_FALSE(IsAmbiguous(p, lex)) << p.Name();
  }
}

class AmbiguityOracle : public ::testing::TestWithParam<Government> {};

TEST_P(AmbiguityOracle, AgreesWithBruteForceAndClosedForm) {
  const Lexicon& lex = BundledLexicon();
  for (const auto& p : AllClassPairs(GetParam())) {
    if (p.government == Government::kDitransitive) {
      // The direct object follows in both hypotheses and cannot matter.
      Pattern dat = p;
      dat.government = Government::kDative;
      EXPECT_EQ(IsAmbiguous(p, lex), BruteForceAmbiguous(dat, lex)) << p.Name();
    } else {
      bool brute = BruteForceAmbiguous(p, lex);
      EXPECT_EQ(IsAmbiguous(p, lex), brute) << p.Name();
      if (p.government == Government::kAccusative) EXPECT_EQ(IsAmbiguousClosedForm(p), brute) << p.Name();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllGovernments, AmbiguityOracle,
                         ::testing::Values(Government::kAccusative, Government::kDative,
                                           Government::kDitransitive),
                         [](const auto& info) { return std::string(ToString(info.param)); });

TEST(ClassifyNumber, Groups) {
  EXPECT_EQ(ClassifyNumber(ParsePattern("pnoun_v_sing_masc", Government::kAccusative)), NumberClass::kAllSingular);
  EXPECT_EQ(ClassifyNumber(ParsePattern("plural_fem_v_pnoun", Government::kAccusative)),
            NumberClass::kSingularPlural);
  int singular = 0;
  for (const auto& p : WogliPatterns()) singular += ClassifyNumber(p) == NumberClass::kAllSingular;
  // 5 all-singular, 12 with a plural argument.
  EXPECT_EQ(singular, 5);
  EXPECT_EQ(ToString(NumberClass::kSingularPlural), "singular-plural");
}

TEST(ExportPatterns, OneLinePerPattern) {
  std::string text = ExportPatterns(WogliPatterns());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 17);
  EXPECT_EQ(text.substr(0, text.find('\n')), "pnoun_v_sing_masc\tACC");
}

}  // namespace
}  // namespace wogli
