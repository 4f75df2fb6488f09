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

#include "wogli/lexicon.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "wogli/error.h"

namespace wogli {
namespace {

constexpr char kHeader[] = "class\tlemma\tform2\tform3\tattrs\n";

bool Contains(const std::vector<std::string>& issues, const std::string& needle) {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

TEST(LoadLexicon, SingleVerbRow) {
  Lexicon lex = LoadLexicon(std::string(kHeader) + "verb\twarnen\twarnt\twarnen\tACC\t-\tfalse\n");
  ASSERT_EQ(lex.verbs_acc.size(), 1u);
  EXPECT_EQ(lex.verbs_acc[0].form_3sg, "warnt");
  EXPECT_EQ(lex.verbs_acc[0].form_3pl, "warnen");
  EXPECT_FALSE(lex.verbs_acc[0].symmetric);
  EXPECT_TRUE(lex.verbs_dat.empty());
}

TEST(LoadLexicon, EmptyDocumentIsEmptyLexicon) {
  EXPECT_EQ(LoadLexicon(""), Lexicon{});
  EXPECT_EQ(LoadLexicon(kHeader), Lexicon{});
  // The empty container fails the count checks later.
  EXPECT_FALSE(ValidateLexicon(Lexicon{}, ValidationProfile::kFull).empty());
}

TEST(LoadLexicon, DitransitiveWithoutCategoryIsParseError) {
  try {
    LoadLexicon(std::string(kHeader) + "verb\tgeben\tgibt\tgeben\tDITRANSITIVE\t-\tfalse\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("category"), std::string::npos) << e.what();
  }
}

TEST(LoadLexicon, DuplicateLemmaInOneInventory) {
  std::string text = std::string(kHeader) + "verb\twarnen\twarnt\twarnen\tACC\t-\tfalse\n" +
                     "verb\twarnen\twarnt\twarnen\tACC\t-\tfalse\n";
  try {
    LoadLexicon(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicate);
  }
}

TEST(LoadLexicon, BadFieldsNameTheirLocation) {
  try {
    LoadLexicon(std::string(kHeader) + "# c\nnoun\tArzt\tÄrzte\tNEUTRAL\tCOMMON\tstrong\ttrue\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(LoadLexicon(std::string(kHeader) + "adverb\tschnell\n"), Error);
  EXPECT_THROW(LoadLexicon("{\"verbs_acc\": 3}"), Error);
}

TEST(ValidateLexicon, BundledFullLexiconIsClean) {
  auto issues = ValidateLexicon(BundledLexicon(), ValidationProfile::kFull);
  EXPECT_TRUE(issues.empty()) << issues.front();
}

TEST(ValidateLexicon, BundledCounts) {
  const Lexicon& lex = BundledLexicon();
  EXPECT_EQ(lex.verbs_acc.size(), 50u);
  EXPECT_EQ(lex.verbs_dat.size(), 22u);
  EXPECT_EQ(lex.verbs_ditrans.size(), 21u);
  EXPECT_EQ(lex.masc_common.size(), 38u);
  EXPECT_EQ(lex.fem_common.size(), 24u);
  EXPECT_EQ(lex.masc_proper.size(), 41u);
  EXPECT_EQ(lex.fem_proper.size(), 41u);
  EXPECT_EQ(lex.thing_nouns.size(), 54u);
  auto weak = std::count_if(lex.masc_common.begin(), lex.masc_common.end(),
                            [](const NounEntry& n) { return n.weak_declension; });
  EXPECT_EQ(weak, 6);
  // The six weak nouns named in the source.
  for (const char* lemma : {"Kunde", "Student", "Journalist", "Patient", "Soldat", "Zeuge"}) {
    const NounEntry* n = lex.FindNoun(lemma, NounKind::kCommon, Gender::kMasc);
    ASSERT_NE(n, nullptr) << lemma;
    EXPECT_TRUE(n->weak_declension) << lemma;
  }
}

TEST(ValidateLexicon, SymmetricVerbReported) {
  Lexicon lex = BundledLexicon();
  lex.verbs_acc[3].symmetric = true;
  auto issues = ValidateLexicon(lex, ValidationProfile::kToy);
  EXPECT_TRUE(Contains(issues, "symmetric verb forbidden")) << issues.size();
}

TEST(ValidateLexicon, FortyNineAccusativeVerbs) {
  Lexicon lex = BundledLexicon();
  lex.verbs_acc.pop_back();
  auto issues = ValidateLexicon(lex, ValidationProfile::kFull);
  EXPECT_TRUE(Contains(issues, "expected 50 accusative verbs, found 49"));
  EXPECT_TRUE(ValidateLexicon(lex, ValidationProfile::kToy).empty());
}

TEST(ValidateLexicon, StructuralInvariants) {
  Lexicon lex = BundledLexicon();
  lex.fem_common[0].weak_declension = true;
  lex.masc_proper[0].plural_nom = "Walters";
  lex.verbs_dat[0].form_3pl = lex.verbs_dat[0].form_3sg;
  lex.thing_nouns[0].compatible_categories.clear();
  lex.verbs_dat.push_back(lex.verbs_acc[0]);
  auto issues = ValidateLexicon(lex, ValidationProfile::kToy);
  EXPECT_TRUE(Contains(issues, "weak declension"));
  EXPECT_TRUE(Contains(issues, "must not have a plural"));
  EXPECT_TRUE(Contains(issues, "coincide"));
  EXPECT_TRUE(Contains(issues, "no compatible category"));
  EXPECT_TRUE(Contains(issues, "two government classes"));
}

TEST(ValidateLexicon, IsPure) {
  Lexicon lex = BundledLexicon();
  lex.verbs_acc.pop_back();
  EXPECT_EQ(ValidateLexicon(lex, ValidationProfile::kFull), ValidateLexicon(lex, ValidationProfile::kFull));
}

TEST(ValidateLexicon, ToyLexiconPassesToyProfile) {
  Lexicon toy = LoadLexiconFile(WOGLI_SOURCE_DIR "/data/lexicon/wogli_toy.tsv");
  EXPECT_TRUE(ValidateLexicon(toy, ValidationProfile::kToy).empty());
  EXPECT_FALSE(ValidateLexicon(toy, ValidationProfile::kFull).empty());
}

TEST(SurfaceFormCount, Bundled181) { EXPECT_EQ(SurfaceFormCount(BundledLexicon()), 181u); }

TEST(SurfaceFormCount, SingleProperName) {
  Lexicon lex;
  lex.fem_proper.push_back(NounEntry{"Maria", Gender::kFem, "", false, NounKind::kProper, true});
  EXPECT_EQ(SurfaceFormCount(lex), 1u);
}

TEST(SurfaceFormCount, WeakNounCollapses) {
  // Kunde (nom sg), Kunden (acc sg, nom pl, acc pl).
  Lexicon lex;
  lex.masc_common.push_back(NounEntry{"Kunde", Gender::kMasc, "Kunden", true, NounKind::kCommon, true});
  EXPECT_EQ(SurfaceFormCount(lex), 2u);
  EXPECT_EQ(NounSurfaceForms(lex), (std::set<std::string>{"Kunde", "Kunden"}));
}

TEST(SurfaceFormCount, MatchesHandEnumeration) {
  // Independent count: every common noun contributes lemma, plural and the
  // weak accusative; proper names contribute themselves.
  std::set<std::string> forms;
  const Lexicon& lex = BundledLexicon();
  for (const auto* inv : {&lex.masc_common, &lex.fem_common}) {
    for (const auto& n : *inv) {
      forms.insert(n.lemma);
      forms.insert(n.plural_nom);
      if (n.weak_declension) forms.insert(n.lemma + (n.lemma.back() == 'e' ? "n" : "en"));
    }
  }
  for (const auto* inv : {&lex.masc_proper, &lex.fem_proper}) {
    for (const auto& n : *inv) forms.insert(n.lemma);
  }
  EXPECT_EQ(forms, NounSurfaceForms(lex));
}

TEST(SerializeLexicon, RoundTripBothEncodings) {
  const Lexicon& lex = BundledLexicon();
  for (auto enc : {LexiconEncoding::kTsv, LexiconEncoding::kJson}) {
    Lexicon back = LoadLexicon(SerializeLexicon(lex, enc));
    EXPECT_EQ(back, lex);
    EXPECT_EQ(SerializeLexicon(back, enc), SerializeLexicon(lex, enc));
  }
}

TEST(SerializeLexicon, RoundTripToy) {
  Lexicon toy = LoadLexiconFile(WOGLI_SOURCE_DIR "/data/lexicon/wogli_toy.tsv");
  EXPECT_EQ(LoadLexicon(SerializeLexicon(toy, LexiconEncoding::kJson)), toy);
  EXPECT_EQ(LoadLexicon(SerializeLexicon(toy, LexiconEncoding::kTsv)), toy);
}

TEST(Lexicon, NoLemmaInTwoGovernmentClasses) {
  const Lexicon& lex = BundledLexicon();
  std::map<std::string, int> seen;
  for (const auto* inv : {&lex.verbs_acc, &lex.verbs_dat, &lex.verbs_ditrans}) {
    for (const auto& v : *inv) ++seen[v.lemma];
  }
  for (const auto& [lemma, n] : seen) EXPECT_EQ(n, 1) << lemma;
}

TEST(Lexicon, LoadFileErrors) {
  try {
    LoadLexiconFile("/nonexistent/lexicon.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace wogli
