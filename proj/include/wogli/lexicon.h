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

#ifndef WOGLI_LEXICON_H_
#define WOGLI_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wogli/grammar.h"

namespace wogli {

struct VerbEntry {
  std::string lemma;
  std::string form_3sg;  // present tense, 3rd person singular
  std::string form_3pl;  // present tense, 3rd person plural
  Government government = Government::kAccusative;
  std::optional<SemanticCategory> category;  // ditransitive verbs only
  bool symmetric = false;

  bool operator==(const VerbEntry&) const = default;
};

struct NounEntry {
  std::string lemma;  // nominative singular
  Gender gender = Gender::kMasc;
  std::string plural_nom;  // empty for proper names
  bool weak_declension = false;
  NounKind kind = NounKind::kCommon;
  bool human = true;

  bool operator==(const NounEntry&) const = default;
};

// Inanimate direct objects of ditransitive verbs. The lemma is the surface
// form in the entry's number.
struct ThingNounEntry {
  std::string lemma;
  Gender gender = Gender::kNeut;
  Number number = Number::kSg;
  std::set<SemanticCategory> compatible_categories;

  bool operator==(const ThingNounEntry&) const = default;
};

struct Lexicon {
  std::vector<VerbEntry> verbs_acc;
  std::vector<VerbEntry> verbs_dat;
  std::vector<VerbEntry> verbs_ditrans;
  std::vector<NounEntry> masc_common;
  std::vector<NounEntry> fem_common;
  std::vector<NounEntry> masc_proper;
  std::vector<NounEntry> fem_proper;
  std::vector<ThingNounEntry> thing_nouns;

  bool operator==(const Lexicon&) const = default;

  const std::vector<VerbEntry>& Verbs(Government g) const;

  // Lookup by lemma across all inventories; nullptr when absent.
  const VerbEntry* FindVerb(std::string_view lemma) const;
  const NounEntry* FindNoun(std::string_view lemma, NounKind kind, Gender gender) const;
  const ThingNounEntry* FindThing(std::string_view lemma) const;
};

enum class LexiconEncoding { kTsv, kJson };

// Parses either encoding; JSON is detected by a leading '{'. Throws
// Error(kParse) with a line/field location, or Error(kDuplicate) when a
// lemma repeats within one inventory. No validation beyond the row schema.
Lexicon LoadLexicon(std::string_view text);
Lexicon LoadLexiconFile(const std::filesystem::path& path);

std::string SerializeLexicon(const Lexicon& lex, LexiconEncoding encoding = LexiconEncoding::kTsv);

// The lexicon shipped in data/lexicon/wogli_full.tsv, compiled in.
const Lexicon& BundledLexicon();
std::string_view BundledLexiconText();

enum class ValidationProfile { kFull, kToy };

// Every violated invariant as one human-readable line; empty means valid.
std::vector<std::string> ValidateLexicon(const Lexicon& lex, ValidationProfile profile);

// Distinct noun surface forms: common nouns in NOM/ACC x SG/PL plus proper
// names.
std::set<std::string> NounSurfaceForms(const Lexicon& lex);
std::size_t SurfaceFormCount(const Lexicon& lex);

}  // namespace wogli

#endif  // WOGLI_LEXICON_H_
