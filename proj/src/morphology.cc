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

#include "wogli/morphology.h"

#include <array>

#include "wogli/error.h"

namespace wogli {
namespace {

// [kind][gender-or-plural][case]; row 3 is the plural, shared by all genders.
using Paradigm = std::array<std::array<std::string_view, 3>, 4>;

constexpr Paradigm kDefinite{{
    {"der", "den", "dem"},
    {"die", "die", "der"},
    {"das", "das", "dem"},
    {"die", "die", "den"},
}};

constexpr Paradigm kIndefinite{{
    {"ein", "einen", "einem"},
    {"eine", "eine", "einer"},
    {"ein", "ein", "einem"},
    {"", "", ""},
}};

constexpr Paradigm kDemonstrative{{
    {"dieser", "diesen", "diesem"},
    {"diese", "diese", "dieser"},
    {"dieses", "dieses", "diesem"},
    {"diese", "diese", "diesen"},
}};

std::size_t Row(Gender g, Number n) {
  if (n == Number::kPl) return 3;
  switch (g) {
    case Gender::kMasc: return 0;
    case Gender::kFem: return 1;
    case Gender::kNeut: return 2;
  }
  return 0;
}

std::size_t Col(Case c) { return static_cast<std::size_t>(c); }

bool EndsWith(std::string_view s, char c) { return !s.empty() && s.back() == c; }

std::string DativePlural(const std::string& plural) {
  return EndsWith(plural, 'n') ? plural : plural + "n";
}

}  // namespace

bool NpSpec::IsProper() const {
  const auto* noun = std::get_if<NounEntry>(&head);
  return noun != nullptr && noun->kind == NounKind::kProper;
}

std::string NpSpec::Lemma() const {
  if (const auto* noun = std::get_if<NounEntry>(&head)) return noun->lemma;
  if (const auto* thing = std::get_if<ThingNounEntry>(&head)) return thing->lemma;
  return InflectPronoun(gender, number, Case::kNom);
}

NpSpec CommonNp(const NounEntry& noun, Number number, ArticleKind article) {
  return NpSpec{noun, noun.gender, number, article};
}

NpSpec ProperNp(const NounEntry& name) {
  return NpSpec{name, name.gender, Number::kSg, ArticleKind::kNone};
}

NpSpec PronounNp(Gender gender, Number number) {
  return NpSpec{PronounHead{}, gender, number, ArticleKind::kNone};
}

NpSpec ThingNp(const ThingNounEntry& thing, ArticleKind article) {
  return NpSpec{thing, thing.gender, thing.number, article};
}

void CheckNpSpec(const NpSpec& spec) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (spec.IsPronoun()) {
    if (spec.article != ArticleKind::kNone) fail("pronoun noun phrases take no article");
    if (spec.gender == Gender::kNeut) fail("neuter pronouns are not supported");
    return;
  }
  if (spec.article == ArticleKind::kIndef && spec.number == Number::kPl)
    fail("indefinite article has no plural");
  if (const auto* noun = std::get_if<NounEntry>(&spec.head)) {
    if (noun->gender != spec.gender) fail("gender of " + noun->lemma + " does not match the noun phrase");
    if (noun->kind == NounKind::kProper) {
      if (spec.article != ArticleKind::kNone) fail("proper name " + noun->lemma + " takes no article");
      if (spec.number != Number::kSg) fail("proper name " + noun->lemma + " is singular only");
    } else if (spec.article == ArticleKind::kNone) {
      fail("common noun " + noun->lemma + " needs an article");
    }
    return;
  }
  const auto& thing = std::get<ThingNounEntry>(spec.head);
  if (thing.gender != spec.gender || thing.number != spec.number)
    fail("gender or number of " + thing.lemma + " does not match the noun phrase");
  if (spec.article == ArticleKind::kNone) fail("thing noun " + thing.lemma + " needs an article");
}

std::optional<std::string> InflectArticle(ArticleKind kind, Gender gender, Number number, Case c) {
  const Paradigm* table = nullptr;
  switch (kind) {
    case ArticleKind::kNone: return std::nullopt;
    case ArticleKind::kDef: table = &kDefinite; break;
    case ArticleKind::kIndef:
      if (number == Number::kPl)
        throw Error(ErrorCode::kUnrepresentable, "indefinite article has no plural form");
      table = &kIndefinite;
      break;
    case ArticleKind::kDem: table = &kDemonstrative; break;
  }
  return std::string((*table)[Row(gender, number)][Col(c)]);
}

std::string InflectNoun(const NounEntry& noun, Number number, Case c) {
  if (noun.kind == NounKind::kProper) {
    if (number != Number::kSg)
      throw Error(ErrorCode::kInvalidArgument, "proper name " + noun.lemma + " has no plural");
    return noun.lemma;
  }
  if (number == Number::kPl) {
    return c == Case::kDat ? DativePlural(noun.plural_nom) : noun.plural_nom;
  }
  if (noun.weak_declension && noun.gender == Gender::kMasc && c != Case::kNom) {
    return noun.lemma + (EndsWith(noun.lemma, 'e') ? "n" : "en");
  }
  return noun.lemma;
}

std::string InflectPronoun(Gender gender, Number number, Case c) {
  if (c == Case::kDat)
    throw Error(ErrorCode::kUnrepresentable, "dative personal pronouns are not supported");
  if (gender == Gender::kNeut)
    throw Error(ErrorCode::kUnrepresentable, "neuter personal pronouns are not supported");
  if (number == Number::kSg && gender == Gender::kMasc) return c == Case::kNom ? "er" : "ihn";
  return "sie";
}

const std::string& AgreeVerb(const VerbEntry& verb, Number subject_number) {
  return subject_number == Number::kSg ? verb.form_3sg : verb.form_3pl;
}

std::vector<std::string> RenderNp(const NpSpec& spec, Case c) {
  CheckNpSpec(spec);
  if (spec.IsPronoun()) return {InflectPronoun(spec.gender, spec.number, c)};
  std::vector<std::string> tokens;
  if (auto article = InflectArticle(spec.article, spec.gender, spec.number, c)) {
    tokens.push_back(std::move(*article));
  }
  if (const auto* noun = std::get_if<NounEntry>(&spec.head)) {
    tokens.push_back(InflectNoun(*noun, spec.number, c));
  } else {
    const auto& thing = std::get<ThingNounEntry>(spec.head);
    tokens.push_back(thing.number == Number::kPl && c == Case::kDat ? DativePlural(thing.lemma)
                                                                      : thing.lemma);
  }
  return tokens;
}

std::vector<ArticleCell> ArticleTable() {
  std::vector<ArticleCell> cells;
  for (ArticleKind kind : {ArticleKind::kDef, ArticleKind::kIndef, ArticleKind::kDem}) {
    for (Number number : {Number::kSg, Number::kPl}) {
      if (kind == ArticleKind::kIndef && number == Number::kPl) continue;
      for (Gender gender : {Gender::kMasc, Gender::kFem, Gender::kNeut}) {
        for (Case c : {Case::kNom, Case::kAcc, Case::kDat}) {
          cells.push_back({kind, gender, number, c, *InflectArticle(kind, gender, number, c)});
        }
      }
    }
  }
  return cells;
}

std::vector<PronounCell> PronounTable() {
  std::vector<PronounCell> cells;
  for (Number number : {Number::kSg, Number::kPl}) {
    for (Gender gender : {Gender::kMasc, Gender::kFem}) {
      for (Case c : {Case::kNom, Case::kAcc}) {
        cells.push_back({gender, number, c, InflectPronoun(gender, number, c)});
      }
    }
  }
  return cells;
}

}  // namespace wogli
