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

#include "wogli/grammar.h"

#include <array>
#include <utility>

namespace wogli {
namespace {

template <typename E, std::size_t N>
std::optional<E> Lookup(const std::array<std::pair<std::string_view, E>, N>& table,
                        std::string_view s) {
  for (const auto& [name, value] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(Gender g) {
  switch (g) {
    case Gender::kMasc: return "MASC";
    case Gender::kFem: return "FEM";
    case Gender::kNeut: return "NEUT";
  }
  return "?";
}

std::string_view ToString(Number n) { return n == Number::kSg ? "SG" : "PL"; }

std::string_view ToString(Case c) {
  switch (c) {
    case Case::kNom: return "NOM";
    case Case::kAcc: return "ACC";
    case Case::kDat: return "DAT";
  }
  return "?";
}

std::string_view ToString(Government g) {
  switch (g) {
    case Government::kAccusative: return "ACC";
    case Government::kDative: return "DAT";
    case Government::kDitransitive: return "DITRANSITIVE";
  }
  return "?";
}

std::string_view ToString(SemanticCategory c) {
  switch (c) {
    case SemanticCategory::kGiving: return "giving";
    case SemanticCategory::kTaking: return "taking";
    case SemanticCategory::kSending: return "sending";
    case SemanticCategory::kCommunication: return "communication";
    case SemanticCategory::kSecret: return "secret";
  }
  return "?";
}

std::string_view ToString(NounKind k) { return k == NounKind::kCommon ? "COMMON" : "PROPER"; }

std::string_view ToString(ArticleKind k) {
  switch (k) {
    case ArticleKind::kDef: return "DEF";
    case ArticleKind::kIndef: return "INDEF";
    case ArticleKind::kDem: return "DEM";
    case ArticleKind::kNone: return "NONE";
  }
  return "?";
}

std::optional<Gender> ParseGender(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, Gender>, 3> kTable{{
      {"MASC", Gender::kMasc}, {"FEM", Gender::kFem}, {"NEUT", Gender::kNeut}}};
  return Lookup(kTable, s);
}

std::optional<Number> ParseNumber(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, Number>, 2> kTable{{
      {"SG", Number::kSg}, {"PL", Number::kPl}}};
  return Lookup(kTable, s);
}

std::optional<Government> ParseGovernment(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, Government>, 5> kTable{{
      {"ACC", Government::kAccusative},
      {"ACCUSATIVE", Government::kAccusative},
      {"DAT", Government::kDative},
      {"DATIVE", Government::kDative},
      {"DITRANSITIVE", Government::kDitransitive}}};
  return Lookup(kTable, s);
}

std::optional<SemanticCategory> ParseSemanticCategory(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, SemanticCategory>, 5> kTable{{
      {"giving", SemanticCategory::kGiving},
      {"taking", SemanticCategory::kTaking},
      {"sending", SemanticCategory::kSending},
      {"communication", SemanticCategory::kCommunication},
      {"secret", SemanticCategory::kSecret}}};
  return Lookup(kTable, s);
}

std::optional<NounKind> ParseNounKind(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, NounKind>, 2> kTable{{
      {"COMMON", NounKind::kCommon}, {"PROPER", NounKind::kProper}}};
  return Lookup(kTable, s);
}

std::optional<ArticleKind> ParseArticleKind(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, ArticleKind>, 4> kTable{{
      {"DEF", ArticleKind::kDef},
      {"INDEF", ArticleKind::kIndef},
      {"DEM", ArticleKind::kDem},
      {"NONE", ArticleKind::kNone}}};
  return Lookup(kTable, s);
}

}  // namespace wogli
