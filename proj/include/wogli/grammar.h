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

#ifndef WOGLI_GRAMMAR_H_
#define WOGLI_GRAMMAR_H_

#include <optional>
#include <string_view>

namespace wogli {

enum class Gender { kMasc, kFem, kNeut };
enum class Number { kSg, kPl };
enum class Case { kNom, kAcc, kDat };

// Case(s) a verb assigns to its object(s). Ditransitive verbs take a dative
// indirect object and an accusative direct object.
enum class Government { kAccusative, kDative, kDitransitive };

enum class SemanticCategory { kGiving, kTaking, kSending, kCommunication, kSecret };

enum class NounKind { kCommon, kProper };

enum class ArticleKind { kDef, kIndef, kDem, kNone };

// Canonical spellings used in every file format ("MASC", "SG", "ACC", ...).
std::string_view ToString(Gender g);
std::string_view ToString(Number n);
std::string_view ToString(Case c);
std::string_view ToString(Government g);
std::string_view ToString(SemanticCategory c);
std::string_view ToString(NounKind k);
std::string_view ToString(ArticleKind k);

std::optional<Gender> ParseGender(std::string_view s);
std::optional<Number> ParseNumber(std::string_view s);
std::optional<Government> ParseGovernment(std::string_view s);
std::optional<SemanticCategory> ParseSemanticCategory(std::string_view s);
std::optional<NounKind> ParseNounKind(std::string_view s);
std::optional<ArticleKind> ParseArticleKind(std::string_view s);

// Case of the (indirect) object under a government.
inline Case ObjectCase(Government g) {
  return g == Government::kAccusative ? Case::kAcc : Case::kDat;
}

}  // namespace wogli

#endif  // WOGLI_GRAMMAR_H_
