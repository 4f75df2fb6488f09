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

#ifndef WOGLI_MORPHOLOGY_H_
#define WOGLI_MORPHOLOGY_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wogli/grammar.h"
#include "wogli/lexicon.h"

namespace wogli {

// Head of a personal pronoun noun phrase. Gender and number live on NpSpec.
struct PronounHead {
  bool operator==(const PronounHead&) const = default;
};

using NpHead = std::variant<NounEntry, ThingNounEntry, PronounHead>;

struct NpSpec {
  NpHead head;
  Gender gender = Gender::kMasc;
  Number number = Number::kSg;
  ArticleKind article = ArticleKind::kNone;

  bool operator==(const NpSpec&) const = default;

  bool IsPronoun() const { return std::holds_alternative<PronounHead>(head); }
  bool IsProper() const;
  bool IsThing() const { return std::holds_alternative<ThingNounEntry>(head); }
  // Lemma of the head; pronouns report their nominative form.
  std::string Lemma() const;
};

NpSpec CommonNp(const NounEntry& noun, Number number, ArticleKind article);
NpSpec ProperNp(const NounEntry& name);
NpSpec PronounNp(Gender gender, Number number);
NpSpec ThingNp(const ThingNounEntry& thing, ArticleKind article = ArticleKind::kDef);

// Throws Error(kInvalidArgument) when an NpSpec breaks its invariants.
void CheckNpSpec(const NpSpec& spec);

// Definite article, indefinite article and demonstrative. Returns nullopt
// for ArticleKind::kNone; throws Error(kUnrepresentable) for INDEF plural.
std::optional<std::string> InflectArticle(ArticleKind kind, Gender gender, Number number,
                                          Case c);

std::string InflectNoun(const NounEntry& noun, Number number, Case c);

// Third person personal pronoun in NOM or ACC. DAT throws
// Error(kUnrepresentable).
std::string InflectPronoun(Gender gender, Number number, Case c);

const std::string& AgreeVerb(const VerbEntry& verb, Number subject_number);

// Lowercase tokens except nouns and names, which keep their capital.
std::vector<std::string> RenderNp(const NpSpec& spec, Case c);

struct ArticleCell {
  ArticleKind kind;
  Gender gender;
  Number number;
  Case grammatical_case;
  std::string form;
};

struct PronounCell {
  Gender gender;
  Number number;
  Case grammatical_case;
  std::string form;
};

// The full paradigms as data. Plural rows are listed once with kMasc and
// once with kFem/kNeut since plural forms do not depend on gender.
std::vector<ArticleCell> ArticleTable();
std::vector<PronounCell> PronounTable();

}  // namespace wogli

#endif  // WOGLI_MORPHOLOGY_H_
