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

#ifndef WOGLI_RECORD_H_
#define WOGLI_RECORD_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wogli/grammar.h"

namespace wogli {

enum class Label { kEntailed, kNotEntailed };

enum class HypKind { kH1SO, kH2OS, kH3OS, kH1SiO, kH2iOS };

std::string_view ToString(Label l);    // "entailed" / "non-entailed"
std::string_view ToString(HypKind k);  // "H1-SO", "H2-OS", ...
std::optional<Label> ParseLabel(std::string_view s);
std::optional<HypKind> ParseHypKind(std::string_view s);

// ENTAILED iff the hypothesis only reorders the premise.
Label LabelFor(HypKind k);
// H1 kinds swap the arguments in canonical order.
bool IsCanonicalSwap(HypKind k);

enum class ArgumentKind { kCommon, kProper, kPronoun };
std::string_view ToString(ArgumentKind k);
std::optional<ArgumentKind> ParseArgumentKind(std::string_view s);

// One premise argument (subject or object role in the premise).
struct ArgumentInfo {
  std::string lemma;
  ArgumentKind kind = ArgumentKind::kCommon;
  Gender gender = Gender::kMasc;
  Number number = Number::kSg;
  ArticleKind article = ArticleKind::kNone;
  bool definite = true;  // DEF, DEM, proper names and pronouns

  bool operator==(const ArgumentInfo&) const = default;
};

struct PairMetadata {
  ArgumentInfo subject;
  ArgumentInfo object;
  std::string verb_lemma;
  std::string direct_object_lemma;  // empty unless ditransitive
  // Human-noun surface tokens occurring in premise or hypothesis.
  std::vector<std::string> noun_forms;

  bool operator==(const PairMetadata&) const = default;
};

struct PairRecord {
  std::string id;
  std::string subset;
  std::string premise;
  std::string hypothesis;
  Label label = Label::kNotEntailed;
  HypKind hyp_kind = HypKind::kH1SO;
  std::string pattern;
  std::optional<PairMetadata> metadata;  // absent for TSV input

  bool operator==(const PairRecord&) const = default;

  // Ids are "<premise id>-<h1|h2|h3>"; the premise id is everything before
  // the last '-'.
  std::string_view PremiseId() const;
};

}  // namespace wogli

#endif  // WOGLI_RECORD_H_
