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

#ifndef WOGLI_PATTERNS_H_
#define WOGLI_PATTERNS_H_

#include <string>
#include <string_view>
#include <vector>

#include "wogli/grammar.h"
#include "wogli/lexicon.h"

namespace wogli {

// Argument slot class. kProper leaves the name's gender to the sampler;
// kProperMasc / kProperFem pin it.
enum class NpClass {
  kProper,
  kProperMasc,
  kProperFem,
  kSingMasc,
  kSingFem,
  kPluralMasc,
  kPluralFem,
};

std::string_view ToString(NpClass c);
bool IsProperClass(NpClass c);
Number ClassNumber(NpClass c);

struct Pattern {
  NpClass subject = NpClass::kSingMasc;
  NpClass object = NpClass::kSingMasc;
  Government government = Government::kAccusative;

  bool operator==(const Pattern&) const = default;

  // "<subject>_v_<object>", e.g. "sing_masc_v_plural_fem".
  std::string Name() const;
};

// Throws Error(kParse) on an unknown name.
Pattern ParsePattern(std::string_view name, Government government);

// The 17 accusative patterns, in canonical order.
std::vector<Pattern> WogliPatterns();
// The 24 patterns available when objects are dative-marked.
std::vector<Pattern> ExtendedPatterns(Government government);
// The 8 accusative patterns dropped for lack of disambiguating morphology.
std::vector<Pattern> ExcludedPatterns();

enum class NumberClass { kAllSingular, kSingularPlural };
std::string_view ToString(NumberClass c);

NumberClass ClassifyNumber(const Pattern& p);

// True iff every lexicalization of `p` renders H1 (swapped roles, canonical
// order) and H2 (same roles, marked order) as the same string. Enumerates
// article kinds over a representative noun set that covers each declension
// behaviour present in `lex`, so it is decision-equivalent to enumerating
// the whole lexicon.
bool IsAmbiguous(const Pattern& p, const Lexicon& lex);

// Closed form of IsAmbiguous for accusative government: equal argument
// numbers and no masculine singular common noun. Always false otherwise.
bool IsAmbiguousClosedForm(const Pattern& p);

// One "name<TAB>GOVERNMENT" line per pattern.
std::string ExportPatterns(const std::vector<Pattern>& patterns);

}  // namespace wogli

#endif  // WOGLI_PATTERNS_H_
