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

#include <map>
#include <sstream>
#include <tuple>

#include "wogli/error.h"
#include "wogli/generator.h"

namespace wogli {
namespace {

constexpr NpClass kAllClasses[] = {NpClass::kProper,    NpClass::kProperMasc, NpClass::kProperFem,
                                   NpClass::kSingMasc,  NpClass::kSingFem,    NpClass::kPluralMasc,
                                   NpClass::kPluralFem};

std::vector<Pattern> FromNames(std::initializer_list<std::string_view> names, Government g) {
  std::vector<Pattern> out;
  out.reserve(names.size());
  for (auto name : names) out.push_back(ParsePattern(name, g));
  return out;
}

// Nouns whose inflection behaves identically render identically up to the
// lemma, so two nouns per behaviour cover every surface collision.
std::vector<const NounEntry*> Representatives(const std::vector<NounEntry>& nouns) {
  std::map<std::tuple<bool, bool, bool, bool>, int> taken;
  std::vector<const NounEntry*> out;
  for (const auto& n : nouns) {
    auto signature = std::make_tuple(n.weak_declension, !n.lemma.empty() && n.lemma.back() == 'e',
                                     !n.plural_nom.empty() && n.plural_nom.back() == 'n',
                                     n.plural_nom == n.lemma);
    if (taken[signature]++ < 2) out.push_back(&n);
  }
  return out;
}

std::vector<NpSpec> RepresentativeNps(NpClass c, const Lexicon& lex) {
  std::vector<NpSpec> out;
  auto add_names = [&](const std::vector<NounEntry>& names) {
    for (std::size_t i = 0; i < names.size() && i < 2; ++i) out.push_back(ProperNp(names[i]));
  };
  auto add_common = [&](const std::vector<NounEntry>& nouns, Number number) {
    for (const NounEntry* n : Representatives(nouns)) {
      for (ArticleKind a : {ArticleKind::kDef, ArticleKind::kIndef, ArticleKind::kDem}) {
        if (a == ArticleKind::kIndef && number == Number::kPl) continue;
        out.push_back(CommonNp(*n, number, a));
      }
    }
  };
  switch (c) {
    case NpClass::kProper:
      add_names(lex.masc_proper);
      add_names(lex.fem_proper);
      break;
    case NpClass::kProperMasc: add_names(lex.masc_proper); break;
    case NpClass::kProperFem: add_names(lex.fem_proper); break;
    case NpClass::kSingMasc: add_common(lex.masc_common, Number::kSg); break;
    case NpClass::kSingFem: add_common(lex.fem_common, Number::kSg); break;
    case NpClass::kPluralMasc: add_common(lex.masc_common, Number::kPl); break;
    case NpClass::kPluralFem: add_common(lex.fem_common, Number::kPl); break;
  }
  return out;
}

}  // namespace

std::string_view ToString(NpClass c) {
  switch (c) {
    case NpClass::kProper: return "pnoun";
    case NpClass::kProperMasc: return "pnoun_masc";
    case NpClass::kProperFem: return "pnoun_fem";
    case NpClass::kSingMasc: return "sing_masc";
    case NpClass::kSingFem: return "sing_fem";
    case NpClass::kPluralMasc: return "plural_masc";
    case NpClass::kPluralFem: return "plural_fem";
  }
  return "?";
}

bool IsProperClass(NpClass c) {
  return c == NpClass::kProper || c == NpClass::kProperMasc || c == NpClass::kProperFem;
}

Number ClassNumber(NpClass c) {
  return (c == NpClass::kPluralMasc || c == NpClass::kPluralFem) ? Number::kPl : Number::kSg;
}

std::string Pattern::Name() const {
  return std::string(ToString(subject)) + "_v_" + std::string(ToString(object));
}

Pattern ParsePattern(std::string_view name, Government government) {
  auto pos = name.find("_v_");
  if (pos == std::string_view::npos)
    throw Error(ErrorCode::kParse, "pattern name without '_v_': " + std::string(name));
  auto subject = name.substr(0, pos);
  auto object = name.substr(pos + 3);
  auto lookup = [&](std::string_view s) {
    for (NpClass c : kAllClasses) {
      if (ToString(c) == s) return c;
    }
    throw Error(ErrorCode::kParse, "unknown argument class '" + std::string(s) + "' in pattern " +
                                       std::string(name));
  };
  return Pattern{lookup(subject), lookup(object), government};
}

std::vector<Pattern> WogliPatterns() {
  return FromNames({"pnoun_v_sing_masc", "pnoun_v_plural_masc", "pnoun_v_plural_fem",
                    "plural_masc_v_pnoun", "plural_masc_v_sing_masc", "plural_masc_v_sing_fem",
                    "plural_fem_v_sing_masc", "plural_fem_v_sing_fem", "plural_fem_v_pnoun",
                    "sing_masc_v_sing_masc", "sing_masc_v_plural_masc", "sing_masc_v_plural_fem",
                    "sing_masc_v_sing_fem", "sing_masc_v_pnoun", "sing_fem_v_sing_masc",
                    "sing_fem_v_plural_fem", "sing_fem_v_plural_masc"},
                   Government::kAccusative);
}

std::vector<Pattern> ExtendedPatterns(Government government) {
  if (government == Government::kAccusative)
    throw Error(ErrorCode::kInvalidArgument, "extended patterns need dative or ditransitive government");
  return FromNames({"pnoun_v_sing_masc",         "pnoun_v_plural_masc",
                    "pnoun_v_plural_fem",        "pnoun_v_sing_fem",
                    "plural_masc_v_pnoun",       "plural_masc_v_sing_masc",
                    "plural_masc_v_sing_fem",    "plural_masc_v_plural_fem",
                    "plural_masc_v_plural_masc", "plural_fem_v_sing_masc",
                    "plural_fem_v_sing_fem",     "plural_fem_v_pnoun",
                    "plural_fem_v_plural_fem",   "plural_fem_v_plural_masc",
                    "sing_masc_v_sing_masc",     "sing_masc_v_plural_masc",
                    "sing_masc_v_plural_fem",    "sing_masc_v_sing_fem",
                    "sing_masc_v_pnoun",         "sing_fem_v_sing_masc",
                    "sing_fem_v_plural_fem",     "sing_fem_v_plural_masc",
                    "sing_fem_v_pnoun",          "sing_fem_v_sing_fem"},
                   government);
}

std::vector<Pattern> ExcludedPatterns() {
  return FromNames({"sing_fem_v_pnoun", "pnoun_v_sing_fem", "pnoun_v_pnoun", "sing_fem_v_sing_fem",
                    "plural_fem_v_plural_fem", "plural_masc_v_plural_masc",
                    "plural_masc_v_plural_fem", "plural_fem_v_plural_masc"},
                   Government::kAccusative);
}

std::string_view ToString(NumberClass c) {
  return c == NumberClass::kAllSingular ? "all-singular" : "singular-plural";
}

NumberClass ClassifyNumber(const Pattern& p) {
  return ClassNumber(p.subject) == Number::kSg && ClassNumber(p.object) == Number::kSg
             ? NumberClass::kAllSingular
             : NumberClass::kSingularPlural;
}

bool IsAmbiguous(const Pattern& p, const Lexicon& lex) {
  const auto& verbs = lex.Verbs(p.government);
  // Verbs differ only in whether 3sg and 3pl coincide.
  std::vector<const VerbEntry*> verb_reps;
  bool seen_distinct = false;
  bool seen_same = false;
  for (const auto& v : verbs) {
    bool same = v.form_3sg == v.form_3pl;
    bool& seen = same ? seen_same : seen_distinct;
    if (!seen) {
      verb_reps.push_back(&v);
      seen = true;
    }
  }
  auto subjects = RepresentativeNps(p.subject, lex);
  auto objects = RepresentativeNps(p.object, lex);
  bool any = false;
  for (const VerbEntry* verb : verb_reps) {
    std::optional<NpSpec> direct_object;
    if (p.government == Government::kDitransitive) {
      for (const auto& t : lex.thing_nouns) {
        if (verb->category && t.compatible_categories.count(*verb->category)) {
          direct_object = ThingNp(t);
          break;
        }
      }
      if (!direct_object) continue;
    }
    for (const auto& s : subjects) {
      for (const auto& o : objects) {
        if (s.Lemma() == o.Lemma()) continue;
        PremiseInstance inst{p, s, o, *verb, direct_object, {}};
        any = true;
        if (DeriveH1(inst) != DeriveH2(inst)) return false;
      }
    }
  }
  if (!any)
    throw Error(ErrorCode::kInvalidArgument, "lexicon has no lexicalization for pattern " + p.Name());
  return true;
}

bool IsAmbiguousClosedForm(const Pattern& p) {
  if (p.government != Government::kAccusative) return false;
  return ClassNumber(p.subject) == ClassNumber(p.object) && p.subject != NpClass::kSingMasc &&
         p.object != NpClass::kSingMasc;
}

std::string ExportPatterns(const std::vector<Pattern>& patterns) {
  std::ostringstream out;
  for (const auto& p : patterns) out << p.Name() << '\t' << ToString(p.government) << '\n';
  return out.str();
}

}  // namespace wogli
