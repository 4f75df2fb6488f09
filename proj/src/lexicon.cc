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

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "wogli/error.h"
#include "wogli/morphology.h"

namespace wogli {
namespace {

constexpr std::string_view kHeader = "class\tlemma\tform2\tform3\tattrs";

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void ParseFail(std::size_t line, std::string_view field, const std::string& what) {
  std::ostringstream msg;
  msg << "lexicon line " << line << ", field '" << field << "': " << what;
  throw Error(ErrorCode::kParse, msg.str());
}

bool ParseBool(std::string_view s, bool* out) {
  if (s == "true") {
    *out = true;
    return true;
  }
  if (s == "false") {
    *out = false;
    return true;
  }
  return false;
}

// Tracks lemmas per inventory to reject duplicates at load time.
class DuplicateGuard {
 public:
  void Add(std::string_view inventory, const std::string& lemma, std::size_t line) {
    if (!seen_[std::string(inventory)].insert(lemma).second) {
      std::ostringstream msg;
      msg << "lexicon line " << line << ": duplicate lemma '" << lemma << "' in " << inventory;
      throw Error(ErrorCode::kDuplicate, msg.str());
    }
  }

 private:
  std::map<std::string, std::unordered_set<std::string>> seen_;
};

std::vector<VerbEntry>& VerbInventory(Lexicon& lex, Government g) {
  switch (g) {
    case Government::kAccusative: return lex.verbs_acc;
    case Government::kDative: return lex.verbs_dat;
    case Government::kDitransitive: return lex.verbs_ditrans;
  }
  return lex.verbs_acc;
}

std::string_view VerbInventoryName(Government g) {
  switch (g) {
    case Government::kAccusative: return "verbs_acc";
    case Government::kDative: return "verbs_dat";
    case Government::kDitransitive: return "verbs_ditrans";
  }
  return "?";
}

std::vector<NounEntry>& NounInventory(Lexicon& lex, Gender g, NounKind k) {
  if (k == NounKind::kCommon) return g == Gender::kMasc ? lex.masc_common : lex.fem_common;
  return g == Gender::kMasc ? lex.masc_proper : lex.fem_proper;
}

std::string_view NounInventoryName(Gender g, NounKind k) {
  if (k == NounKind::kCommon) return g == Gender::kMasc ? "masc_common" : "fem_common";
  return g == Gender::kMasc ? "masc_proper" : "fem_proper";
}

std::set<SemanticCategory> ParseCategories(std::string_view s, std::size_t line) {
  std::set<SemanticCategory> out;
  for (auto part : Split(s, ',')) {
    auto c = ParseSemanticCategory(part);
    if (!c) ParseFail(line, "attrs", "unknown semantic category '" + std::string(part) + "'");
    out.insert(*c);
  }
  return out;
}

void ParseVerbRow(const std::vector<std::string_view>& f, std::size_t line, Lexicon& lex,
                  DuplicateGuard& guard) {
  if (f.size() != 7) ParseFail(line, "verb", "expected 7 columns, found " + std::to_string(f.size()));
  VerbEntry v;
  v.lemma = f[1];
  v.form_3sg = f[2];
  v.form_3pl = f[3];
  if (v.lemma.empty()) ParseFail(line, "lemma", "empty");
  auto gov = ParseGovernment(f[4]);
  if (!gov) ParseFail(line, "government", "unknown value '" + std::string(f[4]) + "'");
  v.government = *gov;
  if (f[5] != "-") {
    auto c = ParseSemanticCategory(f[5]);
    if (!c) ParseFail(line, "category", "unknown value '" + std::string(f[5]) + "'");
    v.category = *c;
  }
  if (v.government == Government::kDitransitive && !v.category)
    ParseFail(line, "category", "ditransitive verb requires a semantic category");
  if (v.government != Government::kDitransitive && v.category)
    ParseFail(line, "category", "only ditransitive verbs carry a semantic category");
  if (!ParseBool(f[6], &v.symmetric))
    ParseFail(line, "symmetric", "expected true or false, found '" + std::string(f[6]) + "'");
  guard.Add(VerbInventoryName(v.government), v.lemma, line);
  VerbInventory(lex, v.government).push_back(std::move(v));
}

void ParseNounRow(const std::vector<std::string_view>& f, std::size_t line, Lexicon& lex,
                  DuplicateGuard& guard) {
  if (f.size() != 7) ParseFail(line, "noun", "expected 7 columns, found " + std::to_string(f.size()));
  NounEntry n;
  n.lemma = f[1];
  if (n.lemma.empty()) ParseFail(line, "lemma", "empty");
  if (f[2] != "-") n.plural_nom = f[2];
  auto g = ParseGender(f[3]);
  if (!g || *g == Gender::kNeut)
    ParseFail(line, "gender", "expected MASC or FEM, found '" + std::string(f[3]) + "'");
  n.gender = *g;
  auto k = ParseNounKind(f[4]);
  if (!k) ParseFail(line, "kind", "unknown value '" + std::string(f[4]) + "'");
  n.kind = *k;
  if (f[5] == "weak") {
    n.weak_declension = true;
  } else if (f[5] != "strong" && f[5] != "-") {
    ParseFail(line, "declension", "expected weak, strong or -, found '" + std::string(f[5]) + "'");
  }
  if (!ParseBool(f[6], &n.human))
    ParseFail(line, "human", "expected true or false, found '" + std::string(f[6]) + "'");
  guard.Add(NounInventoryName(n.gender, n.kind), n.lemma, line);
  NounInventory(lex, n.gender, n.kind).push_back(std::move(n));
}

void ParseThingRow(const std::vector<std::string_view>& f, std::size_t line, Lexicon& lex,
                   DuplicateGuard& guard) {
  if (f.size() != 5) ParseFail(line, "thing", "expected 5 columns, found " + std::to_string(f.size()));
  ThingNounEntry t;
  t.lemma = f[1];
  if (t.lemma.empty()) ParseFail(line, "lemma", "empty");
  auto g = ParseGender(f[2]);
  if (!g) ParseFail(line, "gender", "unknown value '" + std::string(f[2]) + "'");
  t.gender = *g;
  auto n = ParseNumber(f[3]);
  if (!n) ParseFail(line, "number", "unknown value '" + std::string(f[3]) + "'");
  t.number = *n;
  t.compatible_categories = ParseCategories(f[4], line);
  guard.Add("thing_nouns", t.lemma, line);
  lex.thing_nouns.push_back(std::move(t));
}

Lexicon LoadTsv(std::string_view text) {
  Lexicon lex;
  DuplicateGuard guard;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kHeader) ParseFail(line_no, "header", "expected '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    auto fields = Split(line, '\t');
    if (fields[0] == "verb") {
      ParseVerbRow(fields, line_no, lex, guard);
    } else if (fields[0] == "noun") {
      ParseNounRow(fields, line_no, lex, guard);
    } else if (fields[0] == "thing") {
      ParseThingRow(fields, line_no, lex, guard);
    } else {
      ParseFail(line_no, "class", "unknown row class '" + std::string(fields[0]) + "'");
    }
  }
  return lex;
}

using nlohmann::json;

template <typename T>
T JsonField(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw Error(ErrorCode::kParse, "lexicon " + where + ", field '" + key + "': missing");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "lexicon " + where + ", field '" + key + "': " + e.what());
  }
}

Lexicon LoadJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("lexicon JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "lexicon JSON: top level must be an object");
  Lexicon lex;
  DuplicateGuard guard;
  auto array_of = [&](const char* key) -> const json* {
    if (!doc.contains(key)) return nullptr;
    if (!doc[key].is_array())
      throw Error(ErrorCode::kParse, std::string("lexicon JSON, field '") + key + "': not an array");
    return &doc[key];
  };
  for (Government g : {Government::kAccusative, Government::kDative, Government::kDitransitive}) {
    std::string key(VerbInventoryName(g));
    const json* arr = array_of(key.c_str());
    if (!arr) continue;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& row = (*arr)[i];
      std::string where = key + "[" + std::to_string(i) + "]";
      VerbEntry v;
      v.lemma = JsonField<std::string>(row, "lemma", where);
      v.form_3sg = JsonField<std::string>(row, "form_3sg", where);
      v.form_3pl = JsonField<std::string>(row, "form_3pl", where);
      v.government = g;
      if (row.contains("category") && !row["category"].is_null()) {
        auto name = JsonField<std::string>(row, "category", where);
        auto c = ParseSemanticCategory(name);
        if (!c) throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'category': unknown value '" + name + "'");
        v.category = *c;
      }
      if (g == Government::kDitransitive && !v.category)
        throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'category': ditransitive verb requires a semantic category");
      if (g != Government::kDitransitive && v.category)
        throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'category': only ditransitive verbs carry a semantic category");
      v.symmetric = row.contains("symmetric") ? JsonField<bool>(row, "symmetric", where) : false;
      guard.Add(key, v.lemma, i + 1);
      VerbInventory(lex, g).push_back(std::move(v));
    }
  }
  for (NounKind k : {NounKind::kCommon, NounKind::kProper}) {
    for (Gender g : {Gender::kMasc, Gender::kFem}) {
      std::string key(NounInventoryName(g, k));
      const json* arr = array_of(key.c_str());
      if (!arr) continue;
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const json& row = (*arr)[i];
        std::string where = key + "[" + std::to_string(i) + "]";
        NounEntry n;
        n.lemma = JsonField<std::string>(row, "lemma", where);
        n.gender = g;
        n.kind = k;
        if (row.contains("plural_nom") && !row["plural_nom"].is_null())
          n.plural_nom = JsonField<std::string>(row, "plural_nom", where);
        n.weak_declension =
            row.contains("weak_declension") ? JsonField<bool>(row, "weak_declension", where) : false;
        n.human = row.contains("human") ? JsonField<bool>(row, "human", where) : true;
        guard.Add(key, n.lemma, i + 1);
        NounInventory(lex, g, k).push_back(std::move(n));
      }
    }
  }
  if (const json* arr = array_of("thing_nouns")) {
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& row = (*arr)[i];
      std::string where = "thing_nouns[" + std::to_string(i) + "]";
      ThingNounEntry t;
      t.lemma = JsonField<std::string>(row, "lemma", where);
      auto gname = JsonField<std::string>(row, "gender", where);
      auto g = ParseGender(gname);
      if (!g) throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'gender': unknown value '" + gname + "'");
      t.gender = *g;
      auto nname = JsonField<std::string>(row, "number", where);
      auto n = ParseNumber(nname);
      if (!n) throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'number': unknown value '" + nname + "'");
      t.number = *n;
      for (const auto& c : JsonField<std::vector<std::string>>(row, "categories", where)) {
        auto cat = ParseSemanticCategory(c);
        if (!cat) throw Error(ErrorCode::kParse, "lexicon " + where + ", field 'categories': unknown value '" + c + "'");
        t.compatible_categories.insert(*cat);
      }
      guard.Add("thing_nouns", t.lemma, i + 1);
      lex.thing_nouns.push_back(std::move(t));
    }
  }
  return lex;
}

std::string JoinCategories(const std::set<SemanticCategory>& cats) {
  std::string out;
  for (auto c : cats) {
    if (!out.empty()) out += ',';
    out += ToString(c);
  }
  return out;
}

std::string SerializeTsv(const Lexicon& lex) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto* inv : {&lex.verbs_acc, &lex.verbs_dat, &lex.verbs_ditrans}) {
    for (const auto& v : *inv) {
      out << "verb\t" << v.lemma << '\t' << v.form_3sg << '\t' << v.form_3pl << '\t'
          << ToString(v.government) << '\t' << (v.category ? ToString(*v.category) : "-") << '\t'
          << (v.symmetric ? "true" : "false") << '\n';
    }
  }
  for (const auto* inv : {&lex.masc_common, &lex.fem_common, &lex.masc_proper, &lex.fem_proper}) {
    for (const auto& n : *inv) {
      std::string_view decl = n.kind == NounKind::kProper ? "-" : (n.weak_declension ? "weak" : "strong");
      out << "noun\t" << n.lemma << '\t' << (n.plural_nom.empty() ? "-" : n.plural_nom) << '\t'
          << ToString(n.gender) << '\t' << ToString(n.kind) << '\t' << decl << '\t'
          << (n.human ? "true" : "false") << '\n';
    }
  }
  for (const auto& t : lex.thing_nouns) {
    out << "thing\t" << t.lemma << '\t' << ToString(t.gender) << '\t' << ToString(t.number) << '\t'
        << JoinCategories(t.compatible_categories) << '\n';
  }
  return out.str();
}

std::string SerializeJson(const Lexicon& lex) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (Government g : {Government::kAccusative, Government::kDative, Government::kDitransitive}) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : lex.Verbs(g)) {
      nlohmann::ordered_json row;
      row["lemma"] = v.lemma;
      row["form_3sg"] = v.form_3sg;
      row["form_3pl"] = v.form_3pl;
      row["category"] = v.category ? nlohmann::ordered_json(std::string(ToString(*v.category)))
                                   : nlohmann::ordered_json(nullptr);
      row["symmetric"] = v.symmetric;
      arr.push_back(std::move(row));
    }
    doc[std::string(VerbInventoryName(g))] = std::move(arr);
  }
  for (NounKind k : {NounKind::kCommon, NounKind::kProper}) {
    for (Gender g : {Gender::kMasc, Gender::kFem}) {
      auto arr = nlohmann::ordered_json::array();
      const auto& inv = k == NounKind::kCommon ? (g == Gender::kMasc ? lex.masc_common : lex.fem_common)
                                               : (g == Gender::kMasc ? lex.masc_proper : lex.fem_proper);
      for (const auto& n : inv) {
        nlohmann::ordered_json row;
        row["lemma"] = n.lemma;
        row["plural_nom"] = n.plural_nom.empty() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(n.plural_nom);
        row["weak_declension"] = n.weak_declension;
        row["human"] = n.human;
        arr.push_back(std::move(row));
      }
      doc[std::string(NounInventoryName(g, k))] = std::move(arr);
    }
  }
  auto things = nlohmann::ordered_json::array();
  for (const auto& t : lex.thing_nouns) {
    nlohmann::ordered_json row;
    row["lemma"] = t.lemma;
    row["gender"] = ToString(t.gender);
    row["number"] = ToString(t.number);
    auto cats = nlohmann::ordered_json::array();
    for (auto c : t.compatible_categories) cats.push_back(ToString(c));
    row["categories"] = std::move(cats);
    things.push_back(std::move(row));
  }
  doc["thing_nouns"] = std::move(things);
  return doc.dump(2) + "\n";
}

void ExpectCount(std::vector<std::string>& issues, std::string_view what, std::size_t expected,
                 std::size_t found) {
  if (expected != found) {
    issues.push_back("expected " + std::to_string(expected) + " " + std::string(what) + ", found " +
                     std::to_string(found));
  }
}

}  // namespace

const std::vector<VerbEntry>& Lexicon::Verbs(Government g) const {
  switch (g) {
    case Government::kAccusative: return verbs_acc;
    case Government::kDative: return verbs_dat;
    case Government::kDitransitive: return verbs_ditrans;
  }
  return verbs_acc;
}

const VerbEntry* Lexicon::FindVerb(std::string_view lemma) const {
  for (const auto* inv : {&verbs_acc, &verbs_dat, &verbs_ditrans}) {
    for (const auto& v : *inv) {
      if (v.lemma == lemma) return &v;
    }
  }
  return nullptr;
}

const NounEntry* Lexicon::FindNoun(std::string_view lemma, NounKind kind, Gender gender) const {
  const auto& inv = kind == NounKind::kCommon ? (gender == Gender::kMasc ? masc_common : fem_common)
                                              : (gender == Gender::kMasc ? masc_proper : fem_proper);
  for (const auto& n : inv) {
    if (n.lemma == lemma) return &n;
  }
  return nullptr;
}

const ThingNounEntry* Lexicon::FindThing(std::string_view lemma) const {
  for (const auto& t : thing_nouns) {
    if (t.lemma == lemma) return &t;
  }
  return nullptr;
}

Lexicon LoadLexicon(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return LoadJson(text);
  return LoadTsv(text);
}

Lexicon LoadLexiconFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadLexicon(buf.str());
}

std::string SerializeLexicon(const Lexicon& lex, LexiconEncoding encoding) {
  return encoding == LexiconEncoding::kTsv ? SerializeTsv(lex) : SerializeJson(lex);
}

const Lexicon& BundledLexicon() {
  static const Lexicon lex = LoadLexicon(BundledLexiconText());
  return lex;
}

std::vector<std::string> ValidateLexicon(const Lexicon& lex, ValidationProfile profile) {
  std::vector<std::string> issues;

  std::map<std::string, Government> verb_classes;
  for (Government g : {Government::kAccusative, Government::kDative, Government::kDitransitive}) {
    for (const auto& v : lex.Verbs(g)) {
      if (v.symmetric) issues.push_back("symmetric verb forbidden: " + v.lemma);
      if (v.form_3sg.empty() || v.form_3pl.empty())
        issues.push_back("verb " + v.lemma + ": missing 3sg or 3pl form");
      if (v.form_3sg == v.form_3pl)
        issues.push_back("verb " + v.lemma + ": 3sg and 3pl forms coincide");
      if (v.government != g)
        issues.push_back("verb " + v.lemma + ": government " + std::string(ToString(v.government)) +
                         " stored in the " + std::string(ToString(g)) + " inventory");
      if (v.category.has_value() != (g == Government::kDitransitive))
        issues.push_back("verb " + v.lemma + ": semantic category must be present iff ditransitive");
      auto [it, inserted] = verb_classes.emplace(v.lemma, g);
      if (!inserted && it->second != g)
        issues.push_back("verb " + v.lemma + " appears in two government classes");
    }
  }

  auto check_nouns = [&](const std::vector<NounEntry>& inv, Gender gender, NounKind kind,
                         std::string_view name) {
    for (const auto& n : inv) {
      if (n.gender != gender || n.kind != kind)
        issues.push_back("noun " + n.lemma + ": stored in " + std::string(name) +
                         " with mismatching gender or kind");
      if (n.weak_declension && !(n.gender == Gender::kMasc && n.kind == NounKind::kCommon))
        issues.push_back("noun " + n.lemma + ": weak declension is only allowed for masculine common nouns");
      if (n.kind == NounKind::kProper && !n.plural_nom.empty())
        issues.push_back("proper name " + n.lemma + " must not have a plural");
      if (n.kind == NounKind::kCommon && n.plural_nom.empty())
        issues.push_back("common noun " + n.lemma + " has no plural");
      if (!n.human) issues.push_back("noun " + n.lemma + " in a human inventory is not human");
    }
  };
  check_nouns(lex.masc_common, Gender::kMasc, NounKind::kCommon, "masc_common");
  check_nouns(lex.fem_common, Gender::kFem, NounKind::kCommon, "fem_common");
  check_nouns(lex.masc_proper, Gender::kMasc, NounKind::kProper, "masc_proper");
  check_nouns(lex.fem_proper, Gender::kFem, NounKind::kProper, "fem_proper");

  for (const auto& t : lex.thing_nouns) {
    if (t.compatible_categories.empty())
      issues.push_back("thing noun " + t.lemma + " has no compatible category");
  }
  for (const auto& v : lex.verbs_ditrans) {
    bool any = false;
    for (const auto& t : lex.thing_nouns) {
      if (v.category && t.compatible_categories.count(*v.category)) any = true;
    }
    if (!any) issues.push_back("ditransitive verb " + v.lemma + " has no compatible direct object");
  }

  if (profile == ValidationProfile::kFull) {
    ExpectCount(issues, "accusative verbs", 50, lex.verbs_acc.size());
    ExpectCount(issues, "dative verbs", 22, lex.verbs_dat.size());
    ExpectCount(issues, "ditransitive verbs", 21, lex.verbs_ditrans.size());
    ExpectCount(issues, "masculine common nouns", 38, lex.masc_common.size());
    ExpectCount(issues, "feminine common nouns", 24, lex.fem_common.size());
    ExpectCount(issues, "masculine proper names", 41, lex.masc_proper.size());
    ExpectCount(issues, "feminine proper names", 41, lex.fem_proper.size());
    ExpectCount(issues, "human noun types", 144,
                lex.masc_common.size() + lex.fem_common.size() + lex.masc_proper.size() +
                    lex.fem_proper.size());
    std::size_t weak = 0;
    for (const auto& n : lex.masc_common) weak += n.weak_declension ? 1 : 0;
    ExpectCount(issues, "weak masculine nouns", 6, weak);
    ExpectCount(issues, "thing nouns", 54, lex.thing_nouns.size());
    ExpectCount(issues, "noun surface forms", 181, SurfaceFormCount(lex));
  }
  return issues;
}

std::set<std::string> NounSurfaceForms(const Lexicon& lex) {
  std::set<std::string> forms;
  for (const auto* inv : {&lex.masc_common, &lex.fem_common}) {
    for (const auto& n : *inv) {
      for (Number num : {Number::kSg, Number::kPl}) {
        if (num == Number::kPl && n.plural_nom.empty()) continue;
        for (Case c : {Case::kNom, Case::kAcc}) forms.insert(InflectNoun(n, num, c));
      }
    }
  }
  for (const auto* inv : {&lex.masc_proper, &lex.fem_proper}) {
    for (const auto& n : *inv) forms.insert(n.lemma);
  }
  return forms;
}

std::size_t SurfaceFormCount(const Lexicon& lex) { return NounSurfaceForms(lex).size(); }

}  // namespace wogli
