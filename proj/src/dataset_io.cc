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

#include "wogli/dataset_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wogli/error.h"

namespace wogli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kTsvHeader = "id\tsubset\tpremise\thypothesis\tlabel\thyp_kind\tpattern";

void CheckField(std::string_view value, std::string_view field, const std::string& id) {
  if (value.find_first_of("\t\r\n") != std::string_view::npos)
    throw Error(ErrorCode::kInvalidArgument,
                "record " + id + ": field '" + std::string(field) + "' contains a tab or newline");
}

ordered_json ArgumentJson(const ArgumentInfo& a) {
  ordered_json j;
  j["lemma"] = a.lemma;
  j["kind"] = ToString(a.kind);
  j["gender"] = ToString(a.gender);
  j["number"] = ToString(a.number);
  j["article"] = ToString(a.article);
  j["definite"] = a.definite;
  return j;
}

ordered_json RecordJson(const PairRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["subset"] = r.subset;
  j["premise"] = r.premise;
  j["hypothesis"] = r.hypothesis;
  j["label"] = ToString(r.label);
  j["hyp_kind"] = ToString(r.hyp_kind);
  j["pattern"] = r.pattern;
  if (r.metadata) {
    ordered_json m;
    m["subject"] = ArgumentJson(r.metadata->subject);
    m["object"] = ArgumentJson(r.metadata->object);
    m["verb"] = r.metadata->verb_lemma;
    m["direct_object"] = r.metadata->direct_object_lemma;
    m["noun_forms"] = r.metadata->noun_forms;
    j["metadata"] = std::move(m);
  }
  return j;
}

[[noreturn]] void Bad(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "pairs line " + std::to_string(line) + ": " + what);
}

template <typename T>
T ParseOr(std::optional<T> v, std::size_t line, std::string_view field, std::string_view value) {
  if (!v) Bad(line, "bad " + std::string(field) + " '" + std::string(value) + "'");
  return *v;
}

std::string StringField(const nlohmann::json& j, const char* key, std::size_t line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) Bad(line, std::string("missing string field '") + key + "'");
  return it->get<std::string>();
}

ArgumentInfo ArgumentFromJson(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object()) Bad(line, "metadata argument is not an object");
  ArgumentInfo a;
  a.lemma = StringField(j, "lemma", line);
  std::string kind = StringField(j, "kind", line);
  a.kind = ParseOr(ParseArgumentKind(kind), line, "kind", kind);
  std::string gender = StringField(j, "gender", line);
  a.gender = ParseOr(ParseGender(gender), line, "gender", gender);
  std::string number = StringField(j, "number", line);
  a.number = ParseOr(ParseNumber(number), line, "number", number);
  std::string article = StringField(j, "article", line);
  a.article = ParseOr(ParseArticleKind(article), line, "article", article);
  auto it = j.find("definite");
  if (it == j.end() || !it->is_boolean()) Bad(line, "missing boolean field 'definite'");
  a.definite = it->get<bool>();
  return a;
}

PairRecord RecordFromJson(std::string_view text, std::size_t line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Bad(line, e.what());
  }
  if (!j.is_object()) Bad(line, "not a JSON object");
  PairRecord r;
  r.id = StringField(j, "id", line);
  r.subset = StringField(j, "subset", line);
  r.premise = StringField(j, "premise", line);
  r.hypothesis = StringField(j, "hypothesis", line);
  std::string label = StringField(j, "label", line);
  r.label = ParseOr(ParseLabel(label), line, "label", label);
  std::string kind = StringField(j, "hyp_kind", line);
  r.hyp_kind = ParseOr(ParseHypKind(kind), line, "hyp_kind", kind);
  r.pattern = StringField(j, "pattern", line);
  if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) {
    const auto& m = *it;
    if (!m.is_object()) Bad(line, "metadata is not an object");
    PairMetadata meta;
    if (!m.contains("subject") || !m.contains("object")) Bad(line, "metadata lacks subject/object");
    meta.subject = ArgumentFromJson(m["subject"], line);
    meta.object = ArgumentFromJson(m["object"], line);
    meta.verb_lemma = StringField(m, "verb", line);
    meta.direct_object_lemma = StringField(m, "direct_object", line);
    auto forms = m.find("noun_forms");
    if (forms == m.end() || !forms->is_array()) Bad(line, "missing array field 'noun_forms'");
    for (const auto& f : *forms) {
      if (!f.is_string()) Bad(line, "noun_forms holds a non-string");
      meta.noun_forms.push_back(f.get<std::string>());
    }
    r.metadata = std::move(meta);
  }
  return r;
}

PairRecord RecordFromTsv(std::string_view text, std::size_t line) {
  auto fields = SplitTabs(text);
  if (fields.size() != 7) Bad(line, "expected 7 tab-separated fields, found " + std::to_string(fields.size()));
  PairRecord r;
  r.id = fields[0];
  r.subset = fields[1];
  r.premise = fields[2];
  r.hypothesis = fields[3];
  r.label = ParseOr(ParseLabel(fields[4]), line, "label", fields[4]);
  r.hyp_kind = ParseOr(ParseHypKind(fields[5]), line, "hyp_kind", fields[5]);
  r.pattern = fields[6];
  return r;
}

std::string_view StripCr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::ifstream OpenIn(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

}  // namespace

std::optional<PairFormat> ParsePairFormat(std::string_view s) {
  if (s == "jsonl") return PairFormat::kRowJson;
  if (s == "tsv") return PairFormat::kTsv;
  return std::nullopt;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t WritePairs(std::span<const PairRecord> records, PairFormat format, std::ostream& out) {
  std::string buffer;
  if (format == PairFormat::kTsv) {
    buffer += kTsvHeader;
    buffer += '\n';
  }
  for (const auto& r : records) {
    CheckField(r.id, "id", r.id);
    CheckField(r.subset, "subset", r.id);
    CheckField(r.premise, "premise", r.id);
    CheckField(r.hypothesis, "hypothesis", r.id);
    CheckField(r.pattern, "pattern", r.id);
    if (format == PairFormat::kRowJson) {
      buffer += RecordJson(r).dump();
    } else {
      for (std::string_view field : {std::string_view(r.id), std::string_view(r.subset),
                                     std::string_view(r.premise), std::string_view(r.hypothesis),
                                     ToString(r.label), ToString(r.hyp_kind),
                                     std::string_view(r.pattern)}) {
        buffer += field;
        buffer += '\t';
      }
      buffer.back() = '\n';
      continue;
    }
    buffer += '\n';
  }
  out << buffer;
  if (!out) throw Error(ErrorCode::kIo, "write failed");
  return buffer.size();
}

std::size_t WritePairsFile(std::span<const PairRecord> records, PairFormat format,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return WritePairs(records, format, out);
}

std::vector<PairRecord> ReadPairs(std::istream& in) {
  std::vector<PairRecord> out;
  std::string raw;
  std::size_t line = 0;
  std::optional<bool> json;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = StripCr(raw);
    if (text.empty()) continue;
    if (!json) {
      json = text.front() == '{';
      if (!*json && text == kTsvHeader) continue;
    }
    out.push_back(*json ? RecordFromJson(text, line) : RecordFromTsv(text, line));
  }
  return out;
}

std::vector<PairRecord> ReadPairsFile(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadPairs(in);
}

std::optional<Label> CollapseLabel(std::string_view label) {
  if (label == "entailment" || label == "entailed") return Label::kEntailed;
  if (label == "neutral" || label == "contradiction" || label == "non-entailed")
    return Label::kNotEntailed;
  return std::nullopt;
}

PredictionSet ReadPredictions(std::istream& in, std::size_t runs) {
  if (runs == 0) throw Error(ErrorCode::kInvalidArgument, "run count must be at least 1");
  std::map<std::string, std::vector<std::optional<Label>>> partial;
  std::string raw;
  std::size_t line = 0;
  auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "predictions line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = StripCr(raw);
    if (text.empty()) continue;
    auto fields = SplitTabs(text);
    if (line == 1 && !fields.empty() && fields[0] == "id") continue;
    if (fields.size() != 3) bad("expected 3 tab-separated fields");
    std::size_t run = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), run);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size())
      bad("bad run index '" + std::string(fields[1]) + "'");
    if (run >= runs) bad("run index " + std::to_string(run) + " >= runs " + std::to_string(runs));
    auto label = CollapseLabel(fields[2]);
    if (!label) bad("unknown label '" + std::string(fields[2]) + "'");
    auto& slots = partial[std::string(fields[0])];
    slots.resize(runs);
    if (slots[run]) bad("duplicate prediction for " + std::string(fields[0]) + " run " + std::to_string(run));
    slots[run] = *label;
  }
  PredictionSet out;
  out.runs = runs;
  for (auto& [id, slots] : partial) {
    std::vector<Label> labels;
    for (std::size_t r = 0; r < runs; ++r) {
      if (!slots[r])
        throw Error(ErrorCode::kParse, "predictions: id " + id + " lacks run " + std::to_string(r));
      labels.push_back(*slots[r]);
    }
    out.labels.emplace(id, std::move(labels));
  }
  return out;
}

PredictionSet ReadPredictionsFile(const std::filesystem::path& path, std::size_t runs) {
  auto in = OpenIn(path);
  return ReadPredictions(in, runs);
}

void WritePredictions(const PredictionSet& preds, std::ostream& out) {
  out << "id\trun_index\tlabel\n";
  for (const auto& [id, labels] : preds.labels) {
    for (std::size_t r = 0; r < labels.size(); ++r) {
      out << id << '\t' << r << '\t' << ToString(labels[r]) << '\n';
    }
  }
}

std::map<std::string, double> ReadScores(std::istream& in) {
  std::map<std::string, double> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = StripCr(raw);
    if (text.empty()) continue;
    auto fields = SplitTabs(text);
    if (fields.size() != 2)
      throw Error(ErrorCode::kParse, "scores line " + std::to_string(line) + ": expected 2 fields");
    if (line == 1 && fields[0] == "sentence_id") continue;
    double value = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), value);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size())
      throw Error(ErrorCode::kParse, "scores line " + std::to_string(line) + ": bad score");
    if (!out.emplace(std::string(fields[0]), value).second)
      throw Error(ErrorCode::kDuplicate, "scores line " + std::to_string(line) + ": duplicate id");
  }
  return out;
}

}  // namespace wogli
