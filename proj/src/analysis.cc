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

#include "wogli/analysis.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "wogli/error.h"
#include "wogli/patterns.h"

namespace wogli {
namespace {

const PairMetadata& MetadataOf(const PairRecord& r) {
  if (!r.metadata)
    throw Error(ErrorCode::kInvalidArgument, "record " + r.id + " has no metadata; group analysis needs ROW_JSON gold");
  return *r.metadata;
}

std::string UpperSubset(std::string_view subset) {
  std::string out(subset);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

GroupSpec And(std::string name, GroupSpec a, GroupSpec b) {
  return {std::move(name), [a = std::move(a.predicate), b = std::move(b.predicate)](const PairRecord& r) {
            return a(r) && b(r);
          }};
}

GroupSpec SubsetRecords(const std::string& subset) {
  return {UpperSubset(subset), [subset](const PairRecord& r) { return r.subset == subset; }};
}

// The standard per-subset groups: everything, SO, OS, OS-hard.
std::vector<GroupSpec> StandardGroups(std::span<const PairRecord> gold) {
  std::vector<std::string> subsets;
  std::set<std::string> seen;
  std::set<std::pair<std::string, int>> present;
  for (const auto& r : gold) {
    if (seen.insert(r.subset).second) subsets.push_back(r.subset);
    present.insert({r.subset, IsCanonicalSwap(r.hyp_kind) ? 0 : (r.hyp_kind == HypKind::kH3OS ? 2 : 1)});
  }
  std::vector<GroupSpec> out;
  for (const auto& s : subsets) {
    GroupSpec all = SubsetRecords(s);
    out.push_back(all);
    int kinds = present.count({s, 0}) + present.count({s, 1}) + present.count({s, 2});
    if (kinds < 2) continue;
    if (present.count({s, 0})) out.push_back(And(all.name + "-SO", all, CanonicalSwapRecords()));
    if (present.count({s, 1})) out.push_back(And(all.name + "-OS", all, MarkedOrderRecords()));
    if (present.count({s, 2})) out.push_back(And(all.name + "-OS-hard", all, OsHardRecords()));
  }
  return out;
}

std::vector<std::size_t> SoIndices(std::span<const PairRecord> gold) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (IsCanonicalSwap(gold[i].hyp_kind)) out.push_back(i);
  }
  return out;
}

nlohmann::ordered_json ResultJson(const AccuracyResult& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["n"] = r.n;
  j["k"] = r.correct;
  j["accuracy"] = r.mean;
  j["sd"] = r.sd;
  j["per_run"] = r.per_run;
  return j;
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void ResultLine(std::ostringstream& out, const AccuracyResult& r) {
  out << "  " << r.group << "\tn=" << r.n << "\tacc=" << Fixed(r.mean) << "\tsd=" << Fixed(r.sd) << "\truns=";
  for (std::size_t i = 0; i < r.per_run.size(); ++i) out << (i ? "," : "") << Fixed(r.per_run[i]);
  out << '\n';
}

}  // namespace

GroupSpec AllRecords() {
  return {"all", [](const PairRecord&) { return true; }};
}

GroupSpec CanonicalSwapRecords() {
  return {"SO", [](const PairRecord& r) { return IsCanonicalSwap(r.hyp_kind); }};
}

GroupSpec MarkedOrderRecords() {
  return {"OS", [](const PairRecord& r) {
            return r.hyp_kind == HypKind::kH2OS || r.hyp_kind == HypKind::kH2iOS;
          }};
}

GroupSpec OsHardRecords() {
  return {"OS-hard", [](const PairRecord& r) { return r.hyp_kind == HypKind::kH3OS; }};
}

MeanSd MeanAndSd(std::span<const double> values, SdKind sd) {
  MeanSd out;
  out.n = values.size();
  if (values.empty()) return out;
  double sum = 0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double squares = 0;
  for (double v : values) squares += (v - out.mean) * (v - out.mean);
  std::size_t denom = sd == SdKind::kPopulation ? values.size() : values.size() - 1;
  out.sd = denom == 0 ? 0.0 : std::sqrt(squares / static_cast<double>(denom));
  return out;
}

AccuracyResult Accuracy(std::span<const PairRecord> gold, const PredictionSet& preds,
                        const GroupSpec& filter, SdKind sd) {
  AccuracyResult result;
  result.group = filter.name;
  result.correct.assign(preds.runs, 0);
  for (const auto& r : gold) {
    if (!filter.predicate(r)) continue;
    auto it = preds.labels.find(r.id);
    if (it == preds.labels.end()) throw Error(ErrorCode::kMissingId, "no prediction for " + r.id);
    if (it->second.size() != preds.runs)
      throw Error(ErrorCode::kInvalidArgument, "prediction for " + r.id + " has the wrong run count");
    ++result.n;
    for (std::size_t run = 0; run < preds.runs; ++run) {
      if (it->second[run] == r.label) ++result.correct[run];
    }
  }
  for (std::size_t run = 0; run < preds.runs; ++run) {
    result.per_run.push_back(result.n == 0 ? 0.0
                                           : static_cast<double>(result.correct[run]) /
                                                 static_cast<double>(result.n));
  }
  MeanSd stats = MeanAndSd(result.per_run, sd);
  result.mean = stats.mean;
  result.sd = stats.sd;
  return result;
}

PredictionSet MajorityVote(const PredictionSet& preds, TieBreak tie_break) {
  PredictionSet out;
  out.runs = 1;
  for (const auto& [id, labels] : preds.labels) {
    std::size_t entailed = 0;
    for (Label l : labels) entailed += l == Label::kEntailed;
    std::size_t rest = labels.size() - entailed;
    Label vote;
    if (entailed > rest) {
      vote = Label::kEntailed;
    } else if (rest > entailed) {
      vote = Label::kNotEntailed;
    } else if (tie_break == TieBreak::kNotEntailed) {
      vote = Label::kNotEntailed;
    } else {
      throw Error(ErrorCode::kTie, "majority vote tied for " + id + " (" + std::to_string(labels.size()) +
                                       " runs); set a tie-break policy");
    }
    out.labels.emplace(id, std::vector<Label>{vote});
  }
  return out;
}

Partition DefinitenessGroups(std::span<const PairRecord> gold) {
  Partition out{{"PREFERRED", {}}, {"DISPREFERRED", {}}};
  for (std::size_t i : SoIndices(gold)) {
    const auto& m = MetadataOf(gold[i]);
    // H1 puts the premise object first.
    bool dispreferred = !m.object.definite && m.subject.definite;
    out[dispreferred ? 1 : 0].members.push_back(i);
  }
  return out;
}

Partition NumberGroups(std::span<const PairRecord> gold) {
  Partition out{{std::string(ToString(NumberClass::kAllSingular)), {}},
                {std::string(ToString(NumberClass::kSingularPlural)), {}}};
  for (std::size_t i : SoIndices(gold)) {
    Pattern p = ParsePattern(gold[i].pattern, Government::kAccusative);
    out[ClassifyNumber(p) == NumberClass::kAllSingular ? 0 : 1].members.push_back(i);
  }
  return out;
}

Partition GenderGroups(std::span<const PairRecord> gold, Role role, NounKindFilter kind) {
  Partition out{{"MASC", {}}, {"FEM", {}}};
  const ArgumentKind wanted = kind == NounKindFilter::kCommon ? ArgumentKind::kCommon : ArgumentKind::kProper;
  for (std::size_t i : SoIndices(gold)) {
    const auto& m = MetadataOf(gold[i]);
    const ArgumentInfo& arg = role == Role::kSubject ? m.subject : m.object;
    if (arg.kind != wanted) continue;
    if (arg.gender == Gender::kMasc) out[0].members.push_back(i);
    if (arg.gender == Gender::kFem) out[1].members.push_back(i);
  }
  return out;
}

GroupSpec MembersOf(std::span<const PairRecord> gold, const Group& group) {
  auto ids = std::make_shared<std::unordered_set<std::string>>();
  for (std::size_t i : group.members) ids->insert(gold[i].id);
  return {group.name, [ids](const PairRecord& r) { return ids->count(r.id) > 0; }};
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ZTest TwoProportionZTest(std::size_t k1, std::size_t n1, std::size_t k2, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw Error(ErrorCode::kInvalidArgument, "z-test needs non-empty samples");
  if (k1 > n1 || k2 > n2) throw Error(ErrorCode::kInvalidArgument, "z-test needs k <= n");
  const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
  const double pooled = static_cast<double>(k1 + k2) / static_cast<double>(n1 + n2);
  const double var = pooled * (1 - pooled) * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2));
  if (var <= 0) return {0.0, 1.0};
  ZTest out;
  out.z = (p1 - p2) / std::sqrt(var);
  out.p_two_sided = std::erfc(std::fabs(out.z) / std::sqrt(2.0));
  return out;
}

std::map<std::string, MeanSd> PllAggregate(const std::map<std::string, double>& scores,
                                           std::span<const PairRecord> gold, SdKind sd) {
  std::map<std::string, std::vector<double>> values;
  std::unordered_set<std::string> premises;
  auto score = [&](const std::string& id) {
    auto it = scores.find(id);
    if (it == scores.end()) throw Error(ErrorCode::kMissingId, "no score for sentence " + id);
    return it->second;
  };
  for (const auto& r : gold) {
    std::string premise_id(r.PremiseId());
    if (premises.insert(premise_id).second) values["premise"].push_back(score(premise_id));
    std::string kind(ToString(r.hyp_kind));
    values[kind.substr(0, 2)].push_back(score(r.id));
  }
  std::map<std::string, MeanSd> out;
  for (const auto& [group, v] : values) out[group] = MeanAndSd(v, sd);
  return out;
}

AnalysisReport Analyze(std::span<const PairRecord> gold, const PredictionSet& preds,
                       const ReportOptions& options) {
  AnalysisReport report;
  const auto groups = StandardGroups(gold);
  for (const auto& g : groups) report.subsets.push_back(Accuracy(gold, preds, g, options.sd));
  const PredictionSet ensemble = MajorityVote(preds, options.tie_break);
  for (const auto& g : groups) report.ensemble.push_back(Accuracy(gold, ensemble, g, options.sd));

  std::vector<std::string> subsets;
  for (const auto& r : gold) {
    if (std::find(subsets.begin(), subsets.end(), r.subset) == subsets.end()) subsets.push_back(r.subset);
  }
  for (const auto& subset : subsets) {
    std::vector<PairRecord> part;
    for (const auto& r : gold) {
      if (r.subset == subset) part.push_back(r);
    }
    if (SoIndices(part).empty()) continue;
    const std::string prefix = UpperSubset(subset) + "-SO ";
    auto compare = [&](const std::string& name, const Partition& partition) {
      if (partition.size() != 2 || partition[0].members.empty() || partition[1].members.empty()) return;
      GroupComparison c;
      c.name = prefix + name;
      c.first = Accuracy(part, ensemble, MembersOf(part, partition[0]), options.sd);
      c.second = Accuracy(part, ensemble, MembersOf(part, partition[1]), options.sd);
      c.test = TwoProportionZTest(c.first.correct[0], c.first.n, c.second.correct[0], c.second.n);
      report.comparisons.push_back(std::move(c));
    };
    if (options.definiteness) compare("definiteness", DefinitenessGroups(part));
    if (options.number) compare("number", NumberGroups(part));
    if (options.gender) {
      compare("gender subject common", GenderGroups(part, Role::kSubject, NounKindFilter::kCommon));
      compare("gender subject proper", GenderGroups(part, Role::kSubject, NounKindFilter::kProper));
      compare("gender object common", GenderGroups(part, Role::kObject, NounKindFilter::kCommon));
      compare("gender object proper", GenderGroups(part, Role::kObject, NounKindFilter::kProper));
    }
  }
  return report;
}

std::string FormatReportText(const AnalysisReport& report) {
  std::ostringstream out;
  out << "accuracy (mean over runs)\n";
  for (const auto& r : report.subsets) ResultLine(out, r);
  out << "ensemble (majority vote)\n";
  for (const auto& r : report.ensemble) ResultLine(out, r);
  if (!report.comparisons.empty()) out << "group comparisons (ensemble)\n";
  for (const auto& c : report.comparisons) {
    out << c.name << "\tz=" << Fixed(c.test.z) << "\tp=" << Fixed(c.test.p_two_sided, 6) << '\n';
    ResultLine(out, c.first);
    ResultLine(out, c.second);
  }
  return out.str();
}

std::string FormatReportJsonl(const AnalysisReport& report) {
  std::string out;
  auto emit = [&](const char* section, const AccuracyResult& r) {
    nlohmann::ordered_json j;
    j["section"] = section;
    auto fields = ResultJson(r);
    for (auto& [k, v] : fields.items()) j[k] = v;
    out += j.dump() + '\n';
  };
  for (const auto& r : report.subsets) emit("subset", r);
  for (const auto& r : report.ensemble) emit("ensemble", r);
  for (const auto& c : report.comparisons) {
    nlohmann::ordered_json j;
    j["section"] = "comparison";
    j["name"] = c.name;
    j["first"] = ResultJson(c.first);
    j["second"] = ResultJson(c.second);
    j["z"] = c.test.z;
    j["p_two_sided"] = c.test.p_two_sided;
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace wogli
