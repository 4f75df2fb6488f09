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

#ifndef WOGLI_ANALYSIS_H_
#define WOGLI_ANALYSIS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wogli/dataset_io.h"
#include "wogli/record.h"

namespace wogli {

struct GroupSpec {
  std::string name;
  std::function<bool(const PairRecord&)> predicate;
};

GroupSpec AllRecords();
GroupSpec CanonicalSwapRecords();  // H1-SO / H1-SiO: the "SO" subset
GroupSpec MarkedOrderRecords();    // H2-OS / H2-iOS: the "OS" subset
GroupSpec OsHardRecords();         // H3-OS

enum class SdKind { kPopulation, kSample };

struct AccuracyResult {
  std::string group;
  std::size_t n = 0;
  std::vector<std::size_t> correct;  // per run
  std::vector<double> per_run;
  double mean = 0.0;
  double sd = 0.0;
};

// Per-run accuracy over the records selected by `filter`. Throws
// Error(kMissingId) if a selected id has no prediction. An empty selection
// yields n = 0 and zero accuracies.
AccuracyResult Accuracy(std::span<const PairRecord> gold, const PredictionSet& preds,
                        const GroupSpec& filter, SdKind sd = SdKind::kPopulation);

enum class TieBreak { kError, kNotEntailed };

// Single-run set holding each id's majority label.
PredictionSet MajorityVote(const PredictionSet& preds, TieBreak tie_break = TieBreak::kError);

// A named partition of record indices.
struct Group {
  std::string name;
  std::vector<std::size_t> members;
};
using Partition = std::vector<Group>;

// These operate on the canonical-swap (SO) records only.
// DISPREFERRED: indefinite argument first, definite second in H1.
Partition DefinitenessGroups(std::span<const PairRecord> gold);
Partition NumberGroups(std::span<const PairRecord> gold);

enum class Role { kSubject, kObject };
enum class NounKindFilter { kCommon, kProper };
// Partition by the premise subject's (object's) gender, restricted to
// arguments of the given noun kind.
Partition GenderGroups(std::span<const PairRecord> gold, Role role, NounKindFilter kind);

GroupSpec MembersOf(std::span<const PairRecord> gold, const Group& group);

struct ZTest {
  double z = 0.0;
  double p_two_sided = 1.0;
};

// Pooled two-proportion z-test. Throws Error(kInvalidArgument) unless
// 0 <= k <= n and n >= 1 for both samples.
ZTest TwoProportionZTest(std::size_t k1, std::size_t n1, std::size_t k2, std::size_t n2);

// Standard normal CDF via erfc.
double NormalCdf(double x);

struct MeanSd {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd MeanAndSd(std::span<const double> values, SdKind sd = SdKind::kPopulation);

// Aggregates externally computed sentence scores into "premise", "H1",
// "H2" (and "H3" when present) groups. Premise sentences are keyed by
// premise id, hypotheses by pair id; each premise is counted once.
std::map<std::string, MeanSd> PllAggregate(const std::map<std::string, double>& scores,
                                           std::span<const PairRecord> gold,
                                           SdKind sd = SdKind::kPopulation);

struct ReportOptions {
  bool gender = true;
  bool definiteness = true;
  bool number = true;
  SdKind sd = SdKind::kPopulation;
  TieBreak tie_break = TieBreak::kError;
};

struct GroupComparison {
  std::string name;
  AccuracyResult first;
  AccuracyResult second;
  ZTest test;
};

struct AnalysisReport {
  std::vector<AccuracyResult> subsets;        // mean over runs
  std::vector<AccuracyResult> ensemble;       // majority vote
  std::vector<GroupComparison> comparisons;   // on the ensemble, SO only
};

AnalysisReport Analyze(std::span<const PairRecord> gold, const PredictionSet& preds,
                       const ReportOptions& options);

std::string FormatReportText(const AnalysisReport& report);
// One JSON object per line: {"section","group","n","k","accuracy","sd",...}.
std::string FormatReportJsonl(const AnalysisReport& report);

}  // namespace wogli

#endif  // WOGLI_ANALYSIS_H_
