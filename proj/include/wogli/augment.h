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

#ifndef WOGLI_AUGMENT_H_
#define WOGLI_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wogli/record.h"

namespace wogli {

struct VerbRange {
  std::size_t min = 0;
  std::size_t max = 0;
};

struct AugmentationPlan {
  std::size_t premises_per_pattern = 0;
  // Bounds on premises per verb lemma, over every verb in the pool.
  std::optional<VerbRange> verb_range;
  // Every noun form present in the pool must occur in the sample.
  bool require_all_noun_forms = false;
  std::uint64_t seed = 0;
  std::size_t retry_budget = 10000;
};

// 61 premises per pattern, verbs 18..25, all noun forms.
AugmentationPlan Plan1037(std::uint64_t seed);
// 6 premises per pattern, verbs 1..4.
AugmentationPlan Plan102(std::uint64_t seed);

struct AugmentationSplit {
  std::vector<PairRecord> augmentation;
  std::vector<PairRecord> remainder;
};

// Samples whole premises (all their hypotheses) per pattern, then repairs
// the sample by swapping premises within a pattern until the plan's
// constraints hold. Each swap attempt consumes one unit of the retry
// budget; Error(kConstraint) names the constraints still violated when it
// runs out. `pool` restricts the candidates (e.g. a previous 1,037-premise
// sample); the remainder is always `data` minus the sample.
AugmentationSplit SampleAugmentation(std::span<const PairRecord> data,
                                     const AugmentationPlan& plan,
                                     std::optional<std::span<const PairRecord>> pool = std::nullopt);

struct NliRow {
  std::string premise;
  std::string hypothesis;
  std::string label;  // entailment | neutral | contradiction

  bool operator==(const NliRow&) const = default;
  auto operator<=>(const NliRow&) const = default;
};

enum class NeLabel { kNeutral, kContradiction };

// "premise<TAB>hypothesis<TAB>label" rows; Error(kParse) names the row.
std::vector<NliRow> ReadNliTsv(std::istream& in);
void WriteNliTsv(std::span<const NliRow> rows, std::ostream& out);

// base ++ augmentation (ENTAILED -> entailment, NOT_ENTAILED -> ne_label),
// shuffled by `seed`.
std::vector<NliRow> MergeTraining(std::vector<NliRow> base,
                                  std::span<const PairRecord> augmentation, NeLabel ne_label,
                                  std::uint64_t seed);

}  // namespace wogli

#endif  // WOGLI_AUGMENT_H_
