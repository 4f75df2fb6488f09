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

#ifndef WOGLI_GENERATOR_H_
#define WOGLI_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wogli/lexicon.h"
#include "wogli/morphology.h"
#include "wogli/patterns.h"
#include "wogli/record.h"

namespace wogli {

struct SeedPath {
  std::size_t pattern_index = 0;
  std::size_t draw_index = 0;

  bool operator==(const SeedPath&) const = default;
};

struct PremiseInstance {
  Pattern pattern;
  NpSpec subject;
  NpSpec object;  // indirect object for ditransitive verbs
  VerbEntry verb;
  std::optional<NpSpec> direct_object;  // ditransitive only, always DEF
  SeedPath seed_path;

  bool operator==(const PremiseInstance&) const = default;
};

// Throws Error(kInvalidArgument) when the instance breaks its invariants.
void CheckInstance(const PremiseInstance& p);

struct RealizeOptions {
  // "Der Arzt warnt den Kunden ." instead of "... Kunden."
  bool spaced_period = false;
};

std::vector<std::string> PremiseTokens(const PremiseInstance& p);
std::string JoinSentence(const std::vector<std::string>& tokens, const RealizeOptions& options);

std::string RealizePremise(const PremiseInstance& p, const RealizeOptions& options = {});
// Roles swapped, canonical order: the non-entailed hypothesis.
std::string DeriveH1(const PremiseInstance& p, const RealizeOptions& options = {});
// Roles kept, object fronted: the entailed hypothesis.
std::string DeriveH2(const PremiseInstance& p, const RealizeOptions& options = {});
// Roles swapped, object fronted. Accusative instances only.
std::string DeriveH3(const PremiseInstance& p, const RealizeOptions& options = {});

// The instance whose premise is H1 of `p`.
PremiseInstance SwapArguments(const PremiseInstance& p);
// Replaces the subject by a personal pronoun. Accusative instances only.
PremiseInstance Pronominalize(const PremiseInstance& p);

enum class DatasetName { kWogli, kPSubject, kDative, kDitransitive, kOsHard };
std::string_view ToString(DatasetName name);  // "wogli", "p-subject", ...
std::optional<DatasetName> ParseDatasetName(std::string_view s);
std::string_view SubsetName(DatasetName name);  // "wogli-dative", ...

struct GenerateOptions {
  std::uint64_t seed = 0;
  std::size_t per_pattern = 1000;
  // Sample with replacement and drop duplicate premises afterwards; the
  // output size then depends on the seed.
  bool with_replacement_dedup = false;
  bool spaced_period = false;
  // p-subject only: keep premises whose object is a proper name. These
  // pronominalize to three-word sentences ("Er warnt David.").
  bool keep_name_objects = false;
  std::size_t workers = 1;
};

// Draws premises for `patterns` from per-pattern streams keyed by
// (seed, pattern index). Output is ordered by (pattern index, draw index).
// Throws Error(kExhausted) when per_pattern exceeds the distinct
// lexicalizations of a pattern in exact mode.
std::vector<PremiseInstance> SamplePremises(std::span<const Pattern> patterns,
                                            const Lexicon& lex,
                                            const GenerateOptions& options);

// Number of distinct lexicalizations of `p` under `lex`.
std::uint64_t LexicalizationCount(const Pattern& p, const Lexicon& lex);

std::vector<PairRecord> GenerateSet(DatasetName name, const Lexicon& lex,
                                    const GenerateOptions& options);

// Pair records for one premise instance: {H1, H2} or {H3}.
std::vector<PairRecord> PairsForPremise(const PremiseInstance& p, std::string_view subset,
                                        std::string_view premise_id,
                                        const std::vector<HypKind>& kinds,
                                        const RealizeOptions& options);

// Rebuilds the premise instance of a record from its metadata.
PremiseInstance InstanceFromRecord(const PairRecord& record, const Lexicon& lex);

// One H3 pair per distinct premise of `wogli` (records need metadata).
// Punctuation style follows the source premises.
std::vector<PairRecord> DeriveOsHard(std::span<const PairRecord> wogli, const Lexicon& lex);

}  // namespace wogli

#endif  // WOGLI_GENERATOR_H_
