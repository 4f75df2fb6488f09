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

#ifndef WOGLI_DATASET_IO_H_
#define WOGLI_DATASET_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wogli/record.h"

namespace wogli {

enum class PairFormat { kRowJson, kTsv };
std::optional<PairFormat> ParsePairFormat(std::string_view s);  // "jsonl" | "tsv"

// Writes records and returns the number of bytes written. Text fields must
// not contain tabs or newlines (Error(kInvalidArgument)).
std::size_t WritePairs(std::span<const PairRecord> records, PairFormat format, std::ostream& out);
std::size_t WritePairsFile(std::span<const PairRecord> records, PairFormat format,
                           const std::filesystem::path& path);

// Reads either format; a first line starting with '{' selects ROW_JSON.
std::vector<PairRecord> ReadPairs(std::istream& in);
std::vector<PairRecord> ReadPairsFile(const std::filesystem::path& path);

// Per-id predicted labels, one per run, collapsed to two classes.
struct PredictionSet {
  std::size_t runs = 0;
  std::map<std::string, std::vector<Label>> labels;

  bool operator==(const PredictionSet&) const = default;
};

// entailment/entailed -> ENTAILED; neutral/contradiction/non-entailed ->
// NOT_ENTAILED.
std::optional<Label> CollapseLabel(std::string_view label);

// TSV rows "id<TAB>run_index<TAB>label" with an optional "id..." header.
// Every id must carry exactly one label for each run in [0, runs).
PredictionSet ReadPredictions(std::istream& in, std::size_t runs);
PredictionSet ReadPredictionsFile(const std::filesystem::path& path, std::size_t runs);
void WritePredictions(const PredictionSet& preds, std::ostream& out);

// "sentence_id<TAB>score" rows.
std::map<std::string, double> ReadScores(std::istream& in);

// Splits on '\t' exactly; no quoting.
std::vector<std::string_view> SplitTabs(std::string_view line);

}  // namespace wogli

#endif  // WOGLI_DATASET_IO_H_
