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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wogli/analysis.h"
#include "wogli/augment.h"
#include "wogli/dataset_io.h"
#include "wogli/error.h"
#include "wogli/generator.h"
#include "wogli/lexicon.h"
#include "wogli/patterns.h"

namespace py = pybind11;

namespace {

using wogli::PairRecord;

wogli::Lexicon LexiconFor(const std::optional<std::string>& path) {
  return path ? wogli::LoadLexiconFile(*path) : wogli::BundledLexicon();
}

wogli::PairFormat FormatFor(const std::string& name) {
  auto f = wogli::ParsePairFormat(name);
  if (!f) throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
  return *f;
}

py::dict RecordDict(const PairRecord& r) {
  py::dict d;
  d["id"] = r.id;
  d["subset"] = r.subset;
  d["premise"] = r.premise;
  d["hypothesis"] = r.hypothesis;
  d["label"] = std::string(wogli::ToString(r.label));
  d["hyp_kind"] = std::string(wogli::ToString(r.hyp_kind));
  d["pattern"] = r.pattern;
  if (r.metadata) {
    d["verb"] = r.metadata->verb_lemma;
    d["noun_forms"] = r.metadata->noun_forms;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "German word-order NLI challenge set generator";

  static py::exception<wogli::Error> error_type(m, "WogliError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const wogli::Error& e) {
      std::string msg = "[" + std::string(wogli::ErrorCodeName(e.code())) + "] " + e.what();
      py::set_error(error_type, msg.c_str());
    }
  });

  py::class_<PairRecord>(m, "PairRecord")
      .def_readonly("id", &PairRecord::id)
      .def_readonly("subset", &PairRecord::subset)
      .def_readonly("premise", &PairRecord::premise)
      .def_readonly("hypothesis", &PairRecord::hypothesis)
      .def_readonly("pattern", &PairRecord::pattern)
      .def_property_readonly("label", [](const PairRecord& r) { return std::string(wogli::ToString(r.label)); })
      .def_property_readonly("hyp_kind",
                             [](const PairRecord& r) { return std::string(wogli::ToString(r.hyp_kind)); })
      .def_property_readonly("premise_id", [](const PairRecord& r) { return std::string(r.PremiseId()); })
      .def("to_dict", &RecordDict)
      .def("__repr__", [](const PairRecord& r) { return "<PairRecord " + r.id + ">"; });

  m.def(
      "generate",
      [](const std::string& set, std::uint64_t seed, std::size_t per_pattern, bool with_replacement_dedup,
         bool spaced_period, bool keep_name_objects, std::size_t workers,
         const std::optional<std::string>& lexicon) {
        auto name = wogli::ParseDatasetName(set);
        if (!name) throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "unknown set '" + set + "'");
        wogli::GenerateOptions options;
        options.seed = seed;
        options.per_pattern = per_pattern;
        options.with_replacement_dedup = with_replacement_dedup;
        options.spaced_period = spaced_period;
        options.keep_name_objects = keep_name_objects;
        options.workers = workers;
        auto lex = LexiconFor(lexicon);
        py::gil_scoped_release release;
        return wogli::GenerateSet(*name, lex, options);
      },
      py::arg("set"), py::arg("seed"), py::arg("per_pattern") = 1000, py::arg("with_replacement_dedup") = false,
      py::arg("spaced_period") = false, py::arg("keep_name_objects") = false, py::arg("workers") = 1,
      py::arg("lexicon") = py::none(), "Generate a challenge set as a list of PairRecord.");

  m.def(
      "derive_os_hard",
      [](const std::vector<PairRecord>& wogli, const std::optional<std::string>& lexicon) {
        return wogli::DeriveOsHard(wogli, LexiconFor(lexicon));
      },
      py::arg("records"), py::arg("lexicon") = py::none());

  m.def(
      "write_pairs",
      [](const std::vector<PairRecord>& records, const std::string& format) {
        std::ostringstream out;
        wogli::WritePairs(records, FormatFor(format), out);
        return out.str();
      },
      py::arg("records"), py::arg("format") = "jsonl");

  m.def(
      "read_pairs",
      [](const std::string& text) {
        std::istringstream in(text);
        return wogli::ReadPairs(in);
      },
      py::arg("text"));

  m.def(
      "sample_augmentation",
      [](const std::vector<PairRecord>& data, const std::string& plan_name, std::uint64_t seed,
         const std::optional<std::vector<PairRecord>>& pool) {
        wogli::AugmentationPlan plan;
        if (plan_name == "1037") {
          plan = wogli::Plan1037(seed);
        } else if (plan_name == "102") {
          plan = wogli::Plan102(seed);
        } else {
          throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "unknown plan '" + plan_name + "'");
        }
        auto split = pool ? wogli::SampleAugmentation(data, plan, std::span<const PairRecord>(*pool))
                          : wogli::SampleAugmentation(data, plan);
        return py::make_tuple(split.augmentation, split.remainder);
      },
      py::arg("data"), py::arg("plan"), py::arg("seed"), py::arg("pool") = py::none(),
      "Returns (augmentation, remainder).");

  m.def(
      "analyze",
      [](const std::vector<PairRecord>& gold, const std::map<std::string, std::vector<std::string>>& predictions,
         const std::string& format, bool tie_not_entailed) {
        wogli::PredictionSet preds;
        for (const auto& [id, labels] : predictions) {
          std::vector<wogli::Label> collapsed;
          for (const auto& l : labels) {
            auto c = wogli::CollapseLabel(l);
            if (!c) throw wogli::Error(wogli::ErrorCode::kParse, "unknown label '" + l + "'");
            collapsed.push_back(*c);
          }
          if (preds.runs == 0) preds.runs = collapsed.size();
          if (collapsed.size() != preds.runs)
            throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "runs differ for " + id);
          preds.labels.emplace(id, std::move(collapsed));
        }
        wogli::ReportOptions options;
        options.tie_break = tie_not_entailed ? wogli::TieBreak::kNotEntailed : wogli::TieBreak::kError;
        auto report = wogli::Analyze(gold, preds, options);
        return format == "jsonl" ? wogli::FormatReportJsonl(report) : wogli::FormatReportText(report);
      },
      py::arg("gold"), py::arg("predictions"), py::arg("format") = "text", py::arg("tie_not_entailed") = false,
      "predictions maps pair id to one label per run.");

  m.def(
      "two_proportion_ztest",
      [](std::size_t k1, std::size_t n1, std::size_t k2, std::size_t n2) {
        auto t = wogli::TwoProportionZTest(k1, n1, k2, n2);
        return py::make_tuple(t.z, t.p_two_sided);
      },
      py::arg("k1"), py::arg("n1"), py::arg("k2"), py::arg("n2"));

  m.def(
      "patterns",
      [](const std::string& inventory) {
        std::vector<wogli::Pattern> list;
        if (inventory == "wogli") {
          list = wogli::WogliPatterns();
        } else if (inventory == "dative") {
          list = wogli::ExtendedPatterns(wogli::Government::kDative);
        } else if (inventory == "ditransitive") {
          list = wogli::ExtendedPatterns(wogli::Government::kDitransitive);
        } else if (inventory == "excluded") {
          list = wogli::ExcludedPatterns();
        } else {
          throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "unknown inventory '" + inventory + "'");
        }
        std::vector<std::string> names;
        for (const auto& p : list) names.push_back(p.Name());
        return names;
      },
      py::arg("inventory") = "wogli");

  m.def(
      "is_ambiguous",
      [](const std::string& pattern, const std::string& government) {
        auto g = wogli::ParseGovernment(government);
        if (!g) throw wogli::Error(wogli::ErrorCode::kInvalidArgument, "unknown government '" + government + "'");
        return wogli::IsAmbiguous(wogli::ParsePattern(pattern, *g), wogli::BundledLexicon());
      },
      py::arg("pattern"), py::arg("government") = "ACC");

  m.def(
      "validate_lexicon",
      [](const std::optional<std::string>& path, const std::string& profile) {
        return wogli::ValidateLexicon(LexiconFor(path), profile == "toy" ? wogli::ValidationProfile::kToy
                                                                          : wogli::ValidationProfile::kFull);
      },
      py::arg("path") = py::none(), py::arg("profile") = "full");
}
