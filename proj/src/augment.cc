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

#include "wogli/augment.h"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "wogli/dataset_io.h"
#include "wogli/error.h"
#include "wogli/random.h"

namespace wogli {
namespace {

struct Premise {
  std::string id;
  std::size_t pattern = 0;
  std::size_t verb = 0;
  std::vector<std::size_t> forms;
};

// Premises of the pool plus the indices the repair loop needs.
struct PoolIndex {
  std::vector<Premise> premises;
  std::vector<std::string> pattern_names;
  std::vector<std::vector<std::size_t>> by_pattern;
  std::vector<std::string> verbs;
  std::vector<std::vector<std::size_t>> by_verb;
  std::vector<std::string> forms;
  std::vector<std::vector<std::size_t>> by_form;
};

std::size_t Intern(std::string_view key, std::vector<std::string>& names,
                   std::unordered_map<std::string, std::size_t>& ids) {
  auto [it, inserted] = ids.emplace(std::string(key), names.size());
  if (inserted) names.emplace_back(key);
  return it->second;
}

PoolIndex BuildIndex(std::span<const PairRecord> pool, bool need_metadata) {
  PoolIndex index;
  std::unordered_map<std::string, std::size_t> premise_ids, pattern_ids, verb_ids, form_ids;
  std::vector<std::set<std::size_t>> forms;
  for (const auto& r : pool) {
    if (need_metadata && !r.metadata)
      throw Error(ErrorCode::kInvalidArgument,
                  "record " + r.id + " has no metadata; verb and noun constraints need ROW_JSON input");
    std::string premise_id(r.PremiseId());
    auto [it, inserted] = premise_ids.emplace(premise_id, index.premises.size());
    if (inserted) {
      Premise p;
      p.id = premise_id;
      p.pattern = Intern(r.pattern, index.pattern_names, pattern_ids);
      if (r.metadata) p.verb = Intern(r.metadata->verb_lemma, index.verbs, verb_ids);
      index.premises.push_back(std::move(p));
      forms.emplace_back();
    }
    Premise& p = index.premises[it->second];
    if (index.pattern_names[p.pattern] != r.pattern)
      throw Error(ErrorCode::kInvalidArgument, "premise " + premise_id + " spans several patterns");
    if (r.metadata) {
      for (const auto& f : r.metadata->noun_forms) forms[it->second].insert(Intern(f, index.forms, form_ids));
    }
  }
  index.by_pattern.resize(index.pattern_names.size());
  index.by_verb.resize(index.verbs.size());
  index.by_form.resize(index.forms.size());
  for (std::size_t i = 0; i < index.premises.size(); ++i) {
    Premise& p = index.premises[i];
    p.forms.assign(forms[i].begin(), forms[i].end());
    index.by_pattern[p.pattern].push_back(i);
    if (need_metadata) index.by_verb[p.verb].push_back(i);
    for (std::size_t f : p.forms) index.by_form[f].push_back(i);
  }
  return index;
}

class Sample {
 public:
  Sample(const PoolIndex& index, const AugmentationPlan& plan)
      : index_(index), plan_(plan), selected_(index.premises.size(), false),
        verb_counts_(index.verbs.size(), 0), form_counts_(index.forms.size(), 0) {}

  bool Selected(std::size_t i) const { return selected_[i]; }

  void Add(std::size_t i) {
    selected_[i] = true;
    if (!verb_counts_.empty()) ++verb_counts_[index_.premises[i].verb];
    for (std::size_t f : index_.premises[i].forms) ++form_counts_[f];
  }

  void Remove(std::size_t i) {
    selected_[i] = false;
    if (!verb_counts_.empty()) --verb_counts_[index_.premises[i].verb];
    for (std::size_t f : index_.premises[i].forms) --form_counts_[f];
  }

  long VerbPenalty(std::size_t count) const {
    if (!plan_.verb_range) return 0;
    long c = static_cast<long>(count);
    long lo = static_cast<long>(plan_.verb_range->min);
    long hi = static_cast<long>(plan_.verb_range->max);
    return c < lo ? lo - c : (c > hi ? c - hi : 0);
  }

  // Change of the total violation if `out` is replaced by `in`.
  long SwapDelta(std::size_t out, std::size_t in) const {
    const Premise& a = index_.premises[out];
    const Premise& b = index_.premises[in];
    long delta = 0;
    if (a.verb != b.verb) {
      delta += VerbPenalty(verb_counts_[a.verb] - 1) - VerbPenalty(verb_counts_[a.verb]);
      delta += VerbPenalty(verb_counts_[b.verb] + 1) - VerbPenalty(verb_counts_[b.verb]);
    }
    if (plan_.require_all_noun_forms) {
      for (std::size_t f : a.forms) {
        if (form_counts_[f] == 1 && !std::binary_search(b.forms.begin(), b.forms.end(), f)) ++delta;
      }
      for (std::size_t f : b.forms) {
        if (form_counts_[f] == 0) --delta;
      }
    }
    return delta;
  }

  struct Violation {
    enum Kind { kVerbLow, kVerbHigh, kForm } kind;
    std::size_t what;
  };

  std::vector<Violation> Violations() const {
    std::vector<Violation> out;
    if (plan_.verb_range) {
      for (std::size_t v = 0; v < verb_counts_.size(); ++v) {
        if (verb_counts_[v] < plan_.verb_range->min) out.push_back({Violation::kVerbLow, v});
        if (verb_counts_[v] > plan_.verb_range->max) out.push_back({Violation::kVerbHigh, v});
      }
    }
    if (plan_.require_all_noun_forms) {
      for (std::size_t f = 0; f < form_counts_.size(); ++f) {
        if (form_counts_[f] == 0) out.push_back({Violation::kForm, f});
      }
    }
    return out;
  }

  std::string Describe(const std::vector<Violation>& violations) const {
    std::string verbs, forms;
    std::size_t missing = 0;
    for (const auto& v : violations) {
      if (v.kind == Violation::kForm) {
        if (++missing <= 5) forms += (forms.empty() ? "" : ", ") + index_.forms[v.what];
        continue;
      }
      verbs += (verbs.empty() ? "" : ", ") + index_.verbs[v.what] + "=" +
               std::to_string(verb_counts_[v.what]);
    }
    std::string out;
    if (!verbs.empty()) {
      out += "verb range [" + std::to_string(plan_.verb_range->min) + ", " +
             std::to_string(plan_.verb_range->max) + "] violated by " + verbs;
    }
    if (missing) {
      if (!out.empty()) out += "; ";
      out += "all noun forms required, " + std::to_string(missing) + " missing (" + forms +
             (missing > 5 ? ", ..." : "") + ")";
    }
    return out;
  }

 private:
  const PoolIndex& index_;
  const AugmentationPlan& plan_;
  std::vector<bool> selected_;
  std::vector<std::size_t> verb_counts_;
  std::vector<std::size_t> form_counts_;
};

template <typename Pred>
std::vector<std::size_t> Filter(const std::vector<std::size_t>& items, Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i : items) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

// Best partner for a fixed half of a swap; ties go to the first candidate
// after a random offset.
std::optional<std::pair<std::size_t, long>> BestPartner(const std::vector<std::size_t>& candidates,
                                                        std::function<long(std::size_t)> delta, Rng& rng) {
  if (candidates.empty()) return std::nullopt;
  std::size_t offset = rng.Below(candidates.size());
  std::optional<std::pair<std::size_t, long>> best;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    std::size_t c = candidates[(offset + k) % candidates.size()];
    long d = delta(c);
    if (!best || d < best->second) best = {c, d};
  }
  return best;
}

}  // namespace

AugmentationPlan Plan1037(std::uint64_t seed) {
  return AugmentationPlan{61, VerbRange{18, 25}, true, seed, 10000};
}

AugmentationPlan Plan102(std::uint64_t seed) {
  return AugmentationPlan{6, VerbRange{1, 4}, false, seed, 10000};
}

AugmentationSplit SampleAugmentation(std::span<const PairRecord> data, const AugmentationPlan& plan,
                                     std::optional<std::span<const PairRecord>> pool) {
  if (plan.verb_range && plan.verb_range->min > plan.verb_range->max)
    throw Error(ErrorCode::kInvalidArgument, "verb range minimum exceeds maximum");
  std::span<const PairRecord> candidates = pool ? *pool : data;
  AugmentationSplit split;
  if (plan.premises_per_pattern == 0) {
    split.remainder.assign(data.begin(), data.end());
    return split;
  }
  const bool need_metadata = plan.verb_range.has_value() || plan.require_all_noun_forms;
  PoolIndex index = BuildIndex(candidates, need_metadata);
  for (std::size_t p = 0; p < index.by_pattern.size(); ++p) {
    if (index.by_pattern[p].size() < plan.premises_per_pattern)
      throw Error(ErrorCode::kConstraint, "pattern " + index.pattern_names[p] + " has only " +
                                              std::to_string(index.by_pattern[p].size()) +
                                              " premises, " + std::to_string(plan.premises_per_pattern) +
                                              " requested");
  }

  Rng rng(plan.seed);
  Sample sample(index, plan);
  for (const auto& members : index.by_pattern) {
    std::vector<std::size_t> order = members;
    rng.Shuffle(order);
    for (std::size_t k = 0; k < plan.premises_per_pattern; ++k) sample.Add(order[k]);
  }

  std::size_t budget = plan.retry_budget;
  auto violations = sample.Violations();
  while (!violations.empty() && budget > 0) {
    --budget;
    const auto v = violations[rng.Below(violations.size())];
    std::optional<std::size_t> out, in;
    std::optional<std::pair<std::size_t, long>> best;
    if (v.kind == Sample::Violation::kVerbHigh) {
      auto chosen = Filter(index.by_verb[v.what], [&](std::size_t i) { return sample.Selected(i); });
      out = chosen[rng.Below(chosen.size())];
      auto pool_in = Filter(index.by_pattern[index.premises[*out].pattern],
                            [&](std::size_t i) { return !sample.Selected(i); });
      best = BestPartner(pool_in, [&](std::size_t i) { return sample.SwapDelta(*out, i); }, rng);
      if (best) in = best->first;
    } else {
      const auto& holders = v.kind == Sample::Violation::kForm ? index.by_form[v.what] : index.by_verb[v.what];
      auto open = Filter(holders, [&](std::size_t i) { return !sample.Selected(i); });
      if (open.empty()) continue;
      in = open[rng.Below(open.size())];
      auto pool_out = Filter(index.by_pattern[index.premises[*in].pattern],
                             [&](std::size_t i) { return sample.Selected(i); });
      best = BestPartner(pool_out, [&](std::size_t i) { return sample.SwapDelta(i, *in); }, rng);
      if (best) out = best->first;
    }
    if (!best || best->second > 0) continue;
    sample.Remove(*out);
    sample.Add(*in);
    violations = sample.Violations();
  }
  if (!violations.empty())
    throw Error(ErrorCode::kConstraint, "retry budget of " + std::to_string(plan.retry_budget) +
                                            " exhausted: " + sample.Describe(violations));

  std::unordered_set<std::string> chosen;
  for (std::size_t i = 0; i < index.premises.size(); ++i) {
    if (sample.Selected(i)) chosen.insert(index.premises[i].id);
  }
  for (const auto& r : candidates) {
    if (chosen.count(std::string(r.PremiseId()))) split.augmentation.push_back(r);
  }
  for (const auto& r : data) {
    if (!chosen.count(std::string(r.PremiseId()))) split.remainder.push_back(r);
  }
  return split;
}

std::vector<NliRow> ReadNliTsv(std::istream& in) {
  std::vector<NliRow> rows;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) continue;
    auto fields = SplitTabs(text);
    if (fields.size() != 3)
      throw Error(ErrorCode::kParse, "training row " + std::to_string(line) + ": expected 3 tab-separated fields");
    if (fields[2] != "entailment" && fields[2] != "neutral" && fields[2] != "contradiction")
      throw Error(ErrorCode::kParse, "training row " + std::to_string(line) + ": bad label '" +
                                         std::string(fields[2]) + "'");
    rows.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2])});
  }
  return rows;
}

void WriteNliTsv(std::span<const NliRow> rows, std::ostream& out) {
  for (const auto& r : rows) out << r.premise << '\t' << r.hypothesis << '\t' << r.label << '\n';
}

std::vector<NliRow> MergeTraining(std::vector<NliRow> base, std::span<const PairRecord> augmentation,
                                  NeLabel ne_label, std::uint64_t seed) {
  const char* ne = ne_label == NeLabel::kNeutral ? "neutral" : "contradiction";
  base.reserve(base.size() + augmentation.size());
  for (const auto& r : augmentation) {
    base.push_back({r.premise, r.hypothesis, r.label == Label::kEntailed ? "entailment" : ne});
  }
  Rng rng(seed);
  rng.Shuffle(base);
  return base;
}

}  // namespace wogli
