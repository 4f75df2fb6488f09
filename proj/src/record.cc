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

#include "wogli/record.h"

namespace wogli {

std::string_view ToString(Label l) {
  return l == Label::kEntailed ? "entailed" : "non-entailed";
}

std::string_view ToString(HypKind k) {
  switch (k) {
    case HypKind::kH1SO: return "H1-SO";
    case HypKind::kH2OS: return "H2-OS";
    case HypKind::kH3OS: return "H3-OS";
    case HypKind::kH1SiO: return "H1-SiO";
    case HypKind::kH2iOS: return "H2-iOS";
  }
  return "?";
}

std::optional<Label> ParseLabel(std::string_view s) {
  if (s == "entailed") return Label::kEntailed;
  if (s == "non-entailed") return Label::kNotEntailed;
  return std::nullopt;
}

std::optional<HypKind> ParseHypKind(std::string_view s) {
  for (HypKind k : {HypKind::kH1SO, HypKind::kH2OS, HypKind::kH3OS, HypKind::kH1SiO,
                    HypKind::kH2iOS}) {
    if (ToString(k) == s) return k;
  }
  return std::nullopt;
}

Label LabelFor(HypKind k) {
  return (k == HypKind::kH2OS || k == HypKind::kH2iOS) ? Label::kEntailed
                                                       : Label::kNotEntailed;
}

bool IsCanonicalSwap(HypKind k) { return k == HypKind::kH1SO || k == HypKind::kH1SiO; }

std::string_view ToString(ArgumentKind k) {
  switch (k) {
    case ArgumentKind::kCommon: return "common";
    case ArgumentKind::kProper: return "proper";
    case ArgumentKind::kPronoun: return "pronoun";
  }
  return "?";
}

std::optional<ArgumentKind> ParseArgumentKind(std::string_view s) {
  if (s == "common") return ArgumentKind::kCommon;
  if (s == "proper") return ArgumentKind::kProper;
  if (s == "pronoun") return ArgumentKind::kPronoun;
  return std::nullopt;
}

std::string_view PairRecord::PremiseId() const {
  std::string_view v = id;
  auto pos = v.rfind('-');
  return pos == std::string_view::npos ? v : v.substr(0, pos);
}

}  // namespace wogli
