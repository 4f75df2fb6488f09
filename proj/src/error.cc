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

#include "wogli/error.h"

namespace wogli {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kDuplicate: return "E_DUPLICATE";
    case ErrorCode::kInvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::kUnrepresentable: return "E_UNREPRESENTABLE";
    case ErrorCode::kExhausted: return "E_EXHAUSTED";
    case ErrorCode::kConstraint: return "E_CONSTRAINT";
    case ErrorCode::kMissingId: return "E_MISSING_ID";
    case ErrorCode::kTie: return "E_TIE";
    case ErrorCode::kIo: return "E_IO";
    case ErrorCode::kValidation: return "E_VALIDATION";
  }
  return "E_UNKNOWN";
}

}  // namespace wogli
