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

#ifndef WOGLI_ERROR_H_
#define WOGLI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wogli {

// Machine-readable error categories. The CLI prints these as E_* codes.
enum class ErrorCode {
  kParse,            // malformed input document or row
  kDuplicate,        // duplicate lemma or id
  kInvalidArgument,  // precondition violated by the caller
  kUnrepresentable,  // morphological combination that German lacks
  kExhausted,        // not enough distinct lexicalizations for a pattern
  kConstraint,       // augmentation constraints unsatisfiable
  kMissingId,        // gold id absent from predictions or scores
  kTie,              // majority vote tie without a tie-break policy
  kIo,               // unreadable or unwritable file
  kValidation,       // lexicon failed validation
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wogli

#endif  // WOGLI_ERROR_H_
