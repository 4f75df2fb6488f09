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

#ifndef WOGLI_TOOLS_CLI_H_
#define WOGLI_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace wogli::cli {

// Runs the command line `args` (without the program name). Returns the exit
// code: 0 success, 1 usage error, 2 data or validation error.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wogli::cli

#endif  // WOGLI_TOOLS_CLI_H_
