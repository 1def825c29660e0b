// Copyright 2026 The circperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCPERM_TOOLS_CLI_H_
#define CIRCPERM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace circperm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;  // also any failed verification
inline constexpr int kBudget = 2;
inline constexpr int kInput = 3;

// Runs one command line (args[0] is the program name).
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circperm::cli

#endif  // CIRCPERM_TOOLS_CLI_H_
