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

#ifndef CIRCPERM_ERRORS_H_
#define CIRCPERM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace circperm {

// Every failure the library reports falls into one of three families, which
// the command-line tool maps onto exit codes.
enum class ErrorFamily {
  kInternal = 1,  // an invariant the derivation relies on was violated
  kBudget = 2,    // the request exceeds a configured oracle or state budget
  kInput = 3,     // malformed or inconsistent user input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorFamily family, const std::string& kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), family_(family), kind_(kind) {}

  ErrorFamily family() const { return family_; }
  const std::string& kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(family_); }

 private:
  ErrorFamily family_;
  std::string kind_;
};

#define CIRCPERM_DEFINE_ERROR(Name, Family)                      \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what)                       \
        : Error(ErrorFamily::Family, #Name, what) {}             \
  }

CIRCPERM_DEFINE_ERROR(SyntaxError, kInput);
CIRCPERM_DEFINE_ERROR(InconsistencyError, kInput);
CIRCPERM_DEFINE_ERROR(CollisionError, kInput);
CIRCPERM_DEFINE_ERROR(SizeCapError, kBudget);
CIRCPERM_DEFINE_ERROR(StateBudgetError, kBudget);
CIRCPERM_DEFINE_ERROR(BlockStructureError, kInternal);
CIRCPERM_DEFINE_ERROR(AnnihilationError, kInternal);
CIRCPERM_DEFINE_ERROR(NoRecurrenceError, kInternal);
CIRCPERM_DEFINE_ERROR(DecompositionError, kInternal);
CIRCPERM_DEFINE_ERROR(OracleMismatchError, kInternal);

#undef CIRCPERM_DEFINE_ERROR

}  // namespace circperm

#endif  // CIRCPERM_ERRORS_H_
