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

#ifndef CIRCPERM_REPORT_H_
#define CIRCPERM_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "circperm/growth.h"
#include "circperm/polynomial.h"
#include "circperm/recurrence.h"
#include "circperm/spec.h"
#include "circperm/transfer.h"

namespace circperm {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// One comparison against an oracle or a pinned value. Exact unless a
// tolerance is given.
struct LedgerEntry {
  int64_t n = 0;
  std::string oracle;  // "ryser", "enumeration", "hamiltonian", ...
  Rational expected;
  Rational actual;
  Rational tolerance = 0;
  bool pass() const { return abs(expected - actual) <= tolerance; }
};

// Everything one CLI run produced, self-contained enough to rerun it.
struct RunReport {
  std::string command;
  std::string jumps;
  std::optional<std::string> size;
  std::optional<std::string> weights;
  std::string name;
  std::string normalized;
  // Moment order for "moments", absent otherwise.
  std::optional<int> order;

  std::optional<Recurrence> recurrence;
  std::optional<Polynomial> annihilator;
  int64_t terms_base = 0;
  std::vector<Rational> terms;
  std::optional<GrowthEstimate> growth;
  std::vector<LedgerEntry> ledger;
  std::map<std::string, double> timings_ms;
  Json extra = Json::object();

  bool AllPass() const;
  Json ToJson() const;
  static RunReport FromJson(const Json& j);
  // Human-readable layout: recurrence, initial values and growth, then the
  // ledger.
  std::string ToTable() const;
  // The spec echoed in the report.
  CirculantSpec Spec() const;
};

Json RecurrenceToJson(const Recurrence& rec);
Recurrence RecurrenceFromJson(const Json& j);
// Ascending coefficients as decimal strings.
Json PolynomialToJson(const Polynomial& p);
Polynomial PolynomialFromJson(const Json& j);
Json MatrixToJson(const RationalMatrix& m);
Json VectorToJson(const std::vector<Rational>& v);
Json GrowthToJson(const GrowthEstimate& g);

// Debug dump of a transfer system. `full` adds the 2^(2w) square A.
Json TransferToJson(const TransferSystem& sys, bool full = false);

}  // namespace circperm

#endif  // CIRCPERM_REPORT_H_
