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

#include <gtest/gtest.h>

#include "circperm/errors.h"
#include "circperm/growth.h"
#include "circperm/pipeline.h"
#include "circperm/report.h"
#include "test_util.h"

namespace circperm {
namespace {

using testing_util::Spec;

RunReport DerivedReport(const CirculantSpec& spec) {
  const DeriveResult d = Derive(spec);
  RunReport r;
  r.command = "derive";
  r.jumps = spec.JumpsText();
  if (!spec.is_constant()) r.size = spec.SizeText();
  if (spec.weighted()) r.weights = spec.WeightsText();
  r.name = spec.Name();
  r.normalized = d.normalized.Name();
  r.recurrence = d.recurrence;
  r.annihilator = d.annihilator;
  r.terms_base = d.terms_base;
  r.terms = d.terms;
  r.growth = Growth(d.recurrence);
  r.ledger.push_back({4, "ryser", 9, TermAt(d, 4)});
  r.timings_ms["derive"] = 1.5;
  return r;
}

TEST(RunReport, JsonRoundTrip) {
  for (const auto& spec : {Spec("0,1,2"), Spec("0,n,2n-1", "3n"), Spec("0,1,2", "", "2,1,1/2")}) {
    const RunReport r = DerivedReport(spec);
    const Json j = r.ToJson();
    EXPECT_EQ(j.at("schema"), 1);
    const RunReport back = RunReport::FromJson(Json::parse(j.dump()));
    EXPECT_EQ(back.ToJson().dump(), j.dump()) << spec.Name();
    EXPECT_EQ(back.Spec(), spec);
    EXPECT_EQ(back.recurrence, r.recurrence);
  }
}

// Rerunning the input a report echoes reproduces its recurrence byte for byte.
TEST(RunReport, RerunGivesIdenticalRecurrence) {
  for (const auto& spec : {Spec("-1,0,1"), Spec("2,n+1,2n+2", "3n+1"), Spec("0,1,3", "", "3,1,2")}) {
    const Json first = DerivedReport(spec).ToJson();
    const CirculantSpec again = RunReport::FromJson(first).Spec();
    const Json second = DerivedReport(again).ToJson();
    EXPECT_EQ(second.at("recurrence").dump(), first.at("recurrence").dump());
  }
}

TEST(RunReport, NumbersAreDecimalStrings) {
  const Json j = DerivedReport(Spec("0,1,2")).ToJson();
  EXPECT_EQ(j.at("recurrence").at("coeffs"), Json::parse(R"(["2","0","-1"])"));
  EXPECT_EQ(j.at("recurrence").at("initials").at("3"), "6");
  EXPECT_EQ(j.at("annihilator").at("coeffs"), Json::parse(R"(["1","0","-2","1"])"));
  EXPECT_EQ(j.at("recurrence").at("text"), "T(n) = 2 T(n-1) - T(n-3)");
  EXPECT_TRUE(j.at("all_pass").get<bool>());
}

TEST(RunReport, RejectsOtherSchemas) {
  Json j = DerivedReport(Spec("0,1,2")).ToJson();
  j["schema"] = 2;
  EXPECT_THROW(RunReport::FromJson(j), SyntaxError);
  j["schema"] = 1;
  j["recurrence"]["coeffs"][0] = 2;
  EXPECT_THROW(RunReport::FromJson(j), SyntaxError);
}

TEST(LedgerEntry, Tolerance) {
  EXPECT_TRUE((LedgerEntry{1, "x", 5, 5}).pass());
  EXPECT_FALSE((LedgerEntry{1, "x", 5, 6}).pass());
  EXPECT_TRUE((LedgerEntry{1, "x", Rational(1618, 1000), Rational(16181, 10000), Rational(1, 1000)})
                  .pass());
  RunReport r;
  r.ledger.push_back({1, "x", 1, 2});
  EXPECT_FALSE(r.AllPass());
  EXPECT_FALSE(r.ToJson().at("all_pass").get<bool>());
}

TEST(RunReport, Table) {
  const std::string table = DerivedReport(Spec("0,1,2")).ToTable();
  EXPECT_NE(table.find("recurrence   T(n) = 2 T(n-1) - T(n-3)"), std::string::npos);
  EXPECT_NE(table.find("initials     6, 9, 13  (n = 3..5)"), std::string::npos);
  EXPECT_NE(table.find("annihilator  x^3 - 2x^2 + 1"), std::string::npos);
  EXPECT_NE(table.find("verification 1/1 pass"), std::string::npos);
}

TEST(TransferToJson, WorkedExample012) {
  const DeriveResult d = Derive(Spec("0,1,2"));
  const Json j = TransferToJson(d.system, true);
  EXPECT_EQ(j.at("width"), 2);
  EXPECT_EQ(j.at("a").size(), 16u);
  EXPECT_EQ(j.at("blocks").size(), 3u);
  EXPECT_EQ(j.at("blocks")[1].at("matrix"), Json::parse(R"([["1","1"],["1","0"]])"));
  EXPECT_FALSE(TransferToJson(d.system).contains("a"));
}

}  // namespace
}  // namespace circperm
