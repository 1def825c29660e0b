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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circperm/report.h"
#include "cli.h"

namespace circperm::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  args.insert(args.begin(), "circperm");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("circperm_" + name)).string();
}

TEST(Cli, DeriveJson) {
  const Result r = Call({"derive", "--jumps", "0,1,2", "--out", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("recurrence").at("order"), 3);
  EXPECT_EQ(j.at("annihilator").at("text"), "x^3 - 2x^2 + 1");
  EXPECT_TRUE(j.at("all_pass").get<bool>());
}

TEST(Cli, DeriveTableAndTransferDump) {
  const Result r = Call({"derive", "--jumps", "0,1n+0,2n-1", "--size", "3n"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("5 T(n-1) - 5 T(n-2) - 5 T(n-3) + 6 T(n-4)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("17, 45, 113, 309"), std::string::npos);

  const Result dump = Call({"derive", "--jumps", "0,1,2", "--dump-transfer", "--out", "json"});
  ASSERT_EQ(dump.code, kOk);
  const Json t = Json::parse(dump.out).at("extra").at("transfer");
  EXPECT_EQ(t.at("beta").size(), 16u);
  EXPECT_EQ(t.at("a").size(), 16u);
}

TEST(Cli, ReportRerunIsByteIdentical) {
  const std::string path = TempPath("report.json");
  const Result first = Call({"derive", "--jumps", "2,1n+1,2n+2", "--size", "3n+1", "--out", "json"});
  ASSERT_EQ(first.code, kOk) << first.err;
  std::ofstream(path) << first.out;
  const Result second = Call({"derive", "--report", path, "--out", "json"});
  ASSERT_EQ(second.code, kOk) << second.err;
  EXPECT_EQ(Json::parse(second.out).at("recurrence").dump(),
            Json::parse(first.out).at("recurrence").dump());
  std::remove(path.c_str());
}

TEST(Cli, Verify) {
  EXPECT_EQ(Call({"verify", "--jumps", "0,1,2", "--n-max", "14"}).code, kOk);
  const Result r = Call({"verify", "--jumps", "1,2,3", "--n-max", "12", "--out", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  bool saw_enumeration = false;
  for (const auto& e : j.at("verification")) saw_enumeration |= e.at("oracle") == "enumeration";
  EXPECT_TRUE(saw_enumeration);
}

TEST(Cli, Corpus) {
  const Result r = Call({"verify", "--corpus", std::string(CIRCPERM_DATA_DIR) + "/corpus.json"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CorpusMismatchFails) {
  const std::string path = TempPath("corpus.json");
  std::ofstream(path) << R"({"schema":1,"entries":[{"id":"bad","kind":"count","jumps":"0,1,2",)"
                      << R"("values":{"6":"12"}}]})";
  const Result r = Call({"verify", "--corpus", path});
  EXPECT_EQ(r.code, kInternal);
  EXPECT_NE(r.out.find("FAIL  bad"), std::string::npos);
  EXPECT_NE(r.out.find("expected 12 got 20"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, MomentsHamiltonianGrowthEval) {
  const Result m = Call({"moments", "--jumps", "-1,0,1", "--order", "1", "--n", "200"});
  ASSERT_EQ(m.code, kOk) << m.err;
  EXPECT_NE(m.out.find("TC_1(n) = 3 TC_1(n-1) - TC_1(n-2) - 3 TC_1(n-3) + TC_1(n-4) + TC_1(n-5)"),
            std::string::npos)
      << m.out;
  EXPECT_NE(m.out.find("TC_1/TC_0"), std::string::npos);

  const Result h = Call({"hamiltonian", "--jumps", "1,2", "--n-max", "12"});
  EXPECT_EQ(h.code, kOk) << h.err;

  const Result g = Call({"growth", "--jumps", "0,1,2"});
  ASSERT_EQ(g.code, kOk);
  EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "1.618033989");

  const Result e = Call({"eval", "--jumps", "0,1,2", "--n", "100"});
  ASSERT_EQ(e.code, kOk);
  EXPECT_EQ(e.out, "792070839848372253129\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Call({"derive", "--jumps", "1,1"}).code, kInput);
  EXPECT_EQ(Call({"derive", "--jumps", "0,x"}).code, kInput);
  EXPECT_EQ(Call({"derive", "--jumps", "0,n"}).code, kInput);
  EXPECT_EQ(Call({"derive", "--bogus"}).code, kInput);
  EXPECT_EQ(Call({}).code, kInput);
  EXPECT_EQ(Call({"eval", "--jumps", "0,3", "--n", "3"}).code, kInput);
  EXPECT_EQ(Call({"derive", "--jumps", "0,1,2", "--budget-bits", "2"}).code, kBudget);
  const Result cap = Call({"verify", "--jumps", "0,1,2", "--n-max", "30"});
  EXPECT_EQ(cap.code, kBudget);
  EXPECT_NE(cap.err.find("SizeCapError"), std::string::npos);
  EXPECT_EQ(Call({"derive", "--report", TempPath("missing.json")}).code, kInput);
  EXPECT_EQ(Call({"derive", "--jumps", "0,1,2", "--help"}).code, kOk);
}

}  // namespace
}  // namespace circperm::cli
