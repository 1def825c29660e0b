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

#include "circperm/report.h"

#include <iomanip>
#include <sstream>

#include "circperm/errors.h"

namespace circperm {
namespace {

std::string Decimal(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

Rational ReadRational(const Json& j) {
  if (!j.is_string()) throw SyntaxError("expected a decimal string, got " + j.dump());
  return ParseRational(j.get<std::string>());
}

std::vector<Rational> ReadVector(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(ReadRational(x));
  return out;
}

}  // namespace

Json VectorToJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(ToString(x));
  return out;
}

Json MatrixToJson(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ToString(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json PolynomialToJson(const Polynomial& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.Degree(); ++i) out.push_back(ToString(p.Coefficient(i)));
  return out;
}

Polynomial PolynomialFromJson(const Json& j) { return Polynomial(ReadVector(j)); }

Json RecurrenceToJson(const Recurrence& rec) {
  Json out;
  out["order"] = rec.order();
  out["coeffs"] = VectorToJson(rec.coeffs);
  out["base"] = rec.base;
  Json initials = Json::object();
  for (int i = 0; i < static_cast<int>(rec.initials.size()); ++i) {
    initials[std::to_string(rec.base + i)] = ToString(rec.initials[i]);
  }
  out["initials"] = std::move(initials);
  out["text"] = rec.ToString();
  return out;
}

Recurrence RecurrenceFromJson(const Json& j) {
  Recurrence rec;
  rec.coeffs = ReadVector(j.at("coeffs"));
  rec.base = j.at("base").get<int64_t>();
  for (int i = 0; i < rec.order(); ++i) {
    rec.initials.push_back(ReadRational(j.at("initials").at(std::to_string(rec.base + i))));
  }
  return rec;
}

Json GrowthToJson(const GrowthEstimate& g) {
  Json out;
  out["dominant_root"] = Decimal(g.dominant_root);
  out["lower"] = ToString(g.lower);
  out["upper"] = ToString(g.upper);
  out["multiplicity"] = g.multiplicity;
  out["modulus"] = Decimal(g.modulus);
  out["has_real_root"] = g.has_real_root;
  out["non_real_dominant"] = g.non_real_dominant;
  out["note"] = g.Note();
  return out;
}

namespace {

GrowthEstimate GrowthFromJson(const Json& j) {
  GrowthEstimate g;
  g.dominant_root = std::stod(j.at("dominant_root").get<std::string>());
  g.lower = ReadRational(j.at("lower"));
  g.upper = ReadRational(j.at("upper"));
  g.multiplicity = j.at("multiplicity").get<int>();
  g.modulus = std::stod(j.at("modulus").get<std::string>());
  g.has_real_root = j.at("has_real_root").get<bool>();
  g.non_real_dominant = j.at("non_real_dominant").get<bool>();
  return g;
}

}  // namespace

Json TransferToJson(const TransferSystem& sys, bool full) {
  Json out;
  out["width"] = sys.width;
  out["n0"] = sys.n0;
  out["weighted"] = sys.weighted;
  out["a_bar"] = MatrixToJson(sys.a_bar);
  Json blocks = Json::array();
  for (std::size_t i = 0; i < sys.blocks.size(); ++i) {
    blocks.push_back({{"offset", sys.block_offsets[i]}, {"matrix", MatrixToJson(sys.blocks[i])}});
  }
  out["blocks"] = std::move(blocks);
  out["beta"] = VectorToJson(sys.beta);
  out["t0"] = VectorToJson(sys.t0);
  if (full) out["a"] = MatrixToJson(sys.FullA());
  return out;
}

bool RunReport::AllPass() const {
  for (const auto& e : ledger) {
    if (!e.pass()) return false;
  }
  return true;
}

Json RunReport::ToJson() const {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  Json spec;
  spec["jumps"] = jumps;
  if (size) spec["size"] = *size;
  if (weights) spec["weights"] = *weights;
  spec["name"] = name;
  spec["normalized"] = normalized;
  j["spec"] = std::move(spec);
  if (order) j["order"] = *order;
  if (recurrence) j["recurrence"] = RecurrenceToJson(*recurrence);
  if (annihilator) {
    j["annihilator"] = {{"coeffs", PolynomialToJson(*annihilator)},
                        {"text", annihilator->ToString()}};
  }
  j["terms"] = {{"base", terms_base}, {"values", VectorToJson(terms)}};
  if (growth) j["growth"] = GrowthToJson(*growth);
  Json ledger_json = Json::array();
  for (const auto& e : ledger) {
    Json entry = {{"n", e.n},
                  {"oracle", e.oracle},
                  {"expected", ToString(e.expected)},
                  {"actual", ToString(e.actual)}};
    if (e.tolerance != 0) entry["tolerance"] = ToString(e.tolerance);
    entry["pass"] = e.pass();
    ledger_json.push_back(std::move(entry));
  }
  j["verification"] = std::move(ledger_json);
  j["all_pass"] = AllPass();
  Json timings = Json::object();
  for (const auto& [k, v] : timings_ms) timings[k] = v;
  j["timings_ms"] = std::move(timings);
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

RunReport RunReport::FromJson(const Json& j) {
  if (j.value("schema", 0) != kReportSchema) {
    throw SyntaxError("unsupported report schema " + j.value("schema", Json()).dump());
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  const Json& spec = j.at("spec");
  r.jumps = spec.at("jumps").get<std::string>();
  if (spec.contains("size")) r.size = spec["size"].get<std::string>();
  if (spec.contains("weights")) r.weights = spec["weights"].get<std::string>();
  r.name = spec.value("name", "");
  r.normalized = spec.value("normalized", "");
  if (j.contains("order")) r.order = j["order"].get<int>();
  if (j.contains("recurrence")) r.recurrence = RecurrenceFromJson(j["recurrence"]);
  if (j.contains("annihilator")) r.annihilator = PolynomialFromJson(j["annihilator"]["coeffs"]);
  if (j.contains("terms")) {
    r.terms_base = j["terms"].at("base").get<int64_t>();
    r.terms = ReadVector(j["terms"].at("values"));
  }
  if (j.contains("growth")) r.growth = GrowthFromJson(j["growth"]);
  if (j.contains("verification")) {
    for (const auto& e : j["verification"]) {
      LedgerEntry entry{e.at("n").get<int64_t>(), e.at("oracle").get<std::string>(),
                        ReadRational(e.at("expected")), ReadRational(e.at("actual"))};
      if (e.contains("tolerance")) entry.tolerance = ReadRational(e["tolerance"]);
      r.ledger.push_back(std::move(entry));
    }
  }
  if (j.contains("timings_ms")) {
    for (const auto& [k, v] : j["timings_ms"].items()) r.timings_ms[k] = v.get<double>();
  }
  if (j.contains("extra")) r.extra = j["extra"];
  return r;
}

CirculantSpec RunReport::Spec() const {
  std::optional<std::string_view> s, w;
  if (size) s = *size;
  if (weights) w = *weights;
  return ParseSpec(jumps, s, w);
}

std::string RunReport::ToTable() const {
  std::ostringstream os;
  os << "spec         " << name;
  if (!normalized.empty() && normalized != name) os << "  (normalized " << normalized << ")";
  os << "\n";
  if (order) os << "moment       " << *order << "\n";
  if (recurrence) {
    const std::string label = command == "hamiltonian" ? "HC"
                              : command == "moments"   ? "TC_" + std::to_string(order.value_or(0))
                                                       : "T";
    os << "recurrence   " << recurrence->ToString(label) << "\n";
    os << "order        " << recurrence->order() << "\n";
    os << "initials     ";
    for (int i = 0; i < recurrence->order(); ++i) {
      os << (i ? ", " : "") << Abbreviate(recurrence->initials[i]);
    }
    os << "  (n = " << recurrence->base << ".." << recurrence->base + recurrence->order() - 1
       << ")\n";
  }
  if (annihilator) os << "annihilator  " << annihilator->ToString() << "\n";
  if (!terms.empty()) {
    os << "terms        ";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      os << (i ? ", " : "") << Abbreviate(terms[i]);
    }
    os << "  (from n = " << terms_base << ")\n";
  }
  if (growth) os << "growth       " << growth->Note() << "\n";
  if (extra.contains("ratio")) {
    const Json& q = extra["ratio"];
    os << "TC_1/TC_0    " << q.at("decimal").get<std::string>() << " at n = "
       << q.at("n").get<int64_t>() << "  (per n " << q.at("per_n").get<std::string>() << ")\n";
  }
  if (!ledger.empty()) {
    std::size_t passed = 0;
    for (const auto& e : ledger) passed += e.pass();
    os << "verification " << passed << "/" << ledger.size() << " pass\n";
    for (const auto& e : ledger) {
      os << "  n=" << std::setw(3) << e.n << "  " << std::setw(11) << std::left << e.oracle
         << std::right << "  " << (e.pass() ? "pass" : "FAIL") << "  expected "
         << Abbreviate(e.expected) << "  got " << Abbreviate(e.actual) << "\n";
    }
  }
  return os.str();
}

}  // namespace circperm
