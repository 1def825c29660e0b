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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "circperm/errors.h"
#include "circperm/extensions.h"
#include "circperm/growth.h"
#include "circperm/lattice.h"
#include "circperm/oracle.h"
#include "circperm/pipeline.h"
#include "circperm/report.h"

namespace circperm::cli {
namespace {

struct SpecArgs {
  std::string jumps;
  std::string size;
  std::string weights;
  std::string report;
};

struct CommonArgs {
  std::string out = "table";
  int threads = 1;
  int budget_bits = 20;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void AddSpecOptions(CLI::App* cmd, SpecArgs& s, bool jumps_required = true) {
  auto* j = cmd->add_option("--jumps", s.jumps, "comma-separated jumps, e.g. 0,1n+0,2n-1");
  cmd->add_option("--size", s.size, "size law p n + s, e.g. 3n+1");
  cmd->add_option("--weights", s.weights, "rational weight per jump, e.g. 2,1,1/2");
  auto* r = cmd->add_option("--report", s.report, "rerun the jumps and size stored in a JSON report");
  if (jumps_required) {
    j->excludes(r);
    r->excludes(j);
  }
}

void AddCommonOptions(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--threads", c.threads, "worker threads for transfer iteration")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--budget-bits", c.budget_bits, "largest classification key, in bits")
      ->check(CLI::Range(0, 48));
}

RunReport Echo(const std::string& command, const SpecArgs& s, const CirculantSpec& spec) {
  RunReport r;
  r.command = command;
  r.jumps = spec.JumpsText();
  if (!spec.is_constant()) r.size = spec.SizeText();
  if (spec.weighted()) r.weights = spec.WeightsText();
  r.name = spec.Name();
  r.normalized = Normalize(spec).Name();
  (void)s;
  return r;
}

CirculantSpec LoadSpec(const SpecArgs& s) {
  if (!s.report.empty()) {
    std::ifstream in(s.report);
    if (!in) throw InconsistencyError("cannot read report " + s.report);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw SyntaxError(std::string("report is not valid JSON: ") + e.what());
    }
    return RunReport::FromJson(j).Spec();
  }
  if (s.jumps.empty()) throw SyntaxError("--jumps is required");
  std::optional<std::string_view> size, weights;
  if (!s.size.empty()) size = s.size;
  if (!s.weights.empty()) weights = s.weights;
  return ParseSpec(s.jumps, size, weights);
}

DeriveOptions Options(const CommonArgs& c) {
  DeriveOptions o;
  o.budget = OracleBudget::FromEnv();
  o.threads = c.threads;
  o.max_key_bits = c.budget_bits;
  return o;
}

void Emit(const RunReport& r, const CommonArgs& c, std::ostream& out) {
  if (c.out == "json") {
    out << r.ToJson().dump(2) << "\n";
  } else {
    out << r.ToTable();
  }
}

int Finish(const RunReport& r, const CommonArgs& c, std::ostream& out) {
  Emit(r, c, out);
  return r.AllPass() ? kOk : kInternal;
}

void FillDerived(RunReport& r, const DeriveResult& d) {
  r.recurrence = d.recurrence;
  r.annihilator = d.annihilator;
  r.terms_base = d.terms_base;
  r.terms = d.terms;
  r.growth = Growth(d.recurrence);
  r.extra["n0"] = d.n0;
  r.extra["block_polys"] = Json::array();
  for (const auto& p : d.block_polys) r.extra["block_polys"].push_back(p.ToString());
  if (d.checked_n0 >= 0) {
    r.ledger.push_back({d.checked_n0, "ryser", RyserPermanent(AdjacencyMatrix(d.input, d.checked_n0),
                                                              OracleBudget::FromEnv().ryser_max_dim),
                        TermAt(d, d.checked_n0)});
  }
}

int CmdDerive(const SpecArgs& s, const CommonArgs& c, bool dump, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("derive", s, spec);
  Timer t;
  const DeriveResult d = Derive(spec, Options(c));
  r.timings_ms["derive"] = t.ms();
  FillDerived(r, d);
  if (dump) r.extra["transfer"] = TransferToJson(d.system, d.system.width <= 3);
  return Finish(r, c, out);
}

// Recurrence values against Ryser and exhaustive enumeration.
void VerifyCounts(const CirculantSpec& spec, const DeriveResult& d, int64_t n_max,
                  const OracleBudget& budget, RunReport& r) {
  const int64_t from = std::max<int64_t>(1, d.recurrence.base);
  for (int64_t n = from; n <= n_max; ++n) {
    const Rational value = TermAt(d, n);
    const int64_t size = spec.Size(n);
    bool checked = false;
    if (size <= budget.ryser_max_dim) {
      r.ledger.push_back(
          {n, "ryser", RyserPermanent(AdjacencyMatrix(spec, n), budget.ryser_max_dim), value});
      checked = true;
    }
    if (!spec.weighted() && size <= budget.enum_max_size &&
        static_cast<int>(spec.num_jumps()) <= budget.enum_max_jumps) {
      r.ledger.push_back({n, "enumeration", Rational(EnumerateStats(spec, n, 0, budget).count),
                          value});
      checked = true;
    }
    if (!checked) {
      throw SizeCapError("n=" + std::to_string(n) + " (size " + std::to_string(size) +
                         ") is beyond every oracle budget");
    }
  }
}

Rational ReadValue(const Json& j) { return ParseRational(j.get<std::string>()); }

// Replays every pinned value of a corpus file.
int CmdCorpus(const std::string& path, const CommonArgs& c, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw InconsistencyError("cannot read corpus " + path);
  Json corpus;
  try {
    corpus = Json::parse(in);
  } catch (const Json::exception& e) {
    throw SyntaxError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (corpus.value("schema", 0) != kReportSchema) throw SyntaxError("unsupported corpus schema");

  const OracleBudget budget = OracleBudget::FromEnv();
  Json results = Json::array();
  bool all = true;
  std::ostringstream table;
  for (const auto& e : corpus.at("entries")) {
    SpecArgs s;
    s.jumps = e.at("jumps").get<std::string>();
    s.size = e.value("size", "");
    s.weights = e.value("weights", "");
    const CirculantSpec spec = LoadSpec(s);
    const std::string kind = e.value("kind", "count");
    RunReport r = Echo(kind, s, spec);

    Recurrence rec;
    std::function<Rational(int64_t)> value;
    std::optional<DeriveResult> d;
    std::optional<ExtensionResult> x;
    if (kind == "count") {
      d = Derive(spec, Options(c));
      rec = d->recurrence;
      value = [&](int64_t n) { return TermAt(*d, n); };
    } else if (kind == "moments" || kind == "hamiltonian") {
      x = kind == "moments" ? MomentsDerive(spec, e.at("order").get<int>(), budget, c.threads)
                            : HamiltonianDerive(spec, budget, c.threads);
      rec = x->recurrence;
      value = [&](int64_t n) {
        const int64_t k = n - x->terms_base;
        if (k >= 0 && k < static_cast<int64_t>(x->terms.size())) return x->terms[k];
        return EvalRecurrence(x->recurrence, n);
      };
    } else {
      throw SyntaxError("unknown corpus kind '" + kind + "'");
    }
    r.recurrence = rec;

    if (e.contains("recurrence")) {
      const Json& pin = e["recurrence"];
      r.ledger.push_back({0, "order", Rational(pin.at("order").get<int>()), Rational(rec.order())});
      const auto& coeffs = pin.at("coeffs");
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        r.ledger.push_back({static_cast<int64_t>(j + 1), "coeff", ReadValue(coeffs[j]),
                            j < rec.coeffs.size() ? rec.coeffs[j] : Rational(0)});
      }
    }
    if (e.contains("values")) {
      for (const auto& [n, v] : e["values"].items()) {
        const int64_t k = std::stoll(n);
        r.ledger.push_back({k, "value", ReadValue(v), value(k)});
      }
    }
    if (e.contains("growth")) {
      const GrowthEstimate g = Growth(rec);
      r.growth = g;
      r.ledger.push_back({0, "growth", ReadValue(e["growth"].at("root")),
                          Rational(g.dominant_root), ReadValue(e["growth"].at("tolerance"))});
    }
    if (e.contains("ratio")) {
      const int64_t n = e["ratio"].at("n").get<int64_t>();
      r.ledger.push_back({n, "ratio/n", ReadValue(e["ratio"].at("per_n")),
                          MomentsRatio(spec, n, budget) / n,
                          ReadValue(e["ratio"].at("tolerance"))});
    }
    all = all && r.AllPass();
    const std::string id = e.value("id", spec.Name());
    table << (r.AllPass() ? "pass  " : "FAIL  ") << id << "  " << kind << "  " << spec.Name();
    if (rec.order() > 0) table << "  order " << rec.order();
    table << "\n";
    for (const auto& l : r.ledger) {
      if (!l.pass()) {
        table << "      " << l.oracle << " n=" << l.n << " expected " << ToString(l.expected)
              << " got " << ToString(l.actual) << "\n";
      }
    }
    Json rj = r.ToJson();
    rj["id"] = id;
    results.push_back(std::move(rj));
  }
  if (c.out == "json") {
    out << Json({{"schema", kReportSchema}, {"command", "verify"}, {"corpus", path},
                 {"all_pass", all}, {"entries", results}})
               .dump(2)
        << "\n";
  } else {
    out << table.str();
  }
  return all ? kOk : kInternal;
}

int CmdVerify(const SpecArgs& s, const CommonArgs& c, int64_t n_max, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("verify", s, spec);
  const DeriveOptions o = Options(c);
  Timer t;
  const DeriveResult d = Derive(spec, o);
  r.timings_ms["derive"] = t.ms();
  r.recurrence = d.recurrence;
  r.terms_base = d.terms_base;
  r.terms = d.terms;
  Timer v;
  VerifyCounts(spec, d, n_max, o.budget, r);
  r.timings_ms["verify"] = v.ms();
  return Finish(r, c, out);
}

int CmdMoments(const SpecArgs& s, const CommonArgs& c, int order, std::optional<int64_t> ratio_n,
               int64_t n_max, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("moments", s, spec);
  r.normalized.clear();
  r.order = order;
  const OracleBudget budget = OracleBudget::FromEnv();
  Timer t;
  const ExtensionResult x = MomentsDerive(spec, order, budget, c.threads);
  r.timings_ms["derive"] = t.ms();
  r.recurrence = x.recurrence;
  r.terms_base = x.terms_base;
  r.terms.assign(x.terms.begin(),
                 x.terms.begin() + std::min<std::size_t>(x.terms.size(), 12));
  r.growth = Growth(x.recurrence);
  r.extra["states"] = x.system.states.size();
  for (int64_t n = x.terms_base; n <= n_max; ++n) {
    if (spec.Size(n) > budget.enum_max_size) break;
    const CoverStats st = EnumerateStats(spec, n, order, budget);
    const int64_t k = n - x.terms_base;
    const Rational mine = k < static_cast<int64_t>(x.terms.size()) ? x.terms[k]
                                                                    : EvalRecurrence(x.recurrence, n);
    r.ledger.push_back({n, "enumeration", Rational(st.moment_sums[order]), mine});
  }
  if (ratio_n) {
    const Rational ratio = MomentsRatio(spec, *ratio_n, budget);
    r.extra["ratio"] = {{"n", *ratio_n},
                        {"tc1_over_tc0", ToString(ratio)},
                        {"decimal", std::to_string(ratio.get_d())},
                        {"per_n", std::to_string(ratio.get_d() / *ratio_n)}};
  }
  return Finish(r, c, out);
}

int CmdHamiltonian(const SpecArgs& s, const CommonArgs& c, int64_t n_max, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("hamiltonian", s, spec);
  r.normalized.clear();
  const OracleBudget budget = OracleBudget::FromEnv();
  Timer t;
  const ExtensionResult x = HamiltonianDerive(spec, budget, c.threads);
  r.timings_ms["derive"] = t.ms();
  r.recurrence = x.recurrence;
  r.terms_base = x.terms_base;
  r.terms.assign(x.terms.begin(),
                 x.terms.begin() + std::min<std::size_t>(x.terms.size(), 12));
  r.extra["states"] = x.system.states.size();
  r.extra["lattice_cycles"] = x.system.lattice_cycles;
  for (int64_t n = x.terms_base; n <= n_max; ++n) {
    if (spec.Size(n) > budget.enum_max_size) break;
    const int64_t k = n - x.terms_base;
    const Rational mine = k < static_cast<int64_t>(x.terms.size()) ? x.terms[k]
                                                                    : EvalRecurrence(x.recurrence, n);
    r.ledger.push_back({n, "hamiltonian", Rational(BruteHamiltonian(spec, n, budget)), mine});
  }
  return Finish(r, c, out);
}

int CmdGrowth(const SpecArgs& s, const CommonArgs& c, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("growth", s, spec);
  const DeriveResult d = Derive(spec, Options(c));
  r.recurrence = d.recurrence;
  r.growth = Growth(d.recurrence);
  if (c.out == "json") {
    Emit(r, c, out);
  } else {
    out << std::setprecision(10) << r.growth->dominant_root << "\n" << r.growth->Note() << "\n";
  }
  return kOk;
}

int CmdEval(const SpecArgs& s, const CommonArgs& c, int64_t n, std::ostream& out) {
  const CirculantSpec spec = LoadSpec(s);
  RunReport r = Echo("eval", s, spec);
  const DeriveOptions o = Options(c);
  const DeriveResult d = Derive(spec, o);
  Rational value;
  if (n >= d.recurrence.base) {
    value = TermAt(d, n);
  } else {
    value = RyserPermanent(AdjacencyMatrix(spec, n), o.budget.ryser_max_dim);
  }
  r.recurrence = d.recurrence;
  r.terms_base = n;
  r.terms = {value};
  if (c.out == "json") {
    Emit(r, c, out);
  } else {
    out << ToString(value) << "\n";
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recurrences for permanents of circulant matrices", "circperm"};
  app.require_subcommand(1);

  SpecArgs spec;
  CommonArgs common;
  int64_t n_max = 12;
  int64_t n = 0;
  int order = 1;
  std::optional<int64_t> ratio_n;
  bool dump = false;
  std::string corpus;

  auto* derive = app.add_subcommand("derive", "derive the recurrence for T(n)");
  AddSpecOptions(derive, spec);
  AddCommonOptions(derive, common);
  derive->add_flag("--dump-transfer", dump, "include the transfer system in the report");

  auto* verify = app.add_subcommand("verify", "check the recurrence against the oracles");
  AddSpecOptions(verify, spec);
  AddCommonOptions(verify, common);
  verify->add_option("--n-max", n_max, "largest n to check");
  verify->add_option("--corpus", corpus, "replay a regression corpus instead");

  auto* moments = app.add_subcommand("moments", "cycle-count moments TC_i(n)");
  AddSpecOptions(moments, spec);
  AddCommonOptions(moments, common);
  moments->add_option("--order", order, "moment order i")->check(CLI::NonNegativeNumber);
  moments->add_option("--n", ratio_n, "also report TC_1(n) / TC_0(n)");
  moments->add_option("--n-max", n_max, "check against enumeration up to this n");

  auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian cycle counts HC(n)");
  AddSpecOptions(ham, spec);
  AddCommonOptions(ham, common);
  ham->add_option("--n-max", n_max, "check against brute force up to this n");

  auto* growth = app.add_subcommand("growth", "dominant root of the recurrence");
  AddSpecOptions(growth, spec);
  AddCommonOptions(growth, common);

  auto* eval = app.add_subcommand("eval", "exact T(n) for any n");
  AddSpecOptions(eval, spec);
  AddCommonOptions(eval, common);
  eval->add_option("--n", n, "index")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (*derive) return CmdDerive(spec, common, dump, out);
    if (*verify) {
      if (!corpus.empty()) return CmdCorpus(corpus, common, out);
      return CmdVerify(spec, common, n_max, out);
    }
    if (*moments) return CmdMoments(spec, common, order, ratio_n, n_max, out);
    if (*ham) return CmdHamiltonian(spec, common, n_max, out);
    if (*growth) return CmdGrowth(spec, common, out);
    if (*eval) return CmdEval(spec, common, n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace circperm::cli
