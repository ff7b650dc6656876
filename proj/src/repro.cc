// Copyright 2026 The convpde Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "convpde/repro.h"

#include <algorithm>
#include <map>
#include <optional>

#include "convpde/conv.h"
#include "convpde/parser.h"

namespace convpde {

namespace {

enum class Slot { kA, kB, kC };

std::optional<Slot> SlotOf(const std::string& key, const VarNames& v) {
  const std::string& p = v.first();
  const std::string& q = v.second();
  if (key == "u" + p + p) return Slot::kA;
  if (key == "u" + p + q || key == "u" + q + p) return Slot::kB;
  if (key == "u" + q + q) return Slot::kC;
  return std::nullopt;
}

const BiPoly& Pick(const PrincipalTriple& t, Slot s) {
  return s == Slot::kA ? t.a : (s == Slot::kB ? t.b : t.c);
}

BiPoly& Pick(PrincipalTriple& t, Slot s) {
  return s == Slot::kA ? t.a : (s == Slot::kB ? t.b : t.c);
}

// Closed-form chain value for a monomial coefficient, or nullopt when the
// coefficient or a kernel is not a single term.
std::optional<BiPoly> ClosedForm(const BiPoly& target,
                                 const KernelChain& chain) {
  if (!target.is_monomial()) return std::nullopt;
  std::vector<Monomial> exps;
  Rational scale = target.terms().begin()->second;
  for (const BiPoly& k : chain.kernels()) {
    if (!k.is_monomial()) return std::nullopt;
    exps.push_back(k.terms().begin()->first);
    scale *= k.terms().begin()->second;
  }
  const Monomial t = target.terms().begin()->first;
  return BiPoly::Term(scale * ClosedFormChainCoeff(exps, t, chain.axis()),
                      ClosedFormChainExponent(exps, t, chain.axis()));
}

struct Evaluated {
  PdeFile file;
  KernelChain chain;
  EquationReport report;
};

Evaluated Evaluate(const ReproCase& c) {
  PdeFile file = ParsePdeFile(c.pde);
  std::vector<BiPoly> kernels;
  for (const std::string& k : c.kernels) kernels.push_back(ParsePoly(k, file.vars));
  KernelChain chain(std::move(kernels), c.axis);
  EquationReport report = ClassifyEquation(file.pde, chain);
  return {std::move(file), std::move(chain), std::move(report)};
}

std::string Lookup(const Evaluated& ev, const std::string& quantity) {
  const VarNames& vars = ev.file.vars;
  if (quantity == "D") return PrettyPrint(ev.report.discriminant, vars);
  constexpr std::string_view kClosed = "closed:";
  if (quantity.rfind(kClosed, 0) == 0) {
    const auto slot = SlotOf(quantity.substr(kClosed.size()), vars);
    if (!slot) return "<unknown quantity>";
    const PrincipalTriple original{ev.file.pde.a(), ev.file.pde.b(),
                                   ev.file.pde.c()};
    const auto closed = ClosedForm(Pick(original, *slot), ev.chain);
    return closed ? PrettyPrint(*closed, vars) : "<not monomial>";
  }
  const auto slot = SlotOf(quantity, vars);
  if (!slot) return "<unknown quantity>";
  return PrettyPrint(Pick(ev.report.principal, *slot), vars);
}

bool SamePoly(const std::string& expected, const std::string& actual,
              const VarNames& vars) {
  try {
    return ParsePoly(expected, vars) == ParsePoly(actual, vars);
  } catch (const ParseError&) {
    return false;
  }
}

std::string TypeLine(const std::array<TypeVerdict, 4>& types) {
  std::string out;
  for (Quadrant q : kQuadrants) {
    if (!out.empty()) out += " ";
    out += ToString(q) + "=" + ToString(types[static_cast<int>(q)]);
  }
  return out;
}

}  // namespace

bool ReproResult::all_pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const ReproCaseResult& c) { return c.ok; });
}

ReproResult RunRepro(const ReproTable& table) {
  ReproResult result;
  std::map<std::string, Evaluated> evaluated;
  for (const ReproCase& c : table.cases) {
    Evaluated ev = Evaluate(c);
    ReproCaseResult cr;
    cr.name = c.name;
    cr.ok = true;
    for (const ReproCheck& check : c.checks) {
      ReproCheckResult r{check.quantity, check.expected,
                         Lookup(ev, check.quantity), false};
      r.ok = SamePoly(r.expected, r.actual, ev.file.vars);
      cr.ok = cr.ok && r.ok;
      cr.checks.push_back(std::move(r));
    }
    cr.types = ev.report.types;
    cr.method = ev.report.summary.method;
    cr.type_ok = cr.method == SignMethod::kMonomialParity &&
                 std::all_of(cr.types.begin(), cr.types.end(),
                             [&](TypeVerdict t) { return t == c.expected_type; });
    cr.ok = cr.ok && cr.type_ok;
    result.cases.push_back(std::move(cr));
    evaluated.emplace(c.name, std::move(ev));
  }

  for (const ReproDiscrepancy& d : table.discrepancies) {
    ReproDiscrepancyResult dr;
    dr.entry = d;
    auto it = evaluated.find(d.case_name);
    if (it == evaluated.end()) {
      dr.computed = "<unknown case>";
      result.discrepancies.push_back(std::move(dr));
      continue;
    }
    const Evaluated& ev = it->second;
    const VarNames& vars = ev.file.vars;
    dr.computed = Lookup(ev, d.quantity);
    const auto slot = SlotOf(d.quantity, vars);
    bool stated_reproduces_witness = false;
    if (slot) {
      PrincipalTriple substituted = ev.report.principal;
      Pick(substituted, *slot) = ParsePoly(d.stated, vars);
      const BiPoly witness = Discriminant(substituted);
      dr.witness_with_stated = PrettyPrint(witness, vars);
      stated_reproduces_witness =
          witness == ParsePoly(d.witness_expected, vars);
    }
    dr.corrected_is_consistent =
        slot && SamePoly(d.corrected, dr.computed, vars) &&
        SamePoly(d.witness_expected, Lookup(ev, d.witness), vars) &&
        !stated_reproduces_witness;
    result.discrepancies.push_back(std::move(dr));
  }
  return result;
}

void WriteReproText(const ReproResult& result, std::ostream& out) {
  int passed = 0;
  for (const ReproCaseResult& c : result.cases) {
    if (c.ok) ++passed;
    out << (c.ok ? "PASS " : "FAIL ") << c.name << ":";
    for (const ReproCheckResult& r : c.checks) {
      out << " " << r.quantity << " = " << r.actual << ";";
    }
    out << " " << TypeLine(c.types) << " [" << ToString(c.method) << "]\n";
    for (const ReproCheckResult& r : c.checks) {
      if (!r.ok) {
        out << "  mismatch " << r.quantity << ": expected " << r.expected
            << ", got " << r.actual << "\n";
      }
    }
    if (!c.type_ok) out << "  mismatch type or method\n";
  }
  for (const ReproDiscrepancyResult& d : result.discrepancies) {
    out << "DISCREPANCY " << d.entry.case_name << " " << d.entry.quantity
        << ": stated " << d.entry.stated << ", computed " << d.computed
        << "; with the stated value " << d.entry.witness << " = "
        << d.witness_with_stated << " instead of "
        << d.entry.witness_expected << " ("
        << (d.corrected_is_consistent ? "computed value is the consistent one"
                                      : "UNRESOLVED")
        << ")\n";
  }
  out << "summary: " << passed << "/" << result.cases.size() << " PASS\n";
}

nlohmann::ordered_json ReproToJson(const ReproResult& result) {
  nlohmann::ordered_json j;
  j["command"] = "repro";
  j["results"] = nlohmann::ordered_json::array();
  for (const ReproCaseResult& c : result.cases) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.ok ? "PASS" : "FAIL";
    jc["checks"] = nlohmann::ordered_json::array();
    for (const ReproCheckResult& r : c.checks) {
      jc["checks"].push_back({{"quantity", r.quantity},
                              {"expected", r.expected},
                              {"actual", r.actual},
                              {"ok", r.ok}});
    }
    nlohmann::ordered_json types;
    for (Quadrant q : kQuadrants) {
      types[ToString(q)] = ToString(c.types[static_cast<int>(q)]);
    }
    jc["classification"] = types;
    jc["method"] = ToString(c.method);
    jc["classification_ok"] = c.type_ok;
    j["results"].push_back(std::move(jc));
  }
  j["discrepancies"] = nlohmann::ordered_json::array();
  for (const ReproDiscrepancyResult& d : result.discrepancies) {
    j["discrepancies"].push_back(
        {{"case", d.entry.case_name},
         {"quantity", d.entry.quantity},
         {"stated", d.entry.stated},
         {"computed", d.computed},
         {"corrected", d.entry.corrected},
         {"witness", d.entry.witness},
         {"witness_expected", d.entry.witness_expected},
         {"witness_with_stated", d.witness_with_stated},
         {"corrected_is_consistent", d.corrected_is_consistent}});
  }
  j["all_pass"] = result.all_pass();
  return j;
}

}  // namespace convpde
