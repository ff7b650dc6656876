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

#include "convpde/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace convpde {

namespace {

using Json = nlohmann::ordered_json;

// An input error that has already been described to the user.
class ReportedInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportedInputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string Caret(std::string_view text, std::size_t position) {
  return "  " + std::string(text) + "\n  " + std::string(position, ' ') + "^";
}

std::string Percent(int part, int whole) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%",
                whole == 0 ? 0.0 : 100.0 * part / whole);
  return buf;
}

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}};
const std::map<std::string, Axis> kAxes = {
    {"x", Axis::kX}, {"y", Axis::kY}, {"xy", Axis::kXY}};
const std::map<std::string, Family> kFamilies = {
    {"wave", Family::kWave}, {"general", Family::kGeneral}};

Json QuadrantMap(const std::array<TypeVerdict, 4>& v) {
  Json j;
  for (Quadrant q : kQuadrants) j[ToString(q)] = ToString(v[static_cast<int>(q)]);
  return j;
}

Json SummaryJson(const SignSummary& s) {
  Json j;
  j["method"] = ToString(s.method);
  Json quads;
  Json conclusive;
  for (Quadrant q : kQuadrants) {
    quads[ToString(q)] = ToString(s.at(q));
    conclusive[ToString(q)] = s.conclusive(q);
  }
  j["quadrants"] = quads;
  j["conclusive"] = conclusive;
  return j;
}

std::string QuadrantLine(const std::array<TypeVerdict, 4>& v) {
  std::string out;
  for (Quadrant q : kQuadrants) {
    if (!out.empty()) out += " ";
    out += ToString(q) + "=" + ToString(v[static_cast<int>(q)]);
  }
  return out;
}

std::string SummaryLine(const SignSummary& s) {
  std::string out = "[" + ToString(s.method) + "]";
  for (Quadrant q : kQuadrants) {
    out += " " + ToString(q) + "=" + ToString(s.at(q));
    if (!s.conclusive(q)) out += "?";
  }
  return out;
}

struct CoefficientKeys {
  std::string a, b, c, d, e, f;
};

CoefficientKeys KeysFor(const VarNames& v) {
  const std::string& p = v.first();
  const std::string& q = v.second();
  return {"u" + p + p, "u" + p + q, "u" + q + q, "u" + p, "u" + q, "u"};
}

std::vector<Quadrant> Disagreeing(const EquationReport& r) {
  std::vector<Quadrant> out;
  for (Quadrant q : kQuadrants) {
    if (!r.agrees(q)) out.push_back(q);
  }
  return out;
}

void WriteReportText(const SecondOrderPde& pde, const VarNames& vars,
                     const std::vector<BiPoly>& kernels, Axis axis,
                     const EquationReport& r, std::ostream& out) {
  const CoefficientKeys keys = KeysFor(vars);
  auto pp = [&](const BiPoly& p) { return PrettyPrint(p, vars); };
  out << "equation: " << keys.a << " = " << pp(pde.a()) << "; " << keys.b
      << " = " << pp(pde.b()) << "; " << keys.c << " = " << pp(pde.c())
      << "\n";
  out << "lower-order (not used): " << keys.d << " = " << pp(pde.d()) << "; "
      << keys.e << " = " << pp(pde.e()) << "; " << keys.f << " = "
      << pp(pde.f()) << "\n";
  if (pde.rhs_note()) out << "rhs (not used): " << *pde.rhs_note() << "\n";
  out << "kernels (axis " << AxisName(axis) << ", folded left to right):";
  if (kernels.empty()) out << " none";
  for (std::size_t i = 0; i < kernels.size(); ++i) {
    out << (i == 0 ? " " : " * ") << pp(kernels[i]);
  }
  out << "\n";
  out << "original D = " << pp(r.original_discriminant) << "\n";
  out << "original sign " << SummaryLine(r.original_summary) << "\n";
  out << "original type " << QuadrantLine(r.original_types) << "\n";
  out << "A = " << pp(r.principal.a) << "\n";
  out << "B = " << pp(r.principal.b) << "\n";
  out << "C = " << pp(r.principal.c) << "\n";
  out << "D = " << pp(r.discriminant) << "\n";
  out << "sign " << SummaryLine(r.summary) << "\n";
  out << "type " << QuadrantLine(r.types) << "\n";
  out << "axes: D(" << vars.first() << ",0) = " << pp(r.on_first_axis)
      << "; D(0," << vars.second() << ") = " << pp(r.on_second_axis) << "\n";
  if (r.degenerate) {
    out << "verdict: degenerate (convolved principal part vanishes "
           "identically)\n";
  }
  const auto bad = Disagreeing(r);
  if (bad.empty()) {
    out << "invariance: agree in I II III IV\n";
  } else {
    out << "invariance: disagree in";
    for (Quadrant q : bad) out << " " << ToString(q);
    out << "\n";
  }
}

void WriteFuzzText(const InvarianceReport& rep, std::ostream& out) {
  const ExperimentConfig& c = rep.config;
  const int n = static_cast<int>(rep.records.size());
  out << "family=" << ToString(c.family) << " seed=" << c.seed
      << " trials=" << c.trials << " max_degree=" << c.max_degree
      << " chain_len=" << c.max_chain_length << " axis=" << AxisName(c.axis)
      << "\n";
  out << "agreement (all quadrants): " << rep.agreeing << "/" << n << " ("
      << Percent(rep.agreeing, n) << ")\n";
  out << "agreement (quadrant I): " << rep.agreeing_quadrant_one << "/" << n
      << " (" << Percent(rep.agreeing_quadrant_one, n) << ")\n";
  out << "hyperbolic in quadrant I before and after: "
      << rep.hyperbolic_quadrant_one_both << "/" << n << "\n";
  out << "disagreements: " << rep.disagreeing << "\n";
  for (const TrialRecord& r : rep.records) {
    if (r.agree) continue;
    out << "  " << r.id << (r.fixed ? " [reference]" : "")
        << " original: " << QuadrantLine(r.original)
        << " | convolved: " << QuadrantLine(r.convolved) << "\n";
  }
}

}  // namespace

Json ReportToJson(const SecondOrderPde& pde, const VarNames& vars,
                  const std::vector<BiPoly>& kernels, Axis axis,
                  const EquationReport& r) {
  const CoefficientKeys keys = KeysFor(vars);
  auto pp = [&](const BiPoly& p) { return PrettyPrint(p, vars); };
  Json j;
  j["command"] = "classify";
  j["vars"] = {vars.first(), vars.second()};
  j["axis"] = AxisName(axis);
  j["kernels"] = Json::array();
  for (const BiPoly& k : kernels) j["kernels"].push_back(pp(k));
  Json eq;
  eq[keys.a] = pp(pde.a());
  eq[keys.b] = pp(pde.b());
  eq[keys.c] = pp(pde.c());
  eq[keys.d] = pp(pde.d());
  eq[keys.e] = pp(pde.e());
  eq[keys.f] = pp(pde.f());
  eq["rhs"] = pde.rhs_note() ? Json(*pde.rhs_note()) : Json(nullptr);
  j["equation"] = eq;

  Json orig;
  orig["discriminant"] = pp(r.original_discriminant);
  orig["sign_summary"] = SummaryJson(r.original_summary);
  orig["classification"] = QuadrantMap(r.original_types);
  j["original"] = orig;

  Json conv;
  conv["A"] = pp(r.principal.a);
  conv["B"] = pp(r.principal.b);
  conv["C"] = pp(r.principal.c);
  conv["discriminant"] = pp(r.discriminant);
  conv["sign_summary"] = SummaryJson(r.summary);
  conv["classification"] = QuadrantMap(r.types);
  conv["axes"] = {{"first", pp(r.on_first_axis)},
                  {"second", pp(r.on_second_axis)}};
  j["convolved"] = conv;
  j["degenerate"] = r.degenerate;

  Json inv;
  inv["agree"] = r.agrees_everywhere();
  inv["disagreeing_quadrants"] = Json::array();
  for (Quadrant q : Disagreeing(r)) {
    inv["disagreeing_quadrants"].push_back(ToString(q));
  }
  j["invariance"] = inv;
  return j;
}

Json InvarianceToJson(const InvarianceReport& rep) {
  const ExperimentConfig& c = rep.config;
  const int n = static_cast<int>(rep.records.size());
  Json j;
  j["command"] = "fuzz";
  j["config"] = {{"family", ToString(c.family)},
                 {"seed", c.seed},
                 {"trials", c.trials},
                 {"max_degree", c.max_degree},
                 {"chain_len", c.max_chain_length},
                 {"axis", AxisName(c.axis)}};
  j["trials"] = n;
  j["agreeing"] = rep.agreeing;
  j["disagreeing"] = rep.disagreeing;
  j["agreeing_quadrant_I"] = rep.agreeing_quadrant_one;
  j["hyperbolic_quadrant_I_both"] = rep.hyperbolic_quadrant_one_both;
  j["agreement_percent"] = n == 0 ? 0.0 : 100.0 * rep.agreeing / n;
  j["quadrant_I_agreement_percent"] =
      n == 0 ? 0.0 : 100.0 * rep.agreeing_quadrant_one / n;
  j["disagreements"] = Json::array();
  for (const TrialRecord& r : rep.records) {
    if (r.agree) continue;
    j["disagreements"].push_back({{"id", r.id},
                                  {"trial", r.trial},
                                  {"reference", r.fixed},
                                  {"original", QuadrantMap(r.original)},
                                  {"convolved", QuadrantMap(r.convolved)}});
  }
  return j;
}

int ConvolveCommand(const std::vector<std::string>& exprs, Axis axis,
                    const VarNames& vars, OutputFormat format,
                    std::ostream& out) {
  if (exprs.size() < 2) {
    throw std::invalid_argument("convolve needs at least two expressions");
  }
  std::vector<BiPoly> polys;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    try {
      polys.push_back(ParsePoly(exprs[i], vars));
    } catch (const ParseError& e) {
      throw ReportedInputError("expression " + std::to_string(i + 1) + ": " +
                               e.what() + "\n" + Caret(exprs[i], e.position()));
    }
  }
  std::vector<BiPoly> steps{polys.front()};
  for (std::size_t i = 1; i < polys.size(); ++i) {
    steps.push_back(Convolve(steps.back(), polys[i], axis));
  }
  if (format == OutputFormat::kJson) {
    Json j;
    j["command"] = "convolve";
    j["axis"] = AxisName(axis);
    j["vars"] = {vars.first(), vars.second()};
    j["inputs"] = Json::array();
    for (const BiPoly& p : polys) j["inputs"].push_back(PrettyPrint(p, vars));
    j["steps"] = Json::array();
    for (std::size_t i = 1; i < steps.size(); ++i) {
      j["steps"].push_back(PrettyPrint(steps[i], vars));
    }
    j["result"] = PrettyPrint(steps.back(), vars);
    out << j.dump(2) << "\n";
  } else {
    out << PrettyPrint(steps.back(), vars) << "\n";
  }
  return kExitOk;
}

int ClassifyCommand(const std::string& pde_text,
                    const std::vector<std::string>& kernel_texts, Axis axis,
                    OutputFormat format, std::ostream& out) {
  PdeFile file = [&] {
    try {
      return ParsePdeFile(pde_text);
    } catch (const ParseError& e) {
      throw ReportedInputError(std::string("pde file: ") + e.what());
    }
  }();
  std::vector<BiPoly> kernels;
  for (std::size_t i = 0; i < kernel_texts.size(); ++i) {
    try {
      kernels.push_back(ParsePoly(kernel_texts[i], file.vars));
    } catch (const ParseError& e) {
      throw ReportedInputError("kernel " + std::to_string(i + 1) + ": " +
                               e.what() + "\n" +
                               Caret(kernel_texts[i], e.position()));
    }
  }
  const bool zero_kernel = std::any_of(
      kernels.begin(), kernels.end(), [](const BiPoly& k) { return k.is_zero(); });
  // A zero kernel annihilates every coefficient.
  const EquationReport report =
      zero_kernel ? ClassifyTriple(file.pde, PrincipalTriple{})
                  : ClassifyEquation(file.pde, KernelChain(kernels, axis));
  if (format == OutputFormat::kJson) {
    out << ReportToJson(file.pde, file.vars, kernels, axis, report).dump(2)
        << "\n";
  } else {
    WriteReportText(file.pde, file.vars, kernels, axis, report, out);
  }
  return report.degenerate ? kExitDegenerate : kExitOk;
}

int ReproCommand(const ReproTable& table, OutputFormat format,
                 std::ostream& out) {
  const ReproResult result = RunRepro(table);
  if (format == OutputFormat::kJson) {
    out << ReproToJson(result).dump(2) << "\n";
  } else {
    WriteReproText(result, out);
  }
  return result.all_pass() ? kExitOk : kExitInternalError;
}

int FuzzCommand(const ExperimentConfig& config, OutputFormat format,
                std::ostream& out) {
  const InvarianceReport report = RunInvarianceExperiment(config);
  if (format == OutputFormat::kJson) {
    out << InvarianceToJson(report).dump(2) << "\n";
  } else {
    WriteFuzzText(report, out);
  }
  return kExitOk;
}

int RunGuarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ReportedInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kExitInternalError;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact convolution products and type classification of "
               "second-order PDEs with polynomial coefficients",
               "convpde"};
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::kText;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  // convolve
  std::vector<std::string> exprs;
  Axis conv_axis = Axis::kX;
  std::string conv_vars = "x y";
  CLI::App* convolve =
      app.add_subcommand("convolve", "Convolve expressions left to right");
  convolve->add_option("exprs", exprs, "Polynomials, folded left to right")
      ->required()
      ->expected(2, -1);
  convolve->add_option("--axis", conv_axis, "x, y or xy")
      ->required()
      ->transform(CLI::CheckedTransformer(kAxes));
  convolve->add_option("--vars", conv_vars, "Variable names, e.g. \"x t\"");
  add_format(convolve);

  // classify
  std::string pde_path;
  std::vector<std::string> kernel_texts;
  Axis classify_axis = Axis::kXY;
  CLI::App* classify = app.add_subcommand(
      "classify", "Classify an equation after convolving with kernels");
  classify->add_option("--pde", pde_path, ".pde file")->required();
  classify->add_option("--kernel", kernel_texts,
                       "Kernel polynomial; repeat to chain, applied left to "
                       "right");
  classify->add_option("--axis", classify_axis, "x, y or xy (default xy)")
      ->transform(CLI::CheckedTransformer(kAxes));
  add_format(classify);

  // repro
  CLI::App* repro =
      app.add_subcommand("repro", "Recompute the reference worked examples");
  add_format(repro);

  // fuzz
  ExperimentConfig config;
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "Randomized classification-invariance run");
  fuzz->add_option("--trials", config.trials, "Number of trials")
      ->capture_default_str();
  fuzz->add_option("--seed", config.seed, "Seed")->capture_default_str();
  fuzz->add_option("--max-degree", config.max_degree, "1..12")
      ->capture_default_str();
  fuzz->add_option("--chain-len", config.max_chain_length,
                   "Maximum kernels per chain")
      ->capture_default_str();
  fuzz->add_option("--family", config.family, "wave or general")
      ->transform(CLI::CheckedTransformer(kFamilies));
  fuzz->add_option("--axis", config.axis, "x, y or xy (default xy)")
      ->transform(CLI::CheckedTransformer(kAxes));
  fuzz->add_option("--threads", config.threads, "Worker threads")
      ->capture_default_str();
  add_format(fuzz);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  return RunGuarded(
      [&]() -> int {
        if (convolve->parsed()) {
          return ConvolveCommand(exprs, conv_axis, VarNames::FromString(conv_vars),
                                 format, out);
        }
        if (classify->parsed()) {
          return ClassifyCommand(ReadFile(pde_path), kernel_texts, classify_axis,
                                 format, out);
        }
        if (repro->parsed()) return ReproCommand(DefaultReproTable(), format, out);
        config.Validate();
        return FuzzCommand(config, format, out);
      },
      err);
}

}  // namespace convpde
