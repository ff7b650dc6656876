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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "convpde/cli.h"
#include "convpde/conv.h"
#include "convpde/oracle.h"
#include "convpde/parser.h"
#include "convpde/pde.h"
#include "convpde/repro.h"
#include "test_util.h"

namespace convpde {
namespace {

using testing::Gen;

// Collects the first few failure notes of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(checks_ - failures_) + "/" +
                    std::to_string(checks_) + " checks";
    for (const std::string& n : notes_) s += "; " + n;
    return s;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

const VarNames kXY;
const VarNames kXT("x", "t");

BiPoly P(const std::string& text, const VarNames& vars = kXY) {
  return ParsePoly(text, vars);
}

void ExpectPoly(Check& c, const BiPoly& got, const std::string& want,
                const VarNames& vars = kXY) {
  c.Expect(got == P(want, vars), "expected " + want + ", got " + PrettyPrint(got, vars));
}

SecondOrderPde PolyExample() {
  return SecondOrderPde(P("x^2*y^3"), P("x^3*y^4"), P("x^4*y^5"));
}

SecondOrderPde Wave(const std::string& utt, const std::string& uxx) {
  return SecondOrderPde(P(utt, kXT), BiPoly(), P(uxx, kXT));
}

KernelChain Chain(std::vector<std::string> kernels, Axis axis,
                  const VarNames& vars = kXY) {
  std::vector<BiPoly> ks;
  for (const auto& k : kernels) ks.push_back(P(k, vars));
  return KernelChain(std::move(ks), axis);
}

Check SingleX() {
  Check c;
  const BiPoly k = P("x^3");
  ExpectPoly(c, ConvSingle(k, P("x^2*y^3"), Axis::kX), "1/60*x^6*y^3");
  ExpectPoly(c, ConvSingle(k, P("x^3*y^4"), Axis::kX), "1/140*x^7*y^4");
  ExpectPoly(c, ConvSingle(k, P("x^4*y^5"), Axis::kX), "1/280*x^8*y^5");
  const EquationReport r = ClassifyEquation(PolyExample(), Chain({"x^3"}, Axis::kX));
  ExpectPoly(c, r.discriminant, "-1/117600*x^14*y^8");
  return c;
}

Check SingleY() {
  Check c;
  const BiPoly k = P("y^7");
  ExpectPoly(c, ConvSingle(k, P("x^2*y^3"), Axis::kY), "1/1320*x^2*y^11");
  ExpectPoly(c, ConvSingle(k, P("x^4*y^5"), Axis::kY), "1/10296*x^4*y^13");
  ExpectPoly(c, ConvSingle(k, P("x^3*y^4"), Axis::kY), "1/3960*x^3*y^12");
  const EquationReport r = ClassifyEquation(PolyExample(), Chain({"y^7"}, Axis::kY));
  ExpectPoly(c, r.discriminant, "-1/101930400*x^6*y^24");

  const ReproResult repro = RunRepro(DefaultReproTable());
  bool flagged = false;
  for (const ReproDiscrepancyResult& d : repro.discrepancies) {
    flagged = flagged || (d.entry.case_name == "single-y-convolution" &&
                          d.entry.quantity == "uxy" &&
                          P(d.entry.stated) == P("1/3860*x^3*y^12") &&
                          P(d.computed) == P("1/3960*x^3*y^12") &&
                          d.corrected_is_consistent);
  }
  c.Expect(flagged, "repro suite does not flag 1/3860 as inconsistent");
  return c;
}

Check TripleDouble() {
  Check c;
  const KernelChain k1 = Chain({"x^5*t^2", "x^4*t^3"}, Axis::kXY, kXT);
  const EquationReport w1 = ClassifyEquation(Wave("x^2*t^7", "-x^6*t^5"), k1);
  ExpectPoly(c, w1.principal.a, "1/1558311955200*x^13*t^14", kXT);
  ExpectPoly(c, w1.principal.c, "-1/57058191590400*x^17*t^12", kXT);
  ExpectPoly(c, w1.discriminant, "1/88914462097412421550080000*x^30*t^26", kXT);
  const EquationReport w2 =
      ClassifyEquation(Wave("x^3*t^7", "-x^7*t^5"),
                       Chain({"x*t^9", "x^5*t^3"}, Axis::kXY, kXT));
  ExpectPoly(c, w2.discriminant, "1/259841930424676205263257600000*x^26*t^40", kXT);
  const EquationReport w3 =
      ClassifyEquation(Wave("x^3*t^7", "-x^7*t^5"),
                       Chain({"x^3*t^4", "x^6*t^5"}, Axis::kXY, kXT));
  ExpectPoly(c, w3.discriminant, "1/26409729190021827098490961920000*x^32*t^34",
             kXT);
  const EquationReport e =
      ClassifyEquation(PolyExample(), Chain({"x^7*y^4", "x^3*y^2"}, Axis::kXY));
  ExpectPoly(c, e.discriminant, "-23/466987721099855155200000000*x^30*y^24");
  return c;
}

Check Verdicts() {
  Check c;
  struct Case {
    std::string name;
    EquationReport report;
    TypeVerdict want;
  };
  const std::vector<Case> cases = {
      {"single x", ClassifyEquation(PolyExample(), Chain({"x^3"}, Axis::kX)),
       TypeVerdict::kElliptic},
      {"single y", ClassifyEquation(PolyExample(), Chain({"y^7"}, Axis::kY)),
       TypeVerdict::kElliptic},
      {"wave 1", ClassifyEquation(Wave("x^2*t^7", "-x^6*t^5"),
                                  Chain({"x^5*t^2", "x^4*t^3"}, Axis::kXY, kXT)),
       TypeVerdict::kHyperbolic},
      {"wave 2", ClassifyEquation(Wave("x^3*t^7", "-x^7*t^5"),
                                  Chain({"x*t^9", "x^5*t^3"}, Axis::kXY, kXT)),
       TypeVerdict::kHyperbolic},
      {"wave 3", ClassifyEquation(Wave("x^3*t^7", "-x^7*t^5"),
                                  Chain({"x^3*t^4", "x^6*t^5"}, Axis::kXY, kXT)),
       TypeVerdict::kHyperbolic},
  };
  for (const Case& k : cases) {
    c.Expect(k.report.summary.method == SignMethod::kMonomialParity,
             k.name + ": method " + ToString(k.report.summary.method));
    for (Quadrant q : kQuadrants) {
      c.Expect(k.report.summary.conclusive(q) &&
                   k.report.types[static_cast<int>(q)] == k.want,
               k.name + " quadrant " + ToString(q) + ": " +
                   ToString(k.report.types[static_cast<int>(q)]));
    }
  }
  return c;
}

Check OracleEquivalence() {
  Check c;
  Gen gen(0xacce55);
  std::uniform_real_distribution<double> coord(0.5, 2.0);
  int exact_trials = 0;
  for (Axis axis : {Axis::kX, Axis::kY, Axis::kXY}) {
    for (int i = 0; i < 150; ++i, ++exact_trials) {
      const BiPoly p = gen.Poly(8, 4, true);
      const BiPoly q = gen.Poly(8, 4, true);
      c.Expect(ConvOracleExact(p, q, axis) == Convolve(p, q, axis),
               "oracle mismatch on " + PrettyPrint(p) + " | " + PrettyPrint(q));
    }
    for (int i = 0; i < 100; ++i) {
      const BiPoly p = gen.PositivePoly(8, 4);
      const BiPoly q = gen.PositivePoly(8, 4);
      const std::pair<double, double> pt{coord(gen.rng()), coord(gen.rng())};
      const double exact = EvalDouble(Convolve(p, q, axis), pt);
      const double numeric = ConvNumericAt(p, q, axis, pt);
      c.Expect(std::abs(numeric - exact) <= 1e-9 * std::abs(exact),
               "quadrature off on " + PrettyPrint(p) + " | " + PrettyPrint(q));
    }
  }
  c.Expect(exact_trials >= 300, "too few exact trials");
  return c;
}

Check Laws() {
  Check c;
  constexpr int kTrials = 200;
  for (Axis axis : {Axis::kX, Axis::kY, Axis::kXY}) {
    const std::string ax = AxisName(axis);
    Gen gen(0x1a35 + static_cast<int>(axis));
    for (int i = 0; i < kTrials; ++i) {
      const BiPoly p = gen.Poly(5, 3, true), q = gen.Poly(5, 3, true),
                   r = gen.Poly(5, 3, true);
      const Rational s = gen.AnyRational();
      c.Expect(Convolve(p, q, axis) == Convolve(q, p, axis), ax + ": commutativity");
      c.Expect(Convolve(Convolve(p, q, axis), r, axis) ==
                   Convolve(p, Convolve(q, r, axis), axis),
               ax + ": associativity");
      c.Expect(Convolve(s * p + q, r, axis) ==
                   s * Convolve(p, r, axis) + Convolve(q, r, axis),
               ax + ": bilinearity");

      const BiPoly pp = gen.PositivePoly(6, 3), pq = gen.PositivePoly(6, 3);
      const BiPoly conv = Convolve(pp, pq, axis);
      const auto d = conv.degree();
      const auto dp = pp.degree(), dq = pq.degree();
      const std::uint32_t up1 = axis == Axis::kY ? 0 : 1;
      const std::uint32_t up2 = axis == Axis::kX ? 0 : 1;
      c.Expect(d && d->deg1 == dp->deg1 + dq->deg1 + up1 &&
                   d->deg2 == dp->deg2 + dq->deg2 + up2,
               ax + ": degree law");
      bool positive = !conv.is_zero();
      for (const auto& [m, coeff] : conv.terms()) positive = positive && coeff.sign() > 0;
      c.Expect(positive, ax + ": positivity");

      std::vector<Monomial> exps;
      std::vector<BiPoly> kernels;
      for (int k = gen.Int(1, 4); k > 0; --k) {
        exps.push_back(gen.Mono(8));
        kernels.push_back(BiPoly::Term(Rational(1), exps.back()));
      }
      const Monomial target = gen.Mono(8);
      const BiPoly folded = ConvChain(KernelChain(kernels, axis),
                                      BiPoly::Term(Rational(1), target));
      const BiPoly closed =
          BiPoly::Term(ClosedFormChainCoeff(exps, target, axis),
                       ClosedFormChainExponent(exps, target, axis));
      c.Expect(folded == closed, ax + ": closed form vs fold");
    }
  }
  return c;
}

Check Invariance() {
  Check c;
  ExperimentConfig wave;
  wave.trials = 500;
  wave.family = Family::kWave;
  const InvarianceReport w = RunInvarianceExperiment(wave);
  c.Expect(w.hyperbolic_quadrant_one_both == 500,
           "wave: " + std::to_string(w.hyperbolic_quadrant_one_both) +
               "/500 hyperbolic in quadrant I before and after");

  ExperimentConfig general;
  general.trials = 100;
  general.seed = 7;
  general.family = Family::kGeneral;
  const InvarianceReport g1 = RunInvarianceExperiment(general);
  const InvarianceReport g2 = RunInvarianceExperiment(general);
  bool reference = false;
  for (const TrialRecord& r : g1.records) {
    if (!r.fixed || r.agree) continue;
    bool shape = true;
    for (int q = 0; q < 4; ++q) {
      shape = shape && r.original[q] == TypeVerdict::kParabolic &&
              r.convolved[q] == TypeVerdict::kElliptic;
    }
    reference = reference || shape;
  }
  c.Expect(reference, "general: reference disagreement not recorded");
  c.Expect(InvarianceToJson(g1).dump() == InvarianceToJson(g2).dump(),
           "general: rerun differs");
  return c;
}

Check ParserRoundTrip() {
  Check c;
  Gen gen(0x9a75e);
  for (int i = 0; i < 500; ++i) {
    const BiPoly p = gen.Poly(10, 6, true);
    const VarNames& vars = i % 2 ? kXT : kXY;
    const std::string text = PrettyPrint(p, vars);
    c.Expect(ParsePoly(text, vars) == p, "round trip failed for " + text);
  }
  const std::vector<std::string> malformed = {
      "", "x^", "x^-1", "x^1/2", "x^y", "1/0", "z", "(x + y", "x + y)", "x y",
      "2x", "x +", "x ** y", "1.5", "x^100001", "x $ y", "()", "-", "*x",
      "x^(2)", "/3", "3/", "x^^2", "((x)", "x)(", "1//2",
  };
  for (const std::string& text : malformed) {
    try {
      ParsePoly(text);
      c.Expect(false, "accepted malformed '" + text + "'");
    } catch (const ParseError& e) {
      c.Expect(e.position() <= text.size(), "position out of range for '" + text + "'");
    } catch (...) {
      c.Expect(false, "non-parse exception for '" + text + "'");
    }
  }
  // Random byte strings over the token alphabet: parse or a positioned error.
  const std::string alphabet = "xy0179+-*/^() $.";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    for (int n = gen.Int(0, 12); n > 0; --n) {
      text += alphabet[gen.Int(0, static_cast<int>(alphabet.size()) - 1)];
    }
    try {
      ParsePoly(text);
    } catch (const ParseError& e) {
      c.Expect(e.position() <= text.size(), "position out of range for '" + text + "'");
    } catch (const std::exception& e) {
      c.Expect(false, "non-parse exception for '" + text + "': " + e.what());
    }
  }
  return c;
}

}  // namespace
}  // namespace convpde

int main() {
  using convpde::Check;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"exact single convolution in x", convpde::SingleX},
      {"exact single convolution in y, 1/3860 flagged", convpde::SingleY},
      {"exact double-convolution chains", convpde::TripleDouble},
      {"quadrant verdicts via MonomialParity", convpde::Verdicts},
      {"oracle and quadrature equivalence", convpde::OracleEquivalence},
      {"algebraic laws", convpde::Laws},
      {"invariance experiment", convpde::Invariance},
      {"parser round trip and malformed corpus", convpde::ParserRoundTrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%s)\n", c.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.Summary().c_str());
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
