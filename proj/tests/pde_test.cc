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

#include "convpde/pde.h"

#include <gtest/gtest.h>

#include "convpde/parser.h"
#include "test_util.h"

namespace convpde {
namespace {

BiPoly P(const char* text, const char* vars = "x y") {
  return ParsePoly(text, VarNames::FromString(vars));
}

BiPoly Unit(std::uint32_t d1, std::uint32_t d2) {
  return BiPoly::Term(Rational(1), d1, d2);
}

SecondOrderPde PolyExample() {
  return SecondOrderPde(Unit(2, 3), Unit(3, 4), Unit(4, 5));
}

SecondOrderPde Wave(Monomial a, Monomial c) {
  return SecondOrderPde(BiPoly::Term(Rational(1), a), BiPoly(),
                        BiPoly::Term(Rational(-1), c));
}

KernelChain Chain(std::vector<Monomial> exps, Axis axis = Axis::kXY) {
  std::vector<BiPoly> kernels;
  for (Monomial m : exps) kernels.push_back(BiPoly::Term(Rational(1), m));
  return KernelChain(std::move(kernels), axis);
}

void ExpectAllTypes(const EquationReport& r, TypeVerdict t) {
  for (Quadrant q : kQuadrants) {
    EXPECT_EQ(r.types[static_cast<int>(q)], t) << ToString(q);
  }
}

TEST(SecondOrderPdeTest, RejectsZeroPrincipalPart) {
  EXPECT_THROW(SecondOrderPde(BiPoly(), BiPoly(), BiPoly(), Unit(1, 0)),
               std::invalid_argument);
}

TEST(ConvolvedPrincipalTest, SingleX) {
  const PrincipalTriple t =
      ConvolvedPrincipal(PolyExample(), Chain({{3, 0}}, Axis::kX));
  EXPECT_EQ(t.a, P("1/60*x^6*y^3"));
  EXPECT_EQ(t.b, P("1/140*x^7*y^4"));
  EXPECT_EQ(t.c, P("1/280*x^8*y^5"));
}

TEST(ConvolvedPrincipalTest, WaveKeepsSigns) {
  const SecondOrderPde wave(P("x^2*t^7", "x t"), BiPoly(), P("-x^6*t^5", "x t"));
  const PrincipalTriple t = ConvolvedPrincipal(wave, Chain({{5, 2}, {4, 3}}));
  EXPECT_EQ(t.a, P("1/1558311955200*x^13*t^14", "x t"));
  EXPECT_TRUE(t.b.is_zero());
  EXPECT_EQ(t.c, P("-1/57058191590400*x^17*t^12", "x t"));
}

TEST(ConvolvedPrincipalTest, EmptyChainKeepsCoefficients) {
  const PrincipalTriple t = ConvolvedPrincipal(PolyExample(), KernelChain());
  EXPECT_EQ(t, (PrincipalTriple{Unit(2, 3), Unit(3, 4), Unit(4, 5)}));
}

TEST(DiscriminantTest, Examples) {
  EXPECT_EQ(Discriminant({P("1/60*x^6*y^3"), P("1/140*x^7*y^4"),
                          P("1/280*x^8*y^5")}),
            P("-1/117600*x^14*y^8"));
  EXPECT_EQ(Discriminant({BiPoly(1), BiPoly(), BiPoly(1)}), BiPoly(-1));
  const PrincipalTriple t =
      ConvolvedPrincipal(PolyExample(), Chain({{7, 4}, {3, 2}}));
  EXPECT_EQ(Discriminant(t), P("-23/466987721099855155200000000*x^30*y^24"));
}

TEST(ClassifyAtPointTest, SignRule) {
  const Point one{Rational(1), Rational(1)};
  EXPECT_EQ(ClassifyAtPoint(P("-1/117600*x^14*y^8"), one),
            Classification::kElliptic);
  EXPECT_EQ(ClassifyAtPoint(P("x^30*t^26", "x t"), {Rational(-1), Rational(-1)}),
            Classification::kHyperbolic);
  EXPECT_EQ(ClassifyAtPoint(P("x^2 - y"), {Rational(2), Rational(4)}),
            Classification::kParabolic);
  EXPECT_EQ(ClassifyAtPoint(P("x*y"), {Rational(), Rational(5)}),
            Classification::kParabolic);
}

TEST(ClassifyAtPointPropertyTest, DeterminedBySignOfEval) {
  testing::Gen gen(31);
  for (int i = 0; i < 500; ++i) {
    const BiPoly d = gen.Poly(6, 5, true);
    const Point pt{gen.AnyRational(), gen.AnyRational()};
    const int s = d.Eval(pt).sign();
    const Classification expected = s > 0   ? Classification::kHyperbolic
                                    : s < 0 ? Classification::kElliptic
                                            : Classification::kParabolic;
    ASSERT_EQ(ClassifyAtPoint(d, pt), expected);
  }
}

TEST(SignSummaryTest, MonomialParity) {
  const SignSummary d2 = ComputeSignSummary(P("-1/101930400*x^6*y^24"));
  EXPECT_EQ(d2.method, SignMethod::kMonomialParity);
  for (Quadrant q : kQuadrants) {
    EXPECT_EQ(d2.at(q), SignVerdict::kNegative);
    EXPECT_TRUE(d2.conclusive(q));
  }

  const SignSummary xy = ComputeSignSummary(P("x*y"));
  EXPECT_EQ(xy.method, SignMethod::kMonomialParity);
  EXPECT_EQ(xy.at(Quadrant::kI), SignVerdict::kPositive);
  EXPECT_EQ(xy.at(Quadrant::kII), SignVerdict::kNegative);
  EXPECT_EQ(xy.at(Quadrant::kIII), SignVerdict::kPositive);
  EXPECT_EQ(xy.at(Quadrant::kIV), SignVerdict::kNegative);

  const SignSummary big =
      ComputeSignSummary(P("1/26409729190021827098490961920000*x^32*t^34", "x t"));
  for (Quadrant q : kQuadrants) EXPECT_EQ(big.at(q), SignVerdict::kPositive);
}

TEST(SignSummaryTest, EvenPowersSameSign) {
  const SignSummary s = ComputeSignSummary(P("-x^2*y^4 - 3 - 1/2*y^2"));
  EXPECT_EQ(s.method, SignMethod::kAllTermsSameSignEvenPowers);
  for (Quadrant q : kQuadrants) {
    EXPECT_EQ(s.at(q), SignVerdict::kNegative);
    EXPECT_TRUE(s.conclusive(q));
  }
}

TEST(SignSummaryTest, SamplingFallback) {
  const SignSummary s = ComputeSignSummary(P("x^3 + y"));
  EXPECT_EQ(s.method, SignMethod::kSampling);
  EXPECT_EQ(s.at(Quadrant::kI), SignVerdict::kPositive);
  EXPECT_FALSE(s.conclusive(Quadrant::kI));
  EXPECT_EQ(s.at(Quadrant::kIII), SignVerdict::kNegative);
  // x^3 + y changes sign in quadrant II: (-2, 1) < 0 < (-1/2, 1).
  EXPECT_EQ(s.at(Quadrant::kII), SignVerdict::kMixed);
  EXPECT_TRUE(s.conclusive(Quadrant::kII));

  // x - y vanishes on the sampled diagonal in quadrant I.
  const SignSummary diag = ComputeSignSummary(P("x - y"));
  EXPECT_EQ(diag.at(Quadrant::kI), SignVerdict::kMixed);
  const SignSummary touch = ComputeSignSummary(P("x^2 - 2*x*y + y^2"));
  EXPECT_EQ(touch.at(Quadrant::kI), SignVerdict::kUnknown);
}

TEST(SignSummaryTest, ZeroPolynomial) {
  const SignSummary s = ComputeSignSummary(BiPoly());
  EXPECT_EQ(s.method, SignMethod::kIdenticallyZero);
  for (Quadrant q : kQuadrants) EXPECT_EQ(s.at(q), SignVerdict::kZero);
}

TEST(SignSummaryTest, DefaultGridHas36Points) {
  const auto& grid = DefaultSampleGrid();
  EXPECT_EQ(grid.size(), 36u);
  for (const Point& p : grid) {
    EXPECT_NE(p.first.sign(), 0);
    EXPECT_NE(p.second.sign(), 0);
  }
}

TEST(SignSummaryPropertyTest, MonomialParityAgreesWithPointwise) {
  const std::array<std::pair<Rational, Rational>, 3> magnitudes = {{
      {Rational(1), Rational(1)},
      {Rational(2), MakeRational(1, 2)},
      {MakeRational(1, 3), Rational(5)},
  }};
  const std::array<std::pair<int, int>, 4> signs = {{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
  for (std::uint32_t p = 0; p <= 10; ++p) {
    for (std::uint32_t q = 0; q <= 10; ++q) {
      for (long c : {-3L, 2L}) {
        const BiPoly d = BiPoly::Term(MakeRational(c, 7), p, q);
        const SignSummary s = ComputeSignSummary(d);
        ASSERT_EQ(s.method, SignMethod::kMonomialParity);
        for (int quad = 0; quad < 4; ++quad) {
          for (const auto& [mx, my] : magnitudes) {
            const Point pt{mx * Rational(signs[quad].first),
                           my * Rational(signs[quad].second)};
            const Classification at = ClassifyAtPoint(d, pt);
            const TypeVerdict tv = TypeFromSign(s.quadrants[quad]);
            ASSERT_EQ(ToString(at), ToString(tv)) << p << " " << q << " " << quad;
          }
        }
      }
    }
  }
}

TEST(SignSummaryPropertyTest, WaveFamilyPositiveInFirstQuadrant) {
  testing::Gen gen(909);
  for (int i = 0; i < 500; ++i) {
    const Monomial a = gen.Mono(6);
    const Monomial c = gen.Mono(6);
    std::vector<Monomial> kernels;
    const int len = gen.Int(1, 3);
    for (int k = 0; k < len; ++k) kernels.push_back(gen.Mono(6));
    const SecondOrderPde pde(BiPoly::Term(gen.PositiveRational(), a), BiPoly(),
                             BiPoly::Term(-gen.PositiveRational(), c));
    const EquationReport r = ClassifyEquation(pde, Chain(kernels));
    ASSERT_EQ(r.summary.at(Quadrant::kI), SignVerdict::kPositive);
    ASSERT_EQ(r.summary.method, SignMethod::kMonomialParity);
  }
}

TEST(DiscriminantPropertyTest, SymmetricInAandC) {
  testing::Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    const BiPoly a = gen.Poly(5, 4), b = gen.Poly(5, 4), c = gen.Poly(5, 4);
    ASSERT_EQ(Discriminant({a, b, c}), Discriminant({c, b, a}));
  }
}

TEST(DiscriminantPropertyTest, ScalingCovariance) {
  testing::Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    const PrincipalTriple t{gen.Poly(4, 3), gen.Poly(4, 3, true), gen.Poly(4, 3)};
    const Rational lambda = gen.PositiveRational();
    const PrincipalTriple scaled{lambda * t.a, lambda * t.b, lambda * t.c};
    const BiPoly d = Discriminant(t);
    ASSERT_EQ(Discriminant(scaled), lambda * lambda * d);
    const SignSummary s1 = ComputeSignSummary(d);
    const SignSummary s2 = ComputeSignSummary(Discriminant(scaled));
    ASSERT_EQ(s1.quadrants, s2.quadrants);
    ASSERT_EQ(s1.method, s2.method);
  }
}

TEST(ClassifyEquationTest, SingleXExampleIsElliptic) {
  const EquationReport r =
      ClassifyEquation(PolyExample(), Chain({{3, 0}}, Axis::kX));
  EXPECT_EQ(r.discriminant, P("-1/117600*x^14*y^8"));
  EXPECT_EQ(r.summary.method, SignMethod::kMonomialParity);
  ExpectAllTypes(r, TypeVerdict::kElliptic);
  // b^2 - a c vanishes identically for the unconvolved equation.
  EXPECT_TRUE(r.original_discriminant.is_zero());
  EXPECT_EQ(r.original_types[0], TypeVerdict::kParabolic);
  EXPECT_FALSE(r.agrees_everywhere());
  EXPECT_FALSE(r.degenerate);
  EXPECT_TRUE(r.on_first_axis.is_zero());
  EXPECT_TRUE(r.on_second_axis.is_zero());
}

TEST(ClassifyEquationTest, WaveExamplesAreHyperbolic) {
  struct Case {
    Monomial a, c;
    std::vector<Monomial> kernels;
    const char* d;
  };
  const std::vector<Case> cases = {
      {{2, 7}, {6, 5}, {{5, 2}, {4, 3}}, "1/88914462097412421550080000*x^30*t^26"},
      {{3, 7}, {7, 5}, {{1, 9}, {5, 3}}, "1/259841930424676205263257600000*x^26*t^40"},
      {{3, 7}, {7, 5}, {{3, 4}, {6, 5}}, "1/26409729190021827098490961920000*x^32*t^34"},
  };
  for (const Case& c : cases) {
    const EquationReport r = ClassifyEquation(Wave(c.a, c.c), Chain(c.kernels));
    EXPECT_EQ(r.discriminant, P(c.d, "x t"));
    EXPECT_EQ(r.summary.method, SignMethod::kMonomialParity);
    ExpectAllTypes(r, TypeVerdict::kHyperbolic);
  }
}

TEST(ClassifyEquationTest, LowerOrderTermsIgnored) {
  const SecondOrderPde with_lower(Unit(2, 3), Unit(3, 4), Unit(4, 5), P("x^9 - 4"),
                                  P("y"), P("-7*x*y"), "f(x,y) ** g(x,y)");
  const KernelChain chain = Chain({{3, 0}}, Axis::kX);
  const EquationReport a = ClassifyEquation(with_lower, chain);
  const EquationReport b = ClassifyEquation(PolyExample(), chain);
  EXPECT_EQ(a.discriminant, b.discriminant);
  EXPECT_EQ(a.types, b.types);
  EXPECT_EQ(a.original_types, b.original_types);
}

TEST(ClassifyEquationTest, ZeroTripleIsDegenerate) {
  const EquationReport r = ClassifyTriple(PolyExample(), PrincipalTriple{});
  EXPECT_TRUE(r.degenerate);
  ExpectAllTypes(r, TypeVerdict::kDegenerate);
}

TEST(ParityPredictTest, WaveExamples) {
  // Labels come from parities alone: the first chain has kernel exponent
  // sum 14 (even) while a and c have odd sums, hence Case 4.
  const std::vector<Monomial> k1 = {{5, 2}, {4, 3}};
  const WavePrediction p1 = ParityPredictWave({2, 7}, {6, 5}, k1);
  EXPECT_EQ(p1.label, ParityCase::kCase4);
  EXPECT_EQ(p1.predicted, Classification::kHyperbolic);

  const std::vector<Monomial> k2 = {{1, 9}, {5, 3}};
  const WavePrediction p2 = ParityPredictWave({3, 7}, {7, 5}, k2);
  EXPECT_EQ(p2.label, ParityCase::kCase2);
  EXPECT_EQ(p2.predicted, Classification::kHyperbolic);

  const std::vector<Monomial> k3 = {{3, 4}, {6, 5}};
  const WavePrediction p3 = ParityPredictWave({3, 7}, {7, 5}, k3);
  EXPECT_EQ(p3.label, ParityCase::kCase2);
  EXPECT_EQ(p3.predicted, Classification::kHyperbolic);
}

TEST(ParityPredictTest, AllFourCasesReachable) {
  const std::vector<Monomial> odd = {{1, 0}};
  const std::vector<Monomial> even = {{1, 1}};
  EXPECT_EQ(ParityPredictWave({1, 0}, {0, 1}, odd).label, ParityCase::kCase1);
  EXPECT_EQ(ParityPredictWave({1, 1}, {2, 0}, even).label, ParityCase::kCase2);
  EXPECT_EQ(ParityPredictWave({1, 1}, {2, 0}, odd).label, ParityCase::kCase3);
  EXPECT_EQ(ParityPredictWave({1, 0}, {0, 1}, even).label, ParityCase::kCase4);
  const WavePrediction mixed = ParityPredictWave({1, 0}, {2, 0}, odd);
  EXPECT_EQ(mixed.label, ParityCase::kUncovered);
  EXPECT_FALSE(mixed.predicted.has_value());
}

TEST(ParityPredictTest, FromEquation) {
  const WavePrediction p =
      ParityPredictWave(Wave({2, 7}, {6, 5}), Chain({{5, 2}, {4, 3}}));
  EXPECT_EQ(p.label, ParityCase::kCase4);
}

TEST(ParityPredictTest, RejectsUnsupportedForms) {
  const KernelChain chain = Chain({{1, 1}});
  EXPECT_THROW(ParityPredictWave(PolyExample(), chain), UnsupportedFormError);
  const SecondOrderPde two_terms(P("x + y"), BiPoly(), P("-x"));
  EXPECT_THROW(ParityPredictWave(two_terms, chain), UnsupportedFormError);
  const SecondOrderPde same_sign(P("x"), BiPoly(), P("y"));
  EXPECT_THROW(ParityPredictWave(same_sign, chain), UnsupportedFormError);
  EXPECT_THROW(ParityPredictWave(Wave({1, 1}, {1, 1}), Chain({{1, 1}}, Axis::kX)),
               UnsupportedFormError);
  const KernelChain poly_kernel({P("x + 1")}, Axis::kXY);
  EXPECT_THROW(ParityPredictWave(Wave({1, 1}, {1, 1}), poly_kernel),
               UnsupportedFormError);
}

// The heuristic always holds in quadrant I, where every convolved
// coefficient is positive, but the quadrant-II/IV sign of D depends on the
// parity of a's and c's exponents per variable, which the case rule does
// not look at.
TEST(ParityPredictPropertyTest, CrossCheckedAgainstExactSign) {
  testing::Gen gen(1234);
  int quadrant_one_hits = 0;
  int off_quadrant_misses = 0;
  for (int i = 0; i < 500; ++i) {
    const Monomial a = gen.Mono(6);
    const Monomial c = gen.Mono(6);
    std::vector<Monomial> kernels;
    const int len = gen.Int(1, 3);
    for (int k = 0; k < len; ++k) kernels.push_back(gen.Mono(6));
    const WavePrediction pred = ParityPredictWave(a, c, kernels);
    const EquationReport r = ClassifyEquation(Wave(a, c), Chain(kernels));
    if (!pred.predicted) continue;
    if (r.types[0] == TypeVerdict::kHyperbolic) ++quadrant_one_hits;
    for (int q = 1; q < 4; ++q) {
      if (r.types[q] != TypeVerdict::kHyperbolic) {
        ++off_quadrant_misses;
        break;
      }
    }
    const bool all_even = (a.deg1 + c.deg1) % 2 == 0 && (a.deg2 + c.deg2) % 2 == 0;
    for (int q = 0; q < 4; ++q) {
      if (all_even) ASSERT_EQ(r.types[q], TypeVerdict::kHyperbolic);
    }
  }
  EXPECT_GT(quadrant_one_hits, 0);
  EXPECT_GT(off_quadrant_misses, 0);
  // Hand-picked miss: Case 1 by parity, yet D ~ x^odd so quadrant II is
  // elliptic.
  const std::vector<Monomial> odd = {{1, 0}};
  ASSERT_EQ(ParityPredictWave({2, 1}, {1, 2}, odd).label, ParityCase::kCase1);
  const EquationReport miss = ClassifyEquation(Wave({2, 1}, {1, 2}), Chain(odd));
  EXPECT_EQ(miss.types[static_cast<int>(Quadrant::kII)], TypeVerdict::kElliptic);
}

}  // namespace
}  // namespace convpde
