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

#include <utility>

namespace convpde {

namespace {

// Sign of (sx)^p (sy)^q for sx, sy in {-1, +1}.
constexpr std::array<std::pair<int, int>, 4> kQuadrantSigns = {
    {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

int QuadrantOf(const Point& p) {
  const int sx = p.first.sign();
  const int sy = p.second.sign();
  if (sx == 0 || sy == 0) return -1;
  if (sx > 0) return sy > 0 ? 0 : 3;
  return sy > 0 ? 1 : 2;
}

SignVerdict VerdictFromSign(int s) {
  if (s > 0) return SignVerdict::kPositive;
  if (s < 0) return SignVerdict::kNegative;
  return SignVerdict::kZero;
}

BiPoly RestrictToFirstAxis(const BiPoly& p) {
  BiPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.deg2 == 0) out.AddTerm(mono, c);
  }
  return out;
}

BiPoly RestrictToSecondAxis(const BiPoly& p) {
  BiPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.deg1 == 0) out.AddTerm(mono, c);
  }
  return out;
}

std::array<TypeVerdict, 4> TypesOf(const SignSummary& s) {
  std::array<TypeVerdict, 4> out{};
  for (int q = 0; q < 4; ++q) out[q] = TypeFromSign(s.quadrants[q]);
  return out;
}

bool IsPositiveMonomial(const BiPoly& p) {
  return p.is_monomial() && p.terms().begin()->second.sign() > 0;
}

}  // namespace

SecondOrderPde::SecondOrderPde(BiPoly a, BiPoly b, BiPoly c, BiPoly d,
                               BiPoly e, BiPoly f,
                               std::optional<std::string> rhs_note)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      e_(std::move(e)),
      f_(std::move(f)),
      rhs_note_(std::move(rhs_note)) {
  if (a_.is_zero() && b_.is_zero() && c_.is_zero()) {
    throw std::invalid_argument("principal part is identically zero");
  }
}

bool EquationReport::agrees_everywhere() const {
  for (Quadrant q : kQuadrants) {
    if (!agrees(q)) return false;
  }
  return true;
}

std::string ToString(Classification c) {
  switch (c) {
    case Classification::kHyperbolic:
      return "Hyperbolic";
    case Classification::kElliptic:
      return "Elliptic";
    case Classification::kParabolic:
      return "Parabolic";
  }
  return "?";
}

std::string ToString(Quadrant q) {
  static const char* const kNames[] = {"I", "II", "III", "IV"};
  return kNames[static_cast<int>(q)];
}

std::string ToString(SignVerdict v) {
  switch (v) {
    case SignVerdict::kPositive:
      return "Positive";
    case SignVerdict::kNegative:
      return "Negative";
    case SignVerdict::kZero:
      return "Zero";
    case SignVerdict::kMixed:
      return "Mixed";
    case SignVerdict::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string ToString(SignMethod m) {
  switch (m) {
    case SignMethod::kMonomialParity:
      return "MonomialParity";
    case SignMethod::kAllTermsSameSignEvenPowers:
      return "AllTermsSameSignEvenPowers";
    case SignMethod::kSampling:
      return "Sampling";
    case SignMethod::kIdenticallyZero:
      return "IdenticallyZero";
  }
  return "?";
}

std::string ToString(TypeVerdict t) {
  switch (t) {
    case TypeVerdict::kHyperbolic:
      return "Hyperbolic";
    case TypeVerdict::kElliptic:
      return "Elliptic";
    case TypeVerdict::kParabolic:
      return "Parabolic";
    case TypeVerdict::kMixed:
      return "Mixed";
    case TypeVerdict::kUndetermined:
      return "Undetermined";
    case TypeVerdict::kDegenerate:
      return "Degenerate";
  }
  return "?";
}

std::string ToString(ParityCase p) {
  switch (p) {
    case ParityCase::kCase1:
      return "Case1";
    case ParityCase::kCase2:
      return "Case2";
    case ParityCase::kCase3:
      return "Case3";
    case ParityCase::kCase4:
      return "Case4";
    case ParityCase::kUncovered:
      return "Uncovered";
  }
  return "?";
}

const std::vector<Point>& DefaultSampleGrid() {
  static const std::vector<Point> grid = [] {
    const std::array<Rational, 6> coords = {
        MakeRational(-2, 1), MakeRational(-1, 1), MakeRational(-1, 2),
        MakeRational(1, 2),  MakeRational(1, 1),  MakeRational(2, 1)};
    std::vector<Point> pts;
    for (const Rational& x : coords) {
      for (const Rational& y : coords) pts.emplace_back(x, y);
    }
    return pts;
  }();
  return grid;
}

PrincipalTriple ConvolvedPrincipal(const SecondOrderPde& pde,
                                   const KernelChain& chain) {
  return {ConvChain(chain, pde.a()), ConvChain(chain, pde.b()),
          ConvChain(chain, pde.c())};
}

BiPoly Discriminant(const PrincipalTriple& t) {
  return t.b * t.b - t.a * t.c;
}

Classification ClassifyAtPoint(const BiPoly& discriminant,
                               const Point& point) {
  const int s = discriminant.Eval(point).sign();
  if (s > 0) return Classification::kHyperbolic;
  if (s < 0) return Classification::kElliptic;
  return Classification::kParabolic;
}

SignSummary ComputeSignSummary(const BiPoly& discriminant) {
  SignSummary out;
  if (discriminant.is_zero()) {
    out.method = SignMethod::kIdenticallyZero;
    out.quadrants.fill(SignVerdict::kZero);
    return out;
  }

  if (discriminant.is_monomial()) {
    const auto& [mono, c] = *discriminant.terms().begin();
    out.method = SignMethod::kMonomialParity;
    for (int q = 0; q < 4; ++q) {
      int s = c.sign();
      if (mono.deg1 % 2 == 1) s *= kQuadrantSigns[q].first;
      if (mono.deg2 % 2 == 1) s *= kQuadrantSigns[q].second;
      out.quadrants[q] = VerdictFromSign(s);
    }
    return out;
  }

  const int first_sign = discriminant.terms().begin()->second.sign();
  bool even_same_sign = true;
  for (const auto& [mono, c] : discriminant.terms()) {
    if (mono.deg1 % 2 != 0 || mono.deg2 % 2 != 0 || c.sign() != first_sign) {
      even_same_sign = false;
      break;
    }
  }
  if (even_same_sign) {
    out.method = SignMethod::kAllTermsSameSignEvenPowers;
    out.quadrants.fill(VerdictFromSign(first_sign));
    return out;
  }

  out.method = SignMethod::kSampling;
  std::array<int, 4> positives{}, negatives{}, zeros{};
  for (const Point& pt : DefaultSampleGrid()) {
    const int q = QuadrantOf(pt);
    const int s = discriminant.Eval(pt).sign();
    if (s > 0) {
      ++positives[q];
    } else if (s < 0) {
      ++negatives[q];
    } else {
      ++zeros[q];
    }
  }
  for (int q = 0; q < 4; ++q) {
    if (positives[q] > 0 && negatives[q] > 0) {
      out.quadrants[q] = SignVerdict::kMixed;
    } else if (zeros[q] > 0) {
      out.quadrants[q] = SignVerdict::kUnknown;
    } else {
      out.quadrants[q] =
          positives[q] > 0 ? SignVerdict::kPositive : SignVerdict::kNegative;
    }
  }
  return out;
}

TypeVerdict TypeFromSign(SignVerdict v) {
  switch (v) {
    case SignVerdict::kPositive:
      return TypeVerdict::kHyperbolic;
    case SignVerdict::kNegative:
      return TypeVerdict::kElliptic;
    case SignVerdict::kZero:
      return TypeVerdict::kParabolic;
    case SignVerdict::kMixed:
      return TypeVerdict::kMixed;
    case SignVerdict::kUnknown:
      return TypeVerdict::kUndetermined;
  }
  return TypeVerdict::kUndetermined;
}

EquationReport ClassifyTriple(const SecondOrderPde& pde,
                              const PrincipalTriple& principal) {
  EquationReport r;
  r.original_discriminant = Discriminant({pde.a(), pde.b(), pde.c()});
  r.original_summary = ComputeSignSummary(r.original_discriminant);
  r.original_types = TypesOf(r.original_summary);

  r.principal = principal;
  r.discriminant = Discriminant(principal);
  r.summary = ComputeSignSummary(r.discriminant);
  r.degenerate = principal.is_zero();
  if (r.degenerate) {
    r.types.fill(TypeVerdict::kDegenerate);
  } else {
    r.types = TypesOf(r.summary);
  }
  r.on_first_axis = RestrictToFirstAxis(r.discriminant);
  r.on_second_axis = RestrictToSecondAxis(r.discriminant);
  return r;
}

EquationReport ClassifyEquation(const SecondOrderPde& pde,
                                const KernelChain& chain) {
  return ClassifyTriple(pde, ConvolvedPrincipal(pde, chain));
}

WavePrediction ParityPredictWave(Monomial a, Monomial c,
                                 std::span<const Monomial> kernels) {
  std::uint64_t kernel_sum = 0;
  for (const Monomial& k : kernels) kernel_sum += k.deg1 + k.deg2;
  const bool kernel_odd = kernel_sum % 2 == 1;
  const bool a_odd = a.total() % 2 == 1;
  const bool c_odd = c.total() % 2 == 1;

  WavePrediction out;
  if (a_odd != c_odd) return out;
  if (kernel_odd && a_odd) {
    out.label = ParityCase::kCase1;
  } else if (!kernel_odd && !a_odd) {
    out.label = ParityCase::kCase2;
  } else if (kernel_odd) {
    out.label = ParityCase::kCase3;
  } else {
    out.label = ParityCase::kCase4;
  }
  out.predicted = Classification::kHyperbolic;
  return out;
}

WavePrediction ParityPredictWave(const SecondOrderPde& pde,
                                 const KernelChain& chain) {
  if (!pde.b().is_zero()) {
    throw UnsupportedFormError("wave form requires a zero mixed coefficient");
  }
  if (chain.axis() != Axis::kXY) {
    throw UnsupportedFormError("wave form requires double convolution");
  }
  if (!pde.a().is_monomial() || !pde.c().is_monomial()) {
    throw UnsupportedFormError("wave form requires monomial coefficients");
  }
  const auto& [mono_first, coeff_first] = *pde.a().terms().begin();
  const auto& [mono_second, coeff_second] = *pde.c().terms().begin();
  if (coeff_first.sign() * coeff_second.sign() >= 0) {
    throw UnsupportedFormError(
        "wave form requires principal coefficients of opposite sign");
  }
  std::vector<Monomial> kernels;
  for (const BiPoly& k : chain.kernels()) {
    if (!IsPositiveMonomial(k)) {
      throw UnsupportedFormError("wave form requires positive monomial kernels");
    }
    kernels.push_back(k.terms().begin()->first);
  }
  // The labels are symmetric in the two coefficients.
  return ParityPredictWave(mono_first, mono_second, kernels);
}

}  // namespace convpde
