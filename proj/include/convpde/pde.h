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

// Second-order linear PDEs with polynomial coefficients
//
//   a u_11 + b u_12 + c u_22 + d u_1 + e u_2 + f u = rhs
//
// and their type after convolving every coefficient with a kernel chain.
// Only the principal part (a, b, c) enters the discriminant B^2 - A C; b is
// taken exactly as written, with no halving.

#ifndef CONVPDE_PDE_H_
#define CONVPDE_PDE_H_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "convpde/bipoly.h"
#include "convpde/conv.h"

namespace convpde {

class SecondOrderPde {
 public:
  // Throws std::invalid_argument when a, b and c are all zero.
  SecondOrderPde(BiPoly a, BiPoly b, BiPoly c, BiPoly d = {}, BiPoly e = {},
                 BiPoly f = {}, std::optional<std::string> rhs_note = {});

  const BiPoly& a() const { return a_; }
  const BiPoly& b() const { return b_; }
  const BiPoly& c() const { return c_; }
  const BiPoly& d() const { return d_; }
  const BiPoly& e() const { return e_; }
  const BiPoly& f() const { return f_; }
  const std::optional<std::string>& rhs_note() const { return rhs_note_; }

 private:
  BiPoly a_, b_, c_;
  BiPoly d_, e_, f_;
  std::optional<std::string> rhs_note_;
};

struct PrincipalTriple {
  BiPoly a;
  BiPoly b;
  BiPoly c;

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  friend bool operator==(const PrincipalTriple&, const PrincipalTriple&) = default;
};

enum class Classification { kHyperbolic, kElliptic, kParabolic };

// Open quadrants, counterclockwise from x > 0, y > 0.
enum class Quadrant { kI = 0, kII = 1, kIII = 2, kIV = 3 };
inline constexpr std::array<Quadrant, 4> kQuadrants = {
    Quadrant::kI, Quadrant::kII, Quadrant::kIII, Quadrant::kIV};

enum class SignVerdict { kPositive, kNegative, kZero, kMixed, kUnknown };

enum class SignMethod {
  kMonomialParity,
  kAllTermsSameSignEvenPowers,
  kSampling,
  kIdenticallyZero,
};

struct SignSummary {
  std::array<SignVerdict, 4> quadrants{};
  SignMethod method = SignMethod::kSampling;

  SignVerdict at(Quadrant q) const {
    return quadrants[static_cast<int>(q)];
  }
  // Sampled Positive/Negative/Unknown verdicts prove nothing; a sampled
  // Mixed means two sample points of opposite sign were found.
  bool conclusive(Quadrant q) const {
    return method != SignMethod::kSampling || at(q) == SignVerdict::kMixed;
  }
};

// Per-quadrant equation type. kMixed and kUndetermined cover sign patterns
// the three-way rule cannot name; kDegenerate means the principal part
// vanished identically.
enum class TypeVerdict {
  kHyperbolic,
  kElliptic,
  kParabolic,
  kMixed,
  kUndetermined,
  kDegenerate,
};

struct EquationReport {
  BiPoly original_discriminant;
  SignSummary original_summary;
  std::array<TypeVerdict, 4> original_types{};

  PrincipalTriple principal;
  BiPoly discriminant;
  SignSummary summary;
  std::array<TypeVerdict, 4> types{};

  bool degenerate = false;
  // D restricted to y = 0 and to x = 0.
  BiPoly on_first_axis;
  BiPoly on_second_axis;

  bool agrees(Quadrant q) const {
    return original_types[static_cast<int>(q)] == types[static_cast<int>(q)];
  }
  bool agrees_everywhere() const;
};

std::string ToString(Classification c);
std::string ToString(Quadrant q);
std::string ToString(SignVerdict v);
std::string ToString(SignMethod m);
std::string ToString(TypeVerdict t);

// The 36 points {+-1/2, +-1, +-2}^2 used by the non-conclusive path.
const std::vector<Point>& DefaultSampleGrid();

PrincipalTriple ConvolvedPrincipal(const SecondOrderPde& pde,
                                   const KernelChain& chain);

// B^2 - A C.
BiPoly Discriminant(const PrincipalTriple& t);

Classification ClassifyAtPoint(const BiPoly& discriminant, const Point& point);

SignSummary ComputeSignSummary(const BiPoly& discriminant);

TypeVerdict TypeFromSign(SignVerdict v);

// Classifies an already convolved principal part. The original discriminant
// is taken from `pde`.
EquationReport ClassifyTriple(const SecondOrderPde& pde,
                              const PrincipalTriple& principal);

EquationReport ClassifyEquation(const SecondOrderPde& pde,
                                const KernelChain& chain);

// Parity heuristic for the convolved wave form a u_tt - c u_xx (b = 0) with
// positive unit-monomial a, c and kernels under double convolution.
class UnsupportedFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParityCase { kCase1, kCase2, kCase3, kCase4, kUncovered };

std::string ToString(ParityCase p);

struct WavePrediction {
  ParityCase label = ParityCase::kUncovered;
  // Hyperbolic for the four named cases, empty otherwise.
  std::optional<Classification> predicted;
};

// Case 1: kernel exponent sum, a's sum and c's sum all odd.
// Case 2: all even. Case 3: kernel sum odd, a's and c's sums even.
// Case 4: kernel sum even, a's and c's sums odd.
WavePrediction ParityPredictWave(Monomial a, Monomial c,
                                 std::span<const Monomial> kernels);

// Extracts the monomials from an equation and an XY chain. Throws
// UnsupportedFormError unless b == 0, a and c are single terms of opposite
// sign, every kernel is a single positive term, and the axis is XY.
WavePrediction ParityPredictWave(const SecondOrderPde& pde,
                                 const KernelChain& chain);

}  // namespace convpde

#endif  // CONVPDE_PDE_H_
