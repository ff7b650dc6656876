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

// Convolution products of bivariate polynomials with lower limit 0:
//
//   (p *x q)(x, y) = int_0^x p(x - s, y) q(s, y) ds
//   (p *y q)(x, y) = int_0^y p(x, y - s) q(x, s) ds
//   (p ** q)(x, y) = int_0^y int_0^x p(x - s, y - r) q(s, r) ds dr
//
// All three are bilinear, commutative and associative. On monomials they
// reduce to BetaCoefficient:
//
//   x^i y^j *x x^a y^b = B(i, a) x^(i+a+1) y^(j+b)
//   x^i y^j ** x^a y^b = B(i, a) B(j, b) x^(i+a+1) y^(j+b+1)

#ifndef CONVPDE_CONV_H_
#define CONVPDE_CONV_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convpde/bipoly.h"
#include "convpde/rational.h"

namespace convpde {

enum class Axis { kX, kY, kXY };

// "x", "y", "xy".
std::string AxisName(Axis axis);
std::optional<Axis> ParseAxis(std::string_view text);

// Single convolution along kX or kY. Throws std::invalid_argument for kXY.
BiPoly ConvSingle(const BiPoly& p, const BiPoly& q, Axis axis);

BiPoly ConvDouble(const BiPoly& p, const BiPoly& q);

// Dispatches to ConvSingle or ConvDouble.
BiPoly Convolve(const BiPoly& p, const BiPoly& q, Axis axis);

// An ordered list of nonzero kernels applied with one convolution axis.
// The empty chain is the identity.
class KernelChain {
 public:
  KernelChain() = default;
  // Throws std::invalid_argument if any kernel is the zero polynomial.
  KernelChain(std::vector<BiPoly> kernels, Axis axis);

  const std::vector<BiPoly>& kernels() const { return kernels_; }
  Axis axis() const { return axis_; }
  bool empty() const { return kernels_.empty(); }
  std::size_t size() const { return kernels_.size(); }

 private:
  std::vector<BiPoly> kernels_;
  Axis axis_ = Axis::kXY;
};

// k1 * k2 * ... * kn * target, folded left to right. Returns `target`
// unchanged for an empty chain.
BiPoly ConvChain(const KernelChain& chain, const BiPoly& target);

// Same fold, returning every partial product: entry r is
// k1 * ... * k(r+1) for r < n, and the last entry is the full result.
std::vector<BiPoly> ConvChainSteps(const KernelChain& chain,
                                   const BiPoly& target);

// Coefficient of the single monomial produced by chaining unit monomial
// kernels into a unit monomial target, computed from the nested factorial
// and rising-product formula rather than by folding.
//
// Along a convolved variable with target exponent e and kernel exponents
// k1..kl the contribution is
//
//   k1! ... kl! / prod_{r=1..l} prod_{m=1..kr+1} (e + k1+..+k(r-1) + (r-1) + m)
//
// A variable that is not convolved contributes 1.
Rational ClosedFormChainCoeff(std::span<const Monomial> kernel_exponents,
                              Monomial target_exponent, Axis axis);

// Exponent of that same monomial.
Monomial ClosedFormChainExponent(std::span<const Monomial> kernel_exponents,
                                 Monomial target_exponent, Axis axis);

}  // namespace convpde

#endif  // CONVPDE_CONV_H_
