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

#include "convpde/conv.h"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace convpde {

namespace {

// Exponents past this point would make factorials impractically large.
constexpr std::uint32_t kMaxExponent = 1u << 20;

std::uint32_t ConvolvedExponent(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t e = std::uint64_t{a} + b + 1;
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint32_t>(e);
}

std::uint32_t AddedExponent(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t e = std::uint64_t{a} + b;
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint32_t>(e);
}

// prod_{r} kr! / prod_{r} prod_{m=1..kr+1} (e + prefix_r + (r-1) + m)
Rational AxisChainFactor(std::span<const Monomial> kernels, bool first,
                         std::uint32_t target) {
  BigInt numerator(1);
  BigInt denominator(1);
  std::uint64_t offset = target;  // e + k1 + ... + k(r-1) + (r-1)
  for (const Monomial& k : kernels) {
    const std::uint32_t kr = first ? k.deg1 : k.deg2;
    numerator *= Factorial(kr);
    for (std::uint64_t m = 1; m <= std::uint64_t{kr} + 1; ++m) {
      denominator *= static_cast<unsigned long>(offset + m);
    }
    offset += std::uint64_t{kr} + 1;
  }
  return Rational(numerator, denominator);
}

}  // namespace

std::string AxisName(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return "x";
    case Axis::kY:
      return "y";
    case Axis::kXY:
      return "xy";
  }
  return "?";
}

std::optional<Axis> ParseAxis(std::string_view text) {
  if (text == "x") return Axis::kX;
  if (text == "y") return Axis::kY;
  if (text == "xy") return Axis::kXY;
  return std::nullopt;
}

BiPoly ConvSingle(const BiPoly& p, const BiPoly& q, Axis axis) {
  if (axis == Axis::kXY) {
    throw std::invalid_argument("ConvSingle needs axis x or y");
  }
  const bool along_first = axis == Axis::kX;
  BiPoly out;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      Monomial mono;
      Rational coeff = c1 * c2;
      if (along_first) {
        coeff *= BetaCoefficient(m1.deg1, m2.deg1);
        mono = {ConvolvedExponent(m1.deg1, m2.deg1),
                AddedExponent(m1.deg2, m2.deg2)};
      } else {
        coeff *= BetaCoefficient(m1.deg2, m2.deg2);
        mono = {AddedExponent(m1.deg1, m2.deg1),
                ConvolvedExponent(m1.deg2, m2.deg2)};
      }
      out.AddTerm(mono, coeff);
    }
  }
  return out;
}

BiPoly ConvDouble(const BiPoly& p, const BiPoly& q) {
  BiPoly out;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      const Rational coeff = c1 * c2 * BetaCoefficient(m1.deg1, m2.deg1) *
                             BetaCoefficient(m1.deg2, m2.deg2);
      out.AddTerm({ConvolvedExponent(m1.deg1, m2.deg1),
                   ConvolvedExponent(m1.deg2, m2.deg2)},
                  coeff);
    }
  }
  return out;
}

BiPoly Convolve(const BiPoly& p, const BiPoly& q, Axis axis) {
  return axis == Axis::kXY ? ConvDouble(p, q) : ConvSingle(p, q, axis);
}

KernelChain::KernelChain(std::vector<BiPoly> kernels, Axis axis)
    : kernels_(std::move(kernels)), axis_(axis) {
  for (std::size_t i = 0; i < kernels_.size(); ++i) {
    if (kernels_[i].is_zero()) {
      throw std::invalid_argument("kernel " + std::to_string(i + 1) +
                                  " is the zero polynomial");
    }
  }
}

std::vector<BiPoly> ConvChainSteps(const KernelChain& chain,
                                   const BiPoly& target) {
  std::vector<BiPoly> steps;
  if (chain.empty()) {
    steps.push_back(target);
    return steps;
  }
  BiPoly acc = chain.kernels().front();
  steps.push_back(acc);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    acc = Convolve(acc, chain.kernels()[i], chain.axis());
    steps.push_back(acc);
  }
  steps.push_back(Convolve(acc, target, chain.axis()));
  return steps;
}

BiPoly ConvChain(const KernelChain& chain, const BiPoly& target) {
  if (chain.empty()) return target;
  BiPoly acc = chain.kernels().front();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    acc = Convolve(acc, chain.kernels()[i], chain.axis());
  }
  return Convolve(acc, target, chain.axis());
}

Rational ClosedFormChainCoeff(std::span<const Monomial> kernel_exponents,
                              Monomial target_exponent, Axis axis) {
  Rational coeff(1);
  if (axis == Axis::kX || axis == Axis::kXY) {
    coeff *= AxisChainFactor(kernel_exponents, true, target_exponent.deg1);
  }
  if (axis == Axis::kY || axis == Axis::kXY) {
    coeff *= AxisChainFactor(kernel_exponents, false, target_exponent.deg2);
  }
  return coeff;
}

Monomial ClosedFormChainExponent(std::span<const Monomial> kernel_exponents,
                                 Monomial target_exponent, Axis axis) {
  Monomial out = target_exponent;
  const std::uint32_t step1 = axis == Axis::kY ? 0 : 1;
  const std::uint32_t step2 = axis == Axis::kX ? 0 : 1;
  for (const Monomial& k : kernel_exponents) {
    out.deg1 += k.deg1 + step1;
    out.deg2 += k.deg2 + step2;
  }
  return out;
}

}  // namespace convpde
