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

#ifndef CONVPDE_BIPOLY_H_
#define CONVPDE_BIPOLY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "convpde/rational.h"

namespace convpde {

// Exponent pair x^deg1 y^deg2. The second variable may be named t.
struct Monomial {
  std::uint32_t deg1 = 0;
  std::uint32_t deg2 = 0;

  std::uint32_t total() const { return deg1 + deg2; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Componentwise maximum exponents of a nonzero polynomial.
struct DegreePair {
  std::uint32_t deg1 = 0;
  std::uint32_t deg2 = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// A point (x, y) with exact coordinates.
using Point = std::pair<Rational, Rational>;

// Sparse bivariate polynomial over Rational.
//
// No stored coefficient is ever zero, so two polynomials are equal exactly
// when their term maps are equal. The zero polynomial has no terms.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT: constants promote
  BiPoly(long constant) : BiPoly(Rational(constant)) {}  // NOLINT

  static BiPoly Term(const Rational& coeff, Monomial mono);
  static BiPoly Term(const Rational& coeff, std::uint32_t deg1,
                     std::uint32_t deg2) {
    return Term(coeff, Monomial{deg1, deg2});
  }
  static BiPoly X() { return Term(Rational(1), 1, 0); }
  static BiPoly Y() { return Term(Rational(1), 0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Coefficient of `mono`; zero when absent.
  Rational coeff(Monomial mono) const;

  // Adds `coeff * mono`, dropping the entry if it cancels.
  void AddTerm(Monomial mono, const Rational& coeff);

  // nullopt for the zero polynomial.
  std::optional<DegreePair> degree() const;

  Rational Eval(const Point& point) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& scalar);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly lhs, const Rational& s) { return lhs *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly rhs) { return rhs *= s; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TermMap terms_;
};

// p^exponent by repeated multiplication.
BiPoly Pow(const BiPoly& p, std::uint32_t exponent);

}  // namespace convpde

#endif  // CONVPDE_BIPOLY_H_
