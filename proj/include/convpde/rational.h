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

#ifndef CONVPDE_RATIONAL_H_
#define CONVPDE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convpde {

// Raised for a zero denominator or a division by zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arbitrary-precision integer used for numerators, denominators and
// factorials.
using BigInt = mpz_class;

// Exact rational number in lowest terms with a positive denominator.
//
// Every constructor and every operator leaves the value canonical:
// gcd(|num|, den) == 1, den >= 1, and zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT: implicit by design of the numeric tower
  Rational(int value) : Rational(static_cast<long>(value)) {}  // NOLINT

  // Throws ArithmeticError if `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  // Parses "n" or "n/d" with an optional leading '-'. Throws
  // std::invalid_argument on malformed text, ArithmeticError on d == 0.
  static Rational FromString(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  // -1, 0 or +1.
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  // "n" when the denominator is 1, otherwise "n/d".
  std::string ToString() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws ArithmeticError when `rhs` is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // True when gcd(|num|, den) == 1 and den >= 1. Always true for values
  // produced by this class; exposed for property tests.
  bool IsCanonical() const;

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

// Builds n/d in canonical form. Throws ArithmeticError when d == 0.
Rational MakeRational(long n, long d);

// base^exponent, exact.
Rational Pow(const Rational& base, std::uint32_t exponent);

// n!, memoized across calls. Safe to call from multiple threads.
BigInt Factorial(std::uint32_t n);

// m! n! / (m + n + 1)!, the coefficient in
//   integral_0^x (x - mu)^m mu^n dmu = BetaCoefficient(m, n) * x^(m + n + 1).
Rational BetaCoefficient(std::uint32_t m, std::uint32_t n);

}  // namespace convpde

#endif  // CONVPDE_RATIONAL_H_
