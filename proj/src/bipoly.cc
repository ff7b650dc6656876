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

#include "convpde/bipoly.h"

#include <algorithm>
#include <vector>

namespace convpde {

BiPoly::BiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

BiPoly BiPoly::Term(const Rational& coeff, Monomial mono) {
  BiPoly p;
  p.AddTerm(mono, coeff);
  return p;
}

Rational BiPoly::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational() : it->second;
}

void BiPoly::AddTerm(Monomial mono, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<DegreePair> BiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  DegreePair d;
  for (const auto& [mono, c] : terms_) {
    d.deg1 = std::max(d.deg1, mono.deg1);
    d.deg2 = std::max(d.deg2, mono.deg2);
  }
  return d;
}

Rational BiPoly::Eval(const Point& point) const {
  if (terms_.empty()) return Rational();
  const DegreePair d = *degree();
  std::vector<Rational> xs(d.deg1 + 1, Rational(1));
  std::vector<Rational> ys(d.deg2 + 1, Rational(1));
  for (std::uint32_t k = 1; k <= d.deg1; ++k) xs[k] = xs[k - 1] * point.first;
  for (std::uint32_t k = 1; k <= d.deg2; ++k) ys[k] = ys[k - 1] * point.second;
  Rational sum;
  for (const auto& [mono, c] : terms_) sum += c * xs[mono.deg1] * ys[mono.deg2];
  return sum;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) AddTerm(mono, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) AddTerm(mono, -c);
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      out.AddTerm(Monomial{m1.deg1 + m2.deg1, m1.deg2 + m2.deg2}, c1 * c2);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

BiPoly Pow(const BiPoly& p, std::uint32_t exponent) {
  BiPoly out(1);
  for (std::uint32_t k = 0; k < exponent; ++k) out *= p;
  return out;
}

}  // namespace convpde
