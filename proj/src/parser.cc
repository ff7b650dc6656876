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

#include "convpde/parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace convpde {

namespace {

constexpr std::uint32_t kMaxLiteralExponent = 100000;

bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool IsAlphabetic(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsAlpha);
}

std::string FormatWhat(const std::string& message, std::size_t position,
                       std::optional<std::size_t> line) {
  std::ostringstream os;
  if (line) os << "line " << *line << ", ";
  os << "byte " << position << ": " << message;
  return os.str();
}

class Parser {
 public:
  Parser(std::string_view text, const VarNames& vars)
      : tokens_(Tokenize(text)), vars_(vars) {}

  BiPoly ParseAll() {
    if (Peek().kind == TokenKind::kEnd) Fail("expected expression");
    BiPoly p = ParseExpr();
    const Token& t = Peek();
    if (t.kind == TokenKind::kRParen) Fail("unbalanced parenthesis");
    if (t.kind != TokenKind::kEnd) Fail("unexpected '" + t.lexeme + "'");
    return p;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, Peek().position);
  }
  [[noreturn]] void FailAt(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  BiPoly ParseExpr() {
    bool negate = false;
    if (Peek().kind == TokenKind::kMinus) {
      Next();
      negate = true;
    }
    BiPoly acc = ParseTerm();
    if (negate) acc = -acc;
    while (Peek().kind == TokenKind::kPlus || Peek().kind == TokenKind::kMinus) {
      const bool minus = Next().kind == TokenKind::kMinus;
      BiPoly rhs = ParseTerm();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  BiPoly ParseTerm() {
    BiPoly acc = ParseFactor();
    while (Peek().kind == TokenKind::kStar) {
      Next();
      acc *= ParseFactor();
    }
    return acc;
  }

  BiPoly ParseFactor() {
    BiPoly base = ParseBase();
    if (Peek().kind != TokenKind::kCaret) return base;
    Next();
    const Token& t = Peek();
    if (t.kind == TokenKind::kMinus) {
      Fail("negative exponent");
    }
    if (t.kind != TokenKind::kInteger) {
      Fail("expected nonnegative integer exponent");
    }
    Next();
    if (Peek().kind == TokenKind::kSlash) {
      Fail("non-integer exponent");
    }
    if (t.lexeme.size() > 6 || std::stoul(t.lexeme) > kMaxLiteralExponent) {
      FailAt("exponent too large", t.position);
    }
    return Pow(base, static_cast<std::uint32_t>(std::stoul(t.lexeme)));
  }

  BiPoly ParseBase() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kInteger: {
        Next();
        BigInt num(t.lexeme, 10);
        BigInt den(1);
        if (Peek().kind == TokenKind::kSlash) {
          Next();
          const Token& d = Peek();
          if (d.kind != TokenKind::kInteger) {
            Fail("expected integer denominator");
          }
          Next();
          den = BigInt(d.lexeme, 10);
          if (den == 0) FailAt("division by zero", d.position);
        }
        return BiPoly(Rational(num, den));
      }
      case TokenKind::kVariable:
        Next();
        if (t.lexeme == vars_.first()) return BiPoly::X();
        if (t.lexeme == vars_.second()) return BiPoly::Y();
        FailAt("unknown identifier '" + t.lexeme + "'", t.position);
      case TokenKind::kLParen: {
        Next();
        BiPoly inner = ParseExpr();
        if (Peek().kind != TokenKind::kRParen) {
          Fail("unbalanced parenthesis: expected ')'");
        }
        Next();
        return inner;
      }
      case TokenKind::kEnd:
        Fail("unexpected end of input");
      default:
        Fail("unexpected '" + t.lexeme + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VarNames& vars_;
};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Coefficient slots in a .pde file.
enum class Slot { kA, kB, kC, kD, kE, kF };

std::map<std::string, Slot> SlotKeys(const VarNames& v) {
  const std::string& p = v.first();
  const std::string& q = v.second();
  return {{"u" + p + p, Slot::kA}, {"u" + p + q, Slot::kB},
          {"u" + q + p, Slot::kB}, {"u" + q + q, Slot::kC},
          {"u" + p, Slot::kD},     {"u" + q, Slot::kE},
          {"u", Slot::kF}};
}

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t value_offset;  // byte offset of the value within its line
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::optional<std::size_t> line)
    : std::runtime_error(FormatWhat(message, position, line)),
      message_(message),
      position_(position),
      line_(line) {}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (IsDigit(c)) {
      while (i < text.size() && IsDigit(text[i])) ++i;
      out.push_back({TokenKind::kInteger,
                     std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (IsAlpha(c)) {
      while (i < text.size() && IsAlpha(text[i])) ++i;
      out.push_back({TokenKind::kVariable,
                     std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+':
        kind = TokenKind::kPlus;
        break;
      case '-':
        kind = TokenKind::kMinus;
        break;
      case '*':
        kind = TokenKind::kStar;
        break;
      case '^':
        kind = TokenKind::kCaret;
        break;
      case '/':
        kind = TokenKind::kSlash;
        break;
      case '(':
        kind = TokenKind::kLParen;
        break;
      case ')':
        kind = TokenKind::kRParen;
        break;
      default:
        throw ParseError(
            "unexpected character '" + std::string(1, c) + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::kEnd, "", text.size()});
  return out;
}

VarNames::VarNames(std::string first, std::string second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (!IsAlphabetic(first_) || !IsAlphabetic(second_)) {
    throw std::invalid_argument("variable names must be alphabetic");
  }
  if (first_ == second_) {
    throw std::invalid_argument("variable names must be distinct");
  }
}

VarNames VarNames::FromString(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string a, b, extra;
  if (!(is >> a >> b) || (is >> extra)) {
    throw std::invalid_argument("expected two variable names, got '" +
                                std::string(text) + "'");
  }
  return VarNames(a, b);
}

BiPoly ParsePoly(std::string_view text, const VarNames& vars) {
  return Parser(text, vars).ParseAll();
}

std::string PrettyPrint(const BiPoly& p, const VarNames& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(),
                                                   p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.total() != r.first.total()) {
      return l.first.total() > r.first.total();
    }
    return l.first.deg1 > r.first.deg1;
  });

  std::string out;
  bool first_term = true;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = coeff.sign() < 0;
    if (first_term) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first_term = false;

    std::vector<std::string> factors;
    const Rational magnitude = negative ? -coeff : coeff;
    const bool constant = mono.deg1 == 0 && mono.deg2 == 0;
    if (constant || magnitude != Rational(1)) {
      factors.push_back(magnitude.ToString());
    }
    auto power = [](const std::string& name, std::uint32_t e) {
      return e == 1 ? name : name + "^" + std::to_string(e);
    };
    if (mono.deg1 > 0) factors.push_back(power(vars.first(), mono.deg1));
    if (mono.deg2 > 0) factors.push_back(power(vars.second(), mono.deg2));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

PdeFile ParsePdeFile(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::vector<std::string> order;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    std::size_t end = text.find('\n', cursor);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(cursor, end - cursor);
    ++line_no;
    cursor = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", 0, line_no);
    }
    const std::string key = Trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("missing key", 0, line_no);
    if (entries.count(key) > 0) {
      throw ParseError("duplicate key '" + key + "'", 0, line_no);
    }
    std::size_t value_offset = eq + 1;
    while (value_offset < line.size() && IsSpace(line[value_offset])) {
      ++value_offset;
    }
    entries[key] = {Trim(line.substr(eq + 1)), line_no, value_offset};
    order.push_back(key);
  }

  VarNames vars;
  if (auto it = entries.find("vars"); it != entries.end()) {
    try {
      vars = VarNames::FromString(it->second.value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), it->second.value_offset, it->second.line);
    }
    if (vars.first().size() != 1 || vars.second().size() != 1) {
      throw ParseError("variables in a .pde file must be single letters",
                       it->second.value_offset, it->second.line);
    }
  }

  const auto slot_keys = SlotKeys(vars);
  std::array<BiPoly, 6> coeffs;
  std::array<std::optional<std::size_t>, 6> seen_on;
  std::optional<std::string> rhs;
  bool any_principal_key = false;

  for (const std::string& key : order) {
    const Entry& entry = entries.at(key);
    if (key == "vars") continue;
    if (key == "rhs") {
      rhs = entry.value;
      continue;
    }
    auto slot_it = slot_keys.find(key);
    if (slot_it == slot_keys.end()) {
      throw ParseError("unknown key '" + key + "'", 0, entry.line);
    }
    const int slot = static_cast<int>(slot_it->second);
    if (seen_on[slot]) {
      throw ParseError("duplicate key '" + key + "' (same coefficient as line " +
                           std::to_string(*seen_on[slot]) + ")",
                       0, entry.line);
    }
    seen_on[slot] = entry.line;
    if (slot <= static_cast<int>(Slot::kC)) any_principal_key = true;
    try {
      coeffs[slot] = ParsePoly(entry.value, vars);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), entry.value_offset + e.position(),
                       entry.line);
    }
  }

  if (!any_principal_key || (coeffs[0].is_zero() && coeffs[1].is_zero() &&
                             coeffs[2].is_zero())) {
    throw ParseError("missing principal part", 0, line_no);
  }
  return {SecondOrderPde(coeffs[0], coeffs[1], coeffs[2], coeffs[3],
                         coeffs[4], coeffs[5], rhs),
          vars};
}

std::string FormatPdeFile(const SecondOrderPde& pde, const VarNames& vars) {
  const std::string& p = vars.first();
  const std::string& q = vars.second();
  std::ostringstream os;
  os << "vars = " << p << " " << q << "\n";
  const std::array<std::pair<std::string, const BiPoly*>, 6> slots = {{
      {"u" + p + p, &pde.a()},
      {"u" + p + q, &pde.b()},
      {"u" + q + q, &pde.c()},
      {"u" + p, &pde.d()},
      {"u" + q, &pde.e()},
      {"u", &pde.f()},
  }};
  for (const auto& [key, poly] : slots) {
    if (!poly->is_zero()) os << key << " = " << PrettyPrint(*poly, vars) << "\n";
  }
  if (pde.rhs_note()) os << "rhs = " << *pde.rhs_note() << "\n";
  return os.str();
}

}  // namespace convpde
