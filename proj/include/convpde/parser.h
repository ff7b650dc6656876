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

// Polynomial expression syntax:
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | var | '(' expr ')'
//   rational := nat ['/' nat]
//
// Whitespace is ignored. Multiplication is always explicit.

#ifndef CONVPDE_PARSER_H_
#define CONVPDE_PARSER_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "convpde/bipoly.h"
#include "convpde/pde.h"

namespace convpde {

// A syntax error. `position()` is a byte offset into the parsed text; for
// .pde files `line()` is the 1-based line and the offset is within the
// value on that line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position,
             std::optional<std::size_t> line = std::nullopt);

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::string message_;
  std::size_t position_;
  std::optional<std::size_t> line_;
};

enum class TokenKind {
  kInteger,
  kVariable,
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kSlash,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;
};

// Splits `text` into tokens ending with kEnd. Throws ParseError on a
// character outside the grammar.
std::vector<Token> Tokenize(std::string_view text);

// Names of the first and second variable.
class VarNames {
 public:
  VarNames() = default;
  // Throws std::invalid_argument unless both names are nonempty, alphabetic
  // and distinct.
  VarNames(std::string first, std::string second);

  // Parses "x t" (two whitespace-separated names).
  static VarNames FromString(std::string_view text);

  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_ = "x";
  std::string second_ = "y";
};

BiPoly ParsePoly(std::string_view text, const VarNames& vars = {});

// Terms by total degree descending, then first exponent descending, e.g.
// "1/60*x^6*y^3" or "x^2 + 2*x*y". The zero polynomial prints as "0".
std::string PrettyPrint(const BiPoly& p, const VarNames& vars = {});

struct PdeFile {
  SecondOrderPde pde;
  VarNames vars;
};

// Line-oriented `key = value` format with '#' comments. With variables
// (p, q) the keys are upp, upq (or uqp), uqq, up, uq, u, plus rhs and vars.
// Variables must be single letters. Throws ParseError with a line number.
PdeFile ParsePdeFile(std::string_view text);

// Inverse of ParsePdeFile.
std::string FormatPdeFile(const SecondOrderPde& pde, const VarNames& vars);

}  // namespace convpde

#endif  // CONVPDE_PARSER_H_
