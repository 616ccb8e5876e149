// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ocl/ast.hpp"

namespace ovc::ocl {

enum class Tok {
  Ident,
  IntLit,
  RealLit,
  StringLit,
  KwContext,
  KwInv,
  KwSelf,
  KwIf,
  KwThen,
  KwElse,
  KwEndif,
  KwAnd,
  KwOr,
  KwXor,
  KwImplies,
  KwNot,
  KwTrue,
  KwFalse,
  LParen,
  RParen,
  Dot,
  Arrow,
  Pipe,
  Colon,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Minus,
  Star,
  Slash,
  End,
};

const char* tok_name(Tok t);

struct Token {
  Tok kind = Tok::End;
  std::string text;       // identifier or decoded string literal
  std::int64_t int_val = 0;
  double real_val = 0;
  SourceLoc loc;
};

// Tokenizes the whole input. "--" starts a comment running to end of line.
// Throws ParseError on stray characters or unterminated string literals.
std::vector<Token> tokenize(std::string_view text);

}  // namespace ovc::ocl
