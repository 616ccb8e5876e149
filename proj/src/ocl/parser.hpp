// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocl/ast.hpp"
#include "util/error.hpp"

namespace ovc::ocl {

class ParseError : public Error {
 public:
  ParseError(SourceLoc loc, std::vector<std::string> expected, std::string found);

  SourceLoc loc;
  std::vector<std::string> expected;
  std::string found;
};

// Grammar (".ocl" files, "--" line comments):
//
//   document  := { invariantDecl }
//   invariant := "context" Ident "inv" [ Ident ] ":" expr
//   expr      := logic { "implies" logic }
//   logic     := cmp { ("and" | "or" | "xor") cmp }
//   cmp       := add { ("=" | "<>" | "<" | "<=" | ">" | ">=") add }
//   add       := mul { ("+" | "-") mul }
//   mul       := unary { ("*" | "/") unary }
//   unary     := ("not" | "-") unary | postfix
//   postfix   := primary { "." Ident | "->" iterOrOp }
//   iterOrOp  := iter "(" [ Ident "|" ] expr ")" | op "(" [ expr ] ")"
//   primary   := literal | "self" | Ident [ ".allInstances" "(" ")" ]
//              | "(" expr ")" | "if" expr "then" expr "else" expr "endif"
//
// with iter ∈ {forAll, exists, select, reject, collect, isUnique} and
// op ∈ {size, isEmpty, notEmpty, includes, sum, asSet}. All binary levels
// associate to the left. String literals are single-quoted with '' as the
// escape for a quote.
//
// Throws ParseError on syntax errors and Error(duplicate_invariant) when two
// invariants of the same context class share a name. Unnamed invariants are
// assigned "inv<n>" by document position (1-based).
ConstraintDocument parse(std::string_view text);

// Canonical source form: every binary and unary expression fully
// parenthesized, implicit iterator variables omitted. parse(print(d)) is
// structurally equal to d for any parsed document.
std::string print_document(const ConstraintDocument& doc);
std::string print_expr(const Expr& e);

}  // namespace ovc::ocl
