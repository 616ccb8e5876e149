// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "model/types.hpp"

namespace ovc::ocl {

struct SourceLoc {
  int line = 0;
  int column = 0;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Literal {
  model::Scalar value;
};

struct SelfRef {};

// A bare identifier. The parser cannot tell iterator variables from implicit
// attribute accesses; the type checker resolves these (see typecheck.hpp).
// Iterator variables introduced without a name are spelled "$it<n>" and can
// never collide with source identifiers.
struct VarRef {
  std::string name;
};

struct AttributeNav {
  ExprPtr receiver;
  std::string name;
};

// Navigation along a declared reference; produced by the type checker from
// AttributeNav once the name is known to denote a reference.
struct ReferenceNav {
  ExprPtr receiver;
  std::string name;
};

struct AllInstances {
  std::string class_name;
};

enum class IterKind { ForAll, Exists, Select, Reject, Collect, IsUnique };

struct IteratorCall {
  ExprPtr receiver;
  IterKind kind;
  std::string var;
  bool implicit_var = false;
  ExprPtr body;
};

enum class CollOp { Size, IsEmpty, NotEmpty, Includes, Sum, AsSet };

struct CollectionOp {
  ExprPtr receiver;
  CollOp kind;
  ExprPtr arg;  // only Includes takes one
};

enum class BinOp { Eq, Ne, Lt, Le, Gt, Ge, Add, Sub, Mul, Div, And, Or, Xor, Implies };

struct Binary {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

enum class UnOp { Not, Neg };

struct Unary {
  UnOp op;
  ExprPtr operand;
};

struct IfThenElse {
  ExprPtr cond;
  ExprPtr then_expr;
  ExprPtr else_expr;
};

struct Expr {
  SourceLoc loc;
  std::variant<Literal, SelfRef, VarRef, AttributeNav, ReferenceNav, AllInstances,
               IteratorCall, CollectionOp, Binary, Unary, IfThenElse>
      node;
};

struct Invariant {
  std::string context_class;
  std::string name;  // auto-assigned "inv<n>" when the source omits it
  ExprPtr body;
  SourceLoc loc;
};

struct ConstraintDocument {
  std::string source_text;
  std::vector<Invariant> invariants;
};

const char* iter_kind_name(IterKind k);
const char* coll_op_name(CollOp k);
const char* bin_op_name(BinOp op);

// Structural equality, ignoring source locations.
bool expr_equal(const Expr& a, const Expr& b);
bool document_equal(const ConstraintDocument& a, const ConstraintDocument& b);

}  // namespace ovc::ocl
