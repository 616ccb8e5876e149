// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/ast.hpp"

namespace ovc::ocl {

const char* iter_kind_name(IterKind k) {
  switch (k) {
    case IterKind::ForAll: return "forAll";
    case IterKind::Exists: return "exists";
    case IterKind::Select: return "select";
    case IterKind::Reject: return "reject";
    case IterKind::Collect: return "collect";
    case IterKind::IsUnique: return "isUnique";
  }
  return "?";
}

const char* coll_op_name(CollOp k) {
  switch (k) {
    case CollOp::Size: return "size";
    case CollOp::IsEmpty: return "isEmpty";
    case CollOp::NotEmpty: return "notEmpty";
    case CollOp::Includes: return "includes";
    case CollOp::Sum: return "sum";
    case CollOp::AsSet: return "asSet";
  }
  return "?";
}

const char* bin_op_name(BinOp op) {
  switch (op) {
    case BinOp::Eq: return "=";
    case BinOp::Ne: return "<>";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
    case BinOp::Xor: return "xor";
    case BinOp::Implies: return "implies";
  }
  return "?";
}

namespace {

bool ptr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_equal(*a, *b);
}

}  // namespace

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Literal>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, SelfRef>) {
          return true;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, AttributeNav> ||
                             std::is_same_v<T, ReferenceNav>) {
          return na.name == nb.name && ptr_equal(na.receiver, nb.receiver);
        } else if constexpr (std::is_same_v<T, AllInstances>) {
          return na.class_name == nb.class_name;
        } else if constexpr (std::is_same_v<T, IteratorCall>) {
          return na.kind == nb.kind && na.var == nb.var &&
                 na.implicit_var == nb.implicit_var &&
                 ptr_equal(na.receiver, nb.receiver) && ptr_equal(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, CollectionOp>) {
          return na.kind == nb.kind && ptr_equal(na.receiver, nb.receiver) &&
                 ptr_equal(na.arg, nb.arg);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return na.op == nb.op && ptr_equal(na.lhs, nb.lhs) && ptr_equal(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, Unary>) {
          return na.op == nb.op && ptr_equal(na.operand, nb.operand);
        } else {
          static_assert(std::is_same_v<T, IfThenElse>);
          return ptr_equal(na.cond, nb.cond) && ptr_equal(na.then_expr, nb.then_expr) &&
                 ptr_equal(na.else_expr, nb.else_expr);
        }
      },
      a.node);
}

bool document_equal(const ConstraintDocument& a, const ConstraintDocument& b) {
  if (a.invariants.size() != b.invariants.size()) return false;
  for (size_t i = 0; i < a.invariants.size(); ++i) {
    const auto& ia = a.invariants[i];
    const auto& ib = b.invariants[i];
    if (ia.context_class != ib.context_class || ia.name != ib.name) return false;
    if (!expr_equal(*ia.body, *ib.body)) return false;
  }
  return true;
}

}  // namespace ovc::ocl
