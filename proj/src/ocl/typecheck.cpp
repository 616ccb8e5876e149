// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/typecheck.hpp"

namespace ovc::ocl {

std::string OclType::to_string() const {
  switch (kind) {
    case K::Bool: return "Boolean";
    case K::Int: return "Integer";
    case K::Real: return "Real";
    case K::Str: return "String";
    case K::Object: return class_name;
    case K::Collection: return "Collection(" + (elem ? elem->to_string() : "?") + ")";
    case K::Invalid: return "<invalid>";
  }
  return "?";
}

const char* type_error_kind_name(TypeError::Kind k) {
  using K = TypeError::Kind;
  switch (k) {
    case K::UnknownContextClass: return "UnknownContextClass";
    case K::UnknownClass: return "UnknownClass";
    case K::UnknownAttribute: return "UnknownAttribute";
    case K::OperandMismatch: return "OperandMismatch";
    case K::NotACollection: return "NotACollection";
    case K::NotAnObject: return "NotAnObject";
    case K::NonBooleanBody: return "NonBooleanBody";
    case K::NonBooleanInvariant: return "NonBooleanInvariant";
    case K::ArityMismatch: return "ArityMismatch";
    case K::NestedCollection: return "NestedCollection";
  }
  return "?";
}

namespace {

OclType scalar_type_of(model::DataType dt) {
  switch (dt) {
    case model::DataType::String: return OclType::string();
    case model::DataType::Integer: return OclType::integer();
    case model::DataType::Real: return OclType::real();
    case model::DataType::Boolean: return OclType::boolean();
  }
  return OclType::invalid();
}

struct Scope {
  std::string var;
  OclType type;
  bool implicit;
};

class Checker {
 public:
  Checker(const model::TypeModel& tm, std::vector<TypeError>& errors)
      : tm_(tm), errors_(errors) {}

  void check_invariant(Invariant& inv) {
    invariant_ = inv.name;
    const model::MetaClass* ctx = tm_.find_class(inv.context_class);
    if (!ctx) {
      report(TypeError::Kind::UnknownContextClass, inv.loc,
             "context class '" + inv.context_class + "' is not in type model '" + tm_.name + "'");
      return;
    }
    self_type_ = OclType::object(inv.context_class);
    scopes_.clear();
    OclType body = check(*inv.body);
    if (body.kind != OclType::K::Invalid && body.kind != OclType::K::Bool)
      report(TypeError::Kind::NonBooleanInvariant, inv.body->loc,
             "invariant body has type " + body.to_string() + ", expected Boolean");
  }

 private:
  void report(TypeError::Kind kind, SourceLoc loc, std::string message) {
    errors_.push_back({kind, invariant_, loc, std::move(message)});
  }

  OclType navigation_type(const std::string& cls_name, const std::string& feature,
                          bool& is_reference) const {
    const model::MetaClass* cls = tm_.find_class(cls_name);
    if (!cls) return OclType::invalid();
    if (const model::MetaAttribute* attr = cls->find_attribute(feature)) {
      is_reference = false;
      return scalar_type_of(attr->datatype);
    }
    if (const model::MetaReference* ref = cls->find_reference(feature)) {
      is_reference = true;
      OclType target = OclType::object(ref->target_class);
      return ref->upper_bound == 1 ? target : OclType::collection(std::move(target));
    }
    return OclType::invalid();
  }

  // Bare identifier: innermost binding first, then implicit-iterator
  // elements, then self. Rewrites the node accordingly.
  OclType check_var(Expr& e, const VarRef& var) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->var == var.name) return it->type;

    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (!it->implicit || it->type.kind != OclType::K::Object) continue;
      bool is_ref = false;
      OclType t = navigation_type(it->type.class_name, var.name, is_ref);
      if (t.kind != OclType::K::Invalid) {
        auto receiver = std::make_unique<Expr>();
        receiver->loc = e.loc;
        receiver->node = VarRef{it->var};
        if (is_ref) e.node = ReferenceNav{std::move(receiver), var.name};
        else e.node = AttributeNav{std::move(receiver), var.name};
        return t;
      }
    }

    if (self_type_.kind == OclType::K::Object) {
      bool is_ref = false;
      OclType t = navigation_type(self_type_.class_name, var.name, is_ref);
      if (t.kind != OclType::K::Invalid) {
        auto receiver = std::make_unique<Expr>();
        receiver->loc = e.loc;
        receiver->node = SelfRef{};
        if (is_ref) e.node = ReferenceNav{std::move(receiver), var.name};
        else e.node = AttributeNav{std::move(receiver), var.name};
        return t;
      }
    }

    report(TypeError::Kind::UnknownAttribute, e.loc,
           "'" + var.name + "' is neither an iterator variable nor a feature of " +
               self_type_.to_string());
    return OclType::invalid();
  }

  OclType check_nav(Expr& e, const std::string& name, Expr& receiver) {
    OclType recv = check(receiver);
    if (recv.kind == OclType::K::Invalid) return OclType::invalid();
    if (recv.kind == OclType::K::Collection) {
      report(TypeError::Kind::NotAnObject, e.loc,
             "navigation '" + name + "' on a collection requires an iterator (use '->')");
      return OclType::invalid();
    }
    if (recv.kind != OclType::K::Object) {
      report(TypeError::Kind::NotAnObject, e.loc,
             "navigation '" + name + "' on " + recv.to_string());
      return OclType::invalid();
    }
    bool is_ref = false;
    OclType t = navigation_type(recv.class_name, name, is_ref);
    if (t.kind == OclType::K::Invalid) {
      report(TypeError::Kind::UnknownAttribute, e.loc,
             "class '" + recv.class_name + "' has no attribute or reference '" + name + "'");
      return OclType::invalid();
    }
    if (is_ref && std::holds_alternative<AttributeNav>(e.node)) {
      auto& nav = std::get<AttributeNav>(e.node);
      e.node = ReferenceNav{std::move(nav.receiver), name};
    }
    return t;
  }

  OclType check_iterator(Expr& e, IteratorCall& call) {
    OclType recv = check(*call.receiver);
    if (recv.kind == OclType::K::Invalid) return OclType::invalid();
    if (recv.kind != OclType::K::Collection) {
      report(TypeError::Kind::NotACollection, e.loc,
             std::string(iter_kind_name(call.kind)) + " on " + recv.to_string());
      return OclType::invalid();
    }
    scopes_.push_back({call.var, *recv.elem, call.implicit_var});
    OclType body = check(*call.body);
    scopes_.pop_back();
    if (body.kind == OclType::K::Invalid) return OclType::invalid();

    switch (call.kind) {
      case IterKind::ForAll:
      case IterKind::Exists:
      case IterKind::Select:
      case IterKind::Reject:
        if (body.kind != OclType::K::Bool) {
          report(TypeError::Kind::NonBooleanBody, call.body->loc,
                 std::string(iter_kind_name(call.kind)) + " body has type " + body.to_string() +
                     ", expected Boolean");
          return OclType::invalid();
        }
        return call.kind == IterKind::ForAll || call.kind == IterKind::Exists
                   ? OclType::boolean()
                   : recv;
      case IterKind::Collect:
      case IterKind::IsUnique:
        if (body.kind == OclType::K::Collection) {
          report(TypeError::Kind::NestedCollection, call.body->loc,
                 std::string(iter_kind_name(call.kind)) +
                     " body yields a collection; nested collections are not supported");
          return OclType::invalid();
        }
        return call.kind == IterKind::Collect ? OclType::collection(body) : OclType::boolean();
    }
    return OclType::invalid();
  }

  OclType check_coll_op(Expr& e, CollectionOp& op) {
    OclType recv = check(*op.receiver);
    if (recv.kind == OclType::K::Invalid) {
      if (op.arg) check(*op.arg);
      return OclType::invalid();
    }
    if (recv.kind != OclType::K::Collection) {
      report(TypeError::Kind::NotACollection, e.loc,
             std::string(coll_op_name(op.kind)) + " on " + recv.to_string());
      return OclType::invalid();
    }
    if (op.kind == CollOp::Includes) {
      if (!op.arg) {
        report(TypeError::Kind::ArityMismatch, e.loc, "includes requires an argument");
        return OclType::invalid();
      }
      OclType arg = check(*op.arg);
      if (arg.kind == OclType::K::Invalid) return OclType::invalid();
      if (!compatible(*recv.elem, arg)) {
        report(TypeError::Kind::OperandMismatch, op.arg->loc,
               "includes argument has type " + arg.to_string() + ", element type is " +
                   recv.elem->to_string());
        return OclType::invalid();
      }
      return OclType::boolean();
    }
    if (op.arg) {
      report(TypeError::Kind::ArityMismatch, op.arg->loc,
             std::string(coll_op_name(op.kind)) + " takes no argument");
      return OclType::invalid();
    }
    switch (op.kind) {
      case CollOp::Size: return OclType::integer();
      case CollOp::IsEmpty:
      case CollOp::NotEmpty: return OclType::boolean();
      case CollOp::Sum:
        if (!recv.elem->is_numeric()) {
          report(TypeError::Kind::OperandMismatch, e.loc,
                 "sum over non-numeric elements (" + recv.elem->to_string() + ")");
          return OclType::invalid();
        }
        return *recv.elem;
      case CollOp::AsSet: return recv;
      case CollOp::Includes: break;  // handled above
    }
    return OclType::invalid();
  }

  static bool compatible(const OclType& a, const OclType& b) {
    if (a.kind == OclType::K::Invalid || b.kind == OclType::K::Invalid) return true;
    if (a.is_numeric() && b.is_numeric()) return true;
    if (a.kind != b.kind) return false;
    if (a.kind == OclType::K::Object) return true;  // object refs compare by identity
    if (a.kind == OclType::K::Collection) return compatible(*a.elem, *b.elem);
    return true;
  }

  OclType check_binary(Expr& e, Binary& bin) {
    OclType lhs = check(*bin.lhs);
    OclType rhs = check(*bin.rhs);
    if (lhs.kind == OclType::K::Invalid || rhs.kind == OclType::K::Invalid)
      return OclType::invalid();

    auto mismatch = [&](const char* what) {
      report(TypeError::Kind::OperandMismatch, e.loc,
             std::string(what) + " '" + bin_op_name(bin.op) + "' applied to " +
                 lhs.to_string() + " and " + rhs.to_string());
      return OclType::invalid();
    };

    switch (bin.op) {
      case BinOp::Add:
      case BinOp::Sub:
      case BinOp::Mul:
        if (!lhs.is_numeric() || !rhs.is_numeric()) return mismatch("arithmetic operator");
        return lhs.kind == OclType::K::Int && rhs.kind == OclType::K::Int ? OclType::integer()
                                                                          : OclType::real();
      case BinOp::Div:
        if (!lhs.is_numeric() || !rhs.is_numeric()) return mismatch("arithmetic operator");
        return OclType::real();
      case BinOp::Lt:
      case BinOp::Le:
      case BinOp::Gt:
      case BinOp::Ge:
        // Strings deliberately have no ordering here, only (in)equality.
        if (!lhs.is_numeric() || !rhs.is_numeric()) return mismatch("comparison operator");
        return OclType::boolean();
      case BinOp::Eq:
      case BinOp::Ne:
        if (!compatible(lhs, rhs)) return mismatch("equality operator");
        return OclType::boolean();
      case BinOp::And:
      case BinOp::Or:
      case BinOp::Xor:
      case BinOp::Implies:
        if (lhs.kind != OclType::K::Bool || rhs.kind != OclType::K::Bool)
          return mismatch("logical operator");
        return OclType::boolean();
    }
    return OclType::invalid();
  }

  OclType check(Expr& e) {
    return std::visit(
        [&](auto& node) -> OclType {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Literal>) {
            return scalar_type_of(model::scalar_type(node.value));
          } else if constexpr (std::is_same_v<T, SelfRef>) {
            return self_type_;
          } else if constexpr (std::is_same_v<T, VarRef>) {
            return check_var(e, node);
          } else if constexpr (std::is_same_v<T, AttributeNav> ||
                               std::is_same_v<T, ReferenceNav>) {
            return check_nav(e, node.name, *node.receiver);
          } else if constexpr (std::is_same_v<T, AllInstances>) {
            if (!tm_.find_class(node.class_name)) {
              report(TypeError::Kind::UnknownClass, e.loc,
                     "allInstances on unknown class '" + node.class_name + "'");
              return OclType::invalid();
            }
            return OclType::collection(OclType::object(node.class_name));
          } else if constexpr (std::is_same_v<T, IteratorCall>) {
            return check_iterator(e, node);
          } else if constexpr (std::is_same_v<T, CollectionOp>) {
            return check_coll_op(e, node);
          } else if constexpr (std::is_same_v<T, Binary>) {
            return check_binary(e, node);
          } else if constexpr (std::is_same_v<T, Unary>) {
            OclType t = check(*node.operand);
            if (t.kind == OclType::K::Invalid) return t;
            if (node.op == UnOp::Not) {
              if (t.kind != OclType::K::Bool) {
                report(TypeError::Kind::OperandMismatch, e.loc,
                       "'not' applied to " + t.to_string());
                return OclType::invalid();
              }
              return OclType::boolean();
            }
            if (!t.is_numeric()) {
              report(TypeError::Kind::OperandMismatch, e.loc,
                     "unary '-' applied to " + t.to_string());
              return OclType::invalid();
            }
            return t;
          } else {
            static_assert(std::is_same_v<T, IfThenElse>);
            OclType cond = check(*node.cond);
            if (cond.kind != OclType::K::Invalid && cond.kind != OclType::K::Bool)
              report(TypeError::Kind::OperandMismatch, node.cond->loc,
                     "if condition has type " + cond.to_string() + ", expected Boolean");
            OclType a = check(*node.then_expr);
            OclType b = check(*node.else_expr);
            if (a.kind == OclType::K::Invalid || b.kind == OclType::K::Invalid)
              return OclType::invalid();
            if (a.kind == b.kind) {
              if (a.kind == OclType::K::Collection && !compatible(a, b)) {
                report(TypeError::Kind::OperandMismatch, e.loc,
                       "if branches have types " + a.to_string() + " and " + b.to_string());
                return OclType::invalid();
              }
              return a;
            }
            if (a.is_numeric() && b.is_numeric()) return OclType::real();
            report(TypeError::Kind::OperandMismatch, e.loc,
                   "if branches have types " + a.to_string() + " and " + b.to_string());
            return OclType::invalid();
          }
        },
        e.node);
  }

  const model::TypeModel& tm_;
  std::vector<TypeError>& errors_;
  std::string invariant_;
  OclType self_type_ = OclType::invalid();
  std::vector<Scope> scopes_;
};

}  // namespace

std::vector<TypeError> typecheck(ConstraintDocument& doc, const model::TypeModel& tm) {
  std::vector<TypeError> errors;
  Checker checker(tm, errors);
  for (auto& inv : doc.invariants) checker.check_invariant(inv);
  return errors;
}

}  // namespace ovc::ocl
