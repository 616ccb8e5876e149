// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/eval.hpp"

#include <unordered_map>
#include <unordered_set>

#include "util/error.hpp"

namespace ovc::ocl {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::Violated: return "Violated";
    case Verdict::Undefined: return "Undefined";
  }
  return "?";
}

namespace {

[[noreturn]] void fault(const std::string& what) {
  throw Error(Errc::evaluation_fault, "evaluation fault (expression not type-checked?): " + what);
}

class Evaluator {
 public:
  Evaluator(const model::InstanceModel& im, EvalDiagnostics* diag) : im_(im), diag_(diag) {
    for (const auto& o : im.objects) by_id_[o.id] = &o;
  }

  Value eval(const Expr& e, const model::ModelObject* self) {
    self_ = self;
    bindings_.clear();
    return eval_rec(e);
  }

 private:
  const model::ModelObject* object_by_id(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) fault("no object '" + id + "'");
    return it->second;
  }

  void note_undefined(const std::string& feature, const std::string& object_id) {
    if (diag_ && !diag_->first_undefined)
      diag_->first_undefined =
          "attribute '" + feature + "' of '" + object_id + "' has no value";
  }

  Tri eval_tri(const Expr& e) {
    Value v = eval_rec(e);
    auto t = v.as_tri();
    if (!t) fault("boolean operand expected");
    return *t;
  }

  Value eval_rec(const Expr& e) {
    return std::visit(
        [&](const auto& node) -> Value {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Literal>) {
            return Value::from_scalar(node.value);
          } else if constexpr (std::is_same_v<T, SelfRef>) {
            if (!self_) fault("self unbound");
            return Value(ObjectRef{self_->id});
          } else if constexpr (std::is_same_v<T, VarRef>) {
            for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
              if (it->first == node.name) return it->second;
            fault("unbound variable '" + node.name + "'");
          } else if constexpr (std::is_same_v<T, AttributeNav>) {
            return eval_attribute_nav(node);
          } else if constexpr (std::is_same_v<T, ReferenceNav>) {
            return eval_reference_nav(node);
          } else if constexpr (std::is_same_v<T, AllInstances>) {
            ValueList list;
            for (const auto& o : im_.objects)
              if (o.class_name == node.class_name) list.emplace_back(ObjectRef{o.id});
            return Value(std::move(list));
          } else if constexpr (std::is_same_v<T, IteratorCall>) {
            return eval_iterator(node);
          } else if constexpr (std::is_same_v<T, CollectionOp>) {
            return eval_coll_op(node);
          } else if constexpr (std::is_same_v<T, Binary>) {
            return eval_binary(node);
          } else if constexpr (std::is_same_v<T, Unary>) {
            Value v = eval_rec(*node.operand);
            if (v.is_undef()) return Value::undef();
            if (node.op == UnOp::Not) {
              auto t = v.as_tri();
              if (!t) fault("'not' on non-boolean");
              return Value::from_tri(tri_not(*t));
            }
            if (v.is_int()) {
              std::int64_t out = 0;
              if (__builtin_sub_overflow(std::int64_t(0), v.as_int(), &out))
                return Value::undef();
              return Value(out);
            }
            if (v.is_real()) return Value(-v.as_real());
            fault("unary '-' on non-numeric");
          } else {
            static_assert(std::is_same_v<T, IfThenElse>);
            Tri cond = eval_tri(*node.cond);
            if (cond == Tri::Undef) return Value::undef();
            return eval_rec(cond == Tri::True ? *node.then_expr : *node.else_expr);
          }
        },
        e.node);
  }

  Value eval_attribute_nav(const AttributeNav& nav) {
    Value recv = eval_rec(*nav.receiver);
    if (recv.is_undef()) return Value::undef();
    if (!recv.is_object()) fault("navigation on non-object");
    const model::ModelObject* obj = object_by_id(recv.as_object().id);
    auto it = obj->slots.find(nav.name);
    if (it == obj->slots.end()) {
      note_undefined(nav.name, obj->id);
      return Value::undef();
    }
    return Value::from_scalar(it->second);
  }

  Value eval_reference_nav(const ReferenceNav& nav) {
    Value recv = eval_rec(*nav.receiver);
    if (recv.is_undef()) return Value::undef();
    if (!recv.is_object()) fault("navigation on non-object");
    const model::ModelObject* obj = object_by_id(recv.as_object().id);
    const model::MetaClass* cls = im_.conforms_to.find_class(obj->class_name);
    const model::MetaReference* ref = cls ? cls->find_reference(nav.name) : nullptr;
    if (!ref) fault("no reference '" + nav.name + "' on '" + obj->class_name + "'");

    auto it = obj->links.find(nav.name);
    if (ref->upper_bound == 1) {
      if (it == obj->links.end() || it->second.empty()) {
        note_undefined(nav.name, obj->id);
        return Value::undef();
      }
      return Value(ObjectRef{it->second.front()});
    }
    ValueList list;
    if (it != obj->links.end())
      for (const auto& id : it->second) list.emplace_back(ObjectRef{id});
    return Value(std::move(list));
  }

  Value eval_iterator(const IteratorCall& call) {
    Value recv = eval_rec(*call.receiver);
    if (recv.is_undef()) return Value::undef();
    if (!recv.is_collection()) fault("iterator on non-collection");
    const ValueList& elems = recv.as_collection();

    auto with_binding = [&](const Value& elem, const Expr& body) -> Value {
      bindings_.emplace_back(call.var, elem);
      Value out = eval_rec(body);
      bindings_.pop_back();
      return out;
    };

    switch (call.kind) {
      case IterKind::ForAll: {
        // false dominates undefined, matching not(exists(not p)).
        bool saw_undef = false;
        for (const auto& elem : elems) {
          auto t = with_binding(elem, *call.body).as_tri();
          if (!t) fault("forAll body not boolean");
          if (*t == Tri::False) return Value(false);
          if (*t == Tri::Undef) saw_undef = true;
        }
        return saw_undef ? Value::undef() : Value(true);
      }
      case IterKind::Exists: {
        bool saw_undef = false;
        for (const auto& elem : elems) {
          auto t = with_binding(elem, *call.body).as_tri();
          if (!t) fault("exists body not boolean");
          if (*t == Tri::True) return Value(true);
          if (*t == Tri::Undef) saw_undef = true;
        }
        return saw_undef ? Value::undef() : Value(false);
      }
      case IterKind::Select:
      case IterKind::Reject: {
        bool keep_on = call.kind == IterKind::Select;
        ValueList out;
        for (const auto& elem : elems) {
          auto t = with_binding(elem, *call.body).as_tri();
          if (!t) fault("select/reject body not boolean");
          if (*t == Tri::Undef) return Value::undef();
          if ((*t == Tri::True) == keep_on) out.push_back(elem);
        }
        return Value(std::move(out));
      }
      case IterKind::Collect: {
        ValueList out;
        for (const auto& elem : elems) {
          Value v = with_binding(elem, *call.body);
          if (v.is_undef()) return Value::undef();
          out.push_back(std::move(v));
        }
        return Value(std::move(out));
      }
      case IterKind::IsUnique: {
        ValueList keys;
        keys.reserve(elems.size());
        for (const auto& elem : elems) {
          Value v = with_binding(elem, *call.body);
          if (v.is_undef()) return Value::undef();
          keys.push_back(std::move(v));
        }
        bool unique = true;
        std::vector<bool> in_duplicate_group(elems.size(), false);
        for (size_t i = 0; i < keys.size(); ++i)
          for (size_t j = i + 1; j < keys.size(); ++j)
            if (value_equal(keys[i], keys[j])) {
              unique = false;
              in_duplicate_group[i] = in_duplicate_group[j] = true;
            }
        if (!unique && diag_) {
          for (size_t i = 0; i < elems.size(); ++i)
            if (in_duplicate_group[i] && elems[i].is_object())
              diag_->duplicate_group_ids.push_back(elems[i].as_object().id);
        }
        return Value(unique);
      }
    }
    fault("unreachable iterator kind");
  }

  Value eval_coll_op(const CollectionOp& op) {
    Value recv = eval_rec(*op.receiver);
    if (recv.is_undef()) return Value::undef();
    if (!recv.is_collection()) fault("collection operation on non-collection");
    const ValueList& elems = recv.as_collection();

    switch (op.kind) {
      case CollOp::Size:
        return Value(static_cast<std::int64_t>(elems.size()));
      case CollOp::IsEmpty:
        return Value(elems.empty());
      case CollOp::NotEmpty:
        return Value(!elems.empty());
      case CollOp::Includes: {
        if (!op.arg) fault("includes without an argument");
        Value arg = eval_rec(*op.arg);
        if (arg.is_undef()) return Value::undef();
        for (const auto& elem : elems)
          if (value_equal(elem, arg)) return Value(true);
        return Value(false);
      }
      case CollOp::Sum: {
        std::int64_t int_sum = 0;
        double real_sum = 0;
        bool real = false;
        for (const auto& elem : elems) {
          if (elem.is_int()) int_sum += elem.as_int();
          else if (elem.is_real()) {
            real = true;
            real_sum += elem.as_real();
          } else fault("sum over non-numeric element");
        }
        if (real) return Value(real_sum + static_cast<double>(int_sum));
        return Value(int_sum);
      }
      case CollOp::AsSet: {
        ValueList out;
        for (const auto& elem : elems) {
          bool seen = false;
          for (const auto& kept : out)
            if (value_equal(kept, elem)) {
              seen = true;
              break;
            }
          if (!seen) out.push_back(elem);
        }
        return Value(std::move(out));
      }
    }
    fault("unreachable collection op");
  }

  Value eval_binary(const Binary& bin) {
    switch (bin.op) {
      case BinOp::And: {
        Tri l = eval_tri(*bin.lhs);
        if (l == Tri::False) return Value(false);
        return Value::from_tri(tri_and(l, eval_tri(*bin.rhs)));
      }
      case BinOp::Or: {
        Tri l = eval_tri(*bin.lhs);
        if (l == Tri::True) return Value(true);
        return Value::from_tri(tri_or(l, eval_tri(*bin.rhs)));
      }
      case BinOp::Implies: {
        Tri l = eval_tri(*bin.lhs);
        if (l == Tri::False) return Value(true);
        return Value::from_tri(tri_implies(l, eval_tri(*bin.rhs)));
      }
      case BinOp::Xor:
        return Value::from_tri(tri_xor(eval_tri(*bin.lhs), eval_tri(*bin.rhs)));
      default:
        break;
    }

    Value l = eval_rec(*bin.lhs);
    Value r = eval_rec(*bin.rhs);
    if (l.is_undef() || r.is_undef()) return Value::undef();

    switch (bin.op) {
      case BinOp::Eq:
        return Value(value_equal(l, r));
      case BinOp::Ne:
        return Value(!value_equal(l, r));
      case BinOp::Lt:
      case BinOp::Le:
      case BinOp::Gt:
      case BinOp::Ge: {
        if (!l.is_numeric() || !r.is_numeric()) fault("ordering on non-numeric operands");
        double a = l.as_number();
        double b = r.as_number();
        switch (bin.op) {
          case BinOp::Lt: return Value(a < b);
          case BinOp::Le: return Value(a <= b);
          case BinOp::Gt: return Value(a > b);
          default: return Value(a >= b);
        }
      }
      case BinOp::Add:
      case BinOp::Sub:
      case BinOp::Mul: {
        if (!l.is_numeric() || !r.is_numeric()) fault("arithmetic on non-numeric operands");
        if (l.is_int() && r.is_int()) {
          // integer overflow yields Undefined, keeping evaluation total
          std::int64_t a = l.as_int();
          std::int64_t b = r.as_int();
          std::int64_t out = 0;
          bool overflow = false;
          switch (bin.op) {
            case BinOp::Add: overflow = __builtin_add_overflow(a, b, &out); break;
            case BinOp::Sub: overflow = __builtin_sub_overflow(a, b, &out); break;
            default: overflow = __builtin_mul_overflow(a, b, &out); break;
          }
          if (overflow) return Value::undef();
          return Value(out);
        }
        double a = l.as_number();
        double b = r.as_number();
        switch (bin.op) {
          case BinOp::Add: return Value(a + b);
          case BinOp::Sub: return Value(a - b);
          default: return Value(a * b);
        }
      }
      case BinOp::Div: {
        if (!l.is_numeric() || !r.is_numeric()) fault("arithmetic on non-numeric operands");
        double b = r.as_number();
        if (b == 0) return Value::undef();  // division by zero is Undefined
        return Value(l.as_number() / b);
      }
      default:
        fault("unreachable binary op");
    }
  }

  const model::InstanceModel& im_;
  EvalDiagnostics* diag_;
  std::unordered_map<std::string, const model::ModelObject*> by_id_;
  const model::ModelObject* self_ = nullptr;
  std::vector<std::pair<std::string, Value>> bindings_;
};

}  // namespace

Value evaluate_expr(const Expr& expr, const model::ModelObject* self,
                    const model::InstanceModel& im, EvalDiagnostics* diag) {
  return Evaluator(im, diag).eval(expr, self);
}

InvariantOutcome evaluate_invariant(const Invariant& inv, const model::InstanceModel& im,
                                    EvalDiagnostics* diag) {
  InvariantOutcome outcome;
  outcome.invariant_name = inv.name;
  outcome.context_class = inv.context_class;

  Evaluator evaluator(im, diag);
  bool any_violated = false;
  bool any_undefined = false;
  for (const auto& obj : im.objects) {
    if (obj.class_name != inv.context_class) continue;
    Value v = evaluator.eval(*inv.body, &obj);
    Verdict verdict;
    if (v.is_undef()) {
      verdict = Verdict::Undefined;
      any_undefined = true;
    } else if (v.is_bool()) {
      verdict = v.as_bool() ? Verdict::Satisfied : Verdict::Violated;
      any_violated |= !v.as_bool();
    } else {
      fault("invariant body did not evaluate to Boolean");
    }
    outcome.per_object.emplace_back(obj.id, verdict);
  }
  outcome.overall = any_violated  ? Verdict::Violated
                    : any_undefined ? Verdict::Undefined
                                    : Verdict::Satisfied;
  return outcome;
}

}  // namespace ovc::ocl
