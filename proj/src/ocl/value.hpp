// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "model/types.hpp"
#include "ocl/tri.hpp"

namespace ovc::ocl {

class Value;
using ValueList = std::vector<Value>;

struct Undef {
  bool operator==(const Undef&) const { return true; }
};

struct ObjectRef {
  std::string id;
  bool operator==(const ObjectRef&) const = default;
};

// Runtime OCL value. Collections are shared so copies stay cheap; they are
// immutable once built and never contain Undef (an undefined element result
// makes the whole surrounding evaluation undefined instead).
class Value {
 public:
  Value() : v_(Undef{}) {}
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(double d) : v_(d) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(ObjectRef r) : v_(std::move(r)) {}
  Value(ValueList list) : v_(std::make_shared<const ValueList>(std::move(list))) {}

  static Value undef() { return Value(); }
  static Value from_scalar(const model::Scalar& s) {
    if (const auto* str = std::get_if<std::string>(&s)) return Value(*str);
    if (const auto* i = std::get_if<std::int64_t>(&s)) return Value(*i);
    if (const auto* d = std::get_if<double>(&s)) return Value(*d);
    return Value(std::get<bool>(s));
  }
  static Value from_tri(Tri t) {
    if (t == Tri::Undef) return undef();
    return Value(t == Tri::True);
  }

  bool is_undef() const { return std::holds_alternative<Undef>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_real() const { return std::holds_alternative<double>(v_); }
  bool is_numeric() const { return is_int() || is_real(); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_object() const { return std::holds_alternative<ObjectRef>(v_); }
  bool is_collection() const {
    return std::holds_alternative<std::shared_ptr<const ValueList>>(v_);
  }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  double as_number() const { return is_int() ? static_cast<double>(as_int()) : as_real(); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const ObjectRef& as_object() const { return std::get<ObjectRef>(v_); }
  const ValueList& as_collection() const {
    return *std::get<std::shared_ptr<const ValueList>>(v_);
  }

  std::optional<Tri> as_tri() const {
    if (is_undef()) return Tri::Undef;
    if (is_bool()) return as_bool() ? Tri::True : Tri::False;
    return std::nullopt;
  }

  // Rendering for diagnostics and report messages.
  std::string to_display_string() const;

 private:
  std::variant<Undef, bool, std::int64_t, double, std::string, ObjectRef,
               std::shared_ptr<const ValueList>>
      v_;

  friend bool value_equal(const Value& a, const Value& b);
};

// Value equality with Integer/Real cross-comparison; both operands must be
// defined (callers handle Undef before comparing).
bool value_equal(const Value& a, const Value& b);

}  // namespace ovc::ocl
