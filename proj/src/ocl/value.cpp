// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/value.hpp"

namespace ovc::ocl {

bool value_equal(const Value& a, const Value& b) {
  if (a.is_numeric() && b.is_numeric()) {
    if (a.is_int() && b.is_int()) return a.as_int() == b.as_int();
    return a.as_number() == b.as_number();
  }
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_undef()) return true;
  if (a.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_string()) return a.as_string() == b.as_string();
  if (a.is_object()) return a.as_object() == b.as_object();
  if (a.is_collection()) {
    const auto& la = a.as_collection();
    const auto& lb = b.as_collection();
    if (la.size() != lb.size()) return false;
    for (size_t i = 0; i < la.size(); ++i)
      if (!value_equal(la[i], lb[i])) return false;
    return true;
  }
  return false;
}

std::string Value::to_display_string() const {
  if (is_undef()) return "undefined";
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_int()) return std::to_string(as_int());
  if (is_real()) return model::scalar_to_string(model::Scalar(as_real()));
  if (is_string()) return "'" + as_string() + "'";
  if (is_object()) return as_object().id;
  std::string out = "{";
  const auto& list = as_collection();
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += list[i].to_display_string();
  }
  out += "}";
  return out;
}

}  // namespace ovc::ocl
