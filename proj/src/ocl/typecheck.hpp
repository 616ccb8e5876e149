// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "model/types.hpp"
#include "ocl/ast.hpp"

namespace ovc::ocl {

struct OclType {
  enum class K { Bool, Int, Real, Str, Object, Collection, Invalid };
  K kind = K::Invalid;
  std::string class_name;          // Object
  std::shared_ptr<OclType> elem;   // Collection

  static OclType boolean() { return {K::Bool, {}, nullptr}; }
  static OclType integer() { return {K::Int, {}, nullptr}; }
  static OclType real() { return {K::Real, {}, nullptr}; }
  static OclType string() { return {K::Str, {}, nullptr}; }
  static OclType object(std::string cls) { return {K::Object, std::move(cls), nullptr}; }
  static OclType collection(OclType elem_type) {
    return {K::Collection, {}, std::make_shared<OclType>(std::move(elem_type))};
  }
  static OclType invalid() { return {K::Invalid, {}, nullptr}; }

  bool is_numeric() const { return kind == K::Int || kind == K::Real; }
  std::string to_string() const;
};

struct TypeError {
  enum class Kind {
    UnknownContextClass,
    UnknownClass,
    UnknownAttribute,
    OperandMismatch,
    NotACollection,
    NotAnObject,
    NonBooleanBody,
    NonBooleanInvariant,
    ArityMismatch,
    NestedCollection,
  };
  Kind kind;
  std::string invariant;
  SourceLoc loc;
  std::string message;
};

const char* type_error_kind_name(TypeError::Kind k);

// Checks every invariant body against the type model: context classes exist,
// navigations name declared features, operator operands are compatible
// (Integer widens to Real), bodies are Boolean.
//
// Resolves the AST in place as a side effect: bare identifiers become bound
// iterator variables or self/implicit-iterator attribute navigations, and
// AttributeNav nodes naming references become ReferenceNav. The pass is
// idempotent; evaluation requires it to have run cleanly.
std::vector<TypeError> typecheck(ConstraintDocument& doc, const model::TypeModel& tm);

}  // namespace ovc::ocl
