// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ovc::model {

enum class DataType { String, Integer, Real, Boolean };

const char* datatype_name(DataType t);
std::optional<DataType> datatype_from_name(const std::string& name);

// Attribute slot values. Integer is 64-bit, Real is double.
using Scalar = std::variant<std::string, std::int64_t, double, bool>;

DataType scalar_type(const Scalar& v);

// Canonical text rendering: shortest round-trip form for reals,
// "true"/"false" for booleans.
std::string scalar_to_string(const Scalar& v);

// Parses text per the expected datatype. Returns nullopt when the text
// does not denote a value of that type.
std::optional<Scalar> scalar_parse(const std::string& text, DataType expected);

struct MetaAttribute {
  std::string name;
  DataType datatype = DataType::String;

  bool operator==(const MetaAttribute&) const = default;
};

struct MetaReference {
  std::string name;
  std::string target_class;
  bool containment = false;
  int upper_bound = kUnbounded;  // >= 1, or kUnbounded

  static constexpr int kUnbounded = -1;

  bool operator==(const MetaReference&) const = default;
};

struct MetaClass {
  std::string name;
  std::vector<MetaAttribute> attributes;
  std::vector<MetaReference> references;

  const MetaAttribute* find_attribute(const std::string& attr_name) const;
  const MetaReference* find_reference(const std::string& ref_name) const;

  bool operator==(const MetaClass&) const = default;
};

// Class-level schema; the type level constraints are checked against.
struct TypeModel {
  std::string name;
  std::vector<MetaClass> classes;

  const MetaClass* find_class(const std::string& class_name) const;

  bool operator==(const TypeModel&) const = default;
};

struct ModelObject {
  std::string id;
  std::string class_name;
  std::map<std::string, Scalar> slots;
  std::map<std::string, std::vector<std::string>> links;  // reference name -> target ids

  bool operator==(const ModelObject&) const = default;
};

// Concrete objects with attribute values, conforming to a TypeModel.
struct InstanceModel {
  std::string name;
  TypeModel conforms_to;
  std::vector<ModelObject> objects;

  const ModelObject* find_object(const std::string& id) const;
  ModelObject* find_object(const std::string& id);

  bool operator==(const InstanceModel&) const = default;
};

struct ConformanceError {
  enum class Kind {
    UnknownClass,
    UnknownAttribute,
    TypeMismatch,
    UnknownReference,
    DanglingLink,
    TargetClassMismatch,
    UpperBoundExceeded,
    DuplicateObjectId,
  };
  Kind kind;
  std::string object_id;
  std::string detail;
};

const char* conformance_kind_name(ConformanceError::Kind k);

// Structural problems in a TypeModel itself (duplicate names, unresolved
// reference targets, bad bounds).
std::vector<std::string> validate_type_model(const TypeModel& tm);

// Empty result iff every object's class exists, every slot matches a
// declared attribute's datatype, and all links resolve and respect
// upperBound. One entry per violation.
std::vector<ConformanceError> check_conformance(const InstanceModel& im);

// Objects whose class equals `class_name`, in declaration order.
// Throws Error(unknown_class) when the type model has no such class.
std::vector<const ModelObject*> all_instances_of(const InstanceModel& im,
                                                 const std::string& class_name);

// Replaces one slot value; everything else is untouched. An Integer value
// assigned to a Real attribute widens; any other datatype disagreement is
// a type_mismatch. Throws Error(unknown_object | unknown_attribute |
// type_mismatch).
void set_slot(InstanceModel& im, const std::string& object_id,
              const std::string& attr_name, const Scalar& value);

}  // namespace ovc::model
