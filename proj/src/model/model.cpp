// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "model/types.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "util/error.hpp"
#include "util/strings.hpp"

namespace ovc::model {

const char* datatype_name(DataType t) {
  switch (t) {
    case DataType::String: return "String";
    case DataType::Integer: return "Integer";
    case DataType::Real: return "Real";
    case DataType::Boolean: return "Boolean";
  }
  return "?";
}

std::optional<DataType> datatype_from_name(const std::string& name) {
  if (name == "String") return DataType::String;
  if (name == "Integer") return DataType::Integer;
  if (name == "Real") return DataType::Real;
  if (name == "Boolean") return DataType::Boolean;
  return std::nullopt;
}

DataType scalar_type(const Scalar& v) {
  switch (v.index()) {
    case 0: return DataType::String;
    case 1: return DataType::Integer;
    case 2: return DataType::Real;
    default: return DataType::Boolean;
  }
}

std::string scalar_to_string(const Scalar& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *d);
    (void)ec;
    return std::string(buf, end);
  }
  return std::get<bool>(v) ? "true" : "false";
}

std::optional<Scalar> scalar_parse(const std::string& text, DataType expected) {
  std::string t(util::trim(text));
  switch (expected) {
    case DataType::String:
      return Scalar(std::string(text));  // strings are taken verbatim
    case DataType::Boolean:
      if (t == "true" || t == "1") return Scalar(true);
      if (t == "false" || t == "0") return Scalar(false);
      return std::nullopt;
    case DataType::Integer: {
      if (t.empty()) return std::nullopt;
      std::int64_t value = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
      return Scalar(value);
    }
    case DataType::Real: {
      if (t.empty()) return std::nullopt;
      double value = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
      if (!std::isfinite(value)) return std::nullopt;  // JSON cannot carry inf/nan
      return Scalar(value);
    }
  }
  return std::nullopt;
}

const MetaAttribute* MetaClass::find_attribute(const std::string& attr_name) const {
  for (const auto& a : attributes)
    if (a.name == attr_name) return &a;
  return nullptr;
}

const MetaReference* MetaClass::find_reference(const std::string& ref_name) const {
  for (const auto& r : references)
    if (r.name == ref_name) return &r;
  return nullptr;
}

const MetaClass* TypeModel::find_class(const std::string& class_name) const {
  for (const auto& c : classes)
    if (c.name == class_name) return &c;
  return nullptr;
}

const ModelObject* InstanceModel::find_object(const std::string& id) const {
  for (const auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

ModelObject* InstanceModel::find_object(const std::string& id) {
  for (auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

const char* conformance_kind_name(ConformanceError::Kind k) {
  using K = ConformanceError::Kind;
  switch (k) {
    case K::UnknownClass: return "UnknownClass";
    case K::UnknownAttribute: return "UnknownAttribute";
    case K::TypeMismatch: return "TypeMismatch";
    case K::UnknownReference: return "UnknownReference";
    case K::DanglingLink: return "DanglingLink";
    case K::TargetClassMismatch: return "TargetClassMismatch";
    case K::UpperBoundExceeded: return "UpperBoundExceeded";
    case K::DuplicateObjectId: return "DuplicateObjectId";
  }
  return "?";
}

std::vector<std::string> validate_type_model(const TypeModel& tm) {
  std::vector<std::string> errors;
  std::set<std::string> class_names;
  for (const auto& c : tm.classes) {
    if (!class_names.insert(c.name).second)
      errors.push_back("duplicate class name '" + c.name + "'");
    std::set<std::string> feature_names;
    for (const auto& a : c.attributes)
      if (!feature_names.insert(a.name).second)
        errors.push_back("class '" + c.name + "': duplicate feature name '" + a.name + "'");
    for (const auto& r : c.references) {
      if (!feature_names.insert(r.name).second)
        errors.push_back("class '" + c.name + "': duplicate feature name '" + r.name + "'");
      if (r.upper_bound != MetaReference::kUnbounded && r.upper_bound < 1)
        errors.push_back("class '" + c.name + "': reference '" + r.name + "' has upperBound < 1");
    }
  }
  for (const auto& c : tm.classes)
    for (const auto& r : c.references)
      if (!tm.find_class(r.target_class))
        errors.push_back("class '" + c.name + "': reference '" + r.name +
                         "' targets unknown class '" + r.target_class + "'");
  return errors;
}

std::vector<ConformanceError> check_conformance(const InstanceModel& im) {
  std::vector<ConformanceError> errors;
  const TypeModel& tm = im.conforms_to;

  std::unordered_map<std::string, const ModelObject*> by_id;
  for (const auto& o : im.objects) {
    if (!by_id.emplace(o.id, &o).second)
      errors.push_back({ConformanceError::Kind::DuplicateObjectId, o.id,
                        "object id occurs more than once"});
  }

  for (const auto& o : im.objects) {
    const MetaClass* cls = tm.find_class(o.class_name);
    if (!cls) {
      errors.push_back({ConformanceError::Kind::UnknownClass, o.id,
                        "class '" + o.class_name + "' is not in type model '" + tm.name + "'"});
      continue;
    }
    for (const auto& [slot_name, value] : o.slots) {
      const MetaAttribute* attr = cls->find_attribute(slot_name);
      if (!attr) {
        errors.push_back({ConformanceError::Kind::UnknownAttribute, o.id,
                          "slot '" + slot_name + "' is not declared on class '" + cls->name + "'"});
        continue;
      }
      DataType actual = scalar_type(value);
      bool ok = actual == attr->datatype ||
                (attr->datatype == DataType::Real && actual == DataType::Integer);
      if (!ok)
        errors.push_back({ConformanceError::Kind::TypeMismatch, o.id,
                          "slot '" + slot_name + "' holds " + datatype_name(actual) +
                              " but attribute is " + datatype_name(attr->datatype)});
    }
    for (const auto& [link_name, targets] : o.links) {
      const MetaReference* ref = cls->find_reference(link_name);
      if (!ref) {
        errors.push_back({ConformanceError::Kind::UnknownReference, o.id,
                          "link '" + link_name + "' is not declared on class '" + cls->name + "'"});
        continue;
      }
      if (ref->upper_bound != MetaReference::kUnbounded &&
          static_cast<int>(targets.size()) > ref->upper_bound)
        errors.push_back({ConformanceError::Kind::UpperBoundExceeded, o.id,
                          "link '" + link_name + "' has " + std::to_string(targets.size()) +
                              " targets, upperBound is " + std::to_string(ref->upper_bound)});
      for (const auto& target_id : targets) {
        auto it = by_id.find(target_id);
        if (it == by_id.end()) {
          errors.push_back({ConformanceError::Kind::DanglingLink, o.id,
                            "link '" + link_name + "' targets missing object '" + target_id + "'"});
        } else if (it->second->class_name != ref->target_class) {
          errors.push_back({ConformanceError::Kind::TargetClassMismatch, o.id,
                            "link '" + link_name + "' targets '" + target_id + "' of class '" +
                                it->second->class_name + "', expected '" + ref->target_class + "'"});
        }
      }
    }
  }
  return errors;
}

std::vector<const ModelObject*> all_instances_of(const InstanceModel& im,
                                                 const std::string& class_name) {
  if (!im.conforms_to.find_class(class_name))
    throw Error(Errc::unknown_class,
                "class '" + class_name + "' is not in type model '" + im.conforms_to.name + "'");
  std::vector<const ModelObject*> out;
  for (const auto& o : im.objects)
    if (o.class_name == class_name) out.push_back(&o);
  return out;
}

void set_slot(InstanceModel& im, const std::string& object_id,
              const std::string& attr_name, const Scalar& value) {
  ModelObject* obj = im.find_object(object_id);
  if (!obj) throw Error(Errc::unknown_object, "no object with id '" + object_id + "'");
  const MetaClass* cls = im.conforms_to.find_class(obj->class_name);
  if (!cls)
    throw Error(Errc::unknown_class, "object '" + object_id + "' has unknown class '" +
                                         obj->class_name + "'");
  const MetaAttribute* attr = cls->find_attribute(attr_name);
  if (!attr)
    throw Error(Errc::unknown_attribute,
                "attribute '" + attr_name + "' is not declared on class '" + cls->name + "'");

  DataType actual = scalar_type(value);
  if (actual == attr->datatype) {
    obj->slots[attr_name] = value;
  } else if (attr->datatype == DataType::Real && actual == DataType::Integer) {
    obj->slots[attr_name] = Scalar(static_cast<double>(std::get<std::int64_t>(value)));
  } else {
    throw Error(Errc::type_mismatch, "attribute '" + attr_name + "' is " +
                                         datatype_name(attr->datatype) + ", got " +
                                         datatype_name(actual));
  }
}

}  // namespace ovc::model
