// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "aas/codec.hpp"

#include "util/error.hpp"

namespace ovc::aas {

using nlohmann::json;
using nlohmann::ordered_json;

const char* key_type_name(KeyType t) {
  switch (t) {
    case KeyType::Submodel: return "Submodel";
    case KeyType::SubmodelElement: return "SubmodelElement";
    case KeyType::ModelObjectAttribute: return "ModelObjectAttribute";
  }
  return "?";
}

std::optional<KeyType> key_type_from_name(const std::string& name) {
  if (name == "Submodel") return KeyType::Submodel;
  if (name == "SubmodelElement") return KeyType::SubmodelElement;
  if (name == "ModelObjectAttribute") return KeyType::ModelObjectAttribute;
  return std::nullopt;
}

const std::string& element_id_short(const SubmodelElement& element) {
  return std::visit([](const auto& e) -> const std::string& { return e.id_short; }, element);
}

const SubmodelElement* Submodel::find_element(const std::string& id_short) const {
  for (const auto& e : elements)
    if (element_id_short(e) == id_short) return &e;
  return nullptr;
}

SubmodelElement* Submodel::find_element(const std::string& id_short) {
  for (auto& e : elements)
    if (element_id_short(e) == id_short) return &e;
  return nullptr;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::malformed_entity, what);
}

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    malformed(std::string("missing or non-string field '") + field + "'");
  return j[field].get<std::string>();
}

}  // namespace

ordered_json scalar_to_json(const model::Scalar& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
  if (const auto* d = std::get_if<double>(&value)) return *d;
  return std::get<bool>(value);
}

model::Scalar scalar_from_json(const json& j, model::DataType expected) {
  switch (expected) {
    case model::DataType::String:
      if (j.is_string()) return model::Scalar(j.get<std::string>());
      break;
    case model::DataType::Boolean:
      if (j.is_boolean()) return model::Scalar(j.get<bool>());
      break;
    case model::DataType::Integer:
      if (j.is_number_integer() && !j.is_number_float())
        return model::Scalar(j.get<std::int64_t>());
      break;
    case model::DataType::Real:
      if (j.is_number()) return model::Scalar(j.get<double>());
      break;
  }
  throw Error(Errc::value_type_mismatch,
              "JSON value " + j.dump() + " does not match value type " +
                  model::datatype_name(expected));
}

ordered_json reference_to_json(const Reference& ref) {
  ordered_json keys = ordered_json::array();
  for (const auto& key : ref.keys)
    keys.push_back({{"type", key_type_name(key.type)}, {"value", key.value}});
  return ordered_json{{"keys", std::move(keys)}};
}

Reference reference_from_json(const json& j) {
  if (!j.is_object() || !j.contains("keys") || !j["keys"].is_array())
    malformed("reference must be an object with a 'keys' array");
  Reference ref;
  for (const auto& kj : j["keys"]) {
    auto type = key_type_from_name(require_string(kj, "type"));
    if (!type) malformed("unknown reference key type '" + kj["type"].get<std::string>() + "'");
    ref.keys.push_back({*type, require_string(kj, "value")});
  }
  return ref;
}

namespace {

void put_semantic_id(ordered_json& j, const std::optional<std::string>& semantic_id) {
  if (semantic_id) j["semanticId"] = *semantic_id;
}

std::optional<std::string> get_semantic_id(const json& j) {
  if (!j.contains("semanticId")) return std::nullopt;
  if (!j["semanticId"].is_string()) malformed("semanticId must be a string");
  return j["semanticId"].get<std::string>();
}

}  // namespace

ordered_json element_to_json(const SubmodelElement& element) {
  if (const auto* prop = std::get_if<Property>(&element)) {
    ordered_json j{{"modelType", "Property"}, {"idShort", prop->id_short}};
    put_semantic_id(j, prop->semantic_id);
    j["valueType"] = model::datatype_name(prop->value_type);
    j["value"] = scalar_to_json(prop->value);
    return j;
  }
  if (const auto* file = std::get_if<FileElement>(&element)) {
    ordered_json j{{"modelType", "File"}, {"idShort", file->id_short}};
    put_semantic_id(j, file->semantic_id);
    j["contentType"] = file->content_type;
    j["fileName"] = file->file_name;
    return j;
  }
  const auto& rel = std::get<RelationshipElement>(element);
  ordered_json j{{"modelType", "RelationshipElement"}, {"idShort", rel.id_short}};
  put_semantic_id(j, rel.semantic_id);
  j["first"] = reference_to_json(rel.first);
  j["second"] = reference_to_json(rel.second);
  return j;
}

SubmodelElement element_from_json(const json& j) {
  std::string model_type = require_string(j, "modelType");
  std::string id_short = require_string(j, "idShort");
  if (model_type == "Property") {
    Property prop;
    prop.id_short = std::move(id_short);
    prop.semantic_id = get_semantic_id(j);
    auto vt = model::datatype_from_name(require_string(j, "valueType"));
    if (!vt) malformed("unknown valueType '" + j["valueType"].get<std::string>() + "'");
    prop.value_type = *vt;
    if (!j.contains("value")) malformed("Property '" + prop.id_short + "' has no value");
    prop.value = scalar_from_json(j["value"], prop.value_type);
    return prop;
  }
  if (model_type == "File") {
    FileElement file;
    file.id_short = std::move(id_short);
    file.semantic_id = get_semantic_id(j);
    file.content_type = require_string(j, "contentType");
    file.file_name = require_string(j, "fileName");
    return file;
  }
  if (model_type == "RelationshipElement") {
    RelationshipElement rel;
    rel.id_short = std::move(id_short);
    rel.semantic_id = get_semantic_id(j);
    if (!j.contains("first") || !j.contains("second"))
      malformed("RelationshipElement '" + rel.id_short + "' needs 'first' and 'second'");
    rel.first = reference_from_json(j["first"]);
    rel.second = reference_from_json(j["second"]);
    return rel;
  }
  malformed("unknown modelType '" + model_type + "'");
}

ordered_json submodel_to_json(const Submodel& sm) {
  ordered_json elements = ordered_json::array();
  for (const auto& e : sm.elements) elements.push_back(element_to_json(e));
  ordered_json j{{"modelType", "Submodel"}, {"id", sm.id}, {"idShort", sm.id_short}};
  put_semantic_id(j, sm.semantic_id);
  j["elements"] = std::move(elements);
  return j;
}

Submodel submodel_from_json(const json& j) {
  if (require_string(j, "modelType") != "Submodel") malformed("expected modelType Submodel");
  Submodel sm;
  sm.id = require_string(j, "id");
  sm.id_short = require_string(j, "idShort");
  sm.semantic_id = get_semantic_id(j);
  if (!j.contains("elements") || !j["elements"].is_array())
    malformed("submodel '" + sm.id + "' has no elements array");
  for (const auto& ej : j["elements"]) sm.elements.push_back(element_from_json(ej));
  return sm;
}

ordered_json shell_to_json(const Shell& shell) {
  return ordered_json{{"modelType", "AssetAdministrationShell"},
                      {"id", shell.id},
                      {"idShort", shell.id_short},
                      {"submodels", shell.submodel_ids}};
}

Shell shell_from_json(const json& j) {
  if (require_string(j, "modelType") != "AssetAdministrationShell")
    malformed("expected modelType AssetAdministrationShell");
  Shell shell;
  shell.id = require_string(j, "id");
  shell.id_short = require_string(j, "idShort");
  if (!j.contains("submodels") || !j["submodels"].is_array())
    malformed("shell '" + shell.id + "' has no submodels array");
  for (const auto& sj : j["submodels"]) {
    if (!sj.is_string()) malformed("shell '" + shell.id + "': submodel ids must be strings");
    shell.submodel_ids.push_back(sj.get<std::string>());
  }
  return shell;
}

}  // namespace ovc::aas
