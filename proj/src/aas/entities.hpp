// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "model/types.hpp"

namespace ovc::aas {

enum class KeyType { Submodel, SubmodelElement, ModelObjectAttribute };

const char* key_type_name(KeyType t);
std::optional<KeyType> key_type_from_name(const std::string& name);

struct Reference {
  struct Key {
    KeyType type;
    // For ModelObjectAttribute keys the value is "<objectId>#<attributeName>".
    std::string value;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> keys;

  bool operator==(const Reference&) const = default;

  static Reference to_element(const std::string& submodel_id, const std::string& id_short_path) {
    return {{{KeyType::Submodel, submodel_id}, {KeyType::SubmodelElement, id_short_path}}};
  }
  static Reference to_model_attribute(const std::string& object_id, const std::string& attr) {
    return {{{KeyType::ModelObjectAttribute, object_id + "#" + attr}}};
  }
};

struct Property {
  std::string id_short;
  std::optional<std::string> semantic_id;  // opaque, never interpreted
  model::DataType value_type = model::DataType::String;
  model::Scalar value;

  bool operator==(const Property&) const = default;
};

struct FileElement {
  std::string id_short;
  std::optional<std::string> semantic_id;
  std::string content_type;
  std::string file_name;
  std::string attachment;  // raw bytes; may be empty

  bool operator==(const FileElement&) const = default;
};

struct RelationshipElement {
  std::string id_short;
  std::optional<std::string> semantic_id;
  Reference first;
  Reference second;

  bool operator==(const RelationshipElement&) const = default;
};

using SubmodelElement = std::variant<Property, FileElement, RelationshipElement>;

const std::string& element_id_short(const SubmodelElement& element);

struct Submodel {
  std::string id;  // globally unique, IRI-like
  std::string id_short;
  std::optional<std::string> semantic_id;
  std::vector<SubmodelElement> elements;

  const SubmodelElement* find_element(const std::string& id_short) const;
  SubmodelElement* find_element(const std::string& id_short);

  bool operator==(const Submodel&) const = default;
};

struct Shell {
  std::string id;
  std::string id_short;
  std::vector<std::string> submodel_ids;

  bool operator==(const Shell&) const = default;
};

}  // namespace ovc::aas
