// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "aas/entities.hpp"

namespace ovc::aas {

// Wire and persistence format: JSON documents with fixed key order
// (modelType, id, idShort, then type-specific fields). Attachments travel
// separately as raw bytes.

nlohmann::ordered_json scalar_to_json(const model::Scalar& value);

// Coerces integral JSON numbers to Real when the expected type is Real;
// anything else must match exactly. Throws Error(value_type_mismatch).
model::Scalar scalar_from_json(const nlohmann::json& j, model::DataType expected);

nlohmann::ordered_json reference_to_json(const Reference& ref);
Reference reference_from_json(const nlohmann::json& j);

nlohmann::ordered_json element_to_json(const SubmodelElement& element);
SubmodelElement element_from_json(const nlohmann::json& j);

nlohmann::ordered_json submodel_to_json(const Submodel& sm);
Submodel submodel_from_json(const nlohmann::json& j);

nlohmann::ordered_json shell_to_json(const Shell& shell);
Shell shell_from_json(const nlohmann::json& j);

}  // namespace ovc::aas
