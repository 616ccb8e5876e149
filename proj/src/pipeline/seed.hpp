// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "aas/repository.hpp"
#include "pipeline/pipeline.hpp"

namespace ovc::demo {

// Identifiers of the demo scenario: one shell for the semantic information
// models, one for the constraint models and validation results.
inline const std::string kInfoShellId = "https://example.org/ids/aas/demo-information-models";
inline const std::string kConstraintShellId = "https://example.org/ids/aas/demo-constraint-models";
inline const std::string kInfoSubmodelId = "https://example.org/ids/sm/semantic-information-models";
inline const std::string kConstraintSubmodelId =
    "https://example.org/ids/sm/semantic-constraint-models";
inline const std::string kResultSubmodelId = "https://example.org/ids/sm/model-validation-results";

inline const std::string kTemperaturePropertyIdShort = "Dynamic_Attribute_currentTemperature";
inline const std::string kShopFloorObjectId = "DemoShopFloor";

pipeline::PipelineConfig demo_config();

enum class DemoVariant { Successful, Violated };

// Seeds (upserts) the whole demo scenario: AML type and instance files plus
// the currentTemperature property and its relationships in the information
// shell; the constraint file and the Ecore/XMI interchange exports in the
// constraint shell; an initially empty validation-results submodel.
void seed_demo(aas::Repository& repo, DemoVariant variant);

}  // namespace ovc::demo
