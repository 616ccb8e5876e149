// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "aas/repository.hpp"
#include "aml/caex.hpp"
#include "model/types.hpp"
#include "ocl/report.hpp"

namespace ovc::pipeline {

// Where the pipeline finds its artifacts inside the repository.
struct PipelineConfig {
  std::string info_submodel_id;
  std::string constraint_submodel_id;
  std::string result_submodel_id;
  std::string type_file_id_short = "InformationModel_Type";
  std::string instance_file_id_short = "InformationModel_Instance";
  std::string constraint_file_id_short = "Constraint_Model";
};

// idShorts of the elements write_results maintains in the result submodel.
inline const std::string kResultsTextIdShort = "Validation_Results_Text";
inline const std::string kResultsJsonIdShort = "Validation_Results_Json";
inline const std::string kResultsLinkIdShort = "Link_Instance_To_Results";

// The five steps. Errors thrown out of a step carry its number (1..5) via
// Error::step(). Each step optionally reports non-fatal warnings.

// Step 1: type file attachment -> TypeModel.
model::TypeModel fetch_type_model(const aas::Repository& repo, const PipelineConfig& cfg,
                                  std::vector<std::string>* warnings = nullptr);

// Step 2: instance file attachment -> InstanceModel, conformance-checked.
model::InstanceModel fetch_instance_model(const aas::Repository& repo,
                                          const PipelineConfig& cfg,
                                          const model::TypeModel& tm,
                                          std::vector<std::string>* warnings = nullptr);

// Step 3: every relationship in the info submodel whose first reference
// resolves to a Property and whose second is a ModelObjectAttribute key
// writes that property value into the instance model. Unresolvable mappings
// become warnings; a value-type conflict is an error.
struct InjectionResult {
  int injected = 0;
  std::vector<std::string> warnings;
};
InjectionResult inject_dynamic_values(const aas::Repository& repo, const PipelineConfig& cfg,
                                      model::InstanceModel& im);

// Step 4: constraint file attachment -> parsed and type-checked document.
ocl::ConstraintDocument fetch_constraints(const aas::Repository& repo,
                                          const PipelineConfig& cfg,
                                          const model::TypeModel& tm);

// Step 5: writes the text and structured reports as File elements of the
// result submodel and upserts the relationship from the instance file to
// the structured report.
struct WrittenResults {
  std::string text_id_short;
  std::string json_id_short;
};
WrittenResults write_results(aas::Repository& repo, const PipelineConfig& cfg,
                             const ocl::ValidationReport& report);

// Steps 1-5 in order. Nothing is written unless every step before writing
// succeeded; the first failing step aborts the run with its error.
struct PipelineResult {
  ocl::ValidationReport report;
  std::vector<std::string> warnings;
};
PipelineResult run_pipeline(aas::Repository& repo, const PipelineConfig& cfg);

}  // namespace ovc::pipeline
