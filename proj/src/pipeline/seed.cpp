// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "pipeline/seed.hpp"

#include "aml/caex.hpp"
#include "model/export.hpp"
#include "pipeline/fixtures.hpp"

namespace ovc::demo {

namespace {

aas::FileElement file_element(std::string id_short, std::string file_name,
                              std::string content_type, std::string bytes) {
  aas::FileElement file;
  file.id_short = std::move(id_short);
  file.file_name = std::move(file_name);
  file.content_type = std::move(content_type);
  file.attachment = std::move(bytes);
  return file;
}

model::InstanceModel ingest_instance(std::string_view aml, const model::TypeModel& tm) {
  return aml::caex_to_instancemodel(aml::parse_caex(aml).doc, tm).im;
}

}  // namespace

pipeline::PipelineConfig demo_config() {
  pipeline::PipelineConfig cfg;
  cfg.info_submodel_id = kInfoSubmodelId;
  cfg.constraint_submodel_id = kConstraintSubmodelId;
  cfg.result_submodel_id = kResultSubmodelId;
  return cfg;
}

void seed_demo(aas::Repository& repo, DemoVariant variant) {
  pipeline::PipelineConfig cfg = demo_config();

  std::string type_aml(fixture("DemoProductionProcessesTypemodel.aml"));
  std::string instance_ok(fixture("DemoShopfloorInstanceModel.aml"));
  std::string instance_bad(fixture("DemoShopfloorInstanceModel_Violated.aml"));
  std::string constraints(fixture("DemoConstraints.ocl"));

  bool violated = variant == DemoVariant::Violated;
  const std::string& instance_aml = violated ? instance_bad : instance_ok;
  double seeded_temperature = violated ? 45.0 : 22.5;

  // AAS1: semantic information models
  aas::Submodel info;
  info.id = kInfoSubmodelId;
  info.id_short = "Semantic_Information_Models";
  info.elements.push_back(file_element(cfg.type_file_id_short,
                                       "DemoProductionProcessesTypemodel.aml",
                                       "application/xml", type_aml));
  info.elements.push_back(file_element(cfg.instance_file_id_short,
                                       violated ? "DemoShopfloorInstanceModel_Violated.aml"
                                                : "DemoShopfloorInstanceModel.aml",
                                       "application/xml", instance_aml));
  aas::Property temperature;
  temperature.id_short = kTemperaturePropertyIdShort;
  temperature.value_type = model::DataType::Real;
  temperature.value = model::Scalar(seeded_temperature);
  info.elements.push_back(temperature);

  aas::RelationshipElement type_instance_link;
  type_instance_link.id_short = "Link_Type_Instance_Models";
  type_instance_link.first = aas::Reference::to_element(kInfoSubmodelId, cfg.type_file_id_short);
  type_instance_link.second =
      aas::Reference::to_element(kInfoSubmodelId, cfg.instance_file_id_short);
  info.elements.push_back(type_instance_link);

  aas::RelationshipElement temperature_link;
  temperature_link.id_short = "Link_Dynamic_Attribute_currentTemperature";
  temperature_link.first =
      aas::Reference::to_element(kInfoSubmodelId, kTemperaturePropertyIdShort);
  temperature_link.second =
      aas::Reference::to_model_attribute(kShopFloorObjectId, "currentTemperature");
  info.elements.push_back(temperature_link);

  // AAS2: constraint models plus the interchange exports of the scenario
  model::TypeModel tm = aml::caex_to_typemodel(aml::parse_caex(type_aml).doc).tm;

  aas::Submodel constraint;
  constraint.id = kConstraintSubmodelId;
  constraint.id_short = "Semantic_Constraint_Models";
  constraint.elements.push_back(file_element(cfg.constraint_file_id_short, "DemoConstraints.ocl",
                                             "text/plain; charset=utf-8", constraints));
  constraint.elements.push_back(
      file_element("Ecore_Model", "demo.ecore", "application/xml", model::export_ecore_subset(tm)));
  constraint.elements.push_back(
      file_element("XMI_Instance_Successful", "Demo_ShopFloor_Successful.xmi", "application/xml",
                   model::export_xmi_subset(ingest_instance(instance_ok, tm))));
  constraint.elements.push_back(
      file_element("XMI_Instance_Violated", "Demo_ShopFloor_Violated.xmi", "application/xml",
                   model::export_xmi_subset(ingest_instance(instance_bad, tm))));

  aas::Submodel results;
  results.id = kResultSubmodelId;
  results.id_short = "Model_Validation_Results";

  // Keep any previously written validation results when reseeding.
  if (auto existing = repo.get_submodel(kResultSubmodelId)) results.elements = existing->elements;

  aas::Shell info_shell;
  info_shell.id = kInfoShellId;
  info_shell.id_short = "AAS1_Information_Models";
  info_shell.submodel_ids = {kInfoSubmodelId};

  aas::Shell constraint_shell;
  constraint_shell.id = kConstraintShellId;
  constraint_shell.id_short = "AAS2_Constraint_Models";
  constraint_shell.submodel_ids = {kConstraintSubmodelId, kResultSubmodelId};

  repo.put_submodel(std::move(info));
  repo.put_submodel(std::move(constraint));
  repo.put_submodel(std::move(results));
  repo.put_shell(std::move(info_shell));
  repo.put_shell(std::move(constraint_shell));
}

}  // namespace ovc::demo
