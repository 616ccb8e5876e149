// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "common/helpers.hpp"
#include "pipeline/pipeline.hpp"
#include "pipeline/seed.hpp"
#include "util/error.hpp"

using namespace ovc;
using test::TempDir;

namespace {

int error_step(const std::function<void()>& f, Errc expected_code) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == expected_code);
    return e.step();
  }
  FAIL("expected an error");
  return -1;
}

}  // namespace

TEST_CASE("seed_demo creates the documented structure") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);

  CHECK(repo.shells().size() == 2);
  CHECK(repo.submodels().size() == 3);

  auto info = repo.get_submodel(demo::kInfoSubmodelId);
  REQUIRE(info.has_value());
  CHECK(info->id_short == "Semantic_Information_Models");
  CHECK(info->find_element("InformationModel_Type"));
  CHECK(info->find_element("InformationModel_Instance"));
  CHECK(info->find_element(demo::kTemperaturePropertyIdShort));
  CHECK(info->find_element("Link_Type_Instance_Models"));
  CHECK(info->find_element("Link_Dynamic_Attribute_currentTemperature"));

  auto constraint = repo.get_submodel(demo::kConstraintSubmodelId);
  REQUIRE(constraint.has_value());
  CHECK(constraint->find_element("Constraint_Model"));
  CHECK(constraint->find_element("Ecore_Model"));
  CHECK(constraint->find_element("XMI_Instance_Successful"));
  CHECK(constraint->find_element("XMI_Instance_Violated"));

  auto results = repo.get_submodel(demo::kResultSubmodelId);
  REQUIRE(results.has_value());
  CHECK(results->id_short == "Model_Validation_Results");
  CHECK(results->elements.empty());

  SUBCASE("seeding twice is idempotent") {
    auto shells_before = repo.shells_snapshot();
    auto submodels_before = repo.submodels_snapshot();
    demo::seed_demo(repo, demo::DemoVariant::Successful);
    CHECK(repo.shells_snapshot() == shells_before);
    CHECK(repo.submodels_snapshot() == submodels_before);
  }
}

TEST_CASE("fetch_type_model") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);
  auto cfg = demo::demo_config();

  auto tm = pipeline::fetch_type_model(repo, cfg);
  CHECK(tm.classes.size() == 2);
  CHECK(tm == test::demo_type_model());

  SUBCASE("empty attachment is a missing artifact tagged step 1") {
    repo.put_attachment(cfg.info_submodel_id, cfg.type_file_id_short, "", "");
    int step = error_step([&] { pipeline::fetch_type_model(repo, cfg); },
                          Errc::missing_artifact);
    CHECK(step == 1);
  }
  SUBCASE("non-AML bytes fail as XmlMalformed tagged step 1") {
    repo.put_attachment(cfg.info_submodel_id, cfg.type_file_id_short, "not xml", "");
    int step =
        error_step([&] { pipeline::fetch_type_model(repo, cfg); }, Errc::xml_malformed);
    CHECK(step == 1);
  }
  SUBCASE("absent element is a missing artifact") {
    pipeline::PipelineConfig other = cfg;
    other.type_file_id_short = "Nope";
    error_step([&] { pipeline::fetch_type_model(repo, other); }, Errc::missing_artifact);
  }
}

TEST_CASE("fetch_instance_model") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);
  auto cfg = demo::demo_config();
  auto tm = pipeline::fetch_type_model(repo, cfg);

  auto im = pipeline::fetch_instance_model(repo, cfg, tm);
  CHECK(im.objects.size() == 5);
  CHECK(model::check_conformance(im).empty());

  SUBCASE("the violated variant is structurally conformant too") {
    demo::seed_demo(repo, demo::DemoVariant::Violated);
    auto violated = pipeline::fetch_instance_model(repo, cfg, tm);
    CHECK(violated.objects.size() == 5);
  }

  SUBCASE("unknown class reference fails step 2") {
    repo.put_attachment(cfg.info_submodel_id, cfg.instance_file_id_short,
                        "<CAEXFile><InstanceHierarchy Name=\"h\">"
                        "<InternalElement Name=\"x\" RefBaseSystemUnitPath=\"l/Mystery\"/>"
                        "</InstanceHierarchy></CAEXFile>",
                        "");
    int step = error_step([&] { pipeline::fetch_instance_model(repo, cfg, tm); },
                          Errc::unresolved_class_path);
    CHECK(step == 2);
  }
}

TEST_CASE("inject_dynamic_values") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);
  auto cfg = demo::demo_config();
  auto tm = pipeline::fetch_type_model(repo, cfg);
  auto im = pipeline::fetch_instance_model(repo, cfg, tm);

  SUBCASE("the property value lands in the slot") {
    repo.set_property_value(cfg.info_submodel_id, demo::kTemperaturePropertyIdShort,
                            model::Scalar(27.25));
    auto result = pipeline::inject_dynamic_values(repo, cfg, im);
    CHECK(result.injected == 1);
    CHECK(result.warnings.empty());
    CHECK(im.find_object("DemoShopFloor")->slots.at("currentTemperature") ==
          model::Scalar(27.25));
  }

  SUBCASE("injection overrides the static AML value") {
    CHECK(im.find_object("DemoShopFloor")->slots.at("currentTemperature") ==
          model::Scalar(22.5));  // static value from the file
    repo.set_property_value(cfg.info_submodel_id, demo::kTemperaturePropertyIdShort,
                            model::Scalar(99.0));
    pipeline::inject_dynamic_values(repo, cfg, im);
    CHECK(im.find_object("DemoShopFloor")->slots.at("currentTemperature") ==
          model::Scalar(99.0));
  }

  SUBCASE("a relationship to a missing object is a warning, model unchanged") {
    auto before = im;
    repo.add_relationship(cfg.info_submodel_id, "Link_Ghost",
                          aas::Reference::to_element(cfg.info_submodel_id,
                                                     demo::kTemperaturePropertyIdShort),
                          aas::Reference::to_model_attribute("Ghost", "currentTemperature"));
    auto result = pipeline::inject_dynamic_values(repo, cfg, im);
    CHECK(result.injected == 1);  // the real mapping still applies
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].find("Ghost") != std::string::npos);
    model::set_slot(before, "DemoShopFloor", "currentTemperature", model::Scalar(22.5));
    CHECK(im == before);
  }

  SUBCASE("valueType conflicting with the attribute datatype is an error") {
    aas::Property bad;
    bad.id_short = "Dynamic_Attribute_label";
    bad.value_type = model::DataType::String;
    bad.value = model::Scalar(std::string("hot"));
    repo.put_element(cfg.info_submodel_id, bad);
    repo.add_relationship(
        cfg.info_submodel_id, "Link_Bad",
        aas::Reference::to_element(cfg.info_submodel_id, "Dynamic_Attribute_label"),
        aas::Reference::to_model_attribute("DemoShopFloor", "currentTemperature"));
    int step = error_step([&] { pipeline::inject_dynamic_values(repo, cfg, im); },
                          Errc::type_mismatch);
    CHECK(step == 3);
  }
}

TEST_CASE("fetch_constraints") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);
  auto cfg = demo::demo_config();
  auto tm = pipeline::fetch_type_model(repo, cfg);

  auto doc = pipeline::fetch_constraints(repo, cfg, tm);
  CHECK(doc.invariants.size() == 3);

  SUBCASE("broken syntax fails step 4") {
    repo.put_attachment(cfg.constraint_submodel_id, cfg.constraint_file_id_short,
                        "context X inv: 1 +", "");
    int step =
        error_step([&] { pipeline::fetch_constraints(repo, cfg, tm); }, Errc::parse_error);
    CHECK(step == 4);
  }
  SUBCASE("unknown attribute fails the type check at step 4") {
    repo.put_attachment(cfg.constraint_submodel_id, cfg.constraint_file_id_short,
                        "context ShopFloor inv Bad: humidity < 10", "");
    int step = error_step([&] { pipeline::fetch_constraints(repo, cfg, tm); },
                          Errc::rejected_untyped);
    CHECK(step == 4);
  }
}

TEST_CASE("write_results") {
  TempDir dir;
  aas::Repository repo(dir.path());
  demo::seed_demo(repo, demo::DemoVariant::Successful);
  auto cfg = demo::demo_config();

  ocl::ValidationReport report;
  report.instance_name = "demo";
  report.timestamp = "2026-01-01T00:00:00Z";
  report.results.push_back({"C1", "X", ocl::Verdict::Satisfied, {}, ""});
  report.summary = {1, 0, 0};

  pipeline::write_results(repo, cfg, report);

  auto [text, text_type] = repo.get_attachment(cfg.result_submodel_id,
                                               pipeline::kResultsTextIdShort);
  CHECK(text.find("1 satisfied, 0 violated, 0 undefined") != std::string::npos);
  CHECK(text_type.find("text/plain") == 0);

  auto [json_bytes, json_type] = repo.get_attachment(cfg.result_submodel_id,
                                                     pipeline::kResultsJsonIdShort);
  auto parsed = nlohmann::json::parse(json_bytes);
  CHECK(parsed["summary"]["satisfied"] == 1);
  CHECK(json_type == "application/json");

  auto link = repo.get_element(cfg.result_submodel_id, pipeline::kResultsLinkIdShort);
  const auto& rel = std::get<aas::RelationshipElement>(link);
  CHECK(rel.first.keys[1].value == cfg.instance_file_id_short);
  CHECK(rel.second.keys[1].value == pipeline::kResultsJsonIdShort);

  SUBCASE("rerun overwrites, leaving exactly one relationship") {
    report.timestamp = "2026-01-02T00:00:00Z";
    pipeline::write_results(repo, cfg, report);
    auto sm = repo.get_submodel(cfg.result_submodel_id).value();
    int relationships = 0;
    for (const auto& element : sm.elements)
      if (std::holds_alternative<aas::RelationshipElement>(element)) ++relationships;
    CHECK(relationships == 1);
    CHECK(repo.get_attachment(cfg.result_submodel_id, pipeline::kResultsTextIdShort)
              .first.find("2026-01-02") != std::string::npos);
  }
}

TEST_CASE("run_pipeline") {
  TempDir dir;
  aas::Repository repo(dir.path());
  auto cfg = demo::demo_config();

  SUBCASE("successful seed: everything satisfied") {
    demo::seed_demo(repo, demo::DemoVariant::Successful);
    auto result = pipeline::run_pipeline(repo, cfg);
    CHECK(result.report.summary.satisfied == 3);
    CHECK(result.report.summary.violated == 0);
    CHECK(result.report.summary.undefined == 0);

    // the returned report equals the persisted one
    auto persisted = nlohmann::json::parse(
        repo.get_attachment(cfg.result_submodel_id, pipeline::kResultsJsonIdShort).first);
    CHECK(persisted == nlohmann::json(ocl::report_to_json(result.report)));
  }

  SUBCASE("violated seed: all three violated, duplicate group attributed") {
    demo::seed_demo(repo, demo::DemoVariant::Violated);
    auto result = pipeline::run_pipeline(repo, cfg);
    CHECK(result.report.summary.violated == 3);
    const auto& unique = result.report.results[0];
    REQUIRE(unique.constraint_name == "UniqueProcessOrderConstraint");
    CHECK(unique.violating_object_ids.size() >= 2);
    const auto& temperature = result.report.results[2];
    CHECK(temperature.message.find("45") != std::string::npos);
    CHECK(temperature.message.find("30") != std::string::npos);
  }

  SUBCASE("temperature flip via the property") {
    demo::seed_demo(repo, demo::DemoVariant::Successful);
    repo.set_property_value(cfg.info_submodel_id, demo::kTemperaturePropertyIdShort,
                            model::Scalar(30.5));
    auto result = pipeline::run_pipeline(repo, cfg);
    CHECK(result.report.results[0].status == ocl::Verdict::Satisfied);
    CHECK(result.report.results[1].status == ocl::Verdict::Satisfied);
    CHECK(result.report.results[2].status == ocl::Verdict::Violated);
  }

  SUBCASE("step atomicity: a failing run leaves the result submodel untouched") {
    demo::seed_demo(repo, demo::DemoVariant::Successful);
    pipeline::run_pipeline(repo, cfg);  // leaves a prior report behind
    auto before = repo.get_submodel(cfg.result_submodel_id).value();

    repo.put_attachment(cfg.constraint_submodel_id, cfg.constraint_file_id_short,
                        "@@@ not ocl @@@", "");
    try {
      pipeline::run_pipeline(repo, cfg);
      FAIL("expected a step-4 failure");
    } catch (const Error& e) {
      CHECK(e.step() == 4);
    }
    CHECK(repo.get_submodel(cfg.result_submodel_id).value() == before);
  }

  SUBCASE("determinism: two runs differ only in the timestamp") {
    demo::seed_demo(repo, demo::DemoVariant::Successful);
    auto first = pipeline::run_pipeline(repo, cfg);
    auto second = pipeline::run_pipeline(repo, cfg);
    first.report.timestamp = second.report.timestamp = "T";
    CHECK(ocl::report_to_json(first.report) == ocl::report_to_json(second.report));
  }

  SUBCASE("empty store: missing artifact") {
    try {
      pipeline::run_pipeline(repo, cfg);
      FAIL("expected MissingArtifact");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::missing_artifact);
      CHECK(e.step() == 1);
    }
  }
}
