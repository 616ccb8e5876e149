// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "pipeline/pipeline.hpp"

#include "ocl/parser.hpp"
#include "ocl/typecheck.hpp"
#include "util/error.hpp"
#include "util/strings.hpp"

namespace ovc::pipeline {

namespace {

template <typename F>
auto step_scope(int step, F&& f) {
  try {
    return f();
  } catch (Error& e) {
    if (e.step() == 0) e.set_step(step);
    throw;
  }
}

std::string fetch_attachment(const aas::Repository& repo, const std::string& submodel_id,
                             const std::string& id_short) {
  std::string bytes;
  try {
    bytes = repo.get_attachment(submodel_id, id_short).first;
  } catch (const Error& e) {
    if (e.code() == Errc::not_found)
      throw Error(Errc::missing_artifact, "file element '" + id_short + "' of submodel '" +
                                              submodel_id + "' is missing: " + e.what());
    throw;
  }
  if (bytes.empty())
    throw Error(Errc::missing_artifact, "file element '" + id_short + "' of submodel '" +
                                            submodel_id + "' has an empty attachment");
  return bytes;
}

void merge_warnings(std::vector<std::string>* sink, const std::vector<std::string>& src) {
  if (sink) sink->insert(sink->end(), src.begin(), src.end());
}

}  // namespace

model::TypeModel fetch_type_model(const aas::Repository& repo, const PipelineConfig& cfg,
                                  std::vector<std::string>* warnings) {
  return step_scope(1, [&] {
    std::string bytes = fetch_attachment(repo, cfg.info_submodel_id, cfg.type_file_id_short);
    aml::CaexParseResult parsed = aml::parse_caex(bytes);
    merge_warnings(warnings, parsed.warnings);
    aml::TypeModelResult converted = aml::caex_to_typemodel(parsed.doc);
    merge_warnings(warnings, converted.warnings);
    return std::move(converted.tm);
  });
}

model::InstanceModel fetch_instance_model(const aas::Repository& repo,
                                          const PipelineConfig& cfg,
                                          const model::TypeModel& tm,
                                          std::vector<std::string>* warnings) {
  return step_scope(2, [&] {
    std::string bytes = fetch_attachment(repo, cfg.info_submodel_id, cfg.instance_file_id_short);
    aml::CaexParseResult parsed = aml::parse_caex(bytes);
    merge_warnings(warnings, parsed.warnings);
    aml::InstanceModelResult converted = aml::caex_to_instancemodel(parsed.doc, tm);
    merge_warnings(warnings, converted.warnings);

    auto conformance = model::check_conformance(converted.im);
    if (!conformance.empty()) {
      std::string msg = "instance model '" + converted.im.name + "' does not conform:";
      for (const auto& err : conformance) {
        msg += "\n  [";
        msg += model::conformance_kind_name(err.kind);
        msg += "] " + err.object_id + ": " + err.detail;
      }
      throw Error(Errc::conformance_failed, msg);
    }
    return std::move(converted.im);
  });
}

InjectionResult inject_dynamic_values(const aas::Repository& repo, const PipelineConfig& cfg,
                                      model::InstanceModel& im) {
  return step_scope(3, [&]() -> InjectionResult {
    InjectionResult result;
    auto info = repo.get_submodel(cfg.info_submodel_id);
    if (!info)
      throw Error(Errc::missing_artifact,
                  "info submodel '" + cfg.info_submodel_id + "' is missing");

    for (const auto& element : info->elements) {
      const auto* rel = std::get_if<aas::RelationshipElement>(&element);
      if (!rel) continue;

      // second must be a ModelObjectAttribute key "<objectId>#<attr>"
      const aas::Reference::Key* target = nullptr;
      for (const auto& key : rel->second.keys)
        if (key.type == aas::KeyType::ModelObjectAttribute) {
          target = &key;
          break;
        }
      if (!target) continue;  // relationship links something else, e.g. two files

      // first must resolve to a Property in this repository
      const aas::Property* prop = nullptr;
      aas::SubmodelElement resolved;
      if (rel->first.keys.size() >= 2 &&
          rel->first.keys[0].type == aas::KeyType::Submodel &&
          rel->first.keys[1].type == aas::KeyType::SubmodelElement) {
        try {
          resolved = repo.get_element(rel->first.keys[0].value, rel->first.keys[1].value);
          prop = std::get_if<aas::Property>(&resolved);
        } catch (const Error& e) {
          if (e.code() != Errc::not_found) throw;
        }
      }
      if (!prop) {
        result.warnings.push_back("relationship '" + rel->id_short +
                                  "': first reference does not resolve to a Property");
        continue;
      }

      auto hash = target->value.find('#');
      if (hash == std::string::npos || hash == 0 || hash + 1 == target->value.size()) {
        result.warnings.push_back("relationship '" + rel->id_short +
                                  "': malformed model attribute key '" + target->value + "'");
        continue;
      }
      std::string object_id = target->value.substr(0, hash);
      std::string attr_name = target->value.substr(hash + 1);

      const model::ModelObject* obj = im.find_object(object_id);
      if (!obj) {
        result.warnings.push_back("relationship '" + rel->id_short + "': no object '" +
                                  object_id + "' in the instance model");
        continue;
      }
      const model::MetaClass* cls = im.conforms_to.find_class(obj->class_name);
      const model::MetaAttribute* attr = cls ? cls->find_attribute(attr_name) : nullptr;
      if (!attr) {
        result.warnings.push_back("relationship '" + rel->id_short + "': class '" +
                                  obj->class_name + "' declares no attribute '" + attr_name +
                                  "'");
        continue;
      }
      // Injected values override whatever the AML carried; a valueType
      // conflict is an error, not a warning.
      model::set_slot(im, object_id, attr_name, prop->value);
      ++result.injected;
    }
    return result;
  });
}

ocl::ConstraintDocument fetch_constraints(const aas::Repository& repo,
                                          const PipelineConfig& cfg,
                                          const model::TypeModel& tm) {
  return step_scope(4, [&] {
    std::string bytes =
        fetch_attachment(repo, cfg.constraint_submodel_id, cfg.constraint_file_id_short);
    ocl::ConstraintDocument doc = ocl::parse(bytes);
    auto errors = ocl::typecheck(doc, tm);
    if (!errors.empty()) {
      std::string msg = "constraints do not type-check against '" + tm.name + "':";
      for (const auto& e : errors) {
        msg += "\n  [";
        msg += ocl::type_error_kind_name(e.kind);
        msg += "] " + e.invariant + " (line " + std::to_string(e.loc.line) + "): " + e.message;
      }
      throw Error(Errc::rejected_untyped, msg);
    }
    return doc;
  });
}

WrittenResults write_results(aas::Repository& repo, const PipelineConfig& cfg,
                             const ocl::ValidationReport& report) {
  return step_scope(5, [&]() -> WrittenResults {
    if (!repo.get_submodel(cfg.result_submodel_id))
      throw Error(Errc::not_found,
                  "result submodel '" + cfg.result_submodel_id + "' is missing");

    aas::FileElement text;
    text.id_short = kResultsTextIdShort;
    text.content_type = "text/plain; charset=utf-8";
    text.file_name = "validation_results.txt";
    text.attachment = ocl::render_text_report(report);
    repo.put_element(cfg.result_submodel_id, text);

    aas::FileElement structured;
    structured.id_short = kResultsJsonIdShort;
    structured.content_type = "application/json";
    structured.file_name = "validation_results.json";
    structured.attachment = ocl::report_to_json(report).dump(2) + "\n";
    repo.put_element(cfg.result_submodel_id, structured);

    // One relationship per instance/result pair, stable across reruns.
    aas::RelationshipElement link;
    link.id_short = kResultsLinkIdShort;
    link.first = aas::Reference::to_element(cfg.info_submodel_id, cfg.instance_file_id_short);
    link.second = aas::Reference::to_element(cfg.result_submodel_id, kResultsJsonIdShort);
    repo.put_element(cfg.result_submodel_id, link);

    return {kResultsTextIdShort, kResultsJsonIdShort};
  });
}

PipelineResult run_pipeline(aas::Repository& repo, const PipelineConfig& cfg) {
  if (cfg.info_submodel_id.empty() || cfg.constraint_submodel_id.empty() ||
      cfg.result_submodel_id.empty() || !util::valid_id_short(cfg.type_file_id_short) ||
      !util::valid_id_short(cfg.instance_file_id_short) ||
      !util::valid_id_short(cfg.constraint_file_id_short))
    throw Error(Errc::invalid_argument, "pipeline configuration has empty or invalid entries");

  PipelineResult result;

  model::TypeModel tm = fetch_type_model(repo, cfg, &result.warnings);
  model::InstanceModel im = fetch_instance_model(repo, cfg, tm, &result.warnings);

  InjectionResult injection = inject_dynamic_values(repo, cfg, im);
  result.warnings.insert(result.warnings.end(), injection.warnings.begin(),
                         injection.warnings.end());

  ocl::ConstraintDocument doc = fetch_constraints(repo, cfg, tm);
  result.report = step_scope(4, [&] { return ocl::run_constraints(doc, im); });

  write_results(repo, cfg, result.report);
  return result;
}

}  // namespace ovc::pipeline
