// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ovc.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "aas/dir_lock.hpp"
#include "aas/repository.hpp"
#include "aml/caex.hpp"
#include "http/service.hpp"
#include "model/export.hpp"
#include "ocl/report.hpp"
#include "pipeline/pipeline.hpp"
#include "pipeline/seed.hpp"
#include "util/error.hpp"

using namespace ovc;

struct ovc_store {
  std::optional<aas::DirLock> lock;
  std::optional<aas::Repository> repo;
  bool writable = false;
  std::string last_error;
};

struct ovc_server {
  std::unique_ptr<http::Service> service;
};

namespace {

ovc_status status_from(Errc c) {
  switch (c) {
    case Errc::io_failure:
    case Errc::corrupt_store:
      return OVC_E_IO;
    case Errc::not_found:
    case Errc::unknown_object:
    case Errc::unknown_class:
    case Errc::unknown_attribute:
      return OVC_E_NOT_FOUND;
    case Errc::type_mismatch:
    case Errc::value_type_mismatch:
      return OVC_E_TYPE_MISMATCH;
    case Errc::duplicate_id_short:
      return OVC_E_CONFLICT;
    case Errc::store_locked:
      return OVC_E_LOCKED;
    case Errc::missing_artifact:
      return OVC_E_MISSING_ARTIFACT;
    case Errc::bind_failure:
      return OVC_E_BIND;
    case Errc::evaluation_fault:
      return OVC_E_INTERNAL;
    default:
      return OVC_E_MALFORMED;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ovc_status guarded(ovc_store* store, F&& f) {
  if (!store) return OVC_E_INTERNAL;
  store->last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    std::string msg = e.what();
    if (e.step() > 0) msg = "step " + std::to_string(e.step()) + ": " + msg;
    store->last_error = msg;
    return status_from(e.code());
  } catch (const std::exception& e) {
    store->last_error = e.what();
    return OVC_E_INTERNAL;
  }
}

model::TypeModel load_type_model(aas::Repository& repo) {
  auto cfg = demo::demo_config();
  return pipeline::fetch_type_model(repo, cfg);
}

}  // namespace

extern "C" {

const char* ovc_status_name(ovc_status status) {
  switch (status) {
    case OVC_OK: return "OK";
    case OVC_E_IO: return "IoFailure";
    case OVC_E_NOT_FOUND: return "NotFound";
    case OVC_E_MALFORMED: return "Malformed";
    case OVC_E_TYPE_MISMATCH: return "TypeMismatch";
    case OVC_E_CONFLICT: return "Conflict";
    case OVC_E_LOCKED: return "StoreLocked";
    case OVC_E_MISSING_ARTIFACT: return "MissingArtifact";
    case OVC_E_BIND: return "BindFailure";
    case OVC_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* ovc_version(void) { return "0.1.0"; }

ovc_status ovc_store_open(const char* dir, int writable, ovc_store** out) {
  if (!dir || !out) return OVC_E_INTERNAL;
  *out = nullptr;
  auto store = std::make_unique<ovc_store>();
  store->writable = writable != 0;
  try {
    store->lock.emplace(dir, writable ? aas::DirLock::Mode::Exclusive
                                      : aas::DirLock::Mode::Shared);
    store->repo.emplace(dir);
  } catch (const Error& e) {
    return status_from(e.code());
  } catch (const std::exception&) {
    return OVC_E_INTERNAL;
  }
  *out = store.release();
  return OVC_OK;
}

void ovc_store_close(ovc_store* store) { delete store; }

const char* ovc_last_error(const ovc_store* store) {
  return store ? store->last_error.c_str() : "";
}

ovc_status ovc_seed_demo(ovc_store* store, const char* variant) {
  return guarded(store, [&]() -> ovc_status {
    std::string v = variant ? variant : "successful";
    demo::DemoVariant demo_variant;
    if (v == "successful") demo_variant = demo::DemoVariant::Successful;
    else if (v == "violated") demo_variant = demo::DemoVariant::Violated;
    else throw Error(Errc::invalid_argument, "variant must be 'successful' or 'violated'");
    if (!store->writable) throw Error(Errc::io_failure, "store opened read-only");
    demo::seed_demo(*store->repo, demo_variant);
    return OVC_OK;
  });
}

ovc_status ovc_validate(ovc_store* store, const char* instance_file_idshort,
                        char** text_report, int* satisfied, int* violated,
                        int* undefined_count) {
  return guarded(store, [&]() -> ovc_status {
    if (!store->writable) throw Error(Errc::io_failure, "store opened read-only");
    auto cfg = demo::demo_config();
    if (instance_file_idshort && *instance_file_idshort)
      cfg.instance_file_id_short = instance_file_idshort;
    pipeline::PipelineResult result = pipeline::run_pipeline(*store->repo, cfg);
    if (text_report) *text_report = dup_string(ocl::render_text_report(result.report));
    if (satisfied) *satisfied = result.report.summary.satisfied;
    if (violated) *violated = result.report.summary.violated;
    if (undefined_count) *undefined_count = result.report.summary.undefined;
    return OVC_OK;
  });
}

ovc_status ovc_set_property(ovc_store* store, const char* submodel_id,
                            const char* idshort_path, const char* value_text) {
  return guarded(store, [&]() -> ovc_status {
    if (!submodel_id || !idshort_path || !value_text)
      throw Error(Errc::invalid_argument, "submodel id, element path and value are required");
    if (!store->writable) throw Error(Errc::io_failure, "store opened read-only");
    aas::SubmodelElement element = store->repo->get_element(submodel_id, idshort_path);
    const auto* prop = std::get_if<aas::Property>(&element);
    if (!prop)
      throw Error(Errc::not_a_property,
                  "element '" + std::string(idshort_path) + "' is not a Property");
    auto value = model::scalar_parse(value_text, prop->value_type);
    if (!value)
      throw Error(Errc::value_type_mismatch,
                  "cannot parse '" + std::string(value_text) + "' as " +
                      model::datatype_name(prop->value_type));
    store->repo->set_property_value(submodel_id, idshort_path, *value);
    return OVC_OK;
  });
}

ovc_status ovc_latest_report(ovc_store* store, char** json) {
  return guarded(store, [&]() -> ovc_status {
    auto [bytes, content_type] = store->repo->get_attachment(
        demo::kResultSubmodelId, pipeline::kResultsJsonIdShort);
    (void)content_type;
    if (bytes.empty()) throw Error(Errc::not_found, "no validation report has been written yet");
    if (json) *json = dup_string(bytes);
    return OVC_OK;
  });
}

ovc_status ovc_export_ecore(ovc_store* store, char** xml) {
  return guarded(store, [&]() -> ovc_status {
    model::TypeModel tm = load_type_model(*store->repo);
    if (xml) *xml = dup_string(model::export_ecore_subset(tm));
    return OVC_OK;
  });
}

ovc_status ovc_export_xmi(ovc_store* store, const char* instance_file_idshort, char** xml) {
  return guarded(store, [&]() -> ovc_status {
    auto cfg = demo::demo_config();
    if (instance_file_idshort && *instance_file_idshort)
      cfg.instance_file_id_short = instance_file_idshort;
    model::TypeModel tm = pipeline::fetch_type_model(*store->repo, cfg);
    model::InstanceModel im = pipeline::fetch_instance_model(*store->repo, cfg, tm);
    if (xml) *xml = dup_string(model::export_xmi_subset(im));
    return OVC_OK;
  });
}

ovc_status ovc_server_start(ovc_store* store, const char* host, int port, ovc_server** out) {
  if (!out) return OVC_E_INTERNAL;
  *out = nullptr;
  return guarded(store, [&]() -> ovc_status {
    if (!store->writable)
      throw Error(Errc::io_failure, "serving requires a writable store");
    auto server = std::make_unique<ovc_server>();
    server->service =
        std::make_unique<http::Service>(*store->repo, demo::demo_config());
    server->service->start(host && *host ? host : "127.0.0.1", port);
    *out = server.release();
    return OVC_OK;
  });
}

int ovc_server_port(const ovc_server* server) {
  return server && server->service ? server->service->port() : -1;
}

void ovc_server_stop(ovc_server* server) {
  if (!server) return;
  server->service->stop();
  delete server;
}

void ovc_string_free(char* s) { std::free(s); }

}  // extern "C"
