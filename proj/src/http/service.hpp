// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "aas/repository.hpp"
#include "pipeline/pipeline.hpp"

namespace httplib {
class Server;
}

namespace ovc::http {

// HTTP facade over the repository for external consumers (MES, digital
// twins): fetch models, update dynamic properties, trigger validation and
// read back results. All paths are prefixed /api/v1 and shell/submodel ids
// appear base64url-encoded in path segments.
//
//   GET    /api/v1/shells
//   GET    /api/v1/shells/{aasId}
//   GET    /api/v1/submodels/{smId}
//   GET    /api/v1/submodels/{smId}/submodel-elements
//   GET    /api/v1/submodels/{smId}/submodel-elements/{idShortPath}
//   PATCH  /api/v1/submodels/{smId}/submodel-elements/{idShortPath}/value
//   GET    /api/v1/submodels/{smId}/submodel-elements/{idShortPath}/attachment
//   PUT    /api/v1/submodels/{smId}/submodel-elements/{idShortPath}/attachment
//   POST   /api/v1/validation/run
//
// Errors come back as {"code": ..., "message": ...} with code in
// {NotFound, Malformed, TypeMismatch, Conflict, Internal} and the matching
// 404/400/400/409/500 status.
class Service {
 public:
  Service(aas::Repository& repo, pipeline::PipelineConfig cfg);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds and serves on a background thread. port 0 picks a free port.
  // Throws Error(bind_failure) when the address cannot be bound.
  void start(const std::string& host, int port);
  int port() const { return port_; }
  void stop();

 private:
  void install_routes();

  aas::Repository& repo_;
  pipeline::PipelineConfig cfg_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::mutex pipeline_mutex_;  // at most one validation run mutates at a time
  int port_ = 0;
};

}  // namespace ovc::http
