// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "http/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "aas/codec.hpp"
#include "util/base64.hpp"
#include "util/error.hpp"

namespace ovc::http {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct ApiError {
  int http_status;
  const char* code;
};

ApiError map_error(Errc c) {
  switch (c) {
    case Errc::not_found:
      return {404, "NotFound"};
    case Errc::type_mismatch:
    case Errc::value_type_mismatch:
      return {400, "TypeMismatch"};
    case Errc::duplicate_id_short:
    case Errc::store_locked:
      return {409, "Conflict"};
    case Errc::io_failure:
    case Errc::corrupt_store:
    case Errc::evaluation_fault:
    case Errc::bind_failure:
      return {500, "Internal"};
    default:
      return {400, "Malformed"};
  }
}

void respond_error(httplib::Response& res, Errc c, const std::string& message) {
  ApiError api = map_error(c);
  res.status = api.http_status;
  res.set_content(ordered_json{{"code", api.code}, {"message", message}}.dump(2) + "\n",
                  "application/json");
}

void respond_json(httplib::Response& res, const ordered_json& j) {
  res.set_content(j.dump(2) + "\n", "application/json");
}

template <typename F>
void guarded(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    respond_error(res, e.code(), e.what());
  } catch (const std::exception& e) {
    respond_error(res, Errc::io_failure, e.what());
  }
}

std::string decode_id(const std::string& segment) {
  auto decoded = util::base64url_decode(segment);
  if (!decoded)
    throw Error(Errc::invalid_argument, "path segment is not valid base64url: " + segment);
  return *decoded;
}

}  // namespace

Service::Service(aas::Repository& repo, pipeline::PipelineConfig cfg)
    : repo_(repo), cfg_(std::move(cfg)), server_(std::make_unique<httplib::Server>()) {
  // SO_REUSEADDR for quick restarts, but no SO_REUSEPORT: a second service
  // on the same port must fail loudly instead of silently sharing it.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes),
               sizeof(yes));
  });
  install_routes();
}

Service::~Service() { stop(); }

void Service::install_routes() {
  auto& svr = *server_;

  svr.Get("/api/v1/shells", [this](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] {
      ordered_json out = ordered_json::array();
      for (const auto& shell : repo_.shells()) out.push_back(aas::shell_to_json(shell));
      respond_json(res, out);
    });
  });

  svr.Get(R"(/api/v1/shells/([^/]+))", [this](const httplib::Request& req,
                                              httplib::Response& res) {
    guarded(res, [&] {
      auto shell = repo_.get_shell(decode_id(req.matches[1]));
      if (!shell) throw Error(Errc::not_found, "no such shell");
      respond_json(res, aas::shell_to_json(*shell));
    });
  });

  svr.Get(R"(/api/v1/submodels/([^/]+))", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
    guarded(res, [&] {
      auto sm = repo_.get_submodel(decode_id(req.matches[1]));
      if (!sm) throw Error(Errc::not_found, "no such submodel");
      respond_json(res, aas::submodel_to_json(*sm));
    });
  });

  svr.Get(R"(/api/v1/submodels/([^/]+)/submodel-elements)",
          [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
              auto sm = repo_.get_submodel(decode_id(req.matches[1]));
              if (!sm) throw Error(Errc::not_found, "no such submodel");
              ordered_json out = ordered_json::array();
              for (const auto& element : sm->elements)
                out.push_back(aas::element_to_json(element));
              respond_json(res, out);
            });
          });

  svr.Get(R"(/api/v1/submodels/([^/]+)/submodel-elements/([^/]+))",
          [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
              auto element = repo_.get_element(decode_id(req.matches[1]), req.matches[2]);
              respond_json(res, aas::element_to_json(element));
            });
          });

  svr.Patch(R"(/api/v1/submodels/([^/]+)/submodel-elements/([^/]+)/value)",
            [this](const httplib::Request& req, httplib::Response& res) {
              guarded(res, [&] {
                std::string submodel_id = decode_id(req.matches[1]);
                std::string path = req.matches[2];
                json body = json::parse(req.body, nullptr, false);
                if (body.is_discarded())
                  throw Error(Errc::invalid_argument, "body is not valid JSON");

                auto element = repo_.get_element(submodel_id, path);
                const auto* prop = std::get_if<aas::Property>(&element);
                if (!prop)
                  throw Error(Errc::not_a_property, "element '" + path + "' is not a Property");
                model::Scalar value = aas::scalar_from_json(body, prop->value_type);
                aas::Property updated = repo_.set_property_value(submodel_id, path, value);
                respond_json(res, aas::element_to_json(updated));
              });
            });

  svr.Get(R"(/api/v1/submodels/([^/]+)/submodel-elements/([^/]+)/attachment)",
          [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
              auto [bytes, content_type] =
                  repo_.get_attachment(decode_id(req.matches[1]), req.matches[2]);
              res.set_content(bytes, content_type.empty() ? "application/octet-stream"
                                                          : content_type.c_str());
            });
          });

  svr.Put(R"(/api/v1/submodels/([^/]+)/submodel-elements/([^/]+)/attachment)",
          [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
              std::string content_type = req.get_header_value("Content-Type");
              repo_.put_attachment(decode_id(req.matches[1]), req.matches[2], req.body,
                                   content_type);
              res.status = 204;
            });
          });

  svr.Post("/api/v1/validation/run", [this](const httplib::Request& req,
                                            httplib::Response& res) {
    guarded(res, [&] {
      pipeline::PipelineConfig cfg = cfg_;
      if (!req.body.empty()) {
        json body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.is_object())
          throw Error(Errc::invalid_argument, "body must be a JSON object");
        if (body.contains("instanceFileIdShort")) {
          if (!body["instanceFileIdShort"].is_string())
            throw Error(Errc::invalid_argument, "instanceFileIdShort must be a string");
          cfg.instance_file_id_short = body["instanceFileIdShort"].get<std::string>();
        }
      }
      std::lock_guard<std::mutex> run_lock(pipeline_mutex_);
      pipeline::PipelineResult result = pipeline::run_pipeline(repo_, cfg);
      respond_json(res, ocl::report_to_json(result.report));
    });
  });
}

void Service::start(const std::string& host, int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
    if (port_ <= 0) throw Error(Errc::bind_failure, "cannot bind to " + host);
  } else {
    if (!server_->bind_to_port(host, port))
      throw Error(Errc::bind_failure, "cannot bind to " + host + ":" + std::to_string(port));
    port_ = port;
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void Service::stop() {
  if (server_ && server_->is_running()) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace ovc::http
