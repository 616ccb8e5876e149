// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <httplib.h>
#include <json.hpp>

#include "aas/repository.hpp"
#include "common/helpers.hpp"
#include "aas/codec.hpp"
#include "http/service.hpp"
#include "pipeline/seed.hpp"
#include "util/base64.hpp"
#include "util/error.hpp"

using namespace ovc;
using nlohmann::json;
using test::TempDir;

namespace {

struct LiveService {
  TempDir dir;
  aas::Repository repo;
  http::Service service;
  httplib::Client client;

  LiveService()
      : repo(dir.path()),
        service(repo, demo::demo_config()),
        client("127.0.0.1", [&] {
          demo::seed_demo(repo, demo::DemoVariant::Successful);
          service.start("127.0.0.1", 0);
          return service.port();
        }()) {
    client.set_connection_timeout(5);
  }
  ~LiveService() { service.stop(); }

  std::string sm_path(const std::string& submodel_id) {
    return "/api/v1/submodels/" + util::base64url_encode(submodel_id);
  }
};

}  // namespace

TEST_CASE("GET /shells lists the two demo shells") {
  LiveService live;
  auto res = live.client.Get("/api/v1/shells");
  REQUIRE(res);
  CHECK(res->status == 200);
  auto body = json::parse(res->body);
  REQUIRE(body.is_array());
  CHECK(body.size() == 2);

  auto one = live.client.Get("/api/v1/shells/" + util::base64url_encode(demo::kInfoShellId));
  REQUIRE(one);
  CHECK(one->status == 200);
  CHECK(json::parse(one->body)["idShort"] == "AAS1_Information_Models");
}

TEST_CASE("element GET round-trips the stored document") {
  LiveService live;
  std::string path = live.sm_path(demo::kInfoSubmodelId) + "/submodel-elements/" +
                     demo::kTemperaturePropertyIdShort;
  auto res = live.client.Get(path);
  REQUIRE(res);
  REQUIRE(res->status == 200);
  auto body = json::parse(res->body);
  CHECK(body["modelType"] == "Property");
  CHECK(body["valueType"] == "Real");
  CHECK(body["value"] == 22.5);

  auto all = live.client.Get(live.sm_path(demo::kInfoSubmodelId) + "/submodel-elements");
  REQUIRE(all);
  CHECK(json::parse(all->body).size() == 5);

  SUBCASE("the wire document deserializes back to the stored element") {
    auto stored = live.repo.get_element(demo::kInfoSubmodelId,
                                        demo::kTemperaturePropertyIdShort);
    CHECK(aas::element_from_json(json::parse(res->body)) == stored);
  }
}

TEST_CASE("PATCH value then GET observes the write") {
  LiveService live;
  std::string path = live.sm_path(demo::kInfoSubmodelId) + "/submodel-elements/" +
                     demo::kTemperaturePropertyIdShort;

  auto patch = live.client.Patch(path + "/value", "45.0", "application/json");
  REQUIRE(patch);
  CHECK(patch->status == 200);

  auto get = live.client.Get(path);
  REQUIRE(get);
  CHECK(json::parse(get->body)["value"] == 45.0);

  SUBCASE("malformed body yields 400") {
    auto bad = live.client.Patch(path + "/value", "{{{", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    CHECK(json::parse(bad->body)["code"] == "Malformed");
  }
  SUBCASE("wrong value type yields 400 TypeMismatch") {
    auto bad = live.client.Patch(path + "/value", "\"hot\"", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    CHECK(json::parse(bad->body)["code"] == "TypeMismatch");
  }
}

TEST_CASE("unknown ids and paths yield 404 NotFound") {
  LiveService live;
  auto res = live.client.Get(live.sm_path(demo::kInfoSubmodelId) + "/submodel-elements/Ghost");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(json::parse(res->body)["code"] == "NotFound");

  auto sm = live.client.Get(live.sm_path("urn:ghost"));
  REQUIRE(sm);
  CHECK(sm->status == 404);

  auto shell = live.client.Get("/api/v1/shells/" + util::base64url_encode("urn:ghost"));
  REQUIRE(shell);
  CHECK(shell->status == 404);
}

TEST_CASE("attachment PUT then GET is byte-identical and honors Content-Type") {
  LiveService live;
  std::string path = live.sm_path(demo::kInfoSubmodelId) +
                     "/submodel-elements/InformationModel_Type/attachment";
  std::string bytes;
  for (int i = 0; i < 256; ++i) bytes += static_cast<char>(i);

  auto put = live.client.Put(path, bytes, "application/octet-stream");
  REQUIRE(put);
  CHECK(put->status == 204);

  auto get = live.client.Get(path);
  REQUIRE(get);
  CHECK(get->status == 200);
  CHECK(get->body == bytes);
  CHECK(get->get_header_value("Content-Type") == "application/octet-stream");
}

TEST_CASE("POST /validation/run returns the report that gets persisted") {
  LiveService live;
  auto res = live.client.Post("/api/v1/validation/run", "", "application/json");
  REQUIRE(res);
  REQUIRE(res->status == 200);
  auto returned = json::parse(res->body);
  CHECK(returned["summary"]["satisfied"] == 3);

  auto persisted_res =
      live.client.Get(live.sm_path(demo::kResultSubmodelId) +
                      "/submodel-elements/Validation_Results_Json/attachment");
  REQUIRE(persisted_res);
  auto persisted = json::parse(persisted_res->body);
  CHECK(persisted["summary"] == returned["summary"]);
  CHECK(persisted["results"] == returned["results"]);

  SUBCASE("selecting a different instance file element") {
    auto bad = live.client.Post("/api/v1/validation/run",
                                R"({"instanceFileIdShort": "Ghost"})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);  // missing artifact
  }
}

TEST_CASE("binding an occupied port fails cleanly") {
  LiveService live;
  aas::Repository other_repo(live.dir.path() / "other");
  http::Service second(other_repo, demo::demo_config());
  CHECK_THROWS_AS(second.start("127.0.0.1", live.service.port()), Error);
}

TEST_CASE("validation failures do not disturb prior results") {
  LiveService live;
  REQUIRE(live.client.Post("/api/v1/validation/run", "", "application/json")->status == 200);
  auto before =
      live.client.Get(live.sm_path(demo::kResultSubmodelId) + "/submodel-elements")->body;

  // corrupt the constraint file over the API, then try to validate
  auto put = live.client.Put(live.sm_path(demo::kConstraintSubmodelId) +
                                 "/submodel-elements/Constraint_Model/attachment",
                             "@@@ not ocl @@@", "text/plain");
  REQUIRE(put->status == 204);
  auto run = live.client.Post("/api/v1/validation/run", "", "application/json");
  REQUIRE(run);
  CHECK(run->status == 400);

  auto after =
      live.client.Get(live.sm_path(demo::kResultSubmodelId) + "/submodel-elements")->body;
  CHECK(after == before);
}
