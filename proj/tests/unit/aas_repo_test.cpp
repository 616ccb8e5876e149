// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "aas/dir_lock.hpp"
#include "aas/repository.hpp"
#include "common/helpers.hpp"
#include "common/repo_gen.hpp"
#include "util/error.hpp"

using namespace ovc;
using test::TempDir;

namespace {

aas::Submodel small_submodel(const std::string& id) {
  aas::Submodel sm;
  sm.id = id;
  sm.id_short = "Info";
  aas::Property prop;
  prop.id_short = "Dynamic_Attribute_currentTemperature";
  prop.value_type = model::DataType::Real;
  prop.value = model::Scalar(22.5);
  sm.elements.push_back(prop);
  aas::FileElement file;
  file.id_short = "InformationModel_Type";
  file.file_name = "type.aml";
  file.content_type = "application/xml";
  file.attachment = "<CAEXFile/>";
  sm.elements.push_back(file);
  return sm;
}

}  // namespace

TEST_CASE("put and get round trip") {
  TempDir dir;
  aas::Repository repo(dir.path());

  aas::Shell shell;
  shell.id = "https://example.org/ids/aas/one";
  shell.id_short = "AAS1";
  shell.submodel_ids = {"https://example.org/ids/sm/info"};
  repo.put_shell(shell);
  repo.put_submodel(small_submodel("https://example.org/ids/sm/info"));

  CHECK(repo.get_shell(shell.id).value() == shell);
  CHECK(repo.shells().size() == 1);
  CHECK(repo.dangling_submodels(shell).empty());

  SUBCASE("upsert: second put wins, one stored copy") {
    shell.id_short = "Renamed";
    repo.put_shell(shell);
    CHECK(repo.shells().size() == 1);
    CHECK(repo.get_shell(shell.id)->id_short == "Renamed");
  }

  SUBCASE("dangling submodel references are reported at read time") {
    shell.submodel_ids.push_back("https://example.org/ids/sm/ghost");
    repo.put_shell(shell);
    auto dangling = repo.dangling_submodels(*repo.get_shell(shell.id));
    REQUIRE(dangling.size() == 1);
    CHECK(dangling[0] == "https://example.org/ids/sm/ghost");
  }
}

TEST_CASE("malformed entities are rejected") {
  TempDir dir;
  aas::Repository repo(dir.path());

  SUBCASE("duplicate element idShorts") {
    auto sm = small_submodel("urn:x");
    sm.elements.push_back(sm.elements[0]);
    CHECK_THROWS_AS(repo.put_submodel(sm), Error);
  }
  SUBCASE("property value conflicting with valueType") {
    auto sm = small_submodel("urn:x");
    std::get<aas::Property>(sm.elements[0]).value = model::Scalar(std::string("hot"));
    CHECK_THROWS_AS(repo.put_submodel(sm), Error);
  }
  SUBCASE("file without a fileName") {
    auto sm = small_submodel("urn:x");
    std::get<aas::FileElement>(sm.elements[1]).file_name.clear();
    CHECK_THROWS_AS(repo.put_submodel(sm), Error);
  }
  SUBCASE("empty id") {
    aas::Shell shell;
    shell.id_short = "X";
    CHECK_THROWS_AS(repo.put_shell(shell), Error);
  }
  SUBCASE("idShort with forbidden characters") {
    auto sm = small_submodel("urn:x");
    sm.id_short = "has space";
    CHECK_THROWS_AS(repo.put_submodel(sm), Error);
  }
}

TEST_CASE("get_element resolves idShort paths") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));

  auto element = repo.get_element("urn:sm", "Dynamic_Attribute_currentTemperature");
  const auto* prop = std::get_if<aas::Property>(&element);
  REQUIRE(prop != nullptr);
  CHECK(prop->value == model::Scalar(22.5));

  SUBCASE("unknown path") {
    CHECK_THROWS_AS(repo.get_element("urn:sm", "Nope"), Error);
  }
  SUBCASE("nested path on a flat submodel") {
    try {
      repo.get_element("urn:sm", "Dynamic_Attribute_currentTemperature.inner");
      FAIL("expected NotFound");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_found);
    }
  }
  SUBCASE("unknown submodel") {
    try {
      repo.get_element("urn:ghost", "x");
      FAIL("expected NotFound");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_found);
    }
  }
}

TEST_CASE("set_property_value") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));
  const std::string path = "Dynamic_Attribute_currentTemperature";

  SUBCASE("write then read") {
    repo.set_property_value("urn:sm", path, model::Scalar(45.0));
    auto element = repo.get_element("urn:sm", path);
    CHECK(std::get<aas::Property>(element).value == model::Scalar(45.0));
  }
  SUBCASE("integers widen for Real properties") {
    repo.set_property_value("urn:sm", path, model::Scalar(std::int64_t(45)));
    CHECK(std::get<aas::Property>(repo.get_element("urn:sm", path)).value ==
          model::Scalar(45.0));
  }
  SUBCASE("type mismatch") {
    try {
      repo.set_property_value("urn:sm", path, model::Scalar(std::string("hot")));
      FAIL("expected ValueTypeMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::value_type_mismatch);
    }
  }
  SUBCASE("not a property") {
    try {
      repo.set_property_value("urn:sm", "InformationModel_Type", model::Scalar(1.0));
      FAIL("expected NotAProperty");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_a_property);
    }
  }
  SUBCASE("type safety holds after arbitrary successful writes") {
    repo.set_property_value("urn:sm", path, model::Scalar(1.25));
    repo.set_property_value("urn:sm", path, model::Scalar(std::int64_t(-3)));
    auto sm = repo.get_submodel("urn:sm").value();
    for (const auto& element : sm.elements)
      if (const auto* p = std::get_if<aas::Property>(&element))
        CHECK(model::scalar_type(p->value) == p->value_type);
  }
}

TEST_CASE("attachments") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));

  SUBCASE("byte-identical round trip") {
    std::string bytes = "\x00\x01\xFF binary \n bytes";
    bytes[0] = '\0';
    repo.put_attachment("urn:sm", "InformationModel_Type", bytes, "application/octet-stream");
    auto [ret, content_type] = repo.get_attachment("urn:sm", "InformationModel_Type");
    CHECK(ret == bytes);
    CHECK(content_type == "application/octet-stream");
  }
  SUBCASE("empty attachment keeps its content type") {
    repo.put_attachment("urn:sm", "InformationModel_Type", "", "");
    auto [ret, content_type] = repo.get_attachment("urn:sm", "InformationModel_Type");
    CHECK(ret.empty());
    CHECK(content_type == "application/xml");  // from the seed
  }
  SUBCASE("put on a Property") {
    try {
      repo.put_attachment("urn:sm", "Dynamic_Attribute_currentTemperature", "x", "text/plain");
      FAIL("expected NotAFile");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_a_file);
    }
  }
}

TEST_CASE("add_relationship") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));

  auto rel = repo.add_relationship(
      "urn:sm", "Link_Temp",
      aas::Reference::to_element("urn:sm", "Dynamic_Attribute_currentTemperature"),
      aas::Reference::to_model_attribute("DemoShopFloor", "currentTemperature"));
  CHECK(rel.second.keys[0].value == "DemoShopFloor#currentTemperature");

  auto element = repo.get_element("urn:sm", "Link_Temp");
  CHECK(std::get<aas::RelationshipElement>(element) == rel);

  SUBCASE("duplicate idShort") {
    try {
      repo.add_relationship("urn:sm", "Link_Temp", rel.first, rel.second);
      FAIL("expected DuplicateIdShort");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::duplicate_id_short);
    }
  }
}

TEST_CASE("semanticId is carried opaquely through persistence") {
  TempDir dir;
  {
    aas::Repository repo(dir.path());
    auto sm = small_submodel("urn:sm");
    sm.semantic_id = "https://admin-shell.io/idta/SemanticInfo/1/0";
    std::get<aas::Property>(sm.elements[0]).semantic_id = "urn:demo:temperature";
    repo.put_submodel(sm);
  }
  aas::Repository reloaded(dir.path());
  auto sm = reloaded.get_submodel("urn:sm").value();
  CHECK(sm.semantic_id == "https://admin-shell.io/idta/SemanticInfo/1/0");
  CHECK(std::get<aas::Property>(*sm.find_element("Dynamic_Attribute_currentTemperature"))
            .semantic_id == "urn:demo:temperature");
}

TEST_CASE("reload equals original") {
  TempDir dir;
  {
    aas::Repository repo(dir.path());
    aas::Shell shell;
    shell.id = "urn:aas:1";
    shell.id_short = "AAS1";
    shell.submodel_ids = {"urn:sm"};
    repo.put_shell(shell);
    repo.put_submodel(small_submodel("urn:sm"));
    repo.put_attachment("urn:sm", "InformationModel_Type", std::string("\x01\x02\x00x", 4), "");
  }
  aas::Repository reloaded(dir.path());
  aas::Repository reference(dir.path());  // concurrent reader of the same state
  CHECK(reloaded.shells_snapshot() == reference.shells_snapshot());
  CHECK(reloaded.submodels_snapshot().size() == 1);
  CHECK(std::get<aas::FileElement>(reloaded.get_element("urn:sm", "InformationModel_Type"))
            .attachment == std::string("\x01\x02\x00x", 4));
}

TEST_CASE("empty directory loads an empty repository") {
  TempDir dir;
  aas::Repository repo(dir.path());
  CHECK(repo.shells().empty());
  CHECK(repo.submodels().empty());
}

TEST_CASE("truncated document raises CorruptStore naming the file") {
  TempDir dir;
  {
    aas::Repository repo(dir.path());
    repo.put_submodel(small_submodel("urn:sm"));
  }
  std::filesystem::path victim;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path() / "submodels"))
    victim = entry.path();
  std::ofstream(victim, std::ios::trunc) << "{ \"modelType\": \"Subm";

  try {
    aas::Repository repo(dir.path());
    FAIL("expected CorruptStore");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::corrupt_store);
    CHECK(std::string(e.what()).find(victim.filename().string()) != std::string::npos);
  }
}

TEST_CASE("no temp files left behind") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));
  repo.set_property_value("urn:sm", "Dynamic_Attribute_currentTemperature",
                          model::Scalar(1.0));
  int tmp_files = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir.path()))
    if (entry.path().extension() == ".tmp") ++tmp_files;
  CHECK(tmp_files == 0);
}

TEST_CASE("randomized serialize/load round trips") {
  test::RepoGen gen(20260811);
  for (int round = 0; round < 25; ++round) {
    TempDir dir("ovc-roundtrip");
    std::map<std::string, aas::Shell> shells;
    std::map<std::string, aas::Submodel> submodels;
    {
      aas::Repository repo(dir.path());
      std::vector<std::string> submodel_ids;
      int n_submodels = gen.range(0, 4);
      for (int i = 0; i < n_submodels; ++i) {
        auto sm = gen.random_submodel(i, 4096);
        submodel_ids.push_back(sm.id);
        repo.put_submodel(sm);
      }
      int n_shells = gen.range(0, 3);
      for (int i = 0; i < n_shells; ++i) repo.put_shell(gen.random_shell(i, submodel_ids));
      shells = repo.shells_snapshot();
      submodels = repo.submodels_snapshot();
    }
    aas::Repository reloaded(dir.path());
    CHECK(reloaded.shells_snapshot() == shells);
    CHECK(reloaded.submodels_snapshot() == submodels);
  }
}

TEST_CASE("concurrent readers never observe a torn property") {
  TempDir dir;
  aas::Repository repo(dir.path());
  repo.put_submodel(small_submodel("urn:sm"));
  const std::string path = "Dynamic_Attribute_currentTemperature";

  std::atomic<int> bad_reads{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 3; ++t) {
    readers.emplace_back([&] {
      for (int i = 0; i < 1000; ++i) {
        auto element = repo.get_element("urn:sm", path);
        const auto* prop = std::get_if<aas::Property>(&element);
        if (!prop || model::scalar_type(prop->value) != model::DataType::Real) ++bad_reads;
        if (i % 64 == 0) std::this_thread::yield();
      }
    });
  }
  for (int i = 0; i < 100; ++i)
    repo.set_property_value("urn:sm", path, model::Scalar(i / 4.0));
  for (auto& t : readers) t.join();
  CHECK(bad_reads == 0);
  CHECK(std::get<aas::Property>(repo.get_element("urn:sm", path)).value ==
        model::Scalar(99 / 4.0));
}

TEST_CASE("directory lock coordinates writers") {
  TempDir dir;
  aas::DirLock writer(dir.path(), aas::DirLock::Mode::Exclusive);
  CHECK_THROWS_AS(aas::DirLock(dir.path(), aas::DirLock::Mode::Exclusive), Error);
  CHECK_THROWS_AS(aas::DirLock(dir.path(), aas::DirLock::Mode::Shared), Error);
}

TEST_CASE("shared locks coexist") {
  TempDir dir;
  aas::DirLock reader1(dir.path(), aas::DirLock::Mode::Shared);
  aas::DirLock reader2(dir.path(), aas::DirLock::Mode::Shared);
  CHECK_THROWS_AS(aas::DirLock(dir.path(), aas::DirLock::Mode::Exclusive), Error);
}
