// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "model/types.hpp"
#include "util/fs_io.hpp"

namespace ovc::test {

inline std::filesystem::path fixtures_dir() {
#ifdef OVC_FIXTURES_DIR
  return OVC_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

inline std::string read_fixture(const std::string& name) {
  return util::read_file(fixtures_dir() / name);
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "ovc-test") {
    auto base = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(std::random_device{}());
    path_ = base / (tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// The production scenario built by hand: a shop floor with four sequential
// processes. Slots mirror the fixture files; each value was checked against
// the declared attribute before freezing it here.
inline model::TypeModel demo_type_model() {
  model::TypeModel tm;
  tm.name = "DemoProductionProcesses";

  model::MetaClass shop_floor;
  shop_floor.name = "ShopFloor";
  shop_floor.attributes = {{"currentTemperature", model::DataType::Real},
                           {"maxTemperature", model::DataType::Real}};
  shop_floor.references = {{"processes", "ManufacturingProcess", true,
                            model::MetaReference::kUnbounded}};

  model::MetaClass process;
  process.name = "ManufacturingProcess";
  process.attributes = {{"processType", model::DataType::String},
                        {"processSequenceOrder", model::DataType::Integer}};

  tm.classes = {shop_floor, process};
  return tm;
}

inline model::InstanceModel demo_instance_model() {
  model::InstanceModel im;
  im.name = "DemoShopfloorInstances";
  im.conforms_to = demo_type_model();

  model::ModelObject floor;
  floor.id = "DemoShopFloor";
  floor.class_name = "ShopFloor";
  floor.slots = {{"currentTemperature", model::Scalar(22.5)},
                 {"maxTemperature", model::Scalar(30.0)}};

  const char* types[] = {"A", "B", "C", "D"};
  im.objects.push_back(floor);
  for (int i = 0; i < 4; ++i) {
    model::ModelObject process;
    process.id = std::string("DemoShopFloor/IntermediateProcess") + types[i];
    process.class_name = "ManufacturingProcess";
    process.slots = {{"processType", model::Scalar(std::string(types[i]))},
                     {"processSequenceOrder", model::Scalar(std::int64_t(i + 1))}};
    im.objects[0].links["processes"].push_back(process.id);
    im.objects.push_back(process);
  }
  return im;
}

}  // namespace ovc::test
