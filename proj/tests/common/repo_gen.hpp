// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Random repository states for serialize/load round-trip checks.

#include <random>
#include <string>
#include <vector>

#include "aas/entities.hpp"

namespace ovc::test {

struct RepoGen {
  std::mt19937 gen;
  explicit RepoGen(uint32_t seed) : gen(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  std::string id_short(const std::string& prefix, int i) {
    return prefix + "_" + std::to_string(i);
  }

  std::string iri(const std::string& kind, int i) {
    return "https://example.org/ids/" + kind + "/gen-" + std::to_string(i) + "-" +
           std::to_string(range(0, 1 << 30));
  }

  std::string random_bytes(int max_len) {
    std::string out(static_cast<size_t>(range(0, max_len)), '\0');
    for (auto& c : out) c = static_cast<char>(range(0, 255));
    return out;
  }

  model::Scalar random_scalar(model::DataType t) {
    switch (t) {
      case model::DataType::String: {
        std::string s(static_cast<size_t>(range(0, 12)), ' ');
        for (auto& c : s) c = static_cast<char>(range(32, 126));
        return model::Scalar(s);
      }
      case model::DataType::Integer:
        return model::Scalar(std::int64_t(range(-1000000, 1000000)));
      case model::DataType::Real:
        return model::Scalar(range(-1000000, 1000000) / 256.0);
      case model::DataType::Boolean:
        return model::Scalar(range(0, 1) == 1);
    }
    return model::Scalar(std::string());
  }

  aas::Reference random_reference(int i) {
    if (range(0, 2) == 0)
      return aas::Reference::to_model_attribute("obj" + std::to_string(i), "attr");
    return aas::Reference::to_element(iri("sm", i), id_short("target", i));
  }

  aas::Submodel random_submodel(int index, int max_attachment) {
    aas::Submodel sm;
    sm.id = iri("sm", index);
    sm.id_short = id_short("Submodel", index);
    int elements = range(0, 6);
    for (int i = 0; i < elements; ++i) {
      switch (range(0, 2)) {
        case 0: {
          aas::Property prop;
          prop.id_short = id_short("Prop", i);
          if (range(0, 1)) prop.semantic_id = iri("semantic", i);
          prop.value_type = static_cast<model::DataType>(range(0, 3));
          prop.value = random_scalar(prop.value_type);
          sm.elements.push_back(std::move(prop));
          break;
        }
        case 1: {
          aas::FileElement file;
          file.id_short = id_short("File", i);
          if (range(0, 1)) file.semantic_id = iri("semantic", i + 50);
          file.file_name = "file_" + std::to_string(i) + ".bin";
          file.content_type = "application/octet-stream";
          file.attachment = random_bytes(max_attachment);
          sm.elements.push_back(std::move(file));
          break;
        }
        default: {
          aas::RelationshipElement rel;
          rel.id_short = id_short("Rel", i);
          rel.first = random_reference(i);
          rel.second = random_reference(i + 100);
          sm.elements.push_back(std::move(rel));
          break;
        }
      }
    }
    return sm;
  }

  aas::Shell random_shell(int index, const std::vector<std::string>& submodel_ids) {
    aas::Shell shell;
    shell.id = iri("aas", index);
    shell.id_short = id_short("Shell", index);
    for (const auto& id : submodel_ids)
      if (range(0, 1)) shell.submodel_ids.push_back(id);
    return shell;
  }
};

}  // namespace ovc::test
