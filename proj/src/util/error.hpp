// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ovc {

// Error codes shared across the library. Each operation documents which
// subset it can raise.
enum class Errc {
  // model
  unknown_class,
  unknown_object,
  unknown_attribute,
  type_mismatch,
  export_rejected,
  // ocl
  parse_error,
  duplicate_invariant,
  rejected_untyped,
  evaluation_fault,
  // aml
  xml_malformed,
  missing_name,
  duplicate_name,
  no_type_content,
  duplicate_class_name,
  unresolved_class_path,
  value_parse_error,
  // aas
  not_found,
  not_a_property,
  not_a_file,
  value_type_mismatch,
  duplicate_id_short,
  malformed_entity,
  io_failure,
  corrupt_store,
  store_locked,
  // pipeline / service
  missing_artifact,
  conformance_failed,
  bind_failure,
  invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

  // Pipeline step (1..5) that raised the error, 0 when not step-tagged.
  int step() const noexcept { return step_; }
  void set_step(int step) noexcept { step_ = step; }

 private:
  Errc code_;
  int step_ = 0;
};

}  // namespace ovc
