// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "model/types.hpp"
#include "ocl/ast.hpp"
#include "ocl/eval.hpp"

namespace ovc::ocl {

struct ConstraintResult {
  std::string constraint_name;
  std::string context_class;
  Verdict status = Verdict::Satisfied;
  std::vector<std::string> violating_object_ids;
  std::string message;
};

struct ValidationReport {
  std::string instance_name;
  std::string timestamp;  // UTC ISO 8601
  std::vector<ConstraintResult> results;
  struct Summary {
    int satisfied = 0;
    int violated = 0;
    int undefined = 0;
  } summary;
};

// Evaluates every invariant in document order. Re-runs the type checker and
// throws Error(rejected_untyped) when it reports errors. For a violated
// invariant the violating ids are the per-object failures, except that an
// isUnique violation attributes the objects of the duplicate groups instead.
ValidationReport run_constraints(ConstraintDocument& doc, const model::InstanceModel& im);

// "Validation of <name> at <ts>" header, one "<name> [<status>] <ids>" line
// per constraint, "<s> satisfied, <v> violated, <u> undefined" trailer.
std::string render_text_report(const ValidationReport& report);

nlohmann::ordered_json report_to_json(const ValidationReport& report);

}  // namespace ovc::ocl
