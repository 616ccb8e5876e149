// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "model/types.hpp"
#include "ocl/ast.hpp"
#include "ocl/value.hpp"

namespace ovc::ocl {

enum class Verdict { Satisfied, Violated, Undefined };

const char* verdict_name(Verdict v);

// Side information gathered while evaluating, used for report messages.
struct EvalDiagnostics {
  // First navigation that produced Undefined, e.g.
  // "attribute 'currentTemperature' of 'DemoShopFloor' has no value".
  std::optional<std::string> first_undefined;
  // Object ids participating in an isUnique duplicate group, in
  // collection order.
  std::vector<std::string> duplicate_group_ids;
};

// Evaluates a type-checked expression with `self` bound. Total for
// well-typed input: missing slot values and division by zero yield
// Undefined. Throws Error(evaluation_fault) only on internal breaches the
// type checker should have prevented.
Value evaluate_expr(const Expr& expr, const model::ModelObject* self,
                    const model::InstanceModel& im, EvalDiagnostics* diag = nullptr);

struct InvariantOutcome {
  std::string invariant_name;
  std::string context_class;
  std::vector<std::pair<std::string, Verdict>> per_object;
  Verdict overall = Verdict::Satisfied;
};

// One verdict per instance of the context class; overall is Satisfied iff
// all are (vacuously Satisfied with no instances), Violated if any is.
InvariantOutcome evaluate_invariant(const Invariant& inv, const model::InstanceModel& im,
                                    EvalDiagnostics* diag = nullptr);

}  // namespace ovc::ocl
