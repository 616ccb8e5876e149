// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/report.hpp"

#include <algorithm>
#include <unordered_set>

#include "ocl/parser.hpp"
#include "ocl/typecheck.hpp"
#include "util/error.hpp"
#include "util/strings.hpp"
#include "util/time_iso.hpp"

namespace ovc::ocl {

namespace {

std::vector<std::string> dedupe_keep_order(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& id : ids)
    if (seen.insert(id).second) out.push_back(id);
  return out;
}

bool is_comparison_root(const Expr& body, const Binary** out) {
  const auto* bin = std::get_if<Binary>(&body.node);
  if (!bin) return false;
  switch (bin->op) {
    case BinOp::Eq:
    case BinOp::Ne:
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
      *out = bin;
      return true;
    default:
      return false;
  }
}

std::string violation_message(const Invariant& inv, const InvariantOutcome& outcome,
                              const std::vector<std::string>& duplicate_ids,
                              const model::InstanceModel& im) {
  if (!duplicate_ids.empty()) {
    // Point at the non-unique expression rather than every failing context
    // object; those are all violated by the same duplicate group.
    std::string body_text;
    if (const auto* call = std::get_if<IteratorCall>(&inv.body->node);
        call && call->kind == IterKind::IsUnique)
      body_text = print_expr(*call->body);
    std::string msg = "value";
    if (!body_text.empty()) msg += " of '" + body_text + "'";
    msg += " is not unique; shared by: " + util::join(duplicate_ids, ", ");
    return msg;
  }

  std::vector<std::string> violated;
  for (const auto& [id, verdict] : outcome.per_object)
    if (verdict == Verdict::Violated) violated.push_back(id);

  // For a comparison-shaped invariant, show both sides' observed values for
  // the first failing object; that names the attribute and the limit it broke.
  const Binary* cmp = nullptr;
  if (!violated.empty() && is_comparison_root(*inv.body, &cmp)) {
    const model::ModelObject* obj = im.find_object(violated.front());
    if (obj) {
      Value lhs = evaluate_expr(*cmp->lhs, obj, im);
      Value rhs = evaluate_expr(*cmp->rhs, obj, im);
      return "violated for " + obj->id + ": " + print_expr(*cmp->lhs) + " = " +
             lhs.to_display_string() + " but " + print_expr(*cmp->rhs) + " = " +
             rhs.to_display_string() + " (required " + bin_op_name(cmp->op) + ")";
    }
  }

  return "violated by " + std::to_string(violated.size()) + " of " +
         std::to_string(outcome.per_object.size()) + " " + inv.context_class + " instance(s)";
}

}  // namespace

ValidationReport run_constraints(ConstraintDocument& doc, const model::InstanceModel& im) {
  auto type_errors = typecheck(doc, im.conforms_to);
  if (!type_errors.empty()) {
    std::string msg = "constraint document does not type-check against '" +
                      im.conforms_to.name + "':";
    for (const auto& e : type_errors) {
      msg += "\n  [";
      msg += type_error_kind_name(e.kind);
      msg += "] " + e.invariant + ": " + e.message;
    }
    throw Error(Errc::rejected_untyped, msg);
  }

  ValidationReport report;
  report.instance_name = im.name;
  report.timestamp = util::utc_iso8601_now();

  for (const auto& inv : doc.invariants) {
    EvalDiagnostics diag;
    InvariantOutcome outcome = evaluate_invariant(inv, im, &diag);

    ConstraintResult result;
    result.constraint_name = inv.name;
    result.context_class = inv.context_class;
    result.status = outcome.overall;

    switch (outcome.overall) {
      case Verdict::Satisfied:
        ++report.summary.satisfied;
        break;
      case Verdict::Violated: {
        ++report.summary.violated;
        auto duplicates = dedupe_keep_order(diag.duplicate_group_ids);
        if (!duplicates.empty()) {
          result.violating_object_ids = duplicates;
        } else {
          for (const auto& [id, verdict] : outcome.per_object)
            if (verdict == Verdict::Violated) result.violating_object_ids.push_back(id);
        }
        result.message = violation_message(inv, outcome, duplicates, im);
        break;
      }
      case Verdict::Undefined:
        ++report.summary.undefined;
        result.message = diag.first_undefined.value_or("undefined outcome");
        break;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

std::string render_text_report(const ValidationReport& report) {
  std::string out = "Validation of " + report.instance_name + " at " + report.timestamp + "\n";
  for (const auto& r : report.results) {
    out += r.constraint_name;
    out += " [";
    out += verdict_name(r.status);
    out += "]";
    if (!r.violating_object_ids.empty()) {
      out += " ";
      out += util::join(r.violating_object_ids, ", ");
    }
    out += "\n";
  }
  out += std::to_string(report.summary.satisfied) + " satisfied, " +
         std::to_string(report.summary.violated) + " violated, " +
         std::to_string(report.summary.undefined) + " undefined\n";
  return out;
}

nlohmann::ordered_json report_to_json(const ValidationReport& report) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    results.push_back({{"constraintName", r.constraint_name},
                       {"contextClass", r.context_class},
                       {"status", verdict_name(r.status)},
                       {"violatingObjectIds", r.violating_object_ids},
                       {"message", r.message}});
  }
  return nlohmann::ordered_json{{"instanceName", report.instance_name},
                                {"timestamp", report.timestamp},
                                {"results", std::move(results)},
                                {"summary",
                                 {{"satisfied", report.summary.satisfied},
                                  {"violated", report.summary.violated},
                                  {"undefined", report.summary.undefined}}}};
}

}  // namespace ovc::ocl
