// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "util/error.hpp"

namespace ovc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_class: return "UnknownClass";
    case Errc::unknown_object: return "UnknownObject";
    case Errc::unknown_attribute: return "UnknownAttribute";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::export_rejected: return "ExportRejected";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_invariant: return "DuplicateInvariant";
    case Errc::rejected_untyped: return "RejectedUntyped";
    case Errc::evaluation_fault: return "EvaluationFault";
    case Errc::xml_malformed: return "XmlMalformed";
    case Errc::missing_name: return "MissingName";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::no_type_content: return "NoTypeContent";
    case Errc::duplicate_class_name: return "DuplicateClassName";
    case Errc::unresolved_class_path: return "UnresolvedClassPath";
    case Errc::value_parse_error: return "ValueParseError";
    case Errc::not_found: return "NotFound";
    case Errc::not_a_property: return "NotAProperty";
    case Errc::not_a_file: return "NotAFile";
    case Errc::value_type_mismatch: return "ValueTypeMismatch";
    case Errc::duplicate_id_short: return "DuplicateIdShort";
    case Errc::malformed_entity: return "MalformedEntity";
    case Errc::io_failure: return "IoFailure";
    case Errc::corrupt_store: return "CorruptStore";
    case Errc::store_locked: return "StoreLocked";
    case Errc::missing_artifact: return "MissingArtifact";
    case Errc::conformance_failed: return "ConformanceFailed";
    case Errc::bind_failure: return "BindFailure";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace ovc
