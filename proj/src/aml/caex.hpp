// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "model/types.hpp"

namespace ovc::aml {

// Recognized CAEX subset (CAEX 3.0 element names as used by AutomationML):
// CAEXFile, SystemUnitClassLib/SystemUnitClass with Attribute declarations
// and nested typed child templates, InstanceHierarchy/InternalElement with
// attribute values. Everything else is skipped with a warning.

struct CaexAttribute {
  std::string name;
  std::string datatype_hint;  // e.g. "xs:string"; may be empty
  std::string value;          // raw text of <Value>, untrimmed
  bool has_value = false;
};

struct CaexChildDecl {
  std::string name;
  std::string ref_base_path;
};

struct CaexClassDef {
  std::string name;
  std::vector<CaexAttribute> attributes;
  std::vector<CaexChildDecl> child_decls;  // become containment references
};

struct CaexClassLib {
  std::string name;
  std::vector<CaexClassDef> classes;
};

struct CaexElement {
  std::string name;
  std::string ref_base_path;
  std::vector<CaexAttribute> attributes;
  std::vector<CaexElement> children;
};

struct CaexHierarchy {
  std::string name;
  std::vector<CaexElement> elements;
};

struct CaexDocument {
  std::string file_name;
  std::vector<CaexClassLib> class_libs;
  std::vector<CaexHierarchy> hierarchies;
};

struct CaexParseResult {
  CaexDocument doc;
  std::vector<std::string> warnings;
};

// Throws Error(xml_malformed) on broken XML or a non-CAEXFile root,
// Error(missing_name) on anonymous elements, Error(duplicate_name) when
// sibling names collide.
CaexParseResult parse_caex(std::string_view bytes);

struct TypeModelResult {
  model::TypeModel tm;
  std::vector<std::string> warnings;
};

// One MetaClass per SystemUnitClass; xs:* datatype hints map onto the four
// scalar kinds (missing or unknown hints fall back to String with a
// warning); nested typed child declarations become unbounded containment
// references. Throws Error(no_type_content | duplicate_class_name).
TypeModelResult caex_to_typemodel(const CaexDocument& doc);

struct InstanceModelResult {
  model::InstanceModel im;
  std::vector<std::string> warnings;
};

// One ModelObject per InternalElement. Object ids are the slash-joined name
// path from the hierarchy root; class names resolve from the last segment
// of RefBaseSystemUnitPath; values parse per the declared datatype
// (whitespace trimmed, empty values leave the slot absent); nesting
// populates the parent's matching containment link.
// Throws Error(unresolved_class_path | value_parse_error).
InstanceModelResult caex_to_instancemodel(const CaexDocument& doc, const model::TypeModel& tm);

}  // namespace ovc::aml
