// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ovc::aml {

// Parsed XML element tree. Namespace prefixes are stripped from element and
// attribute names; xmlns declarations are kept as plain attributes and
// ignored by the CAEX layer.
struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  std::string text;  // concatenated character data, entities decoded
  int line = 0;
  int column = 0;

  const std::string* attr(std::string_view attr_name) const;
  const XmlNode* first_child(std::string_view child_name) const;
  std::vector<const XmlNode*> children_named(std::string_view child_name) const;
};

// Minimal non-validating XML reader covering the CAEX subset this project
// ingests: prolog, comments, CDATA, elements, attributes, character data and
// the five predefined entities plus numeric character references. DTDs are
// rejected. Throws Error(xml_malformed) with line/column in the message.
XmlNode parse_xml(std::string_view bytes);

}  // namespace ovc::aml
