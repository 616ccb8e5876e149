// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "util/xml_writer.hpp"

namespace ovc::util {

std::string XmlWriter::escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

void XmlWriter::indent() {
  for (size_t i = 0; i < stack_.size(); ++i) out_ += "  ";
}

void XmlWriter::open(std::string_view name, const std::vector<Attr>& attrs) {
  indent();
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attrs) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape(v);
    out_ += '"';
  }
  out_ += ">\n";
  stack_.emplace_back(name);
}

void XmlWriter::self_close(std::string_view name, const std::vector<Attr>& attrs) {
  indent();
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attrs) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape(v);
    out_ += '"';
  }
  out_ += "/>\n";
}

void XmlWriter::close() {
  std::string name = stack_.back();
  stack_.pop_back();
  indent();
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

void XmlWriter::text_element(std::string_view name, std::string_view text) {
  indent();
  out_ += '<';
  out_ += name;
  out_ += '>';
  out_ += escape(text);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

}  // namespace ovc::util
