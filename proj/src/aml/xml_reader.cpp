// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "aml/xml_reader.hpp"

#include <charconv>

#include "util/error.hpp"

namespace ovc::aml {

const std::string* XmlNode::attr(std::string_view attr_name) const {
  for (const auto& [k, v] : attributes)
    if (k == attr_name) return &v;
  return nullptr;
}

const XmlNode* XmlNode::first_child(std::string_view child_name) const {
  for (const auto& c : children)
    if (c.name == child_name) return &c;
  return nullptr;
}

std::vector<const XmlNode*> XmlNode::children_named(std::string_view child_name) const {
  std::vector<const XmlNode*> out;
  for (const auto& c : children)
    if (c.name == child_name) out.push_back(&c);
  return out;
}

namespace {

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':';
}
bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

std::string strip_prefix(std::string_view name) {
  auto pos = name.rfind(':');
  if (pos == std::string_view::npos) return std::string(name);
  return std::string(name.substr(pos + 1));
}

class XmlParser {
 public:
  explicit XmlParser(std::string_view text) : text_(text) {}

  XmlNode parse() {
    skip_prolog_and_misc();
    if (done() || peek() != '<') fail("expected a root element");
    XmlNode root = parse_element();
    skip_misc();
    if (!done()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::xml_malformed, "malformed XML at line " + std::to_string(line_) +
                                         ", column " + std::to_string(col_) + ": " + what);
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }
  char advance() {
    if (done()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void advance_n(size_t n) {
    for (size_t i = 0; i < n; ++i) advance();
  }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
      advance();
  }

  void skip_comment() {
    advance_n(4);  // "<!--"
    while (!starts_with("-->")) {
      if (done()) fail("unterminated comment");
      advance();
    }
    advance_n(3);
  }

  void skip_pi() {
    advance_n(2);  // "<?"
    while (!starts_with("?>")) {
      if (done()) fail("unterminated processing instruction");
      advance();
    }
    advance_n(2);
  }

  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<!--")) skip_comment();
      else if (starts_with("<?")) skip_pi();
      else return;
    }
  }

  void skip_prolog_and_misc() {
    skip_misc();
    if (starts_with("<!DOCTYPE")) fail("DTDs are not supported");
  }

  std::string parse_name() {
    if (done() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    while (!done() && is_name_char(peek())) name += advance();
    return name;
  }

  std::string decode_entity() {
    advance();  // '&'
    std::string entity;
    while (!done() && peek() != ';') {
      entity += advance();
      if (entity.size() > 8) fail("unterminated entity reference");
    }
    advance();  // ';'
    if (entity == "amp") return "&";
    if (entity == "lt") return "<";
    if (entity == "gt") return ">";
    if (entity == "quot") return "\"";
    if (entity == "apos") return "'";
    if (!entity.empty() && entity[0] == '#') {
      int base = 10;
      std::string_view digits(entity);
      digits.remove_prefix(1);
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        base = 16;
        digits.remove_prefix(1);
      }
      unsigned code = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), code, base);
      if (ec != std::errc() || p != digits.data() + digits.size() || code == 0 || code > 0x10FFFF)
        fail("bad character reference '&" + entity + ";'");
      // UTF-8 encode
      std::string out;
      if (code < 0x80) {
        out += static_cast<char>(code);
      } else if (code < 0x800) {
        out += static_cast<char>(0xC0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3F));
      } else if (code < 0x10000) {
        out += static_cast<char>(0xE0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
      } else {
        out += static_cast<char>(0xF0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (code & 0x3F));
      }
      return out;
    }
    fail("unknown entity '&" + entity + ";'");
  }

  std::string parse_attr_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    advance();
    std::string value;
    while (true) {
      if (done()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        advance();
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        value += decode_entity();
        continue;
      }
      value += advance();
    }
  }

  XmlNode parse_element() {
    if (++depth_ > 200) fail("element nesting deeper than 200 levels");
    int el_line = line_, el_col = col_;
    advance();  // '<'
    XmlNode node;
    node.line = el_line;
    node.column = el_col;
    node.name = strip_prefix(parse_name());

    while (true) {
      skip_ws();
      if (done()) fail("unterminated start tag for <" + node.name + ">");
      if (peek() == '/') {
        advance();
        if (peek() != '>') fail("expected '>' after '/'");
        advance();
        --depth_;
        return node;  // self-closing
      }
      if (peek() == '>') {
        advance();
        break;
      }
      std::string attr_name = strip_prefix(parse_name());
      skip_ws();
      if (peek() != '=') fail("expected '=' after attribute name '" + attr_name + "'");
      advance();
      skip_ws();
      std::string value = parse_attr_value();
      for (const auto& [k, v] : node.attributes)
        if (k == attr_name) fail("duplicate attribute '" + attr_name + "'");
      node.attributes.emplace_back(std::move(attr_name), std::move(value));
    }

    // content
    while (true) {
      if (done()) fail("missing end tag for <" + node.name + ">");
      char c = peek();
      if (c == '<') {
        if (starts_with("<!--")) {
          skip_comment();
        } else if (starts_with("<![CDATA[")) {
          advance_n(9);
          while (!starts_with("]]>")) {
            if (done()) fail("unterminated CDATA section");
            node.text += advance();
          }
          advance_n(3);
        } else if (starts_with("</")) {
          advance_n(2);
          std::string end_name = strip_prefix(parse_name());
          if (end_name != node.name)
            fail("end tag </" + end_name + "> does not match <" + node.name + ">");
          skip_ws();
          if (peek() != '>') fail("expected '>' in end tag");
          advance();
          --depth_;
          return node;
        } else if (starts_with("<?")) {
          skip_pi();
        } else {
          node.children.push_back(parse_element());
        }
      } else if (c == '&') {
        node.text += decode_entity();
      } else {
        node.text += advance();
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
};

}  // namespace

XmlNode parse_xml(std::string_view bytes) { return XmlParser(bytes).parse(); }

}  // namespace ovc::aml
