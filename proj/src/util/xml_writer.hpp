// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ovc::util {

// Minimal XML emitter: 2-space indentation, LF line endings, attributes in
// the order they are given. Output is byte-deterministic for equal input.
class XmlWriter {
 public:
  using Attr = std::pair<std::string, std::string>;

  XmlWriter() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

  void open(std::string_view name, const std::vector<Attr>& attrs = {});
  void self_close(std::string_view name, const std::vector<Attr>& attrs = {});
  void close();
  void text_element(std::string_view name, std::string_view text);

  const std::string& str() const { return out_; }

  static std::string escape(std::string_view raw);

 private:
  void indent();
  std::string out_;
  std::vector<std::string> stack_;
};

}  // namespace ovc::util
