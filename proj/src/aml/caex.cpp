// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "aml/caex.hpp"

#include <set>

#include "aml/xml_reader.hpp"
#include "util/error.hpp"
#include "util/strings.hpp"

namespace ovc::aml {

namespace {

std::string require_name(const XmlNode& node) {
  const std::string* name = node.attr("Name");
  if (!name || name->empty())
    throw Error(Errc::missing_name, "<" + node.name + "> at line " + std::to_string(node.line) +
                                        " has no Name attribute");
  return *name;
}

class SiblingNames {
 public:
  explicit SiblingNames(std::string scope) : scope_(std::move(scope)) {}
  void add(const std::string& name) {
    if (!seen_.insert(name).second)
      throw Error(Errc::duplicate_name,
                  "duplicate sibling name '" + name + "' in " + scope_);
  }

 private:
  std::string scope_;
  std::set<std::string> seen_;
};

CaexAttribute parse_attribute(const XmlNode& node) {
  CaexAttribute attr;
  attr.name = require_name(node);
  if (const std::string* hint = node.attr("AttributeDataType")) attr.datatype_hint = *hint;
  if (const XmlNode* value = node.first_child("Value")) {
    attr.value = value->text;
    attr.has_value = true;
  }
  return attr;
}

void warn_unknown(std::vector<std::string>& warnings, const XmlNode& child,
                  const std::string& parent) {
  warnings.push_back("ignored <" + child.name + "> (line " + std::to_string(child.line) +
                     ") inside " + parent);
}

CaexClassDef parse_class_def(const XmlNode& node, std::vector<std::string>& warnings,
                             std::vector<CaexClassDef>& flat_out);

void parse_class_children(const XmlNode& node, CaexClassDef& def,
                          std::vector<std::string>& warnings,
                          std::vector<CaexClassDef>& flat_out) {
  SiblingNames attr_names("attributes of class '" + def.name + "'");
  SiblingNames child_names("children of class '" + def.name + "'");
  for (const auto& child : node.children) {
    if (child.name == "Attribute") {
      CaexAttribute attr = parse_attribute(child);
      attr_names.add(attr.name);
      def.attributes.push_back(std::move(attr));
    } else if (child.name == "InternalElement") {
      CaexChildDecl decl;
      decl.name = require_name(child);
      child_names.add(decl.name);
      if (const std::string* ref = child.attr("RefBaseSystemUnitPath"))
        decl.ref_base_path = *ref;
      def.child_decls.push_back(std::move(decl));
    } else if (child.name == "SystemUnitClass") {
      // Nested class definitions are hoisted to the library level.
      flat_out.push_back(parse_class_def(child, warnings, flat_out));
    } else {
      warn_unknown(warnings, child, "SystemUnitClass '" + def.name + "'");
    }
  }
}

CaexClassDef parse_class_def(const XmlNode& node, std::vector<std::string>& warnings,
                             std::vector<CaexClassDef>& flat_out) {
  CaexClassDef def;
  def.name = require_name(node);
  parse_class_children(node, def, warnings, flat_out);
  return def;
}

CaexElement parse_internal_element(const XmlNode& node, std::vector<std::string>& warnings) {
  CaexElement elem;
  elem.name = require_name(node);
  if (const std::string* ref = node.attr("RefBaseSystemUnitPath")) elem.ref_base_path = *ref;
  SiblingNames attr_names("attributes of element '" + elem.name + "'");
  SiblingNames child_names("children of element '" + elem.name + "'");
  for (const auto& child : node.children) {
    if (child.name == "Attribute") {
      CaexAttribute attr = parse_attribute(child);
      attr_names.add(attr.name);
      elem.attributes.push_back(std::move(attr));
    } else if (child.name == "InternalElement") {
      CaexElement nested = parse_internal_element(child, warnings);
      child_names.add(nested.name);
      elem.children.push_back(std::move(nested));
    } else {
      warn_unknown(warnings, child, "InternalElement '" + elem.name + "'");
    }
  }
  return elem;
}

}  // namespace

CaexParseResult parse_caex(std::string_view bytes) {
  CaexParseResult result;
  XmlNode root = parse_xml(bytes);
  if (root.name != "CAEXFile")
    throw Error(Errc::xml_malformed,
                "expected <CAEXFile> root, found <" + root.name + ">");
  if (const std::string* fn = root.attr("FileName")) result.doc.file_name = *fn;

  SiblingNames lib_names("CAEXFile");
  for (const auto& child : root.children) {
    if (child.name == "SystemUnitClassLib") {
      CaexClassLib lib;
      lib.name = require_name(child);
      lib_names.add(lib.name);
      SiblingNames class_names("SystemUnitClassLib '" + lib.name + "'");
      std::vector<CaexClassDef> hoisted;
      for (const auto& cls : child.children) {
        if (cls.name == "SystemUnitClass") {
          lib.classes.push_back(parse_class_def(cls, result.warnings, hoisted));
        } else {
          warn_unknown(result.warnings, cls, "SystemUnitClassLib '" + lib.name + "'");
        }
      }
      for (auto& h : hoisted) lib.classes.push_back(std::move(h));
      for (const auto& cls : lib.classes) class_names.add(cls.name);
      result.doc.class_libs.push_back(std::move(lib));
    } else if (child.name == "InstanceHierarchy") {
      CaexHierarchy hierarchy;
      hierarchy.name = require_name(child);
      lib_names.add(hierarchy.name);
      SiblingNames root_names("InstanceHierarchy '" + hierarchy.name + "'");
      for (const auto& elem : child.children) {
        if (elem.name == "InternalElement") {
          CaexElement parsed = parse_internal_element(elem, result.warnings);
          root_names.add(parsed.name);
          hierarchy.elements.push_back(std::move(parsed));
        } else {
          warn_unknown(result.warnings, elem, "InstanceHierarchy '" + hierarchy.name + "'");
        }
      }
      result.doc.hierarchies.push_back(std::move(hierarchy));
    } else {
      warn_unknown(result.warnings, child, "CAEXFile");
    }
  }
  return result;
}

namespace {

model::DataType map_datatype(const std::string& hint, const std::string& attr_name,
                             const std::string& class_name,
                             std::vector<std::string>& warnings) {
  if (hint == "xs:string") return model::DataType::String;
  if (hint == "xs:int" || hint == "xs:integer" || hint == "xs:long")
    return model::DataType::Integer;
  if (hint == "xs:double" || hint == "xs:float" || hint == "xs:decimal")
    return model::DataType::Real;
  if (hint == "xs:boolean") return model::DataType::Boolean;
  warnings.push_back("attribute '" + attr_name + "' of class '" + class_name + "' has " +
                     (hint.empty() ? std::string("no datatype hint")
                                   : "unrecognized datatype '" + hint + "'") +
                     "; defaulting to String");
  return model::DataType::String;
}

std::string last_path_segment(const std::string& path) {
  auto pos = path.rfind('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

TypeModelResult caex_to_typemodel(const CaexDocument& doc) {
  if (doc.class_libs.empty())
    throw Error(Errc::no_type_content,
                "document '" + doc.file_name + "' contains no SystemUnitClassLib");

  TypeModelResult result;
  result.tm.name = doc.class_libs.front().name;

  std::set<std::string> class_names;
  for (const auto& lib : doc.class_libs) {
    for (const auto& def : lib.classes) {
      if (!class_names.insert(def.name).second)
        throw Error(Errc::duplicate_class_name, "class '" + def.name + "' defined twice");
      model::MetaClass cls;
      cls.name = def.name;
      for (const auto& attr : def.attributes)
        cls.attributes.push_back(
            {attr.name, map_datatype(attr.datatype_hint, attr.name, def.name, result.warnings)});
      for (const auto& decl : def.child_decls) {
        model::MetaReference ref;
        ref.name = decl.name;
        ref.target_class = last_path_segment(decl.ref_base_path);
        ref.containment = true;
        ref.upper_bound = model::MetaReference::kUnbounded;
        if (ref.target_class.empty()) {
          result.warnings.push_back("child declaration '" + decl.name + "' of class '" +
                                    def.name + "' has no RefBaseSystemUnitPath; skipped");
          continue;
        }
        cls.references.push_back(std::move(ref));
      }
      result.tm.classes.push_back(std::move(cls));
    }
  }

  for (const auto& problem : validate_type_model(result.tm))
    result.warnings.push_back("type model: " + problem);
  return result;
}

namespace {

class InstanceBuilder {
 public:
  InstanceBuilder(const model::TypeModel& tm, InstanceModelResult& result)
      : tm_(tm), result_(result) {}

  void add_element(const CaexElement& elem, const std::string& parent_path,
                   const std::string& parent_id) {
    std::string id = parent_path.empty() ? elem.name : parent_path + "/" + elem.name;

    std::string class_name = last_path_segment(elem.ref_base_path);
    const model::MetaClass* cls = class_name.empty() ? nullptr : tm_.find_class(class_name);
    if (!cls)
      throw Error(Errc::unresolved_class_path,
                  "element '" + id + "': RefBaseSystemUnitPath '" + elem.ref_base_path +
                      "' names no class of type model '" + tm_.name + "'");

    model::ModelObject obj;
    obj.id = id;
    obj.class_name = class_name;
    for (const auto& attr : elem.attributes) {
      const model::MetaAttribute* decl = cls->find_attribute(attr.name);
      if (!decl) {
        result_.warnings.push_back("element '" + id + "': attribute '" + attr.name +
                                   "' is not declared on class '" + class_name + "'; skipped");
        continue;
      }
      std::string trimmed(util::trim(attr.value));
      if (!attr.has_value || trimmed.empty()) continue;  // absent slot, Undefined downstream
      auto value = model::scalar_parse(trimmed, decl->datatype);
      if (!value)
        throw Error(Errc::value_parse_error,
                    "element '" + id + "': attribute '" + attr.name + "': cannot parse '" +
                        trimmed + "' as " + model::datatype_name(decl->datatype));
      obj.slots.emplace(attr.name, std::move(*value));
    }
    result_.im.objects.push_back(std::move(obj));

    if (!parent_id.empty()) link_to_parent(parent_id, id, class_name);
    for (const auto& child : elem.children) add_element(child, id, id);
  }

 private:
  void link_to_parent(const std::string& parent_id, const std::string& child_id,
                      const std::string& child_class) {
    model::ModelObject* parent = result_.im.find_object(parent_id);
    const model::MetaClass* parent_cls = tm_.find_class(parent->class_name);
    for (const auto& ref : parent_cls->references) {
      if (ref.containment && ref.target_class == child_class) {
        parent->links[ref.name].push_back(child_id);
        return;
      }
    }
    result_.warnings.push_back("element '" + child_id + "': class '" + parent->class_name +
                               "' declares no containment reference to '" + child_class +
                               "'; nesting not recorded");
  }

  const model::TypeModel& tm_;
  InstanceModelResult& result_;
};

}  // namespace

InstanceModelResult caex_to_instancemodel(const CaexDocument& doc, const model::TypeModel& tm) {
  InstanceModelResult result;
  result.im.conforms_to = tm;
  result.im.name =
      doc.hierarchies.empty() ? doc.file_name : doc.hierarchies.front().name;

  InstanceBuilder builder(tm, result);
  for (const auto& hierarchy : doc.hierarchies)
    for (const auto& elem : hierarchy.elements) builder.add_element(elem, "", "");
  return result;
}

}  // namespace ovc::aml
