// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "model/export.hpp"

#include <unordered_map>
#include <unordered_set>

#include "util/error.hpp"
#include "util/xml_writer.hpp"

namespace ovc::model {

namespace {

const char* ecore_type_name(DataType t) {
  switch (t) {
    case DataType::String: return "EString";
    case DataType::Integer: return "EInt";
    case DataType::Real: return "EDouble";
    case DataType::Boolean: return "EBoolean";
  }
  return "EString";
}

}  // namespace

std::string export_ecore_subset(const TypeModel& tm) {
  util::XmlWriter w;
  w.open("ecore:EPackage",
         {{"xmlns:ecore", "http://www.eclipse.org/emf/2002/Ecore"},
          {"xmlns:xsi", "http://www.w3.org/2001/XMLSchema-instance"},
          {"name", tm.name}});
  for (const auto& cls : tm.classes) {
    if (cls.attributes.empty() && cls.references.empty()) {
      w.self_close("eClassifiers", {{"xsi:type", "ecore:EClass"}, {"name", cls.name}});
      continue;
    }
    w.open("eClassifiers", {{"xsi:type", "ecore:EClass"}, {"name", cls.name}});
    for (const auto& attr : cls.attributes)
      w.self_close("eStructuralFeatures", {{"xsi:type", "ecore:EAttribute"},
                                           {"name", attr.name},
                                           {"eType", ecore_type_name(attr.datatype)}});
    for (const auto& ref : cls.references)
      w.self_close("eStructuralFeatures",
                   {{"xsi:type", "ecore:EReference"},
                    {"name", ref.name},
                    {"eType", ref.target_class},
                    {"containment", ref.containment ? "true" : "false"},
                    {"upperBound", std::to_string(ref.upper_bound)}});
    w.close();
  }
  w.close();
  return w.str();
}

namespace {

class XmiEmitter {
 public:
  XmiEmitter(const InstanceModel& im, util::XmlWriter& w) : im_(im), w_(w) {
    for (const auto& o : im.objects) by_id_[o.id] = &o;
  }

  // Objects never appearing as a containment target are roots.
  std::vector<const ModelObject*> roots() const {
    std::unordered_set<std::string> contained;
    for (const auto& o : im_.objects) {
      const MetaClass* cls = im_.conforms_to.find_class(o.class_name);
      for (const auto& [link_name, targets] : o.links) {
        const MetaReference* ref = cls->find_reference(link_name);
        if (ref && ref->containment)
          for (const auto& t : targets) contained.insert(t);
      }
    }
    std::vector<const ModelObject*> out;
    for (const auto& o : im_.objects)
      if (!contained.count(o.id)) out.push_back(&o);
    return out;
  }

  void emit(const ModelObject& obj, const std::string& element_name, bool typed) {
    // An object already emitted in full collapses into an idref, which also
    // keeps pathological containment shapes from recursing forever.
    if (!emitted_.insert(obj.id).second) {
      w_.self_close(element_name, {{"xmi:idref", obj.id}});
      return;
    }
    const MetaClass* cls = im_.conforms_to.find_class(obj.class_name);
    std::vector<util::XmlWriter::Attr> attrs;
    if (typed) attrs.push_back({"xmi:type", obj.class_name});
    attrs.push_back({"xmi:id", obj.id});
    for (const auto& attr : cls->attributes) {
      auto it = obj.slots.find(attr.name);
      if (it != obj.slots.end()) attrs.push_back({attr.name, scalar_to_string(it->second)});
    }
    std::vector<std::pair<const MetaReference*, const std::vector<std::string>*>> child_links;
    for (const auto& ref : cls->references) {
      auto it = obj.links.find(ref.name);
      if (it == obj.links.end() || it->second.empty()) continue;
      if (ref.containment) {
        child_links.push_back({&ref, &it->second});
      } else {
        std::string joined;
        for (const auto& id : it->second) {
          if (!joined.empty()) joined += ' ';
          joined += id;
        }
        attrs.push_back({ref.name, joined});
      }
    }
    if (child_links.empty()) {
      w_.self_close(element_name, attrs);
      return;
    }
    w_.open(element_name, attrs);
    for (const auto& [ref, targets] : child_links)
      for (const auto& target_id : *targets) emit(*by_id_.at(target_id), ref->name, true);
    w_.close();
  }

 private:
  const InstanceModel& im_;
  util::XmlWriter& w_;
  std::unordered_map<std::string, const ModelObject*> by_id_;
  std::unordered_set<std::string> emitted_;
};

}  // namespace

std::string export_xmi_subset(const InstanceModel& im) {
  auto errors = check_conformance(im);
  if (!errors.empty()) {
    std::string msg = "instance model does not conform to its type model:";
    for (const auto& e : errors) {
      msg += "\n  [";
      msg += conformance_kind_name(e.kind);
      msg += "] ";
      msg += e.object_id;
      msg += ": ";
      msg += e.detail;
    }
    throw Error(Errc::export_rejected, msg);
  }

  util::XmlWriter w;
  w.open("xmi:XMI", {{"xmi:version", "2.0"},
                     {"xmlns:xmi", "http://www.omg.org/XMI"},
                     {"model", im.name},
                     {"typeModel", im.conforms_to.name}});
  XmiEmitter emitter(im, w);
  for (const ModelObject* root : emitter.roots()) emitter.emit(*root, root->class_name, false);
  w.close();
  return w.str();
}

}  // namespace ovc::model
