// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "aas/repository.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "aas/codec.hpp"
#include "util/base64.hpp"
#include "util/error.hpp"
#include "util/fs_io.hpp"
#include "util/strings.hpp"

namespace fs = std::filesystem;

namespace ovc::aas {

namespace {

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Repository::Repository(fs::path dir) : dir_(std::move(dir)) {
  util::ensure_dir(dir_);
  load();
}

void Repository::load() {
  auto load_dir = [&](const fs::path& sub, auto parse_into) {
    fs::path d = dir_ / sub;
    if (!fs::exists(d)) return;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(d))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      nlohmann::json j = nlohmann::json::parse(util::read_file(file), nullptr, false);
      if (j.is_discarded())
        throw Error(Errc::corrupt_store, "unparseable store document: " + file.string());
      try {
        parse_into(j);
      } catch (const Error& e) {
        throw Error(Errc::corrupt_store, "corrupt store document " + file.string() + ": " + e.what());
      } catch (const std::exception& e) {
        throw Error(Errc::corrupt_store, "corrupt store document " + file.string() + ": " + e.what());
      }
    }
  };

  load_dir("shells", [&](const nlohmann::json& j) {
    Shell shell = shell_from_json(j);
    shells_[shell.id] = std::move(shell);
  });
  load_dir("submodels", [&](const nlohmann::json& j) {
    Submodel sm = submodel_from_json(j);
    // Re-attach blobs.
    fs::path blobs = blob_dir(sm.id);
    for (auto& element : sm.elements) {
      auto* file = std::get_if<FileElement>(&element);
      if (!file) continue;
      fs::path blob = blobs / file->id_short;
      if (fs::exists(blob)) file->attachment = util::read_file(blob);
    }
    submodels_[sm.id] = std::move(sm);
  });
}

void Repository::validate_shell(const Shell& shell) const {
  if (shell.id.empty()) throw Error(Errc::malformed_entity, "shell id must not be empty");
  if (!util::valid_id_short(shell.id_short))
    throw Error(Errc::malformed_entity, "shell '" + shell.id + "' has invalid idShort");
}

void Repository::validate_submodel(const Submodel& sm) const {
  if (sm.id.empty()) throw Error(Errc::malformed_entity, "submodel id must not be empty");
  if (!util::valid_id_short(sm.id_short))
    throw Error(Errc::malformed_entity, "submodel '" + sm.id + "' has invalid idShort");
  std::set<std::string> seen;
  for (const auto& element : sm.elements) {
    const std::string& id_short = element_id_short(element);
    if (!util::valid_id_short(id_short))
      throw Error(Errc::malformed_entity,
                  "submodel '" + sm.id + "': invalid element idShort '" + id_short + "'");
    if (!seen.insert(id_short).second)
      throw Error(Errc::malformed_entity,
                  "submodel '" + sm.id + "': duplicate element idShort '" + id_short + "'");
    if (const auto* prop = std::get_if<Property>(&element)) {
      if (model::scalar_type(prop->value) != prop->value_type)
        throw Error(Errc::malformed_entity, "submodel '" + sm.id + "': property '" + id_short +
                                                "' value does not match its valueType");
      if (const auto* real = std::get_if<double>(&prop->value); real && !std::isfinite(*real))
        throw Error(Errc::malformed_entity, "submodel '" + sm.id + "': property '" + id_short +
                                                "' holds a non-finite value");
    } else if (const auto* file = std::get_if<FileElement>(&element)) {
      if (file->file_name.empty())
        throw Error(Errc::malformed_entity,
                    "submodel '" + sm.id + "': file '" + id_short + "' has empty fileName");
    } else {
      const auto& rel = std::get<RelationshipElement>(element);
      if (rel.first.keys.empty() || rel.second.keys.empty())
        throw Error(Errc::malformed_entity, "submodel '" + sm.id + "': relationship '" +
                                                id_short + "' has an empty reference");
    }
  }
}

fs::path Repository::blob_dir(const std::string& submodel_id) const {
  return dir_ / "blobs" / util::base64url_encode(submodel_id);
}

void Repository::persist_shell_locked(const Shell& shell) const {
  util::ensure_dir(dir_ / "shells");
  util::write_file_atomic(dir_ / "shells" / (util::base64url_encode(shell.id) + ".json"),
                          dump(shell_to_json(shell)));
}

void Repository::persist_submodel_locked(const Submodel& sm, bool rewrite_blobs) const {
  util::ensure_dir(dir_ / "submodels");
  util::write_file_atomic(dir_ / "submodels" / (util::base64url_encode(sm.id) + ".json"),
                          dump(submodel_to_json(sm)));
  if (!rewrite_blobs) return;
  fs::path blobs = blob_dir(sm.id);
  std::set<std::string> live;
  for (const auto& element : sm.elements) {
    const auto* file = std::get_if<FileElement>(&element);
    if (!file) continue;
    util::ensure_dir(blobs);
    util::write_file_atomic(blobs / file->id_short, file->attachment);
    live.insert(file->id_short);
  }
  if (fs::exists(blobs)) {
    for (const auto& entry : fs::directory_iterator(blobs))
      if (entry.is_regular_file() && !live.count(entry.path().filename().string()))
        fs::remove(entry.path());
  }
}

std::string Repository::put_shell(Shell shell) {
  validate_shell(shell);
  std::unique_lock lock(mutex_);
  persist_shell_locked(shell);
  std::string id = shell.id;
  shells_[id] = std::move(shell);
  return id;
}

std::string Repository::put_submodel(Submodel sm) {
  validate_submodel(sm);
  std::unique_lock lock(mutex_);
  persist_submodel_locked(sm, /*rewrite_blobs=*/true);
  std::string id = sm.id;
  submodels_[id] = std::move(sm);
  return id;
}

std::vector<Shell> Repository::shells() const {
  std::shared_lock lock(mutex_);
  std::vector<Shell> out;
  for (const auto& [id, shell] : shells_) out.push_back(shell);
  return out;
}

std::vector<Submodel> Repository::submodels() const {
  std::shared_lock lock(mutex_);
  std::vector<Submodel> out;
  for (const auto& [id, sm] : submodels_) out.push_back(sm);
  return out;
}

std::optional<Shell> Repository::get_shell(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = shells_.find(id);
  if (it == shells_.end()) return std::nullopt;
  return it->second;
}

std::optional<Submodel> Repository::get_submodel(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = submodels_.find(id);
  if (it == submodels_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Repository::dangling_submodels(const Shell& shell) const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& id : shell.submodel_ids)
    if (!submodels_.count(id)) out.push_back(id);
  return out;
}

const Submodel& Repository::submodel_ref_locked(const std::string& id) const {
  auto it = submodels_.find(id);
  if (it == submodels_.end())
    throw Error(Errc::not_found, "no submodel with id '" + id + "'");
  return it->second;
}

Submodel& Repository::submodel_ref_locked(const std::string& id) {
  auto it = submodels_.find(id);
  if (it == submodels_.end())
    throw Error(Errc::not_found, "no submodel with id '" + id + "'");
  return it->second;
}

const SubmodelElement& Repository::element_ref_locked(const Submodel& sm,
                                                      const std::string& id_short_path) const {
  auto segments = util::split(id_short_path, '.');
  const SubmodelElement* element = sm.find_element(segments.front());
  if (!element)
    throw Error(Errc::not_found,
                "submodel '" + sm.id + "' has no element '" + segments.front() + "'");
  // Property/File/Relationship elements have no children; deeper paths
  // cannot resolve.
  if (segments.size() > 1)
    throw Error(Errc::not_found, "element '" + segments.front() + "' in submodel '" + sm.id +
                                     "' has no nested element '" + segments[1] + "'");
  return *element;
}

SubmodelElement& Repository::element_ref_locked(Submodel& sm, const std::string& id_short_path) {
  return const_cast<SubmodelElement&>(
      element_ref_locked(static_cast<const Submodel&>(sm), id_short_path));
}

SubmodelElement Repository::get_element(const std::string& submodel_id,
                                        const std::string& id_short_path) const {
  std::shared_lock lock(mutex_);
  return element_ref_locked(submodel_ref_locked(submodel_id), id_short_path);
}

Property Repository::set_property_value(const std::string& submodel_id,
                                        const std::string& id_short_path,
                                        const model::Scalar& value) {
  std::unique_lock lock(mutex_);
  Submodel& sm = submodel_ref_locked(submodel_id);
  SubmodelElement& element = element_ref_locked(sm, id_short_path);
  auto* prop = std::get_if<Property>(&element);
  if (!prop)
    throw Error(Errc::not_a_property, "element '" + id_short_path + "' is not a Property");

  model::DataType actual = model::scalar_type(value);
  if (const auto* real = std::get_if<double>(&value); real && !std::isfinite(*real))
    throw Error(Errc::value_type_mismatch,
                "property '" + id_short_path + "' cannot hold a non-finite value");
  if (actual == prop->value_type) {
    prop->value = value;
  } else if (prop->value_type == model::DataType::Real && actual == model::DataType::Integer) {
    prop->value = model::Scalar(static_cast<double>(std::get<std::int64_t>(value)));
  } else {
    throw Error(Errc::value_type_mismatch, "property '" + id_short_path + "' has value type " +
                                               model::datatype_name(prop->value_type) +
                                               ", got " + model::datatype_name(actual));
  }
  persist_submodel_locked(sm, /*rewrite_blobs=*/false);
  return *prop;
}

void Repository::put_attachment(const std::string& submodel_id, const std::string& id_short_path,
                                std::string bytes, const std::string& content_type) {
  std::unique_lock lock(mutex_);
  Submodel& sm = submodel_ref_locked(submodel_id);
  SubmodelElement& element = element_ref_locked(sm, id_short_path);
  auto* file = std::get_if<FileElement>(&element);
  if (!file) throw Error(Errc::not_a_file, "element '" + id_short_path + "' is not a File");
  file->attachment = std::move(bytes);
  if (!content_type.empty()) file->content_type = content_type;
  fs::path blobs = blob_dir(sm.id);
  util::ensure_dir(blobs);
  util::write_file_atomic(blobs / file->id_short, file->attachment);
  persist_submodel_locked(sm, /*rewrite_blobs=*/false);
}

std::pair<std::string, std::string> Repository::get_attachment(
    const std::string& submodel_id, const std::string& id_short_path) const {
  std::shared_lock lock(mutex_);
  const Submodel& sm = submodel_ref_locked(submodel_id);
  const SubmodelElement& element = element_ref_locked(sm, id_short_path);
  const auto* file = std::get_if<FileElement>(&element);
  if (!file) throw Error(Errc::not_a_file, "element '" + id_short_path + "' is not a File");
  return {file->attachment, file->content_type};
}

RelationshipElement Repository::add_relationship(const std::string& submodel_id,
                                                 const std::string& id_short, Reference first,
                                                 Reference second) {
  std::unique_lock lock(mutex_);
  Submodel& sm = submodel_ref_locked(submodel_id);
  if (!util::valid_id_short(id_short))
    throw Error(Errc::malformed_entity, "invalid idShort '" + id_short + "'");
  if (sm.find_element(id_short))
    throw Error(Errc::duplicate_id_short,
                "submodel '" + submodel_id + "' already has an element '" + id_short + "'");
  if (first.keys.empty() || second.keys.empty())
    throw Error(Errc::malformed_entity, "relationship references must not be empty");
  RelationshipElement rel;
  rel.id_short = id_short;
  rel.first = std::move(first);
  rel.second = std::move(second);
  sm.elements.push_back(rel);
  persist_submodel_locked(sm, /*rewrite_blobs=*/false);
  return rel;
}

void Repository::put_element(const std::string& submodel_id, SubmodelElement element) {
  std::unique_lock lock(mutex_);
  Submodel& sm = submodel_ref_locked(submodel_id);
  Submodel updated = sm;
  const std::string& id_short = element_id_short(element);
  if (SubmodelElement* existing = updated.find_element(id_short)) *existing = std::move(element);
  else updated.elements.push_back(std::move(element));
  validate_submodel(updated);
  persist_submodel_locked(updated, /*rewrite_blobs=*/true);
  sm = std::move(updated);
}

std::map<std::string, Shell> Repository::shells_snapshot() const {
  std::shared_lock lock(mutex_);
  return shells_;
}

std::map<std::string, Submodel> Repository::submodels_snapshot() const {
  std::shared_lock lock(mutex_);
  return submodels_;
}

void Repository::persist_all() const {
  std::shared_lock lock(mutex_);
  for (const auto& [id, shell] : shells_) persist_shell_locked(shell);
  for (const auto& [id, sm] : submodels_) persist_submodel_locked(sm, /*rewrite_blobs=*/true);
}

}  // namespace ovc::aas
