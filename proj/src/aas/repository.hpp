// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "aas/entities.hpp"

namespace ovc::aas {

// Disk-backed shell/submodel store. Every mutation persists the affected
// entity (write-temp-then-rename) before returning, so readers of the
// directory never observe a torn document. Layout:
//
//   <dir>/shells/<base64url(id)>.json
//   <dir>/submodels/<base64url(id)>.json
//   <dir>/blobs/<base64url(submodelId)>/<idShortPath>
//
// Many concurrent readers, one writer at a time; each operation is atomic
// with respect to the others.
class Repository {
 public:
  // Loads any state already present under dir (creating it when absent).
  // Throws Error(corrupt_store) naming the offending file on unreadable
  // documents.
  explicit Repository(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  // Upserts; throws Error(malformed_entity) on structural problems such as
  // duplicate sibling idShorts or a Property value conflicting with its
  // valueType. Returns the stored id.
  std::string put_shell(Shell shell);
  std::string put_submodel(Submodel sm);

  std::vector<Shell> shells() const;          // ordered by id
  std::vector<Submodel> submodels() const;    // ordered by id
  std::optional<Shell> get_shell(const std::string& id) const;
  std::optional<Submodel> get_submodel(const std::string& id) const;

  // Dangling submodel references of a shell, resolved at read time.
  std::vector<std::string> dangling_submodels(const Shell& shell) const;

  // Resolves a dot-separated idShort path. The element kinds stored here
  // have no children, so nested paths only succeed with one segment.
  SubmodelElement get_element(const std::string& submodel_id,
                              const std::string& id_short_path) const;

  Property set_property_value(const std::string& submodel_id, const std::string& id_short_path,
                              const model::Scalar& value);

  // Attachment bytes round-trip exactly. An empty content_type on put keeps
  // the stored one.
  void put_attachment(const std::string& submodel_id, const std::string& id_short_path,
                      std::string bytes, const std::string& content_type);
  std::pair<std::string, std::string> get_attachment(const std::string& submodel_id,
                                                     const std::string& id_short_path) const;

  RelationshipElement add_relationship(const std::string& submodel_id,
                                       const std::string& id_short, Reference first,
                                       Reference second);

  // Upsert of a single element by idShort (append or replace).
  void put_element(const std::string& submodel_id, SubmodelElement element);

  // State snapshots for equality checks.
  std::map<std::string, Shell> shells_snapshot() const;
  std::map<std::string, Submodel> submodels_snapshot() const;

  // Rewrites every entity document and blob.
  void persist_all() const;

 private:
  void load();
  void validate_shell(const Shell& shell) const;
  void validate_submodel(const Submodel& sm) const;
  void persist_shell_locked(const Shell& shell) const;
  void persist_submodel_locked(const Submodel& sm, bool rewrite_blobs) const;
  Submodel& submodel_ref_locked(const std::string& id);
  const Submodel& submodel_ref_locked(const std::string& id) const;
  SubmodelElement& element_ref_locked(Submodel& sm, const std::string& id_short_path);
  const SubmodelElement& element_ref_locked(const Submodel& sm,
                                            const std::string& id_short_path) const;
  std::filesystem::path blob_dir(const std::string& submodel_id) const;

  std::filesystem::path dir_;
  std::map<std::string, Shell> shells_;
  std::map<std::string, Submodel> submodels_;
  mutable std::shared_mutex mutex_;
};

}  // namespace ovc::aas
