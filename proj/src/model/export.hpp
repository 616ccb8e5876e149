// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "model/types.hpp"

namespace ovc::model {

// Emits the documented Ecore-flavored XML subset (docs/formats.md): one
// package element, one classifier per class, one structural feature per
// attribute/reference. Byte-deterministic.
std::string export_ecore_subset(const TypeModel& tm);

// Emits the documented XMI-flavored XML subset: xmi:XMI root with a version
// marker, one element per root object, containment links nested, slots as
// attributes in class declaration order. Byte-deterministic.
// Throws Error(export_rejected) when check_conformance(im) is non-empty.
std::string export_xmi_subset(const InstanceModel& im);

}  // namespace ovc::model
