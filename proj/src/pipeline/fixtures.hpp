// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

namespace ovc::demo {

// Embedded copies of the files under fixtures/, generated at build time, so
// seeding works regardless of the working directory. Throws
// Error(invalid_argument) for unknown names.
std::string_view fixture(std::string_view name);

std::vector<std::string_view> fixture_names();

}  // namespace ovc::demo
