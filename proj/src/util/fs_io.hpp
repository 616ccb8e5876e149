// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace ovc::util {

std::string read_file(const std::filesystem::path& path);

// Writes via a sibling temp file followed by rename, so a reader never
// observes a torn document.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

void ensure_dir(const std::filesystem::path& dir);

}  // namespace ovc::util
