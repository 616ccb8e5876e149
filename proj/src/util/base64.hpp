// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ovc::util {

// base64url (RFC 4648, section 5), no padding. Used for id-to-filename and
// id-to-URL-segment encoding, so output must stay filesystem and path safe.
std::string base64url_encode(std::string_view data);
std::optional<std::string> base64url_decode(std::string_view text);

}  // namespace ovc::util
