// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace decoypot {

using Bytes = std::vector<uint8_t>;

std::string to_hex(const uint8_t* data, size_t len);
std::string to_hex(std::string_view data);

// SHA-256 digest (OpenSSL), returned as 32 raw bytes / 64 hex chars.
Bytes sha256(const void* data, size_t len);
std::string sha256_hex(std::string_view data);

// Cryptographically random bytes (RAND_bytes).
Bytes random_bytes(size_t len);

// Short random identifier, e.g. "s-3fa9c2d41b". Prefix keeps ids greppable.
std::string random_id(std::string_view prefix);

std::string lowercase(std::string_view s);

// Splits on whitespace honoring single/double quotes. Unterminated quotes
// consume to end of line.
std::vector<std::string> split_command_line(std::string_view line);

}  // namespace decoypot
