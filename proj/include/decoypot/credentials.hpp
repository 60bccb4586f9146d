// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace decoypot {

// Username and password exactly as presented by the client. Arbitrary bytes
// are allowed; nothing is normalized before key derivation.
struct Credentials {
    std::string username;
    std::string password;

    bool operator==(const Credentials&) const = default;
};

inline constexpr size_t kMaxCredentialLength = 255;

// Identity of an attacker: SHA-256 over be32(len(u)) || u || be32(len(p)) || p,
// lowercase hex. The length prefix makes the encoding injection-safe —
// ("a\0b","c") and ("a","b\0c") hash differently.
struct CredentialKey {
    std::string digest;

    bool operator==(const CredentialKey&) const = default;
    auto operator<=>(const CredentialKey&) const = default;
};

CredentialKey derive_credential_key(const Credentials& creds);

bool credentials_within_bounds(const Credentials& creds);

}  // namespace decoypot
