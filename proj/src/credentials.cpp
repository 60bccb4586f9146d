// SPDX-License-Identifier: Apache-2.0
#include "decoypot/credentials.hpp"

#include "decoypot/util.hpp"

namespace decoypot {

namespace {

void append_length_prefixed(std::string& buf, const std::string& field) {
    uint32_t n = static_cast<uint32_t>(field.size());
    buf.push_back(static_cast<char>((n >> 24) & 0xff));
    buf.push_back(static_cast<char>((n >> 16) & 0xff));
    buf.push_back(static_cast<char>((n >> 8) & 0xff));
    buf.push_back(static_cast<char>(n & 0xff));
    buf.append(field);
}

}  // namespace

CredentialKey derive_credential_key(const Credentials& creds) {
    std::string enc;
    enc.reserve(creds.username.size() + creds.password.size() + 8);
    append_length_prefixed(enc, creds.username);
    append_length_prefixed(enc, creds.password);
    return CredentialKey{sha256_hex(enc)};
}

bool credentials_within_bounds(const Credentials& creds) {
    return creds.username.size() <= kMaxCredentialLength &&
           creds.password.size() <= kMaxCredentialLength;
}

}  // namespace decoypot
