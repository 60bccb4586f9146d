// SPDX-License-Identifier: Apache-2.0
#include "decoypot/util.hpp"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cctype>
#include <stdexcept>

namespace decoypot {

std::string to_hex(const uint8_t* data, size_t len) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

std::string to_hex(std::string_view data) {
    return to_hex(reinterpret_cast<const uint8_t*>(data.data()), data.size());
}

Bytes sha256(const void* data, size_t len) {
    Bytes out(SHA256_DIGEST_LENGTH);
    SHA256(static_cast<const unsigned char*>(data), len, out.data());
    return out;
}

std::string sha256_hex(std::string_view data) {
    Bytes d = sha256(data.data(), data.size());
    return to_hex(d.data(), d.size());
}

Bytes random_bytes(size_t len) {
    Bytes out(len);
    if (len > 0 && RAND_bytes(out.data(), static_cast<int>(len)) != 1) {
        throw std::runtime_error("RAND_bytes failed");
    }
    return out;
}

std::string random_id(std::string_view prefix) {
    Bytes r = random_bytes(5);
    return std::string(prefix) + "-" + to_hex(r.data(), r.size());
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_command_line(std::string_view line) {
    std::vector<std::string> tokens;
    std::string cur;
    bool in_token = false;
    char quote = 0;
    for (char c : line) {
        if (quote != 0) {
            if (c == quote) {
                quote = 0;
            } else {
                cur.push_back(c);
            }
            continue;
        }
        if (c == '\'' || c == '"') {
            quote = c;
            in_token = true;
            continue;
        }
        if (c == ' ' || c == '\t') {
            if (in_token) {
                tokens.push_back(std::move(cur));
                cur.clear();
                in_token = false;
            }
            continue;
        }
        cur.push_back(c);
        in_token = true;
    }
    if (in_token) tokens.push_back(std::move(cur));
    return tokens;
}

}  // namespace decoypot
