// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace decoypot {

// One reconstructed command line from the client->server byte stream.
//   raw      — the line's bytes exactly as received, terminator excluded
//   rendered — command text after applying backspace/delete editing; control
//              bytes below 0x20 (except tab) never appear here
//   complete — true when the line was terminated by CR or LF
struct InterceptedLine {
    std::string raw;
    std::string rendered;
    bool complete = true;

    bool operator==(const InterceptedLine&) const = default;
};

// Incremental line reconstruction over arbitrarily chunked input. CR or LF
// (and the CRLF pair as one) terminate a line; 0x08 and 0x7f erase the
// previous character; ANSI escape sequences are consumed and dropped, not
// emulated. Feeding the same byte stream split at any boundaries yields the
// same lines.
class LineEditor {
public:
    std::vector<InterceptedLine> feed(std::string_view chunk);

    // Flushes an unterminated trailing line (complete=false), if any.
    // Called at session end.
    std::optional<InterceptedLine> finish();

    bool has_partial() const { return !raw_.empty() || !rendered_.empty(); }

private:
    std::string raw_;
    std::string rendered_;
    bool last_was_cr_ = false;
    // 0 = normal, 1 = saw ESC, 2 = inside CSI sequence
    int esc_state_ = 0;
};

}  // namespace decoypot
