// SPDX-License-Identifier: Apache-2.0
#include "decoypot/line_editor.hpp"

namespace decoypot {

std::vector<InterceptedLine> LineEditor::feed(std::string_view chunk) {
    std::vector<InterceptedLine> lines;
    for (char ch : chunk) {
        const unsigned char b = static_cast<unsigned char>(ch);

        if (last_was_cr_ && b == '\n') {
            // second half of CRLF
            last_was_cr_ = false;
            continue;
        }
        last_was_cr_ = false;

        if (b == '\r' || b == '\n') {
            lines.push_back(InterceptedLine{std::move(raw_), std::move(rendered_), true});
            raw_.clear();
            rendered_.clear();
            esc_state_ = 0;
            last_was_cr_ = (b == '\r');
            continue;
        }

        raw_.push_back(ch);

        if (esc_state_ == 1) {
            esc_state_ = (b == '[') ? 2 : 0;
            continue;
        }
        if (esc_state_ == 2) {
            if (b >= 0x40 && b <= 0x7e) esc_state_ = 0;
            continue;
        }
        if (b == 0x1b) {
            esc_state_ = 1;
            continue;
        }
        if (b == 0x08 || b == 0x7f) {
            if (!rendered_.empty()) rendered_.pop_back();
            continue;
        }
        if (b < 0x20 && b != '\t') {
            continue;  // stripped
        }
        rendered_.push_back(ch);
    }
    return lines;
}

std::optional<InterceptedLine> LineEditor::finish() {
    if (raw_.empty() && rendered_.empty()) return std::nullopt;
    InterceptedLine line{std::move(raw_), std::move(rendered_), false};
    raw_.clear();
    rendered_.clear();
    esc_state_ = 0;
    last_was_cr_ = false;
    return line;
}

}  // namespace decoypot
