#include "infex/text.hpp"

#include <stdexcept>

namespace infex {

namespace {

// Decodes one UTF-8 sequence starting at i; advances i past it.
char32_t decode_utf8(const std::string& s, std::size_t& i) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = (b0 & 0x1Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        i += 2;
        if (cp < 0x80) throw std::invalid_argument("overlong UTF-8 sequence");
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = (b0 & 0x0Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        i += 3;
        if (cp < 0x800) throw std::invalid_argument("overlong UTF-8 sequence");
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = (b0 & 0x07u) << 18 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        i += 4;
        if (cp < 0x10000 || cp > 0x10FFFF)
            throw std::invalid_argument("invalid UTF-8 sequence");
        return cp;
    }
    throw std::invalid_argument("malformed UTF-8 at byte " + std::to_string(i));
}

}  // namespace

Document::Document(std::string text, std::string source_id)
    : text_(std::move(text)), source_id_(std::move(source_id)) {
    std::size_t i = 0;
    while (i < text_.size()) {
        cp_byte_.push_back(i);
        cps_.push_back(decode_utf8(text_, i));
    }
    cp_byte_.push_back(text_.size());
}

char32_t Document::at(std::size_t cp_index) const {
    if (cp_index >= cps_.size())
        throw std::out_of_range("codepoint index out of range");
    return cps_[cp_index];
}

std::string Document::slice(Span s) const {
    if (s.start >= s.end)
        throw std::invalid_argument("empty span");
    if (s.end > length())
        throw std::out_of_range("span exceeds document length");
    return text_.substr(cp_byte_[s.start], cp_byte_[s.end] - cp_byte_[s.start]);
}

std::string span_text(const Document& doc, Span s) { return doc.slice(s); }

}  // namespace infex
