#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace infex {

// Half-open character range [start, end). Offsets count Unicode scalar
// values, not bytes, so spans stay meaningful for non-ASCII text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
    friend auto operator<=>(const Span&, const Span&) = default;

    std::size_t size() const { return end - start; }
    bool contains(const Span& other) const {
        return start <= other.start && other.end <= end;
    }
    bool overlaps(const Span& other) const {
        return start < other.end && other.start < end;
    }
};

// An immutable UTF-8 text under analysis plus its origin tag. Decodes
// once on construction; rejects malformed UTF-8 up front so every later
// stage can slice by scalar offset without checking.
class Document {
public:
    Document() = default;
    Document(std::string text, std::string source_id);

    const std::string& text() const { return text_; }
    const std::string& source_id() const { return source_id_; }

    // Length in Unicode scalar values.
    std::size_t length() const { return cps_.size(); }

    char32_t at(std::size_t cp_index) const;
    std::string slice(Span s) const;

private:
    std::string text_;
    std::string source_id_;
    std::u32string cps_;
    std::vector<std::size_t> cp_byte_;  // byte offset per codepoint + end sentinel
};

// Text covered by a span. Throws std::invalid_argument for empty spans
// and std::out_of_range when the span leaves the document.
std::string span_text(const Document& doc, Span s);

}  // namespace infex
