#include "infex/tokenize.hpp"

#include <string_view>

namespace infex {

namespace {

bool is_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
           c == U'\f' || c == U'\v';
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_letter(char32_t c) {
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
    // Treat everything beyond ASCII as letter material; good enough for
    // the western-European text this pipeline handles.
    return c >= 0x80;
}

bool is_punct(char32_t c) {
    static const std::u32string punct =
        U".,;:!?\"'()[]{}<>-/\\|@#%&*_";
    return punct.find(c) != std::u32string::npos;
}

bool is_upper_ascii(char32_t c) { return c >= U'A' && c <= U'Z'; }

}  // namespace

const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> abbrevs = {
        "Inc.", "Ltd.", "J.", "Mr.", "Dr.", "St.",
    };
    return abbrevs;
}

std::vector<Token> tokenize(const Document& doc) {
    return tokenize(doc, default_abbreviations());
}

std::vector<Token> tokenize(const Document& doc,
                            const std::set<std::string>& abbreviations) {
    std::vector<Token> tokens;
    const std::size_t n = doc.length();
    std::size_t i = 0;
    while (i < n) {
        char32_t c = doc.at(i);
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_letter(c) || is_digit(c)) {
            std::size_t start = i;
            bool any_letter = false;
            while (i < n) {
                char32_t cur = doc.at(i);
                if (is_letter(cur) || is_digit(cur)) {
                    any_letter = any_letter || is_letter(cur);
                    ++i;
                    continue;
                }
                // Internal hyphen joins only with letters on both sides.
                if (cur == U'-' && i + 1 < n && i > start &&
                    is_letter(doc.at(i - 1)) && is_letter(doc.at(i + 1))) {
                    ++i;
                    continue;
                }
                break;
            }
            Span span{start, i};
            std::string surface = doc.slice(span);
            // Attach a trailing abbreviation period ("Inc.", initials).
            if (i < n && doc.at(i) == U'.' && any_letter) {
                bool single_initial =
                    span.size() == 1 && is_upper_ascii(doc.at(start));
                if (single_initial || abbreviations.count(surface + ".")) {
                    ++i;
                    span.end = i;
                    surface = doc.slice(span);
                }
            }
            tokens.push_back(
                {span, any_letter ? TokenKind::word : TokenKind::number,
                 std::move(surface)});
            continue;
        }
        Span span{i, i + 1};
        tokens.push_back({span,
                          is_punct(c) ? TokenKind::punctuation
                                      : TokenKind::symbol,
                          doc.slice(span)});
        ++i;
    }
    return tokens;
}

namespace {

// True when only whitespace with at least two line breaks separates
// the two offsets (a paragraph boundary).
bool blank_line_between(const Document& doc, std::size_t from, std::size_t to) {
    int newlines = 0;
    for (std::size_t i = from; i < to; ++i) {
        char32_t c = doc.at(i);
        if (c == U'\n') ++newlines;
    }
    return newlines >= 2;
}

bool is_terminator(const Token& t) {
    return t.kind == TokenKind::punctuation &&
           (t.surface == "." || t.surface == "!" || t.surface == "?");
}

}  // namespace

std::vector<Sentence> split_sentences(const Document& doc,
                                      const std::vector<Token>& tokens) {
    std::vector<Sentence> sentences;
    std::size_t first = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        bool boundary = is_terminator(tokens[i]);
        if (!boundary && i + 1 < tokens.size())
            boundary = blank_line_between(doc, tokens[i].span.end,
                                          tokens[i + 1].span.start);
        if (boundary || i + 1 == tokens.size()) {
            sentences.push_back({{tokens[first].span.start, tokens[i].span.end},
                                 first,
                                 i + 1});
            first = i + 1;
        }
    }
    return sentences;
}

}  // namespace infex
