#pragma once

#include <set>
#include <string>
#include <vector>

#include "infex/text.hpp"

namespace infex {

enum class TokenKind { word, number, punctuation, symbol };

struct Token {
    Span span;
    TokenKind kind = TokenKind::word;
    std::string surface;

    friend bool operator==(const Token&, const Token&) = default;
};

// Contiguous run of tokens [first_token, end_token).
struct Sentence {
    Span span;
    std::size_t first_token = 0;
    std::size_t end_token = 0;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Words ending in a period that the tokenizer keeps in one piece.
// Single capital letters followed by a period ("J.") are always kept,
// list or no list.
const std::set<std::string>& default_abbreviations();

// Splits a document into tokens. Maximal letter/digit runs become
// word or number tokens, hyphens glue letter-adjacent runs together
// ("Downing-Jones"), every other punctuation character stands alone,
// and whitespace produces nothing.
std::vector<Token> tokenize(const Document& doc);
std::vector<Token> tokenize(const Document& doc,
                            const std::set<std::string>& abbreviations);

// Groups tokens into sentences: a break after ./!/? tokens (attached
// abbreviation periods never split) and at blank lines.
std::vector<Sentence> split_sentences(const Document& doc,
                                      const std::vector<Token>& tokens);

}  // namespace infex
