#include "infex/ne_rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

namespace {

const std::map<std::string, OrthClass> kOrthNames = {
    {"capitalized", OrthClass::capitalized},
    {"allcaps", OrthClass::allcaps},
    {"digits", OrthClass::digits},
    {"word", OrthClass::word},
    {"number", OrthClass::number},
    {"punct", OrthClass::punct},
    {"symbol", OrthClass::symbol},
    {"weekday", OrthClass::weekday},
    {"monthname", OrthClass::monthname},
    {"year", OrthClass::year},
    {"initial", OrthClass::initial},
};

bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_lower_ch(char c) { return c >= 'a' && c <= 'z'; }

bool all_ascii_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

}  // namespace

bool orth_matches(OrthClass orth, const Token& token) {
    const std::string& s = token.surface;
    switch (orth) {
        case OrthClass::capitalized:
            return token.kind == TokenKind::word && !s.empty() && ascii_upper(s[0]);
        case OrthClass::allcaps: {
            if (token.kind != TokenKind::word) return false;
            bool any_upper = false;
            for (char c : s) {
                if (ascii_lower_ch(c)) return false;
                if (ascii_upper(c)) any_upper = true;
            }
            return any_upper;
        }
        case OrthClass::digits:
            return all_ascii_digits(s);
        case OrthClass::word:
            return token.kind == TokenKind::word;
        case OrthClass::number:
            return token.kind == TokenKind::number;
        case OrthClass::punct:
            return token.kind == TokenKind::punctuation;
        case OrthClass::symbol:
            return token.kind == TokenKind::symbol;
        case OrthClass::weekday:
            return token.kind == TokenKind::word && is_weekday_name(s);
        case OrthClass::monthname:
            return token.kind == TokenKind::word && is_month_name(s);
        case OrthClass::year:
            return s.size() == 4 && all_ascii_digits(s);
        case OrthClass::initial:
            return token.kind == TokenKind::word && s.size() == 2 &&
                   ascii_upper(s[0]) && s[1] == '.';
    }
    return false;
}

std::vector<RuleAtom> parse_pattern(const std::string& pattern,
                                    const std::string& origin, int line) {
    std::vector<RuleAtom> atoms;
    std::istringstream in(pattern);
    std::string piece;
    while (in >> piece) {
        RuleAtom atom;
        if (piece.size() > 1 && piece.back() == '+') {
            atom.repeated = true;
            piece.pop_back();
        }
        if (piece.size() >= 2 && piece.front() == '"' && piece.back() == '"') {
            atom.type = AtomType::literal;
            atom.literal = piece.substr(1, piece.size() - 2);
            if (atom.literal.empty())
                throw ParseError(origin, line, "empty literal in pattern");
        } else if (piece.size() >= 3 && piece.front() == '<' && piece.back() == '>') {
            std::string name = piece.substr(1, piece.size() - 2);
            auto kind = kind_from_name(name);
            if (!kind)
                throw ParseError(origin, line,
                                 "unknown entity class in pattern: " + name);
            atom.type = AtomType::entity_class;
            atom.entity_kind = *kind;
        } else if (piece.size() >= 3 && piece.front() == '{' && piece.back() == '}') {
            std::string name = piece.substr(1, piece.size() - 2);
            auto it = kOrthNames.find(name);
            if (it == kOrthNames.end())
                throw ParseError(origin, line,
                                 "unknown orthographic class in pattern: " + name);
            atom.type = AtomType::orth;
            atom.orth = it->second;
        } else {
            throw ParseError(origin, line, "cannot parse pattern atom: " + piece);
        }
        atoms.push_back(std::move(atom));
    }
    if (atoms.empty()) throw ParseError(origin, line, "empty pattern");
    return atoms;
}

NeRuleSet NeRuleSet::parse(const std::string& text, const std::string& origin) {
    NeRuleSet set;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_comment_or_blank(line)) continue;

        auto fields = detail::split(line, '\t');
        if (fields.size() < 3 || fields.size() > 4)
            throw ParseError(origin, line_no,
                             "expected 3 or 4 tab-separated fields, got " +
                                 std::to_string(fields.size()));

        NeRule rule;
        rule.name = detail::trim(fields[0]);
        if (rule.name.empty()) throw ParseError(origin, line_no, "empty rule name");
        for (const auto& existing : set.rules_)
            if (existing.name == rule.name)
                throw ParseError(origin, line_no, "duplicate rule name: " + rule.name);

        rule.atoms = parse_pattern(fields[1], origin, line_no);
        auto kind = kind_from_name(detail::trim(fields[2]));
        if (!kind)
            throw ParseError(origin, line_no,
                             "unknown entity class: " + detail::trim(fields[2]));
        rule.kind = *kind;
        if (fields.size() == 4)
            rule.attributes = detail::parse_attributes(fields[3], origin, line_no);

        set.rules_.push_back(std::move(rule));
    }
    return set;
}

NeRuleSet NeRuleSet::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rule file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

namespace {

// Memoised maximal-match search. States are (atom index, token index);
// value is the furthest token index the tail of the pattern can reach, or
// nullopt when it cannot match at all from that state.
struct Matcher {
    const std::vector<RuleAtom>& atoms;
    const std::vector<Token>& tokens;
    const ClassProber& prober;
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> memo;

    // Token counts one occurrence of `atom` may consume at `ti`.
    std::vector<std::size_t> occurrence_lengths(const RuleAtom& atom,
                                                std::size_t ti) {
        if (ti >= tokens.size()) return {};
        switch (atom.type) {
            case AtomType::literal:
                if (tokens[ti].surface == atom.literal) return {1};
                return {};
            case AtomType::orth:
                if (orth_matches(atom.orth, tokens[ti])) return {1};
                return {};
            case AtomType::entity_class:
                return prober(ti, atom.entity_kind);
        }
        return {};
    }

    std::optional<std::size_t> best_end(std::size_t ai, std::size_t ti) {
        if (ai == atoms.size()) return ti;
        auto key = std::make_pair(ai, ti);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo[key] = std::nullopt;  // guards against cycles on zero-length probes

        const RuleAtom& atom = atoms[ai];
        std::optional<std::size_t> best;
        for (std::size_t len : occurrence_lengths(atom, ti)) {
            if (len == 0) continue;
            // After one occurrence: move on, and (when repeated) also stay.
            auto consider = [&](std::optional<std::size_t> end) {
                if (end && (!best || *end > *best)) best = end;
            };
            consider(best_end(ai + 1, ti + len));
            if (atom.repeated) consider(best_end(ai, ti + len));
        }
        memo[key] = best;
        return best;
    }
};

}  // namespace

std::optional<std::size_t> match_atoms(const std::vector<RuleAtom>& atoms,
                                       const std::vector<Token>& tokens,
                                       std::size_t token_index,
                                       const ClassProber& prober) {
    Matcher m{atoms, tokens, prober, {}};
    auto end = m.best_end(0, token_index);
    if (!end) return std::nullopt;
    return *end - token_index;
}

}  // namespace infex
