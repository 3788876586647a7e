#include "infex/coref.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

NicknameTable NicknameTable::parse(const std::string& text,
                                   const std::string& origin) {
    NicknameTable table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split(line, '\t');
        if (fields.size() != 2)
            throw ParseError(origin, line_no, "expected nick<TAB>full form");
        std::string nick = detail::trim(fields[0]);
        std::string full = detail::trim(fields[1]);
        if (nick.empty() || full.empty())
            throw ParseError(origin, line_no, "empty nickname field");
        if (table.map_.count(nick))
            throw ParseError(origin, line_no, "duplicate nickname: " + nick);
        table.map_[nick] = full;
    }
    return table;
}

NicknameTable NicknameTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open nickname file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::optional<std::string> NicknameTable::full_form(const std::string& nick) const {
    auto it = map_.find(nick);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

PronounLexicon PronounLexicon::builtin() {
    PronounLexicon lex;
    const std::vector<EntityKind> person = {EntityKind::person};
    const std::vector<EntityKind> thing = {EntityKind::organisation,
                                           EntityKind::location};
    const std::vector<EntityKind> group = {EntityKind::person,
                                           EntityKind::organisation};
    for (const char* w : {"he", "him", "his", "she", "her", "hers"})
        lex.map_[w] = person;
    for (const char* w : {"it", "its"}) lex.map_[w] = thing;
    for (const char* w : {"they", "them", "their"}) lex.map_[w] = group;
    lex.map_["i"] = {};  // quoted first person: never attached, only reported
    return lex;
}

PronounLexicon PronounLexicon::parse(const std::string& text,
                                     const std::string& origin) {
    PronounLexicon lex;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split(line, '\t');
        if (fields.size() != 2)
            throw ParseError(origin, line_no, "expected pronoun<TAB>classes");
        std::string word = detail::ascii_lower(detail::trim(fields[0]));
        if (word.empty()) throw ParseError(origin, line_no, "empty pronoun");
        if (lex.map_.count(word))
            throw ParseError(origin, line_no, "duplicate pronoun: " + word);
        std::vector<EntityKind> kinds;
        std::string classes = detail::trim(fields[1]);
        if (classes != "-") {
            for (const auto& piece : detail::split(classes, ',')) {
                auto kind = kind_from_name(detail::trim(piece));
                if (!kind)
                    throw ParseError(origin, line_no,
                                     "unknown entity class: " + detail::trim(piece));
                kinds.push_back(*kind);
            }
        }
        lex.map_[word] = std::move(kinds);
    }
    return lex;
}

PronounLexicon PronounLexicon::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open pronoun file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const std::vector<EntityKind>* PronounLexicon::lookup(
    const std::string& word) const {
    auto it = map_.find(detail::ascii_lower(word));
    if (it == map_.end()) return nullptr;
    return &it->second;
}

namespace {

std::vector<std::string> surface_tokens(const std::string& surface) {
    Document doc(surface, "alias-check");
    std::vector<std::string> out;
    for (const auto& tok : tokenize(doc)) out.push_back(tok.surface);
    return out;
}

const std::vector<std::string> kCorporateSuffixes = {"Inc.", "Ltd.", "Corp.",
                                                     "Co."};

std::vector<std::string> strip_corporate_suffix(std::vector<std::string> toks) {
    while (!toks.empty() &&
           std::find(kCorporateSuffixes.begin(), kCorporateSuffixes.end(),
                     toks.back()) != kCorporateSuffixes.end())
        toks.pop_back();
    return toks;
}

bool prefix_or_suffix(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
    const auto& shorter = a.size() <= b.size() ? a : b;
    const auto& longer = a.size() <= b.size() ? b : a;
    if (shorter.empty()) return false;
    bool prefix = std::equal(shorter.begin(), shorter.end(), longer.begin());
    bool suffix = std::equal(shorter.rbegin(), shorter.rend(), longer.rbegin());
    return prefix || suffix;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t next = std::min({row[j] + 1, row[j - 1] + 1,
                                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = row[j];
            row[j] = next;
        }
    }
    return row[b.size()];
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool surfaces_alias(const Mention& a, const Mention& b,
                    const NicknameTable& nicknames) {
    if (a.kind != b.kind) return false;
    if (a.surface == b.surface) return true;

    auto ta = strip_corporate_suffix(surface_tokens(a.surface));
    auto tb = strip_corporate_suffix(surface_tokens(b.surface));
    if (prefix_or_suffix(ta, tb)) return true;

    if (a.kind == EntityKind::person) {
        if (!ta.empty() && !tb.empty() &&
            edit_distance(ta.back(), tb.back()) <= 1)
            return true;
        // Try again with short first names expanded (Fred -> Frederick).
        auto expand = [&](std::vector<std::string>& toks) {
            if (toks.empty()) return;
            if (auto full = nicknames.full_form(toks.front()))
                toks.front() = *full;
        };
        expand(ta);
        expand(tb);
        if (prefix_or_suffix(ta, tb)) return true;
    }
    return false;
}

CorefResult resolve_coreference(const Document& doc,
                                const std::vector<Token>& tokens,
                                const std::vector<Sentence>& sentences,
                                const std::vector<Mention>& mentions,
                                const NicknameTable& nicknames,
                                const PronounLexicon& pronouns,
                                std::size_t window) {
    (void)doc;
    CorefResult result;

    UnionFind uf(mentions.size());
    for (std::size_t i = 0; i < mentions.size(); ++i)
        for (std::size_t j = i + 1; j < mentions.size(); ++j)
            if (surfaces_alias(mentions[i], mentions[j], nicknames))
                uf.unite(i, j);

    // Chains come out ordered by their first mention, mentions in document
    // order within each (mention indices are already positional).
    std::map<std::size_t, std::size_t> root_to_chain;
    for (std::size_t i = 0; i < mentions.size(); ++i) {
        std::size_t root = uf.find(i);
        auto it = root_to_chain.find(root);
        if (it == root_to_chain.end()) {
            root_to_chain[root] = result.chains.size();
            Chain chain;
            chain.kind = mentions[i].kind;
            chain.mention_indices.push_back(i);
            chain.representative = i;
            result.chains.push_back(std::move(chain));
        } else {
            Chain& chain = result.chains[it->second];
            chain.mention_indices.push_back(i);
            if (mentions[i].surface.size() >
                mentions[chain.representative].surface.size())
                chain.representative = i;
        }
    }

    // Pronoun attachment.
    auto sentence_of_char = [&](std::size_t pos) -> std::size_t {
        for (std::size_t s = 0; s < sentences.size(); ++s)
            if (pos >= sentences[s].span.start && pos < sentences[s].span.end)
                return s;
        return sentences.empty() ? 0 : sentences.size() - 1;
    };

    std::vector<std::size_t> mention_chain(mentions.size());
    for (std::size_t c = 0; c < result.chains.size(); ++c)
        for (std::size_t mi : result.chains[c].mention_indices)
            mention_chain[mi] = c;

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (tok.kind != TokenKind::word) continue;
        const auto* kinds = pronouns.lookup(tok.surface);
        if (!kinds) continue;

        bool inside_mention = false;
        for (const auto& m : mentions)
            if (m.span.contains(tok.span)) { inside_mention = true; break; }
        if (inside_mention) continue;

        std::size_t pron_sentence = sentence_of_char(tok.span.start);
        std::optional<std::size_t> chosen;
        if (!kinds->empty()) {
            for (std::size_t mi = mentions.size(); mi-- > 0;) {
                const Mention& m = mentions[mi];
                if (m.span.start >= tok.span.start) continue;
                if (std::find(kinds->begin(), kinds->end(), m.kind) ==
                    kinds->end())
                    continue;
                std::size_t men_sentence = sentence_of_char(m.span.start);
                if (pron_sentence - men_sentence > window) continue;
                chosen = mi;
                break;
            }
        }
        if (chosen)
            result.pronoun_links.push_back({t, mention_chain[*chosen]});
        else
            result.unresolved.push_back({t, tok.surface});
    }
    return result;
}

}  // namespace infex
