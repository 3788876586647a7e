#include "infex/gazetteer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

namespace {

std::vector<std::string> surface_to_tokens(const std::string& surface) {
    Document doc(surface, "gazetteer-entry");
    std::vector<std::string> out;
    for (const auto& tok : tokenize(doc)) out.push_back(tok.surface);
    return out;
}

}  // namespace

void Gazetteer::add(GazetteerEntry entry) {
    for (const auto& existing : entries_) {
        if (existing.surface == entry.surface && existing.kind == entry.kind)
            throw ParseError("duplicate gazetteer entry: " + entry.surface + " / " +
                             std::string(kind_name(entry.kind)));
    }
    if (entry.surface_tokens.empty())
        entry.surface_tokens = surface_to_tokens(entry.surface);
    if (entry.surface_tokens.empty())
        throw ParseError("gazetteer entry has no tokens: " + entry.surface);
    entries_.push_back(std::move(entry));
}

Gazetteer Gazetteer::parse(const std::string& text, const std::string& origin) {
    Gazetteer gaz;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_comment_or_blank(line)) continue;

        auto fields = detail::split(line, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError(origin, line_no,
                             "expected 2 or 3 tab-separated fields, got " +
                                 std::to_string(fields.size()));

        GazetteerEntry entry;
        entry.surface = detail::trim(fields[0]);
        if (entry.surface.empty())
            throw ParseError(origin, line_no, "empty surface");

        auto kind = kind_from_name(detail::trim(fields[1]));
        if (!kind)
            throw ParseError(origin, line_no,
                             "unknown entity class: " + detail::trim(fields[1]));
        entry.kind = *kind;

        if (fields.size() == 3) {
            entry.attributes = detail::parse_attributes(fields[2], origin, line_no);
            auto it = entry.attributes.find("match");
            if (it != entry.attributes.end()) {
                if (it->second == "ci")
                    entry.case_sensitive = false;
                else if (it->second != "cs")
                    throw ParseError(origin, line_no,
                                     "match attribute must be ci or cs");
                entry.attributes.erase(it);
            }
        }

        try {
            gaz.add(std::move(entry));
        } catch (const ParseError& e) {
            throw ParseError(origin, line_no, e.what());
        }
    }
    return gaz;
}

Gazetteer Gazetteer::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open gazetteer file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::vector<Gazetteer::Match> Gazetteer::matches_at(
    const std::vector<Token>& tokens, std::size_t token_index) const {
    std::vector<Match> out;
    for (const auto& entry : entries_) {
        const auto& pattern = entry.surface_tokens;
        if (token_index + pattern.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            const std::string& have = tokens[token_index + i].surface;
            if (entry.case_sensitive) {
                if (have != pattern[i]) { ok = false; break; }
            } else {
                if (detail::ascii_lower(have) != detail::ascii_lower(pattern[i])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back({&entry, pattern.size()});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Match& a, const Match& b) {
                         return a.token_count > b.token_count;
                     });
    return out;
}

}  // namespace infex
