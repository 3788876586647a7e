#pragma once

// Small helpers shared by the resource-file loaders. Internal to src/.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "infex/errors.hpp"

namespace infex::detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string ascii_lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

inline bool is_comment_or_blank(const std::string& line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

inline bool valid_attribute_key(const std::string& key) {
    if (key.empty()) return false;
    if (!(key[0] >= 'a' && key[0] <= 'z')) return false;
    for (char c : key) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

// Parses "key=value,key=value" attribute strings.
inline std::map<std::string, std::string> parse_attributes(
    const std::string& field, const std::string& origin, int line) {
    std::map<std::string, std::string> attrs;
    if (trim(field).empty()) return attrs;
    for (const auto& piece : split(field, ',')) {
        auto eq = piece.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin, line, "expected key=value attribute: " + piece);
        std::string key = trim(piece.substr(0, eq));
        std::string value = trim(piece.substr(eq + 1));
        if (!valid_attribute_key(key))
            throw ParseError(origin, line,
                             "attribute keys must be lowercase identifiers: " + key);
        if (attrs.count(key))
            throw ParseError(origin, line, "duplicate attribute key: " + key);
        attrs[key] = value;
    }
    return attrs;
}

}  // namespace infex::detail
