#include "infex/world_kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

WorldKb WorldKb::parse(const std::string& text, const std::string& origin) {
    WorldKb kb;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::string section;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_comment_or_blank(line)) continue;

        std::string t = detail::trim(line);
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            if (section != "geography" && section != "roles" && section != "drugs")
                throw ParseError(origin, line_no, "unknown section: " + section);
            continue;
        }
        if (section.empty())
            throw ParseError(origin, line_no, "entry before any [section] header");

        auto fields = detail::split(line, '\t');
        for (auto& f : fields) f = detail::trim(f);

        if (section == "geography") {
            if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() ||
                fields[1].empty())
                throw ParseError(origin, line_no,
                                 "expected name<TAB>subtype[<TAB>container]");
            if (kb.geo_.count(fields[0]))
                throw ParseError(origin, line_no, "duplicate place: " + fields[0]);
            GeoEntry entry;
            entry.subtype = fields[1];
            if (fields.size() == 3 && !fields[2].empty())
                entry.container = fields[2];
            kb.geo_[fields[0]] = std::move(entry);
        } else if (section == "roles") {
            if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
                throw ParseError(origin, line_no, "expected phrase<TAB>title");
            for (const auto& r : kb.roles_)
                if (r.first == fields[0])
                    throw ParseError(origin, line_no,
                                     "duplicate role phrase: " + fields[0]);
            kb.roles_.emplace_back(fields[0], fields[1]);
        } else {  // drugs
            if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
                throw ParseError(origin, line_no, "expected name<TAB>class");
            if (kb.drugs_.count(fields[0]))
                throw ParseError(origin, line_no, "duplicate drug: " + fields[0]);
            kb.drugs_[fields[0]] = fields[1];
        }
    }

    auto words = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ' ') + 1;
    };
    std::stable_sort(kb.roles_.begin(), kb.roles_.end(),
                     [&](const auto& a, const auto& b) {
                         return words(a.first) > words(b.first);
                     });

    // Containment must not loop (A in B in A would make enrichment chase
    // its own tail).
    for (const auto& [name, entry] : kb.geo_) {
        const GeoEntry* step = &entry;
        std::size_t hops = 0;
        while (step->container) {
            if (*step->container == name || ++hops > kb.geo_.size())
                throw ParseError(origin + ": geography containment cycle at " + name);
            auto next = kb.geo_.find(*step->container);
            if (next == kb.geo_.end()) break;
            step = &next->second;
        }
    }
    return kb;
}

WorldKb WorldKb::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open knowledge file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const WorldKb::GeoEntry* WorldKb::geography(const std::string& name) const {
    auto it = geo_.find(name);
    if (it == geo_.end()) return nullptr;
    return &it->second;
}

std::optional<std::string> WorldKb::drug_class(const std::string& name) const {
    auto it = drugs_.find(name);
    if (it == drugs_.end()) return std::nullopt;
    return it->second;
}

}  // namespace infex
