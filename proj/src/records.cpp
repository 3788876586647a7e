#include "infex/records.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

std::optional<int> ref_number(const std::string& text, const std::string& prefix) {
    if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::string digits = text.substr(prefix.size());
    if (!all_digits(digits) || digits.size() > 9) return std::nullopt;
    return std::stoi(digits);
}

// "?", or digits within [lo, hi] and at most `width` long.
std::optional<std::optional<int>> date_part(const std::string& s, int lo, int hi,
                                            std::size_t width) {
    if (s == "?") return std::optional<int>{};
    if (!all_digits(s) || s.empty() || s.size() > width) return std::nullopt;
    int v = std::stoi(s);
    if (v < lo || v > hi) return std::nullopt;
    return std::optional<int>{v};
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

}  // namespace

std::string render_slot_value(const SlotValue& value) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const NormalizedDate& d) const { return d.render(); }
        std::string operator()(const EntityRef& r) const {
            return "ENTITY-" + std::to_string(r.id);
        }
        std::string operator()(const std::vector<EntityRef>& refs) const {
            std::string out;
            for (std::size_t i = 0; i < refs.size(); ++i) {
                if (i) out += ", ";
                out += "ENTITY-" + std::to_string(refs[i].id);
            }
            return out;
        }
        std::string operator()(const std::vector<std::string>& items) const {
            std::string out;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i) out += "; ";
                out += items[i];
            }
            return out;
        }
    };
    return std::visit(Visitor{}, value);
}

SlotValue parse_slot_value(const std::string& key, const std::string& text) {
    if (key == "aliases") return split_on(text, "; ");

    if (auto n = ref_number(text, "ENTITY-")) return EntityRef{*n};

    if (text.find(", ") != std::string::npos) {
        auto pieces = split_on(text, ", ");
        std::vector<EntityRef> refs;
        bool all_refs = true;
        for (const auto& piece : pieces) {
            auto n = ref_number(piece, "ENTITY-");
            if (!n) { all_refs = false; break; }
            refs.push_back({*n});
        }
        if (all_refs) return refs;
    }

    auto slashes = split_on(text, "/");
    if (slashes.size() == 3) {
        auto day = date_part(slashes[0], 1, 31, 2);
        auto month = date_part(slashes[1], 1, 12, 2);
        auto year = date_part(slashes[2], 0, 9999, 4);
        if (day && month && year) return NormalizedDate{*day, *month, *year};
    }

    return text;
}

const SlotValue* Record::find(const std::string& key) const {
    for (const auto& [k, v] : slots)
        if (k == key) return &v;
    return nullptr;
}

std::optional<int> Record::record_id() const {
    const SlotValue* id = find("id");
    if (!id) return std::nullopt;
    if (const auto* ref = std::get_if<EntityRef>(id)) return ref->id;
    if (const auto* s = std::get_if<std::string>(id)) {
        if (auto n = ref_number(*s, "EVENT-")) return n;
        if (auto n = ref_number(*s, "ENTITY-")) return n;
    }
    return std::nullopt;
}

std::string emit_records(const RecordSet& set) {
    std::string out;
    auto emit_one = [&out](const Record& r) {
        if (!out.empty()) out += "\n";
        out += r.name;
        out += "\n";
        for (const auto& [key, value] : r.slots) {
            out += "    ";
            out += key;
            out += ": ";
            out += render_slot_value(value);
            out += "\n";
        }
    };
    for (const auto& r : set.entities) emit_one(r);
    for (const auto& r : set.events) emit_one(r);
    return out;
}

RecordSet parse_records(const std::string& text, const std::string& origin) {
    RecordSet set;
    std::optional<Record> current;
    int current_line = 0;
    std::set<int> entity_ids, event_ids;

    auto close = [&]() {
        if (!current) return;
        const SlotValue* id = current->find("id");
        if (!id)
            throw ParseError(origin, current_line,
                             "record \"" + current->name + "\" has no id slot");
        bool is_event = false;
        if (const auto* s = std::get_if<std::string>(id);
            s && ref_number(*s, "EVENT-"))
            is_event = true;
        else if (!std::holds_alternative<EntityRef>(*id))
            throw ParseError(origin, current_line,
                             "record \"" + current->name +
                                 "\" has a malformed id: " + render_slot_value(*id));
        auto& seen = is_event ? event_ids : entity_ids;
        if (!seen.insert(*current->record_id()).second)
            throw ParseError(origin, current_line,
                             "duplicate record id: " + render_slot_value(*id));
        current->is_event = is_event;
        (is_event ? set.events : set.entities).push_back(std::move(*current));
        current.reset();
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        if (detail::trim(line).empty()) {
            close();
            continue;
        }

        if (line[0] != ' ' && line[0] != '\t') {
            close();
            current = Record{};
            current->name = line;
            current_line = line_no;
            continue;
        }

        if (line.compare(0, 4, "    ") != 0 || line.size() <= 4 || line[4] == ' ')
            throw ParseError(origin, line_no,
                             "slot lines must be indented by exactly four spaces");
        if (!current)
            throw ParseError(origin, line_no, "slot line outside any record");

        std::string body = line.substr(4);
        std::size_t colon = body.find(':');
        if (colon == std::string::npos || colon == 0)
            throw ParseError(origin, line_no, "expected \"key: value\"");
        if (colon + 1 >= body.size() || body[colon + 1] != ' ')
            throw ParseError(origin, line_no,
                             "expected a single space after the slot key");
        std::string key = body.substr(0, colon);
        std::string value = body.substr(colon + 2);
        if (current->find(key))
            throw ParseError(origin, line_no, "duplicate slot key: " + key);
        current->slots.emplace_back(key, parse_slot_value(key, value));
    }
    close();
    return set;
}

RecordSet load_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open record file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_records(buf.str(), path);
}

void sort_entity_slots(Record& record) {
    static const std::map<std::string, int> kRank = {
        {"id", 0},       {"type", 1},     {"subtype", 2},  {"normalisation", 3},
        {"aliases", 4},  {"location", 5}, {"domicile", 6}, {"profession", 7},
        {"employer", 8}, {"business", 9}, {"class", 10},   {"is_in", 11},
    };
    auto rank = [](const std::string& key) {
        auto it = kRank.find(key);
        return it == kRank.end() ? static_cast<int>(kRank.size()) : it->second;
    };
    std::stable_sort(record.slots.begin(), record.slots.end(),
                     [&](const auto& a, const auto& b) {
                         int ra = rank(a.first), rb = rank(b.first);
                         if (ra != rb) return ra < rb;
                         if (ra == static_cast<int>(kRank.size()))
                             return a.first < b.first;
                         return false;
                     });
}

}  // namespace infex
