#include "infex/localize.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <variant>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

using detail::is_comment_or_blank;
using detail::read_file;
using detail::split;
using detail::trim;

Lexicon Lexicon::identity() { return Lexicon{}; }

Lexicon Lexicon::parse(const std::string& text, const std::string& origin) {
    Lexicon lexicon;
    bool saw_header = false;
    std::size_t line_no = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++line_no;
        if (is_comment_or_blank(raw)) continue;
        const std::string line = trim(raw);
        if (!saw_header) {
            const std::string prefix = "locale:";
            if (line.rfind(prefix, 0) != 0)
                throw ParseError(origin, static_cast<int>(line_no),
                                 "expected \"locale: <tag>\" header");
            lexicon.locale_ = trim(line.substr(prefix.size()));
            if (lexicon.locale_.empty())
                throw ParseError(origin, static_cast<int>(line_no), "empty locale tag");
            saw_header = true;
            continue;
        }
        const std::vector<std::string> fields = split(raw, '\t');
        if (fields.size() != 2)
            throw ParseError(origin, static_cast<int>(line_no),
                             "expected source<TAB>target");
        const std::string source = trim(fields[0]);
        const std::string target = trim(fields[1]);
        if (source.empty() || target.empty())
            throw ParseError(origin, static_cast<int>(line_no), "empty lexicon term");
        if (!lexicon.entries_.emplace(source, target).second)
            throw ParseError(origin, static_cast<int>(line_no),
                             "duplicate lexicon entry for \"" + source + "\"");
    }
    if (!saw_header) throw ParseError(origin + ": missing \"locale:\" header");
    return lexicon;
}

Lexicon Lexicon::load(const std::string& path) { return parse(read_file(path), path); }

std::optional<std::string> Lexicon::lookup(const std::string& term) const {
    if (is_identity()) return term;
    auto it = entries_.find(term);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

namespace {

void validate_date_pattern(const std::string& pattern, const std::string& origin) {
    if (pattern.empty()) throw ParseError(origin + ": empty date_pattern");
    std::set<char> seen;
    std::size_t i = 0;
    while (i < pattern.size()) {
        const char c = pattern[i];
        if (c == 'd' || c == 'm' || c == 'y') {
            if (seen.count(c))
                throw ParseError(origin + ": date_pattern repeats '" +
                                 std::string(1, c) + "'");
            seen.insert(c);
            while (i < pattern.size() && pattern[i] == c) ++i;
        } else {
            ++i;
        }
    }
}

}  // namespace

LocaleFormat LocaleFormat::parse(const std::string& text, const std::string& origin) {
    LocaleFormat format;
    std::size_t line_no = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++line_no;
        if (is_comment_or_blank(raw)) continue;
        const std::string line = trim(raw);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin, static_cast<int>(line_no), "expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "date_pattern")
            format.date_pattern = value;
        else if (key == "decimal")
            format.decimal = value;
        else if (key == "group")
            format.group = value;
        else
            throw ParseError(origin, static_cast<int>(line_no),
                             "unknown format key \"" + key + "\"");
    }
    validate_date_pattern(format.date_pattern, origin);
    return format;
}

LocaleFormat LocaleFormat::load(const std::string& path) {
    return parse(read_file(path), path);
}

std::string LocaleFormat::render_date(const NormalizedDate& date) const {
    std::string out;
    std::size_t i = 0;
    while (i < date_pattern.size()) {
        const char c = date_pattern[i];
        if (c != 'd' && c != 'm' && c != 'y') {
            out += c;
            ++i;
            continue;
        }
        std::size_t width = 0;
        while (i < date_pattern.size() && date_pattern[i] == c) {
            ++width;
            ++i;
        }
        std::optional<int> component;
        if (c == 'd') component = date.day;
        if (c == 'm') component = date.month;
        if (c == 'y') component = date.year;
        if (!component) {
            out += '?';
            continue;
        }
        char buf[16];
        if (width > 1)
            std::snprintf(buf, sizeof buf, "%0*d", static_cast<int>(width), *component);
        else
            std::snprintf(buf, sizeof buf, "%d", *component);
        out += buf;
    }
    return out;
}

std::string LocaleFormat::group_digits(const std::string& digits) const {
    if (group.empty() || digits.size() <= 3) return digits;
    std::string out;
    const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    out.append(digits, 0, lead);
    for (std::size_t i = lead; i < digits.size(); i += 3) {
        out += group;
        out.append(digits, i, 3);
    }
    return out;
}

namespace {

// Run-local labels (ENTITY-n / EVENT-n) are structure, not vocabulary.
bool is_structural_label(const std::string& value) {
    for (const std::string& prefix : {std::string("ENTITY-"), std::string("EVENT-")}) {
        if (value.size() > prefix.size() && value.rfind(prefix, 0) == 0) {
            bool digits = true;
            for (std::size_t i = prefix.size(); i < value.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(value[i]))) digits = false;
            if (digits) return true;
        }
    }
    return false;
}

// "<digits> <CODE>" — a normalised amount with its currency code.
bool is_money_shape(const std::string& value) {
    const std::size_t space = value.find(' ');
    if (space == std::string::npos || space == 0) return false;
    if (value.size() - space - 1 != 3) return false;
    for (std::size_t i = 0; i < space; ++i)
        if (!std::isdigit(static_cast<unsigned char>(value[i]))) return false;
    for (std::size_t i = space + 1; i < value.size(); ++i)
        if (value[i] < 'A' || value[i] > 'Z') return false;
    return true;
}

class Translator {
  public:
    Translator(const Lexicon& lexicon, const LocaleFormat& format,
               LocalizeResult& result)
        : lexicon_(lexicon), format_(format), result_(result) {}

    std::string term(const std::string& text) {
        if (text.empty()) return text;
        if (auto hit = lexicon_.lookup(text)) return *hit;
        if (flagged_.insert(text).second) result_.untranslated.push_back(text);
        return text;
    }

    SlotValue value(const SlotValue& value) {
        if (const auto* s = std::get_if<std::string>(&value)) {
            if (is_structural_label(*s)) return value;
            if (is_money_shape(*s)) {
                const std::size_t space = s->find(' ');
                return format_.group_digits(s->substr(0, space)) + s->substr(space);
            }
            return term(*s);
        }
        if (const auto* date = std::get_if<NormalizedDate>(&value))
            return format_.render_date(*date);
        if (const auto* list = std::get_if<std::vector<std::string>>(&value)) {
            std::vector<std::string> out;
            out.reserve(list->size());
            for (const std::string& item : *list) out.push_back(term(item));
            return out;
        }
        return value;  // references pass through untouched
    }

    Record record(const Record& input) {
        Record out;
        out.is_event = input.is_event;
        out.name = term(input.name);
        out.slots.reserve(input.slots.size());
        for (const auto& [key, slot_value] : input.slots) {
            if (key == "id") {
                out.slots.emplace_back(key, slot_value);
                continue;
            }
            out.slots.emplace_back(term(key), value(slot_value));
        }
        return out;
    }

  private:
    const Lexicon& lexicon_;
    const LocaleFormat& format_;
    LocalizeResult& result_;
    std::set<std::string> flagged_;
};

}  // namespace

LocalizeResult localize_records(const RecordSet& records, const Lexicon& lexicon,
                                const LocaleFormat& format) {
    LocalizeResult result;
    if (lexicon.is_identity()) {
        result.records = records;
        return result;
    }
    Translator translator(lexicon, format, result);
    for (const Record& r : records.entities)
        result.records.entities.push_back(translator.record(r));
    for (const Record& r : records.events)
        result.records.events.push_back(translator.record(r));
    return result;
}

}  // namespace infex
