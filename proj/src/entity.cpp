#include "infex/entity.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "infex/errors.hpp"

namespace infex {

namespace {

constexpr std::array<std::string_view, 13> kKindNames = {
    "person",    "organisation", "company",  "bank",     "location",
    "date",      "time",         "money",    "telephone", "drug",
    "legislation", "activity",   "transport",
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

const std::array<std::string_view, 7> kWeekdays = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
    "sunday"};

const std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

std::optional<int> month_number(const std::string& word) {
    for (std::size_t m = 0; m < kMonths.size(); ++m) {
        if (word == kMonths[m] || (word.size() == 3 && kMonths[m].substr(0, 3) == word))
            return static_cast<int>(m + 1);
    }
    return std::nullopt;
}

bool is_weekday(const std::string& word) {
    for (auto w : kWeekdays)
        if (word == w || (word.size() == 3 && w.substr(0, 3) == word)) return true;
    return false;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

std::string pad(int value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

void check_ranges(const NormalizedDate& d) {
    if (d.day && (*d.day < 1 || *d.day > 31))
        throw ParseError("day out of range in date");
    if (d.month && (*d.month < 1 || *d.month > 12))
        throw ParseError("month out of range in date");
    if (d.year && *d.year < 0)
        throw ParseError("year out of range in date");
}

// Positional d/m/y parse for canonical renderings like "?/12/1996".
std::optional<NormalizedDate> parse_canonical(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == '/') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) return std::nullopt;
    NormalizedDate d;
    std::array<std::optional<int>*, 3> fields = {&d.day, &d.month, &d.year};
    for (std::size_t i = 0; i < 3; ++i) {
        if (parts[i] == "?") continue;
        if (!all_digits(parts[i]) || parts[i].size() > 4) return std::nullopt;
        *fields[i] = std::stoi(parts[i]);
    }
    check_ranges(d);
    return d;
}

}  // namespace

bool is_weekday_name(std::string_view word) { return is_weekday(lower(word)); }

bool is_month_name(std::string_view word) {
    return month_number(lower(word)).has_value();
}

std::string_view kind_name(EntityKind k) {
    return kKindNames[static_cast<std::size_t>(k)];
}

std::optional<EntityKind> kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name) return static_cast<EntityKind>(i);
    return std::nullopt;
}

std::string NormalizedDate::render() const {
    std::string out;
    out += day ? pad(*day, 2) : "?";
    out += '/';
    out += month ? pad(*month, 2) : "?";
    out += '/';
    out += year ? pad(*year, 4) : "?";
    return out;
}

std::string NormalizedMoney::render() const {
    return std::to_string(amount) + " " + currency;
}

NormalizedDate normalize_date(const std::string& surface) {
    if (surface.find('/') != std::string::npos) {
        if (auto d = parse_canonical(surface)) return *d;
        throw ParseError("cannot normalize date: " + surface);
    }

    // Split on whitespace and commas.
    std::vector<std::string> words;
    std::string cur;
    for (char c : surface) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) words.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) words.push_back(cur);
    if (words.empty()) throw ParseError("cannot normalize empty date");

    static const std::array<std::string_view, 4> kRelative = {
        "today", "yesterday", "tomorrow", "now"};
    if (words.size() == 1) {
        std::string w = lower(words[0]);
        for (auto rel : kRelative)
            if (w == rel) return NormalizedDate{};  // relative: all unknown
    }

    NormalizedDate d;
    for (const auto& raw : words) {
        std::string w = lower(raw);
        if (w == "?") continue;
        if (is_weekday(w)) continue;  // weekday names carry no information
        if (auto m = month_number(w)) {
            d.month = *m;
            continue;
        }
        // Ordinal suffixes: 12th, 1st, 2nd, 3rd.
        if (w.size() > 2 && all_digits(w.substr(0, w.size() - 2))) {
            std::string suf = w.substr(w.size() - 2);
            if (suf == "st" || suf == "nd" || suf == "rd" || suf == "th")
                w = w.substr(0, w.size() - 2);
        }
        if (all_digits(w)) {
            if (w.size() == 4) {
                d.year = std::stoi(w);
            } else if (w.size() <= 2) {
                if (!d.day)
                    d.day = std::stoi(w);
                else if (!d.month)
                    d.month = std::stoi(w);
                else
                    throw ParseError("too many numbers in date: " + surface);
            } else {
                throw ParseError("cannot normalize date: " + surface);
            }
            continue;
        }
        throw ParseError("cannot normalize date: " + surface);
    }
    check_ranges(d);
    return d;
}

std::string Mention::display_surface() const {
    auto it = attributes.find("name");
    std::string out = it == attributes.end() ? surface : it->second;
    // Collapse whitespace runs: a name wrapped across a line break is
    // still one name.
    std::string flat;
    bool in_gap = false;
    for (char c : out) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_gap = true;
            continue;
        }
        if (in_gap && !flat.empty()) flat += ' ';
        in_gap = false;
        flat += c;
    }
    return flat;
}

NormalizedMoney normalize_money(const std::string& surface,
                                const std::string& currency_hint) {
    std::string digits;
    for (char c : surface)
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    if (digits.empty())
        throw ParseError("no amount in money expression: " + surface);
    NormalizedMoney m;
    m.amount = std::stoll(digits);
    if (!currency_hint.empty()) {
        m.currency = currency_hint;
    } else if (surface.find('$') != std::string::npos) {
        m.currency = "USD";
    } else if (surface.find("£") != std::string::npos) {
        m.currency = "GBP";
    } else {
        m.currency = "USD";
    }
    return m;
}

}  // namespace infex
