#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "infex/text.hpp"

namespace infex {

// Closed ontology of entity classes. Rule and gazetteer files must use
// these names; anything else is rejected at load time.
enum class EntityKind {
    person,
    organisation,
    company,
    bank,
    location,
    date,
    time,
    money,
    telephone,
    drug,
    legislation,
    activity,
    transport,
};

std::string_view kind_name(EntityKind k);
std::optional<EntityKind> kind_from_name(std::string_view name);

// Date-vocabulary checks used by both normalisation and pattern rules.
// Accept full names and three-letter abbreviations, any letter case.
bool is_weekday_name(std::string_view word);
bool is_month_name(std::string_view word);

// Calendar date with unknown components allowed. Canonical rendering is
// dd/mm/yyyy with "?" standing in for anything unknown.
struct NormalizedDate {
    std::optional<int> day;
    std::optional<int> month;
    std::optional<int> year;

    friend bool operator==(const NormalizedDate&, const NormalizedDate&) = default;

    std::string render() const;
};

struct NormalizedMoney {
    long long amount = 0;
    std::string currency;

    friend bool operator==(const NormalizedMoney&, const NormalizedMoney&) = default;

    std::string render() const;
};

using Normalized = std::variant<std::monostate, NormalizedDate, NormalizedMoney>;

// Turns a date surface into day/month/year. Weekday names are dropped,
// month names map to numbers, missing parts stay unknown, and the
// relative words (today, yesterday, tomorrow) come back all-unknown.
// Throws ParseError when the surface is not a date at all.
NormalizedDate normalize_date(const std::string& surface);

// Amount and currency from a money surface such as "$250". The currency
// hint (from the matching rule) wins over any symbol in the text.
// TODO: amounts with grouped thousands ("1,250") span several tokens and
// are not matched by the shipped rules yet.
NormalizedMoney normalize_money(const std::string& surface,
                                const std::string& currency_hint);

// One classified stretch of text. The surface is always exactly the
// text under the span; attributes come from the gazetteer entry or rule
// that produced the match.
struct Mention {
    Span span;
    EntityKind kind = EntityKind::person;
    std::string surface;
    std::map<std::string, std::string> attributes;
    Normalized normalized;

    friend bool operator==(const Mention&, const Mention&) = default;

    // Surface as it should appear in output records: a "name" attribute
    // on the producing resource overrides the raw text, and soft line
    // breaks inside a span flatten to single spaces.
    std::string display_surface() const;
};

}  // namespace infex
