#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infex/entity.hpp"
#include "infex/records.hpp"

namespace infex {

// Term table for one target locale. The file starts with a
// "locale: <tag>" header followed by TAB-separated source/target pairs.
// The built-in "en" lexicon maps every term to itself.
class Lexicon {
  public:
    static Lexicon identity();  // locale "en", empty table
    static Lexicon parse(const std::string& text, const std::string& origin);
    static Lexicon load(const std::string& path);

    const std::string& locale() const { return locale_; }
    bool is_identity() const { return locale_ == "en"; }
    std::optional<std::string> lookup(const std::string& term) const;
    std::size_t size() const { return entries_.size(); }

  private:
    std::string locale_ = "en";
    std::map<std::string, std::string> entries_;
};

// Locale-specific rendering conventions, parsed from key=value lines.
// date_pattern is built from runs of d, m and y — the run length gives
// the zero-padded width, a single letter means unpadded — plus literal
// separators. Components the record does not know stay "?".
struct LocaleFormat {
    std::string date_pattern = "dd/mm/yyyy";
    std::string decimal = ".";
    std::string group = ",";

    static LocaleFormat parse(const std::string& text, const std::string& origin);
    static LocaleFormat load(const std::string& path);

    std::string render_date(const NormalizedDate& date) const;
    std::string group_digits(const std::string& digits) const;
};

struct LocalizeResult {
    RecordSet records;
    // Terms that had no lexicon entry, in first-use order. They pass
    // through unchanged in the output.
    std::vector<std::string> untranslated;
};

// Rewrites record names, slot keys, plain string values and alias items
// through the lexicon, re-renders dates per the locale format, and
// regroups currency-coded amounts. Structure (record order, slot count,
// slot order) is preserved; references and run-local labels are never
// touched or reported. The "en" lexicon returns the input unchanged.
LocalizeResult localize_records(const RecordSet& records, const Lexicon& lexicon,
                                const LocaleFormat& format);

}  // namespace infex
