#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infex/entity.hpp"
#include "infex/tokenize.hpp"

namespace infex {

// One named entry. The surface is split with the standard tokenizer at load
// time so matching can work token-wise against document text.
struct GazetteerEntry {
    std::string surface;
    std::vector<std::string> surface_tokens;
    EntityKind kind = EntityKind::person;
    std::map<std::string, std::string> attributes;
    bool case_sensitive = true;
};

class Gazetteer {
  public:
    // Adds an entry; rejects duplicate (surface, kind) pairs.
    void add(GazetteerEntry entry);

    // Parses the tab-separated listing format:
    //   surface <TAB> class [<TAB> key=value,key=value]
    // '#' lines and blank lines are skipped. A `match=ci` attribute makes the
    // entry case-insensitive and is consumed rather than stored.
    static Gazetteer parse(const std::string& text, const std::string& origin);
    static Gazetteer load(const std::string& path);

    std::size_t size() const { return entries_.size(); }
    const std::vector<GazetteerEntry>& entries() const { return entries_; }

    // All entries whose token sequence matches the document tokens starting
    // at `token_index`, longest (most tokens) first; ties keep load order.
    struct Match {
        const GazetteerEntry* entry;
        std::size_t token_count;
    };
    std::vector<Match> matches_at(const std::vector<Token>& tokens,
                                  std::size_t token_index) const;

  private:
    std::vector<GazetteerEntry> entries_;
};

}  // namespace infex
