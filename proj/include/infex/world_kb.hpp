#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace infex {

// Background knowledge consulted when filling descriptive slots: where
// places sit, what job title a role phrase implies, how drugs are
// scheduled. Sectioned file format:
//
//   [geography]
//   name <TAB> subtype [<TAB> containing place]
//   [roles]
//   phrase <TAB> job title
//   [drugs]
//   name <TAB> class
class WorldKb {
  public:
    struct GeoEntry {
        std::string subtype;
        std::optional<std::string> container;
    };

    static WorldKb parse(const std::string& text, const std::string& origin);
    static WorldKb load(const std::string& path);

    const GeoEntry* geography(const std::string& name) const;
    std::optional<std::string> drug_class(const std::string& name) const;

    // Role phrases with their job titles, longest phrase first so greedy
    // matching prefers the most specific wording.
    const std::vector<std::pair<std::string, std::string>>& roles() const {
        return roles_;
    }

  private:
    std::map<std::string, GeoEntry> geo_;
    std::vector<std::pair<std::string, std::string>> roles_;
    std::map<std::string, std::string> drugs_;
};

}  // namespace infex
