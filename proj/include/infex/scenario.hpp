#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infex/ne_rules.hpp"
#include "infex/records.hpp"
#include "infex/templates.hpp"
#include "infex/text.hpp"
#include "infex/tokenize.hpp"

namespace infex {

// How far role searches may range: across the whole document (with
// unfilled roles reported as "unknown") or only within the sentence that
// carries the trigger (instantiations with gaps are discarded).
enum class ScopeMode { same_document, same_sentence };

enum class RoleScope { same_sentence, same_document, nearest_before, nearest_after };

// One role-filling directive. A rule may repeat a role name over several
// lines; their results are combined in line order.
struct RoleLine {
    std::string role;
    bool is_const = false;
    std::string const_value;
    EntityKind kind = EntityKind::person;
    RoleScope scope = RoleScope::same_sentence;
    std::optional<std::string> after_anchor;  // word that must precede the fill
    std::optional<std::string> expand_slot;   // pull this slot of each fill in too
};

struct StatusLine {
    std::vector<RuleAtom> pattern;
    std::string value;
};

struct ScenarioRule {
    std::string name;
    std::vector<std::vector<RuleAtom>> triggers;
    std::vector<RoleLine> roles;
    std::vector<StatusLine> statuses;
};

// Block file format (a blank line ends the block):
//
//   event <name>
//   trigger: <pattern>
//   role <name>: <class> [scope=<scope>] [after="word"] [expand=<slot>]
//   role <name>: const <value>
//   status: <pattern> => <value>
class ScenarioRuleSet {
  public:
    static ScenarioRuleSet parse(const std::string& text, const std::string& origin);
    static ScenarioRuleSet load(const std::string& path);

    const std::vector<ScenarioRule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

  private:
    std::vector<ScenarioRule> rules_;
};

// Finds trigger matches, fills roles from the entity sites, folds
// compatible instantiations of the same rule together, and returns event
// records numbered in trigger order.
std::vector<Record> extract_events(const Document& doc,
                                   const std::vector<Token>& tokens,
                                   const std::vector<Sentence>& sentences,
                                   const EntityModel& model,
                                   const ScenarioRuleSet& rules,
                                   ScopeMode mode);

}  // namespace infex
