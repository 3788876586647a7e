#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infex/entity.hpp"
#include "infex/tokenize.hpp"

namespace infex {

// Token patterns are sequences of atoms:
//   "literal"   exact token surface
//   <class>     an already-known entity of that class (resolved via a prober)
//   {orth}      an orthographic test on a single token
// Any atom may take a trailing '+' meaning one-or-more.
enum class AtomType { literal, entity_class, orth };

enum class OrthClass {
    capitalized,
    allcaps,
    digits,
    word,
    number,
    punct,
    symbol,
    weekday,
    monthname,
    year,
    initial,
};

struct RuleAtom {
    AtomType type = AtomType::literal;
    std::string literal;
    EntityKind entity_kind = EntityKind::person;
    OrthClass orth = OrthClass::word;
    bool repeated = false;
};

std::vector<RuleAtom> parse_pattern(const std::string& pattern,
                                    const std::string& origin, int line);

bool orth_matches(OrthClass orth, const Token& token);

struct NeRule {
    std::string name;
    EntityKind kind = EntityKind::person;
    std::vector<RuleAtom> atoms;
    std::map<std::string, std::string> attributes;
};

class NeRuleSet {
  public:
    // id <TAB> pattern <TAB> class [<TAB> key=value,...]
    static NeRuleSet parse(const std::string& text, const std::string& origin);
    static NeRuleSet load(const std::string& path);

    const std::vector<NeRule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

  private:
    std::vector<NeRule> rules_;
};

// Answers <class> probes: token counts (descending, deduplicated) that an
// entity of `kind` starting at `token_index` could cover. Empty = no entity.
using ClassProber =
    std::function<std::vector<std::size_t>(std::size_t token_index, EntityKind kind)>;

// Longest number of tokens the atom sequence can cover starting at
// `token_index`, or nullopt when it cannot match there. Repetition
// backtracks, so a shorter inner choice is taken when that lets the whole
// pattern succeed or reach further.
std::optional<std::size_t> match_atoms(const std::vector<RuleAtom>& atoms,
                                       const std::vector<Token>& tokens,
                                       std::size_t token_index,
                                       const ClassProber& prober);

}  // namespace infex
