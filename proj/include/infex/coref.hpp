#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infex/entity.hpp"
#include "infex/text.hpp"
#include "infex/tokenize.hpp"

namespace infex {

// Short-form to full-form first names (Fred -> Frederick).
class NicknameTable {
  public:
    static NicknameTable parse(const std::string& text, const std::string& origin);
    static NicknameTable load(const std::string& path);

    std::optional<std::string> full_form(const std::string& nick) const;
    std::size_t size() const { return map_.size(); }

  private:
    std::map<std::string, std::string> map_;
};

// Pronoun vocabulary with the entity classes each form may stand for.
// A '-' class list marks a pronoun we know but never attach (e.g. "I" in
// reported speech, whose referent is outside the entity model).
class PronounLexicon {
  public:
    // The stock English table (he/him/his, she/her/hers, it/its, they/...,
    // plus unattachable "I"); a pronoun file replaces it wholesale.
    static PronounLexicon builtin();

    static PronounLexicon parse(const std::string& text, const std::string& origin);
    static PronounLexicon load(const std::string& path);

    // Lowercased lookup; nullptr when the word is not a known pronoun.
    const std::vector<EntityKind>* lookup(const std::string& word) const;
    std::size_t size() const { return map_.size(); }

  private:
    std::map<std::string, std::vector<EntityKind>> map_;
};

struct Chain {
    std::vector<std::size_t> mention_indices;  // document order
    std::size_t representative = 0;            // index into the mention list
    EntityKind kind = EntityKind::person;
};

struct PronounLink {
    std::size_t token_index = 0;
    std::size_t chain_index = 0;
};

struct UnresolvedPronoun {
    std::size_t token_index = 0;
    std::string surface;
};

struct CorefResult {
    std::vector<Chain> chains;  // ordered by first mention position
    std::vector<PronounLink> pronoun_links;
    std::vector<UnresolvedPronoun> unresolved;
};

// True when two mentions of the same class may name the same thing:
// identical surfaces, token prefix/suffix after dropping corporate
// suffixes, person surnames one edit apart, or a nickname expansion.
bool surfaces_alias(const Mention& a, const Mention& b,
                    const NicknameTable& nicknames);

// Groups mentions into chains (transitively closed) and attaches pronouns
// to the nearest preceding compatible mention at most `window` sentences
// back. Pronouns that cannot attach are reported, not guessed.
CorefResult resolve_coreference(const Document& doc,
                                const std::vector<Token>& tokens,
                                const std::vector<Sentence>& sentences,
                                const std::vector<Mention>& mentions,
                                const NicknameTable& nicknames,
                                const PronounLexicon& pronouns,
                                std::size_t window);

}  // namespace infex
