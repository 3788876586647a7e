#include "infex/recognizer.hpp"

#include <algorithm>

#include "infex/errors.hpp"

namespace infex {

ClassProber gazetteer_prober(const Gazetteer& gazetteer,
                             const std::vector<Token>& tokens) {
    return [&gazetteer, &tokens](std::size_t ti, EntityKind kind) {
        std::vector<std::size_t> lengths;
        for (const auto& m : gazetteer.matches_at(tokens, ti)) {
            if (m.entry->kind != kind) continue;
            if (std::find(lengths.begin(), lengths.end(), m.token_count) ==
                lengths.end())
                lengths.push_back(m.token_count);
        }
        return lengths;  // already longest-first
    };
}

namespace {

struct Candidate {
    std::size_t token_count = 0;
    std::size_t char_len = 0;
    bool from_gazetteer = false;
    std::size_t order = 0;  // position within its own source
    EntityKind kind = EntityKind::person;
    const std::map<std::string, std::string>* attributes = nullptr;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.char_len != b.char_len) return a.char_len > b.char_len;
    if (a.from_gazetteer != b.from_gazetteer) return a.from_gazetteer;
    return a.order < b.order;
}

void attach_normalisation(Mention& mention) {
    if (mention.kind == EntityKind::date) {
        try {
            mention.normalized = normalize_date(mention.surface);
        } catch (const ParseError&) {
            // recognised shape but unparseable content: keep the raw surface
        }
    } else if (mention.kind == EntityKind::money) {
        std::string hint;
        auto it = mention.attributes.find("currency");
        if (it != mention.attributes.end()) hint = it->second;
        try {
            mention.normalized = normalize_money(mention.surface, hint);
        } catch (const ParseError&) {
        }
    }
}

}  // namespace

std::vector<Mention> recognize(const Document& doc,
                               const std::vector<Token>& tokens,
                               const Gazetteer& gazetteer,
                               const NeRuleSet& rules) {
    std::vector<Mention> mentions;
    ClassProber prober = gazetteer_prober(gazetteer, tokens);

    auto span_for = [&](std::size_t first, std::size_t count) {
        return Span{tokens[first].span.start, tokens[first + count - 1].span.end};
    };

    std::size_t i = 0;
    while (i < tokens.size()) {
        std::optional<Candidate> best;
        auto offer = [&](Candidate c) {
            if (!best || better(c, *best)) best = c;
        };

        std::size_t gaz_order = 0;
        for (const auto& m : gazetteer.matches_at(tokens, i)) {
            offer({m.token_count, span_for(i, m.token_count).size(), true,
                   gaz_order++, m.entry->kind, &m.entry->attributes});
        }
        for (std::size_t r = 0; r < rules.rules().size(); ++r) {
            const NeRule& rule = rules.rules()[r];
            auto count = match_atoms(rule.atoms, tokens, i, prober);
            if (!count) continue;
            offer({*count, span_for(i, *count).size(), false, r, rule.kind,
                   &rule.attributes});
        }

        if (!best) {
            ++i;
            continue;
        }

        Mention mention;
        mention.span = span_for(i, best->token_count);
        mention.kind = best->kind;
        mention.surface = doc.slice(mention.span);
        mention.attributes = *best->attributes;
        attach_normalisation(mention);
        mentions.push_back(std::move(mention));
        i += best->token_count;
    }
    return mentions;
}

}  // namespace infex
