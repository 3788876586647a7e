#include "infex/templates.hpp"

#include <algorithm>

#include "resource_util.hpp"

namespace infex {

namespace {

bool is_org_like(EntityKind kind) {
    return kind == EntityKind::organisation || kind == EntityKind::company ||
           kind == EntityKind::bank;
}

const std::vector<std::string> kCorporateHeads = {"company", "firm", "concern",
                                                  "agency", "business"};
const std::vector<std::string> kArticles = {"a", "an", "the"};
const std::vector<std::string> kDwellingWords = {"apartment", "home", "house",
                                                 "flat"};

bool is_one_of(const std::string& s, const std::vector<std::string>& set) {
    return std::find(set.begin(), set.end(), s) != set.end();
}

// Case-insensitive match for sentence-initial triggers.
bool word_equals_ci(const std::string& a, const std::string& b) {
    return detail::ascii_lower(a) == detail::ascii_lower(b);
}

struct Workspace {
    const Document& doc;
    const std::vector<Token>& tokens;
    const std::vector<Sentence>& sentences;
    const std::vector<Mention>& mentions;
    const CorefResult& coref;
    const WorldKb& kb;

    std::vector<std::size_t> mention_chain;        // mention -> chain
    std::vector<std::size_t> mention_first_token;  // mention -> token index
    std::vector<std::size_t> mention_end_token;
    std::map<std::size_t, std::size_t> mention_starting_at;  // token -> mention

    std::size_t sentence_of(std::size_t char_pos) const {
        for (std::size_t s = 0; s < sentences.size(); ++s)
            if (char_pos >= sentences[s].span.start &&
                char_pos < sentences[s].span.end)
                return s;
        return sentences.empty() ? 0 : sentences.size() - 1;
    }

    void index() {
        mention_chain.assign(mentions.size(), 0);
        for (std::size_t c = 0; c < coref.chains.size(); ++c)
            for (std::size_t mi : coref.chains[c].mention_indices)
                mention_chain[mi] = c;

        mention_first_token.assign(mentions.size(), 0);
        mention_end_token.assign(mentions.size(), 0);
        for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
            const Mention& m = mentions[mi];
            for (std::size_t t = 0; t < tokens.size(); ++t) {
                if (tokens[t].span.start == m.span.start)
                    mention_first_token[mi] = t;
                if (tokens[t].span.end == m.span.end) {
                    mention_end_token[mi] = t + 1;
                    break;
                }
            }
            mention_starting_at[mention_first_token[mi]] = mi;
        }
    }

    // Mention starting exactly at this token, if any.
    std::optional<std::size_t> mention_at(std::size_t token_index) const {
        auto it = mention_starting_at.find(token_index);
        if (it == mention_starting_at.end()) return std::nullopt;
        return it->second;
    }
};

// Sets a slot unless the record already carries that key.
void set_slot(Record& record, const std::string& key, SlotValue value) {
    if (!record.find(key)) record.slots.emplace_back(key, std::move(value));
}

// person mention [","] role-phrase org-mention  =>  profession + employer
void fill_employment(Workspace& ws, std::vector<Record>& records) {
    for (std::size_t mi = 0; mi < ws.mentions.size(); ++mi) {
        if (ws.mentions[mi].kind != EntityKind::person) continue;
        std::size_t t = ws.mention_end_token[mi];
        if (t < ws.tokens.size() && ws.tokens[t].surface == ",") ++t;

        for (const auto& [phrase, title] : ws.kb.roles()) {
            auto words = detail::split(phrase, ' ');
            bool ok = t + words.size() <= ws.tokens.size();
            for (std::size_t k = 0; ok && k < words.size(); ++k)
                ok = ws.tokens[t + k].surface == words[k];
            if (!ok) continue;

            auto target = ws.mention_at(t + words.size());
            if (!target || !is_org_like(ws.mentions[*target].kind)) continue;

            Record& person = records[ws.mention_chain[mi]];
            set_slot(person, "profession", title);
            set_slot(person, "employer",
                     EntityRef{static_cast<int>(ws.mention_chain[*target]) + 1});
            break;
        }
    }
}

// resolved person pronoun + location mention + dwelling word => domicile
void fill_domicile(Workspace& ws, std::vector<Record>& records) {
    for (const auto& link : ws.coref.pronoun_links) {
        if (ws.coref.chains[link.chain_index].kind != EntityKind::person)
            continue;
        auto place = ws.mention_at(link.token_index + 1);
        if (!place || ws.mentions[*place].kind != EntityKind::location) continue;
        std::size_t after = ws.mention_end_token[*place];
        if (after >= ws.tokens.size() ||
            !is_one_of(ws.tokens[after].surface, kDwellingWords))
            continue;
        set_slot(records[link.chain_index], "domicile",
                 EntityRef{static_cast<int>(ws.mention_chain[*place]) + 1});
    }
}

// Organisations named "<place> <institution>" are located at that place.
void fill_org_location(Workspace& ws, std::vector<Record>& records) {
    for (std::size_t c = 0; c < ws.coref.chains.size(); ++c) {
        if (!is_org_like(ws.coref.chains[c].kind)) continue;
        Record& org = records[c];
        for (std::size_t lc = 0; lc < ws.coref.chains.size(); ++lc) {
            if (ws.coref.chains[lc].kind != EntityKind::location) continue;
            const std::string& place = records[lc].name;
            if (org.name.size() <= place.size() + 1) continue;
            if (org.name.compare(0, place.size(), place) != 0) continue;
            if (org.name[place.size()] != ' ') continue;
            std::string rest = org.name.substr(place.size() + 1);
            bool lower_word = !rest.empty() &&
                              std::all_of(rest.begin(), rest.end(), [](char ch) {
                                  return ch >= 'a' && ch <= 'z';
                              });
            if (!lower_word) continue;
            set_slot(org, "location", EntityRef{static_cast<int>(lc) + 1});
            break;
        }
    }
}

// "The company, a medium-sized import-export concern ..." => the business
// of the most recent organisation. The head noun closes the appositive.
void fill_business_appositive(Workspace& ws, std::vector<Record>& records) {
    const auto& toks = ws.tokens;
    for (std::size_t t = 0; t + 2 < toks.size(); ++t) {
        if (!word_equals_ci(toks[t].surface, "the")) continue;
        if (!is_one_of(toks[t + 1].surface, kCorporateHeads)) continue;
        if (toks[t + 2].surface != ",") continue;

        // The phrase itself must not sit inside a recognised name.
        if (ws.mention_at(t) || ws.mention_at(t + 1)) continue;

        std::optional<std::string> business;
        for (std::size_t k = t + 3; k < toks.size() && k < t + 3 + 12; ++k) {
            const std::string& s = toks[k].surface;
            if (s == "," || s == ".") break;
            if (is_one_of(s, kCorporateHeads) && k > t + 3) {
                const std::string& before = toks[k - 1].surface;
                if (toks[k - 1].kind == TokenKind::word &&
                    !is_one_of(detail::ascii_lower(before), kArticles))
                    business = before;
                break;
            }
        }
        if (!business) continue;

        // Attach to the organisation mentioned most recently before the phrase.
        for (std::size_t mi = ws.mentions.size(); mi-- > 0;) {
            if (ws.mention_first_token[mi] >= t) continue;
            if (!is_org_like(ws.mentions[mi].kind)) continue;
            set_slot(records[ws.mention_chain[mi]], "business", *business);
            break;
        }
    }
}

// "... transportation company Downing-Jones" => business from the word
// before the corporate head noun.
void fill_business_premodifier(Workspace& ws, std::vector<Record>& records) {
    for (std::size_t mi = 0; mi < ws.mentions.size(); ++mi) {
        if (!is_org_like(ws.mentions[mi].kind)) continue;
        std::size_t ft = ws.mention_first_token[mi];
        if (ft < 2) continue;  // needs two tokens of left context
        if (!is_one_of(ws.tokens[ft - 1].surface, kCorporateHeads)) continue;
        const Token& before = ws.tokens[ft - 2];
        if (before.kind != TokenKind::word ||
            is_one_of(detail::ascii_lower(before.surface), kArticles))
            continue;
        set_slot(records[ws.mention_chain[mi]], "business", before.surface);
    }
}

// A document-initial name set off by a double dash is a wire credit.
void fill_newswire_credit(Workspace& ws, std::vector<Record>& records) {
    if (ws.mentions.empty()) return;
    std::size_t mi = 0;
    if (ws.mention_first_token[mi] != 0) return;
    if (!is_org_like(ws.mentions[mi].kind)) return;
    std::size_t t = ws.mention_end_token[mi];
    if (t + 1 >= ws.tokens.size()) return;
    if (ws.tokens[t].surface != "-" || ws.tokens[t + 1].surface != "-") return;
    set_slot(records[ws.mention_chain[mi]], "business", "news");
}

void fill_drug_class(Workspace& ws, std::vector<Record>& records) {
    for (std::size_t c = 0; c < ws.coref.chains.size(); ++c) {
        if (ws.coref.chains[c].kind != EntityKind::drug) continue;
        if (auto cls = ws.kb.drug_class(records[c].name))
            set_slot(records[c], "class", *cls);
    }
}

// Subtype and containment for known places. A container names an earlier
// record when one matches exactly; otherwise it stays a plain string.
void attach_geography(Workspace& ws, std::vector<Record>& records) {
    for (std::size_t c = 0; c < ws.coref.chains.size(); ++c) {
        if (ws.coref.chains[c].kind != EntityKind::location) continue;
        const WorldKb::GeoEntry* geo = ws.kb.geography(records[c].name);
        if (!geo) continue;
        set_slot(records[c], "subtype", geo->subtype);
        if (!geo->container) continue;

        std::optional<int> target;
        for (std::size_t p = 0; p < c && !target; ++p) {
            const Record& other = records[p];
            if (other.name == *geo->container) {
                target = static_cast<int>(p) + 1;
                break;
            }
            if (const SlotValue* aliases = other.find("aliases")) {
                if (const auto* list = std::get_if<std::vector<std::string>>(aliases))
                    if (is_one_of(*geo->container, *list))
                        target = static_cast<int>(p) + 1;
            }
        }
        if (target)
            set_slot(records[c], "is_in", EntityRef{*target});
        else
            set_slot(records[c], "is_in", *geo->container);
    }
}

}  // namespace

const Record* EntityModel::entity_by_id(int id) const {
    if (id < 1 || static_cast<std::size_t>(id) > entities.size()) return nullptr;
    return &entities[static_cast<std::size_t>(id) - 1];
}

EntityModel build_entities(const Document& doc,
                           const std::vector<Token>& tokens,
                           const std::vector<Sentence>& sentences,
                           const std::vector<Mention>& mentions,
                           const CorefResult& coref,
                           const WorldKb& kb) {
    Workspace ws{doc, tokens, sentences, mentions, coref, kb, {}, {}, {}, {}};
    ws.index();

    EntityModel model;
    model.entities.reserve(coref.chains.size());

    for (std::size_t c = 0; c < coref.chains.size(); ++c) {
        const Chain& chain = coref.chains[c];
        const Mention& rep = mentions[chain.representative];

        Record record;
        record.name = rep.display_surface();
        record.slots.emplace_back("id", EntityRef{static_cast<int>(c) + 1});
        record.slots.emplace_back("type", std::string(kind_name(chain.kind)));

        if (const auto* date = std::get_if<NormalizedDate>(&rep.normalized))
            record.slots.emplace_back("normalisation", *date);
        else if (const auto* money = std::get_if<NormalizedMoney>(&rep.normalized))
            record.slots.emplace_back("normalisation", money->render());

        std::vector<std::string> aliases;
        for (std::size_t mi : chain.mention_indices) {
            const std::string& shown = mentions[mi].display_surface();
            if (shown == record.name) continue;
            if (!is_one_of(shown, aliases)) aliases.push_back(shown);
        }
        if (!aliases.empty()) record.slots.emplace_back("aliases", aliases);

        // Descriptive attributes riding on the matched resource (class,
        // subtype, business, ...) become slots directly. "name" renames the
        // record and "currency" was consumed by normalisation.
        auto adopt = [&record](const Mention& m) {
            for (const auto& [key, value] : m.attributes)
                if (key != "name" && key != "currency")
                    set_slot(record, key, value);
        };
        adopt(rep);
        for (std::size_t mi : chain.mention_indices) adopt(mentions[mi]);

        model.entities.push_back(std::move(record));
    }

    fill_employment(ws, model.entities);
    fill_domicile(ws, model.entities);
    fill_org_location(ws, model.entities);
    fill_business_appositive(ws, model.entities);
    fill_business_premodifier(ws, model.entities);
    fill_newswire_credit(ws, model.entities);
    fill_drug_class(ws, model.entities);
    attach_geography(ws, model.entities);

    for (auto& record : model.entities) sort_entity_slots(record);

    for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
        EntitySite site;
        site.span = mentions[mi].span;
        site.sentence = ws.sentence_of(mentions[mi].span.start);
        site.first_token = ws.mention_first_token[mi];
        site.end_token = ws.mention_end_token[mi];
        site.kind = mentions[mi].kind;
        site.entity_id = static_cast<int>(ws.mention_chain[mi]) + 1;
        model.sites.push_back(site);
    }
    for (std::size_t c = 0; c < coref.chains.size(); ++c)
        model.kind_by_id[static_cast<int>(c) + 1] = coref.chains[c].kind;

    return model;
}

}  // namespace infex
