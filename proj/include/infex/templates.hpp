#pragma once

#include <map>
#include <vector>

#include "infex/coref.hpp"
#include "infex/records.hpp"
#include "infex/text.hpp"
#include "infex/tokenize.hpp"
#include "infex/world_kb.hpp"

namespace infex {

// Where one mention of a known entity sits in the document. Kept alongside
// the records so later stages can search the text by entity, but not part
// of the records themselves.
struct EntitySite {
    Span span;
    std::size_t sentence = 0;
    std::size_t first_token = 0;
    std::size_t end_token = 0;  // one past the last token
    EntityKind kind = EntityKind::person;
    int entity_id = 0;
};

struct EntityModel {
    std::vector<Record> entities;  // ENTITY-1..N, chain order
    std::vector<EntitySite> sites;  // document order
    std::map<int, EntityKind> kind_by_id;

    const Record* entity_by_id(int id) const;
};

// Turns coreference chains into entity records: one record per chain,
// named after its longest mention, carrying aliases, normalisations and
// the descriptive slots that local context and background knowledge
// support (employer, domicile, business, geography, drug class).
EntityModel build_entities(const Document& doc,
                           const std::vector<Token>& tokens,
                           const std::vector<Sentence>& sentences,
                           const std::vector<Mention>& mentions,
                           const CorefResult& coref,
                           const WorldKb& kb);

}  // namespace infex
