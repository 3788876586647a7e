#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infex/entity.hpp"

namespace infex {

// Cross-reference to an entity record within the same document's output.
struct EntityRef {
    int id = 0;

    friend bool operator==(const EntityRef&, const EntityRef&) = default;
    friend auto operator<=>(const EntityRef&, const EntityRef&) = default;
};

// What a record slot can hold. Reference lists render comma-separated,
// string lists (aliases) semicolon-separated, so the two survive a
// round trip through text unambiguously.
using SlotValue = std::variant<std::string, NormalizedDate, EntityRef,
                               std::vector<EntityRef>, std::vector<std::string>>;

std::string render_slot_value(const SlotValue& value);

// Inverse of render_slot_value, steered by the slot key: "aliases" always
// reads as a string list; ENTITY-n shapes read as references; a d/m/y
// shape with in-range parts reads as a date; anything else stays text.
SlotValue parse_slot_value(const std::string& key, const std::string& text);

struct Record {
    std::string name;
    std::vector<std::pair<std::string, SlotValue>> slots;  // emission order
    bool is_event = false;

    const SlotValue* find(const std::string& key) const;
    std::optional<int> record_id() const;  // numeric part of the id slot

    friend bool operator==(const Record&, const Record&) = default;
};

struct RecordSet {
    std::vector<Record> entities;
    std::vector<Record> events;

    friend bool operator==(const RecordSet&, const RecordSet&) = default;
};

// Plain-text listing: name line, one four-space-indented "key: value" line
// per slot, one blank line between records, entities before events.
std::string emit_records(const RecordSet& set);

RecordSet parse_records(const std::string& text, const std::string& origin);
RecordSet load_records(const std::string& path);

// Orders descriptive entity slots the way the listings conventionally
// read (id and type first, cross-references last); keys outside the
// conventional set follow alphabetically.
void sort_entity_slots(Record& record);

}  // namespace infex
