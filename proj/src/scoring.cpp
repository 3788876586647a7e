#include "infex/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <set>
#include <variant>

namespace infex {
namespace {

std::string fold(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Every name a record answers to, case-folded: the record name plus any
// alias list items.
std::set<std::string> known_names(const Record& record) {
    std::set<std::string> names;
    names.insert(fold(record.name));
    if (const SlotValue* aliases = record.find("aliases")) {
        if (const auto* list = std::get_if<std::vector<std::string>>(aliases))
            for (const std::string& a : *list) names.insert(fold(a));
        else if (const auto* one = std::get_if<std::string>(aliases))
            names.insert(fold(*one));
    }
    return names;
}

std::string type_of(const Record& record) {
    if (const SlotValue* type = record.find("type"))
        if (const auto* s = std::get_if<std::string>(type)) return *s;
    return {};
}

bool names_overlap(const std::set<std::string>& a, const std::set<std::string>& b) {
    for (const std::string& name : a)
        if (b.count(name)) return true;
    return false;
}

bool is_ref_like(const SlotValue& value) {
    return std::holds_alternative<EntityRef>(value) ||
           std::holds_alternative<std::vector<EntityRef>>(value);
}

// Reference slots compare as id sets. System-side ids are first mapped to
// their aligned gold ids; an id with no aligned partner keeps its literal
// value so that runs sharing a numbering still get credit.
std::set<int> ref_ids(const SlotValue& value, const std::map<int, int>* id_map) {
    std::set<int> ids;
    auto push = [&](EntityRef ref) {
        int id = ref.id;
        if (id_map) {
            auto it = id_map->find(id);
            if (it != id_map->end()) id = it->second;
        }
        ids.insert(id);
    };
    if (const auto* one = std::get_if<EntityRef>(&value))
        push(*one);
    else
        for (EntityRef ref : std::get<std::vector<EntityRef>>(value)) push(ref);
    return ids;
}

bool values_equal(const SlotValue& system, const SlotValue& gold,
                  const std::map<int, int>& id_map) {
    if (is_ref_like(system) && is_ref_like(gold))
        return ref_ids(system, &id_map) == ref_ids(gold, nullptr);
    if (system.index() != gold.index()) return false;
    if (const auto* s = std::get_if<std::string>(&system))
        return *s == std::get<std::string>(gold);
    if (const auto* d = std::get_if<NormalizedDate>(&system))
        return *d == std::get<NormalizedDate>(gold);
    if (const auto* list = std::get_if<std::vector<std::string>>(&system)) {
        std::set<std::string> a(list->begin(), list->end());
        const auto& gold_list = std::get<std::vector<std::string>>(gold);
        std::set<std::string> b(gold_list.begin(), gold_list.end());
        return a == b;
    }
    return false;
}

std::size_t countable_fills(const Record& record) {
    std::size_t n = 0;
    for (const auto& [key, value] : record.slots)
        if (key != "id") ++n;
    return n;
}

MatchedPair tally_pair(std::size_t system_index, std::size_t gold_index,
                       const Record& system, const Record& gold,
                       const std::map<int, int>& id_map) {
    MatchedPair pair;
    pair.system_index = system_index;
    pair.gold_index = gold_index;
    for (const auto& [key, gold_value] : gold.slots) {
        if (key == "id") continue;
        const SlotValue* system_value = system.find(key);
        if (!system_value)
            ++pair.missing;
        else if (values_equal(*system_value, gold_value, id_map))
            ++pair.correct;
        else
            ++pair.incorrect;
    }
    for (const auto& [key, value] : system.slots) {
        if (key == "id") continue;
        if (!gold.find(key)) ++pair.spurious;
    }
    return pair;
}

std::optional<int> numeric_id(const Record& record) {
    const SlotValue* id = record.find("id");
    if (!id) return std::nullopt;
    if (const auto* ref = std::get_if<EntityRef>(id)) return ref->id;
    return std::nullopt;
}

std::string format_row(const std::string& task, const TaskScore& score) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s\t%.4f\t%.4f\t%.4f", task.c_str(),
                  score.precision(), score.recall(), score.combined());
    return buf;
}

}  // namespace

Alignment align_records(const RecordSet& system, const RecordSet& gold) {
    Alignment alignment;

    // Entities first: their pairing defines the id map that reference
    // slots (entity and event alike) are compared through.
    std::vector<bool> system_taken(system.entities.size(), false);
    std::vector<std::set<std::string>> system_names;
    system_names.reserve(system.entities.size());
    for (const Record& r : system.entities) system_names.push_back(known_names(r));

    for (std::size_t g = 0; g < gold.entities.size(); ++g) {
        const Record& gold_record = gold.entities[g];
        const std::set<std::string> gold_names = known_names(gold_record);
        const std::string gold_type = type_of(gold_record);
        bool paired = false;
        for (std::size_t s = 0; s < system.entities.size(); ++s) {
            if (system_taken[s]) continue;
            if (type_of(system.entities[s]) != gold_type) continue;
            if (!names_overlap(system_names[s], gold_names)) continue;
            system_taken[s] = true;
            alignment.entity_pairs.push_back({s, g, 0, 0, 0, 0});
            auto sys_id = numeric_id(system.entities[s]);
            auto gold_id = numeric_id(gold_record);
            if (sys_id && gold_id) alignment.entity_id_map[*sys_id] = *gold_id;
            paired = true;
            break;
        }
        if (!paired) alignment.unmatched_gold_entities.push_back(g);
    }
    for (std::size_t s = 0; s < system.entities.size(); ++s)
        if (!system_taken[s]) alignment.unmatched_system_entities.push_back(s);

    for (MatchedPair& pair : alignment.entity_pairs)
        pair = tally_pair(pair.system_index, pair.gold_index,
                          system.entities[pair.system_index],
                          gold.entities[pair.gold_index], alignment.entity_id_map);

    // Events pair on equal record name; among candidates the one agreeing
    // on the most slots wins, earliest system record on ties.
    std::vector<bool> event_taken(system.events.size(), false);
    for (std::size_t g = 0; g < gold.events.size(); ++g) {
        const Record& gold_record = gold.events[g];
        std::optional<std::size_t> best;
        std::size_t best_agreement = 0;
        for (std::size_t s = 0; s < system.events.size(); ++s) {
            if (event_taken[s]) continue;
            if (system.events[s].name != gold_record.name) continue;
            MatchedPair probe = tally_pair(s, g, system.events[s], gold_record,
                                           alignment.entity_id_map);
            if (!best || probe.correct > best_agreement) {
                best = s;
                best_agreement = probe.correct;
            }
        }
        if (best) {
            event_taken[*best] = true;
            alignment.event_pairs.push_back(tally_pair(
                *best, g, system.events[*best], gold_record, alignment.entity_id_map));
        } else {
            alignment.unmatched_gold_events.push_back(g);
        }
    }
    for (std::size_t s = 0; s < system.events.size(); ++s)
        if (!event_taken[s]) alignment.unmatched_system_events.push_back(s);

    return alignment;
}

double TaskScore::precision() const {
    if (system_fills == 0) return 0.0;
    return static_cast<double>(correct) / static_cast<double>(system_fills);
}

double TaskScore::recall() const {
    if (gold_fills == 0) return 0.0;
    return static_cast<double>(correct) / static_cast<double>(gold_fills);
}

double TaskScore::combined() const { return combined_measure(precision(), recall()); }

double combined_measure(double precision, double recall) {
    const double sum = precision + recall;
    if (sum == 0.0) return 0.0;
    return 2.0 * precision * recall / sum;
}

ScoreReport score_alignment(const Alignment& alignment, const RecordSet& system,
                            const RecordSet& gold) {
    ScoreReport report;
    for (const MatchedPair& pair : alignment.entity_pairs)
        report.entity.correct += pair.correct;
    for (const MatchedPair& pair : alignment.event_pairs)
        report.event.correct += pair.correct;
    for (const Record& r : system.entities) report.entity.system_fills += countable_fills(r);
    for (const Record& r : gold.entities) report.entity.gold_fills += countable_fills(r);
    for (const Record& r : system.events) report.event.system_fills += countable_fills(r);
    for (const Record& r : gold.events) report.event.gold_fills += countable_fills(r);
    report.overall.correct = report.entity.correct + report.event.correct;
    report.overall.system_fills = report.entity.system_fills + report.event.system_fills;
    report.overall.gold_fills = report.entity.gold_fills + report.event.gold_fills;
    return report;
}

ScoreReport score_records(const RecordSet& system, const RecordSet& gold) {
    return score_alignment(align_records(system, gold), system, gold);
}

std::string ScoreReport::render() const {
    std::string out;
    out += format_row("entity", entity);
    out += '\n';
    out += format_row("event", event);
    out += '\n';
    out += format_row("overall", overall);
    out += '\n';
    return out;
}

}  // namespace infex
