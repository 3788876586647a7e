#include "infex/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

namespace {

RoleScope scope_from_name(const std::string& name, const std::string& origin,
                          int line) {
    if (name == "same-sentence") return RoleScope::same_sentence;
    if (name == "same-document") return RoleScope::same_document;
    if (name == "nearest-before") return RoleScope::nearest_before;
    if (name == "nearest-after") return RoleScope::nearest_after;
    throw ParseError(origin, line, "unknown role scope: " + name);
}

RoleLine parse_role_line(const std::string& role, const std::string& rest,
                         const std::string& origin, int line) {
    RoleLine out;
    out.role = role;

    std::istringstream in(rest);
    std::string first;
    in >> first;
    if (first.empty())
        throw ParseError(origin, line, "empty role definition for " + role);

    if (first == "const") {
        out.is_const = true;
        std::string value;
        std::getline(in, value);
        out.const_value = detail::trim(value);
        if (out.const_value.empty())
            throw ParseError(origin, line, "const role needs a value");
        return out;
    }

    auto kind = kind_from_name(first);
    if (!kind)
        throw ParseError(origin, line, "unknown entity class: " + first);
    out.kind = *kind;

    std::string option;
    while (in >> option) {
        auto eq = option.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin, line, "expected option=value, got " + option);
        std::string key = option.substr(0, eq);
        std::string value = option.substr(eq + 1);
        if (key == "scope") {
            out.scope = scope_from_name(value, origin, line);
        } else if (key == "after") {
            if (value.size() < 3 || value.front() != '"' || value.back() != '"')
                throw ParseError(origin, line, "after wants a quoted word");
            out.after_anchor = value.substr(1, value.size() - 2);
        } else if (key == "expand") {
            if (value.empty())
                throw ParseError(origin, line, "expand wants a slot name");
            out.expand_slot = value;
        } else {
            throw ParseError(origin, line, "unknown role option: " + key);
        }
    }
    return out;
}

}  // namespace

ScenarioRuleSet ScenarioRuleSet::parse(const std::string& text,
                                       const std::string& origin) {
    ScenarioRuleSet set;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    ScenarioRule* current = nullptr;  // null between blocks

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::string body = detail::trim(line);
        if (body.empty()) {  // blank line ends the block
            current = nullptr;
            continue;
        }
        if (body[0] == '#') continue;

        if (body.compare(0, 6, "event ") == 0) {
            std::string name = detail::trim(body.substr(6));
            if (name.empty() || name.find(' ') != std::string::npos)
                throw ParseError(origin, line_no, "expected: event <name>");
            for (const auto& r : set.rules_)
                if (r.name == name)
                    throw ParseError(origin, line_no, "duplicate event name: " + name);
            set.rules_.push_back(ScenarioRule{});
            current = &set.rules_.back();
            current->name = name;
            continue;
        }

        if (!current)
            throw ParseError(origin, line_no, "directive outside any event block");

        if (body.compare(0, 8, "trigger:") == 0) {
            std::string rest = detail::trim(body.substr(8));
            if (rest.empty())
                throw ParseError(origin, line_no, "trigger wants a pattern");
            current->triggers.push_back(parse_pattern(rest, origin, line_no));
        } else if (body.compare(0, 7, "status:") == 0) {
            std::string rest = detail::trim(body.substr(7));
            std::size_t arrow = rest.find("=>");
            if (arrow == std::string::npos)
                throw ParseError(origin, line_no, "status wants: <cue> => <value>");
            std::string pattern = detail::trim(rest.substr(0, arrow));
            std::string value = detail::trim(rest.substr(arrow + 2));
            if (pattern.empty() || value.empty())
                throw ParseError(origin, line_no, "status wants: <cue> => <value>");
            current->statuses.push_back(
                {parse_pattern(pattern, origin, line_no), value});
        } else if (body.compare(0, 5, "role ") == 0) {
            std::string rest = detail::trim(body.substr(5));
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos || colon == 0)
                throw ParseError(origin, line_no, "expected: role <name>: ...");
            std::string name = detail::trim(rest.substr(0, colon));
            std::string def = detail::trim(rest.substr(colon + 1));
            RoleLine role = parse_role_line(name, def, origin, line_no);
            for (const auto& existing : current->roles)
                if (existing.role == role.role &&
                    existing.is_const != role.is_const)
                    throw ParseError(origin, line_no,
                                     "role " + role.role +
                                         " mixes const and searched lines");
            current->roles.push_back(std::move(role));
        } else {
            throw ParseError(origin, line_no,
                             "expected trigger:, role, or status: directive");
        }
    }

    for (const auto& rule : set.rules_)
        if (rule.triggers.empty())
            throw ParseError(origin + ": event " + rule.name + " has no trigger");
    return set;
}

ScenarioRuleSet ScenarioRuleSet::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scenario rule file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

namespace {

struct Instantiation {
    std::size_t rule_index = 0;
    std::size_t trigger_token = 0;
    std::vector<std::vector<int>> line_fills;  // parallel to rule.roles
    std::string status;                        // empty = no cue matched
};

struct Extractor {
    const std::vector<Token>& tokens;
    const std::vector<Sentence>& sentences;
    const EntityModel& model;
    ScopeMode mode;

    std::size_t sentence_of_token(std::size_t t) const {
        for (std::size_t s = 0; s < sentences.size(); ++s)
            if (t >= sentences[s].first_token && t < sentences[s].end_token)
                return s;
        return sentences.empty() ? 0 : sentences.size() - 1;
    }

    // <class> atoms in triggers and status cues stand for recognised
    // entities, so the prober answers from the entity sites.
    ClassProber site_prober() const {
        return [this](std::size_t ti, EntityKind kind) {
            std::vector<std::size_t> lengths;
            for (const auto& site : model.sites)
                if (site.first_token == ti && site.kind == kind)
                    lengths.push_back(site.end_token - site.first_token);
            std::sort(lengths.rbegin(), lengths.rend());
            return lengths;
        };
    }

    // Entity ids of sites of `kind` whose token range lies in [from, to).
    std::vector<int> sites_in(std::size_t from, std::size_t to,
                              EntityKind kind) const {
        std::vector<int> ids;
        for (const auto& site : model.sites) {
            if (site.kind != kind) continue;
            if (site.first_token < from || site.end_token > to) continue;
            if (std::find(ids.begin(), ids.end(), site.entity_id) == ids.end())
                ids.push_back(site.entity_id);
        }
        return ids;
    }

    std::optional<int> nearest_before(std::size_t limit_from, std::size_t t,
                                      EntityKind kind) const {
        const EntitySite* best = nullptr;
        for (const auto& site : model.sites) {
            if (site.kind != kind) continue;
            if (site.first_token < limit_from || site.end_token > t) continue;
            if (!best || site.end_token > best->end_token) best = &site;
        }
        if (!best) return std::nullopt;
        return best->entity_id;
    }

    std::optional<int> nearest_after(std::size_t t, std::size_t limit_to,
                                     EntityKind kind) const {
        const EntitySite* best = nullptr;
        for (const auto& site : model.sites) {
            if (site.kind != kind) continue;
            if (site.first_token < t || site.end_token > limit_to) continue;
            if (!best || site.first_token < best->first_token) best = &site;
        }
        if (!best) return std::nullopt;
        return best->entity_id;
    }

    // Fills one role line for a trigger at [trig_from, trig_to).
    std::vector<int> fill_line(const RoleLine& line, std::size_t trig_from,
                               std::size_t trig_to) const {
        std::size_t sent = sentence_of_token(trig_from);
        std::size_t sent_from = sentences.empty() ? 0 : sentences[sent].first_token;
        std::size_t sent_to = sentences.empty() ? tokens.size()
                                                : sentences[sent].end_token;

        bool sentence_only = mode == ScopeMode::same_sentence;
        std::size_t doc_from = sentence_only ? sent_from : 0;
        std::size_t doc_to = sentence_only ? sent_to : tokens.size();

        auto anchored = [&](std::size_t from, std::size_t to) -> std::vector<int> {
            for (std::size_t t = from; t < to; ++t) {
                if (tokens[t].surface != *line.after_anchor) continue;
                if (auto id = nearest_after(t + 1, to, line.kind)) return {*id};
            }
            return {};
        };

        std::vector<int> ids;
        switch (line.scope) {
            case RoleScope::same_sentence:
                ids = line.after_anchor ? anchored(sent_from, sent_to)
                                        : sites_in(sent_from, sent_to, line.kind);
                break;
            case RoleScope::same_document: {
                if (line.after_anchor) {
                    ids = anchored(sent_from, sent_to);
                    if (ids.empty() && !sentence_only)
                        ids = anchored(0, tokens.size());
                    break;
                }
                ids = sites_in(sent_from, sent_to, line.kind);
                if (ids.empty() && !sentence_only) {
                    // Fall back to the closest mention anywhere.
                    auto before = nearest_before(0, trig_from, line.kind);
                    auto after = nearest_after(trig_to, tokens.size(), line.kind);
                    if (before && !after) ids = {*before};
                    else if (after && !before) ids = {*after};
                    else if (before && after) {
                        const EntitySite *sb = nullptr, *sa = nullptr;
                        for (const auto& s : model.sites) {
                            if (s.kind != line.kind) continue;
                            if (s.end_token <= trig_from &&
                                (!sb || s.end_token > sb->end_token))
                                sb = &s;
                            if (s.first_token >= trig_to &&
                                (!sa || s.first_token < sa->first_token))
                                sa = &s;
                        }
                        std::size_t db = trig_from - sb->end_token;
                        std::size_t da = sa->first_token - trig_to;
                        ids = {db <= da ? *before : *after};
                    }
                }
                break;
            }
            case RoleScope::nearest_before:
                if (auto id = nearest_before(doc_from, trig_from, line.kind))
                    ids = {*id};
                break;
            case RoleScope::nearest_after:
                if (auto id = nearest_after(trig_to, doc_to, line.kind))
                    ids = {*id};
                break;
        }

        if (line.expand_slot && !ids.empty()) {
            std::vector<int> expanded = ids;
            for (int id : ids) {
                const Record* rec = model.entity_by_id(id);
                if (!rec) continue;
                const SlotValue* extra = rec->find(*line.expand_slot);
                if (!extra) continue;
                auto push = [&expanded](int v) {
                    if (std::find(expanded.begin(), expanded.end(), v) ==
                        expanded.end())
                        expanded.push_back(v);
                };
                if (const auto* ref = std::get_if<EntityRef>(extra))
                    push(ref->id);
                else if (const auto* refs =
                             std::get_if<std::vector<EntityRef>>(extra))
                    for (const auto& r : *refs) push(r.id);
            }
            ids = std::move(expanded);
        }
        return ids;
    }
};

bool fills_compatible(const std::vector<int>& a, const std::vector<int>& b) {
    return a.empty() || b.empty() || a == b;
}

}  // namespace

std::vector<Record> extract_events(const Document& doc,
                                   const std::vector<Token>& tokens,
                                   const std::vector<Sentence>& sentences,
                                   const EntityModel& model,
                                   const ScenarioRuleSet& rules,
                                   ScopeMode mode) {
    (void)doc;
    Extractor ex{tokens, sentences, model, mode};
    ClassProber prober = ex.site_prober();

    // 1. Trigger matches, in document order per rule.
    std::vector<Instantiation> insts;
    for (std::size_t r = 0; r < rules.rules().size(); ++r) {
        const ScenarioRule& rule = rules.rules()[r];
        for (std::size_t t = 0; t < tokens.size(); ++t) {
            std::optional<std::size_t> span;
            for (const auto& trigger : rule.triggers) {
                auto count = match_atoms(trigger, tokens, t, prober);
                if (count && (!span || *count > *span)) span = count;
            }
            if (!span) continue;

            Instantiation inst;
            inst.rule_index = r;
            inst.trigger_token = t;
            std::size_t trig_to = t + *span;

            bool dropped = false;
            for (const auto& line : rule.roles) {
                if (line.is_const) {
                    inst.line_fills.emplace_back();
                    continue;
                }
                auto fill = ex.fill_line(line, t, trig_to);
                if (fill.empty() && mode == ScopeMode::same_sentence)
                    dropped = true;
                inst.line_fills.push_back(std::move(fill));
            }

            std::size_t sent = ex.sentence_of_token(t);
            std::size_t sfrom = sentences.empty() ? 0 : sentences[sent].first_token;
            std::size_t sto = sentences.empty() ? tokens.size()
                                                : sentences[sent].end_token;
            for (const auto& status : rule.statuses) {
                bool hit = false;
                for (std::size_t p = sfrom; p < sto && !hit; ++p)
                    hit = match_atoms(status.pattern, tokens, p, prober).has_value();
                if (hit) { inst.status = status.value; break; }
            }
            if (inst.status.empty() && mode == ScopeMode::same_sentence)
                dropped = true;

            if (!dropped) insts.push_back(std::move(inst));
        }
    }

    // 2. Fold compatible instantiations of the same rule together.
    std::vector<Instantiation> merged;
    for (auto& inst : insts) {
        bool folded = false;
        for (auto& group : merged) {
            if (group.rule_index != inst.rule_index) continue;
            bool ok = group.status.empty() || inst.status.empty() ||
                      group.status == inst.status;
            for (std::size_t i = 0; ok && i < group.line_fills.size(); ++i)
                ok = fills_compatible(group.line_fills[i], inst.line_fills[i]);
            if (!ok) continue;
            for (std::size_t i = 0; i < group.line_fills.size(); ++i)
                if (group.line_fills[i].empty())
                    group.line_fills[i] = inst.line_fills[i];
            if (group.status.empty()) group.status = inst.status;
            folded = true;
            break;
        }
        if (!folded) merged.push_back(inst);
    }

    std::stable_sort(merged.begin(), merged.end(),
                     [](const Instantiation& a, const Instantiation& b) {
                         if (a.trigger_token != b.trigger_token)
                             return a.trigger_token < b.trigger_token;
                         return a.rule_index < b.rule_index;
                     });

    // 3. Records.
    std::vector<Record> events;
    for (std::size_t n = 0; n < merged.size(); ++n) {
        const Instantiation& inst = merged[n];
        const ScenarioRule& rule = rules.rules()[inst.rule_index];

        Record record;
        record.is_event = true;
        record.name = rule.name;
        record.slots.emplace_back("id",
                                  std::string("EVENT-") + std::to_string(n + 1));

        std::vector<std::string> role_order;
        for (const auto& line : rule.roles)
            if (std::find(role_order.begin(), role_order.end(), line.role) ==
                role_order.end())
                role_order.push_back(line.role);

        for (const auto& role : role_order) {
            // Const roles take their declared value directly.
            const RoleLine* const_line = nullptr;
            for (const auto& line : rule.roles)
                if (line.role == role && line.is_const) const_line = &line;
            if (const_line) {
                record.slots.emplace_back(role, const_line->const_value);
                continue;
            }

            std::vector<int> ids;
            for (std::size_t i = 0; i < rule.roles.size(); ++i) {
                if (rule.roles[i].role != role) continue;
                for (int id : inst.line_fills[i])
                    if (std::find(ids.begin(), ids.end(), id) == ids.end())
                        ids.push_back(id);
            }
            if (ids.empty()) {
                record.slots.emplace_back(role, std::string("unknown"));
            } else if (ids.size() == 1) {
                record.slots.emplace_back(role, EntityRef{ids[0]});
            } else {
                std::vector<EntityRef> refs;
                for (int id : ids) refs.push_back({id});
                record.slots.emplace_back(role, std::move(refs));
            }
        }

        record.slots.emplace_back(
            "status", inst.status.empty() ? std::string("unknown") : inst.status);
        events.push_back(std::move(record));
    }
    return events;
}

}  // namespace infex
