#include "infex/pipeline.hpp"

#include <filesystem>
#include <map>
#include <set>

#include "infex/errors.hpp"
#include "resource_util.hpp"

namespace infex {

using detail::is_comment_or_blank;
using detail::read_file;
using detail::split;
using detail::trim;

namespace {

const std::set<std::string> kConfigKeys = {
    "gazetteer", "ne-rules",      "nicknames", "world-kb", "scenario-rules",
    "pronouns",  "lexicon",       "locale-format", "window", "scope", "format"};

std::size_t parse_window(const std::string& value, const std::string& origin,
                         std::size_t line_no) {
    if (value.empty())
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty window");
    for (char c : value)
        if (c < '0' || c > '9')
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": window must be a positive integer, got \"" + value +
                              "\"");
    const long long parsed = std::stoll(value);
    if (parsed <= 0)
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": window must be positive, got " + value);
    return static_cast<std::size_t>(parsed);
}

}  // namespace

PipelineConfig PipelineConfig::parse(const std::string& text,
                                     const std::string& origin) {
    PipelineConfig config;
    std::map<std::string, std::string> values;
    std::size_t line_no = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++line_no;
        if (is_comment_or_blank(raw)) continue;
        const std::string line = trim(raw);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kConfigKeys.count(key))
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": unknown config key \"" + key + "\"");
        if (!values.emplace(key, value).second)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": duplicate config key \"" + key + "\"");
        if (key == "window") config.window = parse_window(value, origin, line_no);
        if (key == "scope") {
            if (value == "same-document")
                config.scope = ScopeMode::same_document;
            else if (value == "same-sentence")
                config.scope = ScopeMode::same_sentence;
            else
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": scope must be same-document or same-sentence");
        }
        if (key == "format") {
            if (value == "records")
                config.format = OutputFormat::records;
            else if (value == "tabular")
                config.format = OutputFormat::tabular;
            else
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": format must be records or tabular");
        }
    }
    const auto want = [&](const char* key, std::string& into) {
        auto it = values.find(key);
        if (it == values.end() || it->second.empty())
            throw ConfigError(origin + ": missing required config key \"" +
                              std::string(key) + "\"");
        into = it->second;
    };
    want("gazetteer", config.gazetteer_path);
    want("ne-rules", config.ne_rules_path);
    want("nicknames", config.nicknames_path);
    want("world-kb", config.world_kb_path);
    want("scenario-rules", config.scenario_rules_path);
    const auto optional = [&](const char* key, std::optional<std::string>& into) {
        auto it = values.find(key);
        if (it != values.end() && !it->second.empty()) into = it->second;
    };
    optional("pronouns", config.pronouns_path);
    optional("lexicon", config.lexicon_path);
    optional("locale-format", config.locale_format_path);
    return config;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    PipelineConfig config = parse(read_file(path), path);
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    const auto resolve = [&](std::string& p) {
        if (p.empty()) return;
        std::filesystem::path candidate(p);
        if (candidate.is_relative()) p = (base / candidate).string();
    };
    resolve(config.gazetteer_path);
    resolve(config.ne_rules_path);
    resolve(config.nicknames_path);
    resolve(config.world_kb_path);
    resolve(config.scenario_rules_path);
    if (config.pronouns_path) resolve(*config.pronouns_path);
    if (config.lexicon_path) resolve(*config.lexicon_path);
    if (config.locale_format_path) resolve(*config.locale_format_path);
    return config;
}

PipelineResources PipelineResources::load(const PipelineConfig& config) {
    const auto check = [](const std::string& path, const char* what) {
        if (!std::filesystem::exists(path))
            throw ConfigError(std::string("missing ") + what + " file: " + path);
    };
    check(config.gazetteer_path, "gazetteer");
    check(config.ne_rules_path, "recognition-rule");
    check(config.nicknames_path, "nickname");
    check(config.world_kb_path, "world-knowledge");
    check(config.scenario_rules_path, "scenario-rule");
    if (config.pronouns_path) check(*config.pronouns_path, "pronoun");
    if (config.lexicon_path) check(*config.lexicon_path, "lexicon");
    if (config.locale_format_path) check(*config.locale_format_path, "locale-format");

    PipelineResources resources;
    try {
        resources.gazetteer = Gazetteer::load(config.gazetteer_path);
        resources.ne_rules = NeRuleSet::load(config.ne_rules_path);
        resources.nicknames = NicknameTable::load(config.nicknames_path);
        resources.kb = WorldKb::load(config.world_kb_path);
        resources.scenario_rules = ScenarioRuleSet::load(config.scenario_rules_path);
        resources.pronouns = config.pronouns_path
                                 ? PronounLexicon::load(*config.pronouns_path)
                                 : PronounLexicon::builtin();
        if (config.lexicon_path) resources.lexicon = Lexicon::load(*config.lexicon_path);
        if (config.locale_format_path)
            resources.locale_format = LocaleFormat::load(*config.locale_format_path);
    } catch (const ParseError& e) {
        // A resource that fails to parse is a startup problem, not an
        // input problem: surface it as configuration failure.
        throw ConfigError(std::string("resource error: ") + e.what());
    }
    return resources;
}

ExtractionResult run_pipeline(const PipelineResources& resources,
                              const PipelineConfig& config, const Document& doc) {
    ExtractionResult result;
    result.source_id = doc.source_id();
    result.tokens = tokenize(doc);
    result.sentences = split_sentences(doc, result.tokens);
    result.mentions =
        recognize(doc, result.tokens, resources.gazetteer, resources.ne_rules);
    result.coref =
        resolve_coreference(doc, result.tokens, result.sentences, result.mentions,
                            resources.nicknames, resources.pronouns, config.window);
    EntityModel model = build_entities(doc, result.tokens, result.sentences,
                                       result.mentions, result.coref, resources.kb);
    result.records.events = extract_events(doc, result.tokens, result.sentences,
                                           model, resources.scenario_rules,
                                           config.scope);
    result.records.entities = std::move(model.entities);
    for (const UnresolvedPronoun& p : result.coref.unresolved)
        result.diagnostics.push_back(result.source_id + ": unresolved pronoun \"" +
                                     p.surface + "\" at token " +
                                     std::to_string(p.token_index));
    return result;
}

std::string emit_tabular(const RecordSet& records) {
    std::string out;
    const auto rows = [&out](const Record& record) {
        std::string id;
        if (const SlotValue* id_slot = record.find("id"))
            id = render_slot_value(*id_slot);
        std::string type_column;
        if (record.is_event) {
            type_column = record.name;
        } else if (const SlotValue* type = record.find("type")) {
            type_column = render_slot_value(*type);
        }
        for (const auto& [key, value] : record.slots) {
            if (key == "id") continue;
            out += id;
            out += '\t';
            out += type_column;
            out += '\t';
            out += key;
            out += '\t';
            out += render_slot_value(value);
            out += '\n';
        }
    };
    for (const Record& r : records.entities) rows(r);
    for (const Record& r : records.events) rows(r);
    return out;
}

}  // namespace infex
