#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infex/coref.hpp"
#include "infex/gazetteer.hpp"
#include "infex/localize.hpp"
#include "infex/ne_rules.hpp"
#include "infex/recognizer.hpp"
#include "infex/records.hpp"
#include "infex/scenario.hpp"
#include "infex/templates.hpp"
#include "infex/text.hpp"
#include "infex/world_kb.hpp"

namespace infex {

enum class OutputFormat { records, tabular };

// key=value run configuration. Resource paths are resolved relative to
// the directory holding the config file.
struct PipelineConfig {
    std::string gazetteer_path;
    std::string ne_rules_path;
    std::string nicknames_path;
    std::string world_kb_path;
    std::string scenario_rules_path;
    std::optional<std::string> pronouns_path;       // default: built-in table
    std::optional<std::string> lexicon_path;        // default: none
    std::optional<std::string> locale_format_path;  // default: conventions below
    std::size_t window = 2;                         // pronoun search, in sentences
    ScopeMode scope = ScopeMode::same_document;
    OutputFormat format = OutputFormat::records;

    static PipelineConfig parse(const std::string& text, const std::string& origin);
    static PipelineConfig load(const std::string& path);
};

// All resource files, loaded and validated up front so a bad path or a
// malformed file fails the run before any document is touched.
struct PipelineResources {
    Gazetteer gazetteer;
    NeRuleSet ne_rules;
    NicknameTable nicknames;
    WorldKb kb;
    ScenarioRuleSet scenario_rules;
    PronounLexicon pronouns;
    std::optional<Lexicon> lexicon;
    LocaleFormat locale_format;

    static PipelineResources load(const PipelineConfig& config);
};

struct ExtractionResult {
    std::string source_id;
    std::vector<Token> tokens;
    std::vector<Sentence> sentences;
    std::vector<Mention> mentions;
    CorefResult coref;
    RecordSet records;
    std::vector<std::string> diagnostics;  // human-readable, one per issue
};

ExtractionResult run_pipeline(const PipelineResources& resources,
                              const PipelineConfig& config, const Document& doc);

// One TAB row per slot (id excluded): record id, type column, slot key,
// rendered value. The type column carries an entity's type slot and an
// event's record name.
std::string emit_tabular(const RecordSet& records);

}  // namespace infex
