// Command-line front end: extract records from text, score a system
// output against a reference, or localize a record listing.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infex/errors.hpp"
#include "infex/localize.hpp"
#include "infex/pipeline.hpp"
#include "infex/records.hpp"
#include "infex/scoring.hpp"
#include "infex/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // bad invocation or configuration
constexpr int kExitParse = 2;  // malformed input files

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_extract(const std::string& config_path,
                const std::vector<std::string>& inputs,
                const std::string& out_dir) {
    infex::PipelineConfig config;
    infex::PipelineResources resources;
    try {
        config = infex::PipelineConfig::load(config_path);
        resources = infex::PipelineResources::load(config);
    } catch (const infex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const infex::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            std::cerr << "cannot create output directory " << out_dir << ": "
                      << ec.message() << '\n';
            return kExitUsage;
        }
    }

    bool first_to_stdout = true;
    for (const std::string& input : inputs) {
        const auto text = slurp(input);
        if (!text) {
            std::cerr << input << ": cannot read file\n";
            continue;  // one bad document never stops the corpus
        }
        std::string output;
        std::vector<std::string> diagnostics;
        try {
            const infex::Document doc(*text, file_stem(input));
            infex::ExtractionResult result =
                infex::run_pipeline(resources, config, doc);
            diagnostics = std::move(result.diagnostics);
            output = config.format == infex::OutputFormat::tabular
                         ? infex::emit_tabular(result.records)
                         : infex::emit_records(result.records);
        } catch (const std::exception& e) {
            std::cerr << input << ": " << e.what() << '\n';
            continue;
        }
        for (const std::string& note : diagnostics) std::cerr << note << '\n';
        if (out_dir.empty()) {
            if (!first_to_stdout && !output.empty()) std::cout << '\n';
            std::cout << output;
            if (!output.empty()) first_to_stdout = false;
        } else {
            const std::filesystem::path target =
                std::filesystem::path(out_dir) / (file_stem(input) + ".records");
            std::ofstream out(target, std::ios::binary);
            if (!out) {
                std::cerr << target.string() << ": cannot write file\n";
                continue;
            }
            out << output;
        }
    }
    return kExitOk;
}

int run_score(const std::string& system_path, const std::string& gold_path) {
    infex::RecordSet system, gold;
    try {
        system = infex::load_records(system_path);
        gold = infex::load_records(gold_path);
    } catch (const infex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
    std::cout << infex::score_records(system, gold).render();
    return kExitOk;
}

int run_localize(const std::string& records_path, const std::string& locale,
                 const std::string& lexicon_path,
                 const std::string& format_path) {
    infex::RecordSet records;
    try {
        records = infex::load_records(records_path);
    } catch (const infex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }

    infex::Lexicon lexicon = infex::Lexicon::identity();
    infex::LocaleFormat format;
    try {
        if (!lexicon_path.empty()) lexicon = infex::Lexicon::load(lexicon_path);
        if (!format_path.empty()) format = infex::LocaleFormat::load(format_path);
        if (lexicon.locale() != locale)
            throw infex::ConfigError("lexicon is for locale \"" + lexicon.locale() +
                                     "\", requested \"" + locale + "\"");
        if (locale != "en" && lexicon.is_identity())
            throw infex::ConfigError("locale \"" + locale +
                                     "\" needs --lexicon <file>");
    } catch (const infex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const infex::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    }

    const infex::LocalizeResult result =
        infex::localize_records(records, lexicon, format);
    std::cout << infex::emit_records(result.records);
    for (const std::string& term : result.untranslated)
        std::cerr << "untranslated: " << term << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rule-based information extraction over plain text"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::vector<std::string> inputs;
    CLI::App* extract =
        app.add_subcommand("extract", "run the extraction pipeline over documents");
    extract->add_option("config", config_path, "pipeline configuration file")
        ->required();
    extract->add_option("input", inputs, "document files")->required();
    extract->add_option("--out-dir", out_dir,
                        "write one .records file per document here");

    std::string system_path, gold_path;
    CLI::App* score =
        app.add_subcommand("score", "compare system records against a reference");
    score->add_option("system", system_path, "system record listing")->required();
    score->add_option("gold", gold_path, "reference record listing")->required();

    std::string records_path, locale, lexicon_path, format_path;
    CLI::App* localize =
        app.add_subcommand("localize", "re-render a record listing for a locale");
    localize->add_option("records", records_path, "record listing")->required();
    localize->add_option("locale", locale, "target locale tag")->required();
    localize->add_option("--lexicon", lexicon_path, "term table for the locale");
    localize->add_option("--locale-format", format_path,
                         "date/number conventions file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (extract->parsed()) return run_extract(config_path, inputs, out_dir);
        if (score->parsed()) return run_score(system_path, gold_path);
        if (localize->parsed())
            return run_localize(records_path, locale, lexicon_path, format_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
