#include <string>
#include <vector>

#include "doctest.h"
#include "infex/errors.hpp"
#include "infex/localize.hpp"
#include "infex/records.hpp"
#include "support/paths.hpp"

using namespace infex;

namespace {

RecordSet gold_fixture() { return load_records(testpaths::sample("drug_smuggling.gold")); }

Lexicon fr_lexicon() { return Lexicon::load(testpaths::resource("lexicon_fr.tsv")); }

LocaleFormat fr_format() {
    return LocaleFormat::load(testpaths::resource("locale_fr.conf"));
}

std::string rendered(const Record& r, const std::string& key) {
    const SlotValue* v = r.find(key);
    REQUIRE(v != nullptr);
    return render_slot_value(*v);
}

}  // namespace

TEST_CASE("lexicon files start with a locale header") {
    Lexicon fr = Lexicon::parse(
        "locale: fr\n"
        "# slot keys\n"
        "type\tcat\xc3\xa9gorie\n"
        "drug\tdrogue\n",
        "lex");
    CHECK(fr.locale() == "fr");
    CHECK_FALSE(fr.is_identity());
    CHECK(fr.size() == 2);
    CHECK(fr.lookup("type") == "cat\xc3\xa9gorie");
    CHECK_FALSE(fr.lookup("wombat").has_value());

    // The identity lexicon answers everything with the term itself.
    Lexicon en = Lexicon::identity();
    CHECK(en.is_identity());
    CHECK(en.lookup("anything") == "anything");

    CHECK_THROWS_AS(Lexicon::parse("type\tx\n", "lex"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("", "lex"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("locale: fr\nbare line\n", "lex"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("locale: fr\na\tx\na\ty\n", "lex"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("locale: fr\na\t\n", "lex"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("locale:\n", "lex"), ParseError);
}

TEST_CASE("locale formats parse key=value conventions") {
    LocaleFormat defaults;
    CHECK(defaults.date_pattern == "dd/mm/yyyy");
    CHECK(defaults.decimal == ".");
    CHECK(defaults.group == ",");

    LocaleFormat fr = LocaleFormat::parse(
        "# french conventions\n"
        "date_pattern=d/m/y\n"
        "decimal=,\n"
        "group=.\n",
        "fmt");
    CHECK(fr.date_pattern == "d/m/y");
    CHECK(fr.group == ".");

    CHECK_THROWS_AS(LocaleFormat::parse("color=blue\n", "fmt"), ParseError);
    CHECK_THROWS_AS(LocaleFormat::parse("date_pattern\n", "fmt"), ParseError);
    // Each of d, m, y may appear in at most one run.
    CHECK_THROWS_AS(LocaleFormat::parse("date_pattern=dd/dd\n", "fmt"), ParseError);
    CHECK_THROWS_AS(LocaleFormat::parse("date_pattern=\n", "fmt"), ParseError);
}

TEST_CASE("date rendering follows the pattern's run widths") {
    NormalizedDate d{5, 7, 1996};
    CHECK(LocaleFormat{}.render_date(d) == "05/07/1996");

    LocaleFormat iso;
    iso.date_pattern = "yyyy-mm-dd";
    CHECK(iso.render_date(d) == "1996-07-05");

    LocaleFormat bare;
    bare.date_pattern = "d/m/y";
    CHECK(bare.render_date(d) == "5/7/1996");
    CHECK(bare.render_date(NormalizedDate{12, 7, 1996}) == "12/7/1996");

    // Unknown parts render as "?" whatever the width.
    LocaleFormat dots;
    dots.date_pattern = "dd.mm.yyyy";
    CHECK(dots.render_date(NormalizedDate{std::nullopt, std::nullopt, 1989}) ==
          "?.?.1989");
    LocaleFormat year_only;
    year_only.date_pattern = "yyyy";
    CHECK(year_only.render_date(d) == "1996");
}

TEST_CASE("digit grouping works from the right") {
    LocaleFormat commas;
    CHECK(commas.group_digits("1250000") == "1,250,000");
    CHECK(commas.group_digits("123") == "123");
    CHECK(commas.group_digits("1234") == "1,234");

    LocaleFormat dots;
    dots.group = ".";
    CHECK(dots.group_digits("1250000") == "1.250.000");
}

TEST_CASE("the en locale is the identity, with nothing to report") {
    RecordSet gold = gold_fixture();
    LocalizeResult result = localize_records(gold, Lexicon::identity(), LocaleFormat{});
    CHECK(result.records == gold);
    CHECK(result.untranslated.empty());
    CHECK(emit_records(result.records) ==
          testpaths::slurp(testpaths::sample("drug_smuggling.gold")));

    // A lexicon whose header says "en" is the identity even with entries.
    Lexicon en = Lexicon::parse("locale: en\ndrug\tdrogue\n", "lex");
    LocalizeResult via_file = localize_records(gold, en, LocaleFormat{});
    CHECK(via_file.records == gold);
    CHECK(via_file.untranslated.empty());
}

TEST_CASE("the demonstration fr lexicon translates structure, not names") {
    RecordSet gold = gold_fixture();
    LocalizeResult result = localize_records(gold, fr_lexicon(), fr_format());

    // Structure is preserved slot for slot.
    REQUIRE(result.records.entities.size() == gold.entities.size());
    REQUIRE(result.records.events.size() == gold.events.size());
    for (std::size_t i = 0; i < gold.entities.size(); ++i)
        CHECK(result.records.entities[i].slots.size() ==
              gold.entities[i].slots.size());

    const Record& reuter = result.records.entities[0];
    CHECK(reuter.name == "Reuter");  // proper name: passes through
    CHECK(reuter.slots[1].first == "cat\xc3\xa9gorie");
    CHECK(rendered(reuter, "cat\xc3\xa9gorie") == "soci\xc3\xa9t\xc3\xa9");
    CHECK(rendered(reuter, "id") == "ENTITY-1");  // ids never move

    const Record& heroin = result.records.entities[11];
    CHECK(heroin.name == "h\xc3\xa9ro\xc3\xafne");
    CHECK(rendered(heroin, "classe") == "A");

    // Dates re-render under the locale's pattern, as plain text.
    CHECK(rendered(result.records.entities[2], "normalisation") == "12/7/1996");
    CHECK(rendered(result.records.entities[8], "normalisation") == "?/?/1989");
    CHECK(std::holds_alternative<std::string>(
        *result.records.entities[2].find("normalisation")));

    // Aliases survive untranslated but intact.
    CHECK(rendered(result.records.entities[4], "alias") == "Thompson; Fred");

    const Record& smuggling = result.records.events[0];
    CHECK(smuggling.name == "trafic-de-stup\xc3\xa9" "fiants");
    CHECK(rendered(smuggling, "destination") == "ENTITY-13");
    CHECK(rendered(smuggling, "source") == "inconnu");
    CHECK(rendered(smuggling, "statut") == "en-proc\xc3\xa8s");

    const Record& venture = result.records.events[1];
    CHECK(rendered(venture, "id") == "EVENT-2");
    CHECK(rendered(venture, "soci\xc3\xa9t\xc3\xa9s") == "ENTITY-6, ENTITY-11");

    // Every term without an entry is reported once, in first-use order —
    // here that is exactly the story's proper names plus the free-text
    // business descriptions.
    CHECK(result.untranslated ==
          std::vector<std::string>{
              "Reuter", "news", "New York", "US", "Wednesday 12 July 1996",
              "New York police", "Frederick J. Thompson", "Thompson", "Fred",
              "Jay Street Imports Inc.", "Jay Street", "import-export",
              "Manhattan", "Robert Guliani", "Guliani", "1989", "Latin-America",
              "Downing-Jones", "transportation", "United States"});
}

TEST_CASE("currency-coded amounts regroup instead of translating") {
    Record payment;
    payment.name = "payment";
    payment.slots.emplace_back("id", EntityRef{1});
    payment.slots.emplace_back("type", std::string("money"));
    payment.slots.emplace_back("normalisation", std::string("1250000 USD"));
    RecordSet set;
    set.entities.push_back(payment);

    Lexicon fr = Lexicon::parse(
        "locale: fr\npayment\tpaiement\ntype\tcat\xc3\xa9gorie\nmoney\targent\n"
        "normalisation\tnormalisation\n",
        "lex");
    LocaleFormat format;
    format.group = ".";
    LocalizeResult result = localize_records(set, fr, format);
    CHECK(rendered(result.records.entities[0], "normalisation") ==
          "1.250.000 USD");
    CHECK(result.untranslated.empty());
}

TEST_CASE("run-local labels are structure, never vocabulary") {
    Record note;
    note.name = "note";
    note.slots.emplace_back("id", EntityRef{1});
    note.slots.emplace_back("about", std::string("ENTITY-7"));
    note.slots.emplace_back("event_tag", std::string("EVENT-12"));
    note.slots.emplace_back("odd", std::string("ENTITY-x"));
    RecordSet set;
    set.entities.push_back(note);

    Lexicon fr = Lexicon::parse(
        "locale: fr\nnote\tnote\nabout\tsujet\nevent_tag\trep\xc3\xa8re\nodd\tbizarre\n",
        "lex");
    LocalizeResult result = localize_records(set, fr, LocaleFormat{});
    CHECK(rendered(result.records.entities[0], "sujet") == "ENTITY-7");
    CHECK(rendered(result.records.entities[0], "rep\xc3\xa8re") == "EVENT-12");
    // Only well-formed labels get the pass; this one is a term like any other.
    CHECK(result.untranslated == std::vector<std::string>{"ENTITY-x"});
}

TEST_CASE("each missing term is reported once, at first use") {
    Record a;
    a.name = "Zork";
    a.slots.emplace_back("id", EntityRef{1});
    a.slots.emplace_back("type", std::string("Zork"));
    Record b;
    b.name = "Quux";
    b.slots.emplace_back("id", EntityRef{2});
    b.slots.emplace_back("type", std::string("Zork"));
    RecordSet set;
    set.entities.push_back(a);
    set.entities.push_back(b);

    Lexicon fr = Lexicon::parse("locale: fr\nunused\tinutile\n", "lex");
    LocalizeResult result = localize_records(set, fr, LocaleFormat{});
    CHECK(result.untranslated == std::vector<std::string>{"Zork", "type", "Quux"});
}
