#include <string>
#include <vector>

#include "doctest.h"
#include "infex/errors.hpp"
#include "infex/gazetteer.hpp"
#include "infex/ne_rules.hpp"
#include "infex/recognizer.hpp"
#include "infex/text.hpp"
#include "infex/tokenize.hpp"

using namespace infex;

namespace {

struct Prepared {
    Document doc;
    std::vector<Token> tokens;

    explicit Prepared(const std::string& text) : doc(text, "t"), tokens(tokenize(doc)) {}
};

// No entities known anywhere — for patterns without <class> atoms.
std::vector<std::size_t> no_entities(std::size_t, EntityKind) { return {}; }

}  // namespace

TEST_CASE("orthographic classes inspect one token") {
    Prepared p("Fred IBM 123 1996 J. Wednesday July hello - $ 12345");
    const auto& t = p.tokens;
    REQUIRE(t.size() == 11);

    CHECK(orth_matches(OrthClass::capitalized, t[0]));   // Fred
    CHECK(orth_matches(OrthClass::capitalized, t[1]));   // IBM counts too
    CHECK_FALSE(orth_matches(OrthClass::capitalized, t[7]));  // hello
    CHECK(orth_matches(OrthClass::allcaps, t[1]));
    CHECK_FALSE(orth_matches(OrthClass::allcaps, t[0]));
    CHECK(orth_matches(OrthClass::digits, t[2]));
    CHECK_FALSE(orth_matches(OrthClass::digits, t[0]));
    CHECK(orth_matches(OrthClass::year, t[3]));
    CHECK_FALSE(orth_matches(OrthClass::year, t[2]));    // 123: three digits
    CHECK_FALSE(orth_matches(OrthClass::year, t[10]));   // 12345: five
    CHECK(orth_matches(OrthClass::initial, t[4]));       // J.
    CHECK_FALSE(orth_matches(OrthClass::initial, t[0]));
    CHECK(orth_matches(OrthClass::weekday, t[5]));
    CHECK_FALSE(orth_matches(OrthClass::weekday, t[6]));
    CHECK(orth_matches(OrthClass::monthname, t[6]));
    CHECK(orth_matches(OrthClass::word, t[7]));
    CHECK(orth_matches(OrthClass::number, t[2]));
    CHECK_FALSE(orth_matches(OrthClass::number, t[7]));
    CHECK(orth_matches(OrthClass::punct, t[8]));
    CHECK(orth_matches(OrthClass::symbol, t[9]));
}

TEST_CASE("pattern parsing accepts the three atom shapes and rejects junk") {
    auto atoms = parse_pattern("\"drug\" <location> {capitalized}+", "t", 1);
    REQUIRE(atoms.size() == 3);
    CHECK(atoms[0].type == AtomType::literal);
    CHECK(atoms[0].literal == "drug");
    CHECK(atoms[1].type == AtomType::entity_class);
    CHECK(atoms[1].entity_kind == EntityKind::location);
    CHECK(atoms[2].type == AtomType::orth);
    CHECK(atoms[2].orth == OrthClass::capitalized);
    CHECK(atoms[2].repeated);
    CHECK_FALSE(atoms[0].repeated);

    CHECK_THROWS_AS(parse_pattern("{bogus}", "t", 1), ParseError);
    CHECK_THROWS_AS(parse_pattern("<widget>", "t", 1), ParseError);
    CHECK_THROWS_AS(parse_pattern("\"\"", "t", 1), ParseError);
    CHECK_THROWS_AS(parse_pattern("plain", "t", 1), ParseError);
    CHECK_THROWS_AS(parse_pattern("", "t", 1), ParseError);
}

TEST_CASE("repetition is greedy but backtracks for the tail") {
    Prepared p("International Business Machines Ltd. announced profits");

    // "Ltd." satisfies {capitalized}, so the repeat has to give it back.
    auto tail = parse_pattern("{capitalized}+ \"Ltd.\"", "t", 1);
    CHECK(match_atoms(tail, p.tokens, 0, no_entities) == 4);
    CHECK(match_atoms(tail, p.tokens, 1, no_entities) == 3);
    CHECK_FALSE(match_atoms(tail, p.tokens, 4, no_entities).has_value());

    auto bare = parse_pattern("{capitalized}+", "t", 1);
    CHECK(match_atoms(bare, p.tokens, 0, no_entities) == 4);

    // One-or-more needs at least one.
    Prepared money("dollars");
    auto amount = parse_pattern("{digits}+ \"dollars\"", "t", 1);
    CHECK_FALSE(match_atoms(amount, money.tokens, 0, no_entities).has_value());
    Prepared paid("250 dollars");
    CHECK(match_atoms(amount, paid.tokens, 0, no_entities) == 2);
}

TEST_CASE("class atoms ask the prober") {
    Prepared p("Robert Smith plays");
    ClassProber prober = [](std::size_t ti, EntityKind kind) {
        std::vector<std::size_t> out;
        if (ti == 0 && kind == EntityKind::person) out.push_back(1);
        return out;
    };
    auto atoms = parse_pattern("<person> {capitalized}+", "t", 1);
    CHECK(match_atoms(atoms, p.tokens, 0, prober) == 2);
    CHECK_FALSE(match_atoms(atoms, p.tokens, 1, prober).has_value());
}

TEST_CASE("gazetteer lookups are longest-first and case-sensitive by default") {
    Gazetteer gaz = Gazetteer::parse(
        "New\tlocation\n"
        "New York\tlocation\n"
        "reuter\tcompany\n"
        "Reuter\tcompany\tmatch=ci\n",
        "gaz");
    CHECK(gaz.size() == 4);

    Prepared p("New York raced");
    auto matches = gaz.matches_at(p.tokens, 0);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].token_count == 2);
    CHECK(matches[0].entry->surface == "New York");
    CHECK(matches[1].token_count == 1);

    Prepared r("REUTER filed");
    auto ci = gaz.matches_at(r.tokens, 0);
    REQUIRE(ci.size() == 1);
    CHECK(ci[0].entry->surface == "Reuter");
    // The match=ci marker is consumed, not stored.
    CHECK(ci[0].entry->attributes.empty());

    CHECK_THROWS_AS(Gazetteer::parse("A\tperson\nA\tperson\n", "gaz"), ParseError);
    CHECK_THROWS_AS(Gazetteer::parse("A\twidget\n", "gaz"), ParseError);
    CHECK_THROWS_AS(Gazetteer::parse("lonely\n", "gaz"), ParseError);
}

TEST_CASE("rule files reject malformed lines") {
    CHECK_THROWS_AS(NeRuleSet::parse("r1\t{capitalized}+\twidget\n", "rules"),
                    ParseError);
    CHECK_THROWS_AS(NeRuleSet::parse("r1\t{bogus}\tperson\n", "rules"), ParseError);
    CHECK_THROWS_AS(NeRuleSet::parse("toofew\n", "rules"), ParseError);

    NeRuleSet ok = NeRuleSet::parse(
        "# comment\n"
        "\n"
        "money-d\t{digits} \"dollars\"\tmoney\tcurrency=USD\n",
        "rules");
    REQUIRE(ok.size() == 1);
    CHECK(ok.rules()[0].name == "money-d");
    CHECK(ok.rules()[0].kind == EntityKind::money);
    CHECK(ok.rules()[0].attributes.at("currency") == "USD");
}

TEST_CASE("recognition keeps the longest mention and never nests") {
    Gazetteer gaz = Gazetteer::parse(
        "Acme Inc.\torganisation\tsrc=gaz\n"
        "Robert\tperson\n"
        "Giuliani\tperson\n"
        "New York\tlocation\n",
        "gaz");
    NeRuleSet rules = NeRuleSet::parse(
        "org-inc\t{capitalized}+ \"Inc.\"\torganisation\tsrc=rule\n"
        "person-full\t<person> {capitalized}+\tperson\n"
        "org-police\t<location> \"police\"\torganisation\n",
        "rules");

    SUBCASE("a rule spanning more text beats a shorter gazetteer entry") {
        Prepared p("New York police arrived");
        auto mentions = recognize(p.doc, p.tokens, gaz, rules);
        REQUIRE(mentions.size() == 1);
        CHECK(mentions[0].surface == "New York police");
        CHECK(mentions[0].kind == EntityKind::organisation);
    }

    SUBCASE("on a tie the gazetteer wins") {
        Prepared p("Acme Inc. hired");
        auto mentions = recognize(p.doc, p.tokens, gaz, rules);
        REQUIRE(mentions.size() == 1);
        CHECK(mentions[0].attributes.at("src") == "gaz");
    }

    SUBCASE("the cursor jumps past accepted mentions") {
        Prepared p("Acme Inc. hired Robert Giuliani yesterday");
        auto mentions = recognize(p.doc, p.tokens, gaz, rules);
        REQUIRE(mentions.size() == 2);
        CHECK(mentions[0].surface == "Acme Inc.");
        CHECK(mentions[1].surface == "Robert Giuliani");
        CHECK(mentions[1].kind == EntityKind::person);
        // No separate "Giuliani" mention inside the accepted span,
        // and no overlaps anywhere.
        for (std::size_t i = 0; i < mentions.size(); ++i)
            for (std::size_t j = i + 1; j < mentions.size(); ++j)
                CHECK_FALSE(mentions[i].span.overlaps(mentions[j].span));
    }

    SUBCASE("adding an unrelated gazetteer entry leaves other mentions alone") {
        Prepared p("Acme Inc. hired Robert Giuliani yesterday");
        auto before = recognize(p.doc, p.tokens, gaz, rules);

        Gazetteer wider = Gazetteer::parse(
            "Acme Inc.\torganisation\tsrc=gaz\n"
            "Robert\tperson\n"
            "Giuliani\tperson\n"
            "New York\tlocation\n"
            "yesterday\tdate\n",
            "gaz");
        auto after = recognize(p.doc, p.tokens, wider, rules);
        REQUIRE(after.size() == 3);
        CHECK(after[0] == before[0]);
        CHECK(after[1] == before[1]);
        CHECK(after[2].surface == "yesterday");
    }
}

TEST_CASE("date and money mentions carry their normalisation") {
    Gazetteer empty_gaz;
    NeRuleSet rules = NeRuleSet::parse(
        "date-full\t{weekday} {digits} {monthname} {year}\tdate\n"
        "date-year\t{year}\tdate\n"
        "money-d\t{digits} \"dollars\"\tmoney\tcurrency=USD\n",
        "rules");

    Prepared full("Wednesday 12 July 1996");
    auto dates = recognize(full.doc, full.tokens, empty_gaz, rules);
    REQUIRE(dates.size() == 1);
    REQUIRE(std::holds_alternative<NormalizedDate>(dates[0].normalized));
    CHECK(std::get<NormalizedDate>(dates[0].normalized) ==
          NormalizedDate{12, 7, 1996});

    Prepared year("in 1989 the firm");
    auto years = recognize(year.doc, year.tokens, empty_gaz, rules);
    REQUIRE(years.size() == 1);
    CHECK(std::get<NormalizedDate>(years[0].normalized) ==
          NormalizedDate{std::nullopt, std::nullopt, 1989});

    Prepared paid("paid 250 dollars for it");
    auto money = recognize(paid.doc, paid.tokens, empty_gaz, rules);
    REQUIRE(money.size() == 1);
    REQUIRE(std::holds_alternative<NormalizedMoney>(money[0].normalized));
    CHECK(std::get<NormalizedMoney>(money[0].normalized) ==
          NormalizedMoney{250, "USD"});
}

TEST_CASE("date normalisation reads the common shapes") {
    CHECK(normalize_date("Wednesday 12 July 1996") == NormalizedDate{12, 7, 1996});
    CHECK(normalize_date("12 July 1996") == NormalizedDate{12, 7, 1996});
    CHECK(normalize_date("July 1996") ==
          NormalizedDate{std::nullopt, 7, 1996});
    CHECK(normalize_date("1989") == NormalizedDate{std::nullopt, std::nullopt, 1989});
    CHECK(normalize_date("today") == NormalizedDate{});
    CHECK(normalize_date("?/12/1996") == NormalizedDate{std::nullopt, 12, 1996});
    CHECK(normalize_date("3rd March 2001") == NormalizedDate{3, 3, 2001});
    CHECK_THROWS_AS(normalize_date("pizza"), ParseError);
    CHECK_THROWS_AS(normalize_date("45 July 1996"), ParseError);

    CHECK(NormalizedDate{12, 7, 1996}.render() == "12/07/1996");
    CHECK(NormalizedDate{std::nullopt, std::nullopt, 1989}.render() == "?/?/1989");
    CHECK(NormalizedDate{}.render() == "?/?/?");
}

TEST_CASE("money normalisation prefers the rule's currency hint") {
    CHECK(normalize_money("250 dollars", "USD") == NormalizedMoney{250, "USD"});
    CHECK(normalize_money("$250", "") == NormalizedMoney{250, "USD"});
    CHECK(normalize_money("$250", "CAD") == NormalizedMoney{250, "CAD"});
    CHECK_THROWS_AS(normalize_money("dollars", "USD"), ParseError);
    CHECK(NormalizedMoney{1250000, "USD"}.render() == "1250000 USD");
}

TEST_CASE("weekday and month vocabulary accepts short forms") {
    CHECK(is_weekday_name("Wednesday"));
    CHECK(is_weekday_name("wed"));
    CHECK_FALSE(is_weekday_name("Wedding"));
    CHECK(is_month_name("July"));
    CHECK(is_month_name("jul"));
    CHECK_FALSE(is_month_name("Julia"));
}
