#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "infex/errors.hpp"
#include "infex/records.hpp"
#include "support/generators.hpp"
#include "support/paths.hpp"

using namespace infex;

TEST_CASE("emission is name, indented slots, blank separators") {
    Record heroin;
    heroin.name = "heroin";
    heroin.slots.emplace_back("id", EntityRef{12});
    heroin.slots.emplace_back("type", std::string("drug"));
    heroin.slots.emplace_back("class", std::string("A"));

    RecordSet one;
    one.entities.push_back(heroin);
    CHECK(emit_records(one) ==
          "heroin\n"
          "    id: ENTITY-12\n"
          "    type: drug\n"
          "    class: A\n");

    Record meeting;
    meeting.name = "meeting";
    meeting.is_event = true;
    meeting.slots.emplace_back("id", std::string("EVENT-1"));
    meeting.slots.emplace_back("attendees",
                               std::vector<EntityRef>{{12}, {3}});
    meeting.slots.emplace_back("status", std::string("unknown"));

    RecordSet both;
    both.events.push_back(meeting);  // deliberately added first
    both.entities.push_back(heroin);
    CHECK(emit_records(both) ==
          "heroin\n"
          "    id: ENTITY-12\n"
          "    type: drug\n"
          "    class: A\n"
          "\n"
          "meeting\n"
          "    id: EVENT-1\n"
          "    attendees: ENTITY-12, ENTITY-3\n"
          "    status: unknown\n");

    CHECK(emit_records(RecordSet{}) == "");
}

TEST_CASE("slot values read back by shape, steered by the key") {
    CHECK(parse_slot_value("x", "ENTITY-7") == SlotValue{EntityRef{7}});
    CHECK(parse_slot_value("x", "ENTITY-") == SlotValue{std::string("ENTITY-")});
    CHECK(parse_slot_value("x", "ENTITY-1, ENTITY-2") ==
          SlotValue{std::vector<EntityRef>{{1}, {2}}});
    CHECK(parse_slot_value("x", "ENTITY-1, pizza") ==
          SlotValue{std::string("ENTITY-1, pizza")});
    CHECK(parse_slot_value("x", "1, 2") == SlotValue{std::string("1, 2")});

    CHECK(parse_slot_value("x", "12/07/1996") ==
          SlotValue{NormalizedDate{12, 7, 1996}});
    CHECK(parse_slot_value("x", "?/?/1989") ==
          SlotValue{NormalizedDate{std::nullopt, std::nullopt, 1989}});
    // Out-of-range or over-wide parts stay text.
    CHECK(parse_slot_value("x", "99/99/9999") ==
          SlotValue{std::string("99/99/9999")});
    CHECK(parse_slot_value("x", "007/2/1") == SlotValue{std::string("007/2/1")});
    CHECK(parse_slot_value("x", "12/07") == SlotValue{std::string("12/07")});

    // The aliases key always reads as a string list, even with one item.
    CHECK(parse_slot_value("aliases", "Jay Street") ==
          SlotValue{std::vector<std::string>{"Jay Street"}});
    CHECK(parse_slot_value("aliases", "Thompson; Fred") ==
          SlotValue{std::vector<std::string>{"Thompson", "Fred"}});
}

TEST_CASE("record ids surface through record_id") {
    Record entity;
    entity.slots.emplace_back("id", EntityRef{4});
    CHECK(entity.record_id() == 4);

    Record event;
    event.slots.emplace_back("id", std::string("EVENT-9"));
    CHECK(event.record_id() == 9);

    Record none;
    CHECK_FALSE(none.record_id().has_value());
}

TEST_CASE("parsing rejects structural mistakes with line numbers") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_records(text, "o"), ParseError);
    };
    bad("name\n   id: ENTITY-1\n");           // three-space indent
    bad("name\n     id: ENTITY-1\n");         // five spaces
    bad("name\n    id ENTITY-1\n");           // no colon
    bad("name\n    id:ENTITY-1\n");           // no space after colon
    bad("name\n    : ENTITY-1\n");            // empty key
    bad("    id: ENTITY-1\n");                // slot before any record
    bad("name\n    type: drug\n");            // no id slot
    bad("name\n    id: pizza\n");             // malformed id
    bad("name\n    id: ENTITY-1\n    id: ENTITY-1\n");  // duplicate key
    bad("a\n    id: ENTITY-1\n\nb\n    id: ENTITY-1\n");  // duplicate id
    bad("a\n    id: EVENT-1\n\nb\n    id: EVENT-1\n");

    // The line number lands on the offending line.
    try {
        parse_records("name\n    id: ENTITY-1\n    broken\n", "o");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("o:3:") != std::string::npos);
    }
}

TEST_CASE("an entity and an event may share a number") {
    RecordSet set = parse_records(
        "place\n"
        "    id: ENTITY-1\n"
        "\n"
        "meeting\n"
        "    id: EVENT-1\n",
        "o");
    CHECK(set.entities.size() == 1);
    CHECK(set.events.size() == 1);
    CHECK(set.events[0].is_event);
    CHECK_FALSE(set.entities[0].is_event);
}

TEST_CASE("windows line endings parse like unix ones") {
    RecordSet set = parse_records("name\r\n    id: ENTITY-1\r\n", "o");
    REQUIRE(set.entities.size() == 1);
    CHECK(set.entities[0].name == "name");
}

TEST_CASE("the gold transcription round-trips byte for byte") {
    std::string gold_path = testpaths::sample("drug_smuggling.gold");
    std::string text = testpaths::slurp(gold_path);
    RecordSet parsed = load_records(gold_path);

    CHECK(parsed.entities.size() == 13);
    CHECK(parsed.events.size() == 2);
    CHECK(emit_records(parsed) == text);
    CHECK(parse_records(emit_records(parsed), "round") == parsed);
}

TEST_CASE("random record sets survive the round trip") {
    std::mt19937 rng(20260818);
    for (int i = 0; i < 200; ++i) {
        RecordSet set = testgen::random_record_set(rng);
        RecordSet back = parse_records(emit_records(set), "round");
        CHECK(back == set);
    }
}

TEST_CASE("entity slots sort into the conventional reading order") {
    Record r;
    r.slots.emplace_back("zeta", std::string("1"));
    r.slots.emplace_back("business", std::string("news"));
    r.slots.emplace_back("type", std::string("company"));
    r.slots.emplace_back("alpha", std::string("2"));
    r.slots.emplace_back("id", EntityRef{1});
    r.slots.emplace_back("aliases", std::vector<std::string>{"R"});
    sort_entity_slots(r);

    std::vector<std::string> keys;
    for (const auto& [key, value] : r.slots) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"id", "type", "aliases", "business",
                                           "alpha", "zeta"});
}
