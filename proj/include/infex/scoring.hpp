#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "infex/records.hpp"

namespace infex {

// One aligned system/gold record pair with its slot tallies. The id slot
// never participates: ids are run-local labels, not content.
struct MatchedPair {
    std::size_t system_index = 0;
    std::size_t gold_index = 0;
    std::size_t correct = 0;    // same key, same value
    std::size_t incorrect = 0;  // same key, different value
    std::size_t missing = 0;    // gold-only keys
    std::size_t spurious = 0;   // system-only keys
};

struct Alignment {
    std::vector<MatchedPair> entity_pairs;
    std::vector<MatchedPair> event_pairs;
    std::vector<std::size_t> unmatched_system_entities;
    std::vector<std::size_t> unmatched_gold_entities;
    std::vector<std::size_t> unmatched_system_events;
    std::vector<std::size_t> unmatched_gold_events;
    std::map<int, int> entity_id_map;  // system entity id -> gold entity id
};

// Pairs records greedily in gold order. Entities pair on equal type plus
// any case-folded overlap between {name} ∪ aliases; events pair on equal
// name, preferring the candidate agreeing on the most slots. References
// inside slots are compared through the entity pairing, so two runs that
// number their entities differently can still score perfectly.
Alignment align_records(const RecordSet& system, const RecordSet& gold);

struct TaskScore {
    std::size_t correct = 0;
    std::size_t system_fills = 0;
    std::size_t gold_fills = 0;

    double precision() const;
    double recall() const;
    double combined() const;
};

// Harmonic combination; defined as 0 when both inputs are 0.
double combined_measure(double precision, double recall);

struct ScoreReport {
    TaskScore entity;
    TaskScore event;
    TaskScore overall;

    // TAB-separated rows: task, precision, recall, combined (4 decimals).
    std::string render() const;
};

ScoreReport score_alignment(const Alignment& alignment, const RecordSet& system,
                            const RecordSet& gold);
ScoreReport score_records(const RecordSet& system, const RecordSet& gold);

}  // namespace infex
