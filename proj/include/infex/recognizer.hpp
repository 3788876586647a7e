#pragma once

#include <vector>

#include "infex/gazetteer.hpp"
#include "infex/ne_rules.hpp"
#include "infex/text.hpp"
#include "infex/tokenize.hpp"

namespace infex {

// Scans left to right and keeps the longest entity readable at each point.
// Gazetteer entries and token-pattern rules compete on equal terms; when a
// gazetteer entry and a rule cover the same stretch the gazetteer entry
// wins, and otherwise earlier entries / earlier rules break ties.
// The cursor jumps past each accepted mention, so output never nests.
std::vector<Mention> recognize(const Document& doc,
                               const std::vector<Token>& tokens,
                               const Gazetteer& gazetteer,
                               const NeRuleSet& rules);

// Gazetteer-backed prober for <class> atoms in recognition rules.
ClassProber gazetteer_prober(const Gazetteer& gazetteer,
                             const std::vector<Token>& tokens);

}  // namespace infex
