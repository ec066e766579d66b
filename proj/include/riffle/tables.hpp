#pragma once

#include <string>

#include "riffle/errors.hpp"
#include "riffle/report.hpp"

namespace riffle::report {

// Reference tables recomputed from scratch and shown beside the published
// figures.  Ids:
//   AS    52 distinct cards, full ordering and bottom card, k = 1..12
//   sep   exact separation for six decks of 52 (plus zener's 25), k = 1..12
//   thumb rule-of-thumb separation for the same decks
//   AD    the card starting mid-deck at position 26, k = 1..4
// The provenance cell quotes the published figure and one of three verdicts:
// "agrees", "known difference: ..." for the cells the published sources
// themselves disagree on, or "DIFF" for an unexpected mismatch.
Rows cmd_table(const std::string& id, int digits, const Budgets& budgets);

} // namespace riffle::report
