#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riffle/deck.hpp"
#include "riffle/errors.hpp"

namespace riffle::report {

// Every command renders to the same flat schema so the serializers stay
// format-agnostic.  All cells are pre-formatted strings; given identical
// inputs the bytes are identical run to run.
inline constexpr int kColumnCount = 8;
extern const char* const kColumnNames[kColumnCount];
// deck, a, k, metric, value, method, error_bound, provenance

struct Row {
    std::string deck;
    std::string a;
    std::string k;
    std::string metric;
    std::string value;
    std::string method;
    std::string error_bound;
    std::string provenance;

    const std::string& col(int i) const;
};

struct Rows {
    std::vector<Row> rows;
};

// Shuffle counts for one invocation: either k values (so a = 2^k) or raw
// hand counts.  Exactly one interpretation per call.
struct ShuffleSet {
    std::vector<std::uint64_t> values;
    bool values_are_k = true;
};

// Parses "3", "1..12" or "2,4,6" into a value list.  Throws InputError on
// malformed text, empty ranges, or k >= 64.
ShuffleSet parse_shuffle_set(const std::string& text, bool values_are_k);

std::uint64_t hands_for(const ShuffleSet& set, std::size_t index);

enum class SepMethod { kExact, kRuleOfThumb, kBoth };
SepMethod parse_sep_method(const std::string& text);

// Separation of the sorted deck, by the exact composition sum and/or the
// rule of thumb (with its accuracy bound in error_bound when it applies).
Rows cmd_sep(const DeckSpec& deck, const ShuffleSet& shuffles, SepMethod method,
             int digits, const Budgets& budgets);

// Distances for one tracked card; start is "bottom", "top", or a 1-based
// position from the top.
Rows cmd_track(int n, const std::string& start, const ShuffleSet& shuffles, int digits);

// Distances for the whole ordering of n distinct cards.
Rows cmd_fulldeck(int n, const ShuffleSet& shuffles, int digits);

// Two-sided bounds for the tracked bottom card, plus the n/(2a) tail
// estimate for separation.
Rows cmd_bounds(int n, const ShuffleSet& shuffles, int digits);

// The two one-riffle variation distances for a half+half two-color deck:
// sorted start and alternating start.
Rows cmd_redblack(int half, int digits);

// Exhaustive enumeration of the quotient walk from the sorted start.
Rows cmd_oracle(const DeckSpec& deck, const ShuffleSet& shuffles, int digits,
                const Budgets& budgets);

// Monte Carlo run; feature is "arrangement", "tracked", or "colorword";
// start names the tracked card as in cmd_track and is ignored otherwise.
Rows cmd_simulate(const DeckSpec& deck, const ShuffleSet& shuffles,
                  std::uint64_t repetitions, std::uint64_t seed,
                  const std::string& feature, const std::string& start,
                  unsigned workers, int digits, const Budgets& budgets);

// RFC-4180 quoting; header line first; "\n" line ends.
std::string to_csv(const Rows& rows);

// Array of objects with keys in column order; two-space indent.
std::string to_json(const Rows& rows);

// Space-padded column view for terminals.
std::string to_table(const Rows& rows);

} // namespace riffle::report
