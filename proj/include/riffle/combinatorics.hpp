#pragma once

#include <functional>
#include <span>
#include <vector>

#include "riffle/deck.hpp"
#include "riffle/errors.hpp"
#include "riffle/rational.hpp"

namespace riffle {

// n! / (parts[0]! * parts[1]! * ...); parts must be nonnegative and sum to n.
BigInt multinomial(int n, std::span<const int> parts);

// Counts of permutations of n by number of rising sequences, r = 1..n at
// index r-1.  Computed by the additive two-term recurrence, so every entry
// is exact.
std::vector<BigInt> eulerian_numbers(int n);

// All distinct orderings of the deck, lexicographically sorted.  Throws
// CapacityError when the count exceeds budgets.states.
std::vector<Arrangement> enumerate_arrangements(const DeckSpec& deck, const Budgets& budgets);

// Number of distinct orderings as an integer.
BigInt arrangement_count(const DeckSpec& deck);

// Visits every way to write `total` as an ordered sum of `cells` parts, each
// at least `min_part`.  The span passed to fn is reused between calls.
void for_each_composition(int total, int cells, int min_part,
                          const std::function<void(std::span<const int>)>& fn);

} // namespace riffle
