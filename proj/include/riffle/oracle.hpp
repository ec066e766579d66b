#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "riffle/deck.hpp"
#include "riffle/errors.hpp"
#include "riffle/rational.hpp"

namespace riffle::oracle {

// Distribution of the position-forward map of one a-handed riffle on n
// cards, computed by enumerating all a^n digit sequences.  Every other
// distribution in the library can be checked against this one.
struct MapCount {
    Permutation map;     // entry j: where the card at position j lands
    std::uint64_t count; // digit sequences producing this map
};

struct ShuffleMapDistribution {
    int n = 0;
    BigInt outcomes;             // total digit sequences
    std::vector<MapCount> maps;  // sorted by map, lexicographically
};

ShuffleMapDistribution exhaustive_shuffle_maps(int n, std::uint64_t a, const Budgets& budgets);

// Distribution of the composition "first an A-map, then a B-map".
ShuffleMapDistribution convolve(const ShuffleMapDistribution& first,
                                const ShuffleMapDistribution& second);

// Orderings of n distinct cards with their probabilities, heaviest code
// path only for n small enough to enumerate.
std::vector<std::pair<Permutation, BigRat>> exhaustive_shuffle_distribution(
    int n, std::uint64_t a, const Budgets& budgets);

Arrangement apply_map(const Permutation& map, const Arrangement& word);

// Walk on distinguishable orderings of a repeated-card deck.  Transition
// counts share the single denominator `outcomes`.
struct QuotientChain {
    DeckSpec deck;
    std::uint64_t a = 0;
    BigInt outcomes;
    std::vector<Arrangement> states; // lexicographically sorted
    std::vector<std::vector<std::uint64_t>> counts;

    int index_of(const Arrangement& word) const; // -1 when absent
};

QuotientChain build_quotient_chain(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets);

// Checks that `steps` successive a-handed shuffles match one a^steps-handed
// shuffle, both at the level of position maps and of the quotient walk.
bool verify_convolution_power(const DeckSpec& deck, std::uint64_t a, int steps,
                              const Budgets& budgets);

struct BruteDistances {
    BigRat tv;
    BigRat sep;
    BigRat min_mass;
    Arrangement argmin;       // lexicographically first minimizer
    bool argmin_unique = false;
};

BruteDistances brute_distances(const QuotientChain& chain, const Arrangement& start);

// One riffle of the interleaved red/black deck, fully enumerated.  Splits
// every reachable ordering by the parity of the cut that produces it and
// reports the exact variation distance alongside the closed-form value the
// reference table prints (which is half the enumerated one from half >= 3).
struct GilbreathReport {
    int half = 0;
    BigInt orderings;                  // distinct colour words
    std::uint64_t reachable = 0;
    std::uint64_t odd_reachable = 0;   // reachable via an odd cut
    std::uint64_t even_reachable = 0;  // reachable via an even cut
    std::uint64_t both_parities = 0;
    std::uint64_t alternating_mass = 0;
    bool masses_match_closed_form = false;
    bool overlap_is_alternating_only = false;
    BigRat enumerated_tv;
    BigRat printed_tv;
    bool enumerated_is_twice_printed = false;
};

GilbreathReport gilbreath_classify(int half, const Budgets& budgets);

} // namespace riffle::oracle
