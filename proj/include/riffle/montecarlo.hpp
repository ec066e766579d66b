#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riffle/asymptotics.hpp"
#include "riffle/deck.hpp"
#include "riffle/errors.hpp"
#include "riffle/rational.hpp"

namespace riffle::mc {

// What gets tabulated per sample.  Arrangement and ColorWord both tabulate
// the deck word read off after the shuffle (they coincide by construction:
// a color word is the arrangement of the colored deck); Tracked follows one
// card's final position.
enum class Feature { kArrangement, kTracked, kColorWord };

struct SamplerConfig {
    DeckSpec deck;
    std::uint64_t a = 2;
    std::uint64_t repetitions = 1;
    std::uint64_t seed = 0;
    Feature feature = Feature::kArrangement;
    int tracked_start = 0; // 1-based start position, required for kTracked
    unsigned workers = 1;
};

// Counter-based per-sample randomness.  The derivation is part of the
// external contract so reruns and any worker partition agree bit-for-bit:
// sample i uses a SplitMix64 generator whose initial state is
//   seed + (i * 2^20 + 1) * 0x9E3779B97F4A7C15,
// each draw advances the state by the same constant, and digits come from
// rejection sampling of the mixed 64-bit outputs.  The 2^20 stride keeps the
// state windows of different samples disjoint.
struct DigitStream {
    std::uint64_t state;

    DigitStream(std::uint64_t seed, std::uint64_t sample_index);
    std::uint64_t next_word();
    std::uint64_t next_digit(std::uint64_t a); // uniform in [0, a)
};

// One forward a-handed shuffle as a position map: entry r is where the card
// at position r lands.  Distributed exactly as the a-shuffle measure.
Permutation sample_a_shuffle(int n, std::uint64_t a, DigitStream& stream);

struct EmpiricalReport {
    SamplerConfig config;                 // echo
    std::vector<std::uint64_t> counts;    // one cell per feature value
    BigRat tv;                            // plug-in distance to uniform
    std::optional<BigRat> sep;            // present only when every cell was hit
    asym::Real tv_std_error;              // conservative standard-error estimate

    std::uint64_t cells() const { return counts.size(); }
};

// Samples config.repetitions shuffles from the sorted deck and tabulates the
// selected feature.  Identical config (including seed) gives an identical
// report regardless of the worker count.  Throws CapacityError when the
// feature space exceeds budgets.states cells.
EmpiricalReport estimate_distances(const SamplerConfig& config, const Budgets& budgets);

} // namespace riffle::mc
