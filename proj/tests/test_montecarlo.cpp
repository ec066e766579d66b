#include <cmath>
#include <numeric>

#include "doctest.h"
#include "riffle/combinatorics.hpp"
#include "riffle/exact.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/oracle.hpp"
#include "stat_utils.hpp"

using namespace riffle;
using namespace riffle::mc;

namespace {

Budgets budgets;

// Singleton-deck arrangements use 1-based pile labels; permutation helpers
// want 0-based values.
Permutation as_permutation(const Arrangement& w) {
    Permutation p(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        p[i] = static_cast<int>(w[i]) - 1;
    return p;
}

SamplerConfig base_config(DeckSpec deck, std::uint64_t a, std::uint64_t reps,
                          std::uint64_t seed) {
    SamplerConfig c;
    c.deck = std::move(deck);
    c.a = a;
    c.repetitions = reps;
    c.seed = seed;
    return c;
}

} // namespace

TEST_CASE("one hand leaves every deck unchanged") {
    for (std::uint64_t seed : {0ULL, 1ULL, 999ULL}) {
        for (std::uint64_t i = 0; i < 50; ++i) {
            DigitStream stream(seed, i);
            const Permutation map = sample_a_shuffle(8, 1, stream);
            for (int r = 0; r < 8; ++r)
                CHECK(map[static_cast<size_t>(r)] == r);
        }
    }
}

TEST_CASE("digit rejection is close to uniform") {
    DigitStream stream(42, 0);
    std::vector<std::uint64_t> hits(3, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        ++hits[stream.next_digit(3)];
    for (const std::uint64_t h : hits) {
        const double p = static_cast<double>(h) / draws;
        CHECK(std::fabs(p - 1.0 / 3) < 4 * std::sqrt((1.0 / 3) * (2.0 / 3) / draws));
    }
}

TEST_CASE("sampled permutation masses match the one-shuffle law") {
    const auto config = base_config(DeckSpec::singletons(3), 2, 1000000, 20240817);
    const auto report = estimate_distances(config, budgets);
    const auto arrangements = enumerate_arrangements(config.deck, budgets);
    REQUIRE(report.counts.size() == arrangements.size());
    const double reps = static_cast<double>(config.repetitions);
    for (size_t i = 0; i < arrangements.size(); ++i) {
        const double exact_p =
            to_double(exact::bd_probability(3, 2, rising_sequences(as_permutation(arrangements[i]))));
        const double emp = static_cast<double>(report.counts[i]) / reps;
        const double se = std::sqrt(exact_p * (1 - exact_p) / reps);
        CHECK(std::fabs(emp - exact_p) <= 4 * se);
    }
    CHECK(std::accumulate(report.counts.begin(), report.counts.end(), 0ULL) ==
          config.repetitions);
}

TEST_CASE("chi-square goodness of fit against the exact masses") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t a : {2ULL, 3ULL}) {
            const auto config =
                base_config(DeckSpec::singletons(n), a, 1000000,
                            7700000ULL + static_cast<std::uint64_t>(n) * 10 + a);
            const auto report = estimate_distances(config, budgets);
            const auto arrangements = enumerate_arrangements(config.deck, budgets);
            double chi2 = 0;
            int support = 0;
            for (size_t i = 0; i < arrangements.size(); ++i) {
                const double expected =
                    to_double(exact::bd_probability(n, a, rising_sequences(as_permutation(arrangements[i])))) *
                    static_cast<double>(config.repetitions);
                if (expected == 0) {
                    // Off-support cells must stay empty.
                    CHECK(report.counts[i] == 0);
                    continue;
                }
                ++support;
                const double diff = static_cast<double>(report.counts[i]) - expected;
                chi2 += diff * diff / expected;
            }
            const double p = stat::chi_square_p_value(chi2, support - 1);
            CHECK(p > 0.001);
        }
}

TEST_CASE("tracked bottom card reproduces the exact variation distance") {
    auto config = base_config(DeckSpec::singletons(52), 1 << 4, 1000000, 8675309);
    config.feature = Feature::kTracked;
    config.tracked_start = 52;
    config.workers = 4;
    const auto report = estimate_distances(config, budgets);
    const double exact_tv = to_double(exact::tracked_card_distances(52, 1 << 4, 52).tv);
    CHECK(std::fabs(to_double(report.tv) - exact_tv) < 0.01);
    CHECK(std::accumulate(report.counts.begin(), report.counts.end(), 0ULL) ==
          config.repetitions);
}

TEST_CASE("identical configuration is bit-identical across worker counts") {
    auto config = base_config(DeckSpec::parse("5,5"), 4, 40000, 1234);
    config.feature = Feature::kColorWord;
    auto first = estimate_distances(config, budgets);
    for (unsigned workers : {2u, 3u, 7u}) {
        auto again = config;
        again.workers = workers;
        const auto rerun = estimate_distances(again, budgets);
        CHECK(rerun.counts == first.counts);
        CHECK(rerun.tv == first.tv);
        CHECK(rerun.sep == first.sep);
    }
    auto shifted = config;
    shifted.seed += 1;
    CHECK(estimate_distances(shifted, budgets).counts != first.counts);
}

TEST_CASE("color-word sampling agrees with the brute chain distance") {
    DeckSpec deck;
    deck.piles = {3, 3};
    auto config = base_config(deck, 2, 1000000, 5150);
    config.feature = Feature::kColorWord;
    config.workers = 2;
    const auto report = estimate_distances(config, budgets);
    const auto chain = oracle::build_quotient_chain(deck, 2, budgets);
    const auto brute = oracle::brute_distances(chain, sorted_word(deck));
    const double gap = std::fabs(to_double(report.tv) - to_double(brute.tv));
    const double se = report.tv_std_error.convert_to<double>();
    // The plug-in estimator is biased upward by at most the mean absolute
    // cell fluctuation; allow for it explicitly on top of the 3-sigma band.
    const int row = chain.index_of(sorted_word(deck));
    REQUIRE(row >= 0);
    double bias = 0;
    const double reps = static_cast<double>(config.repetitions);
    for (size_t j = 0; j < chain.states.size(); ++j) {
        const double p = to_double(
            make_rat(BigInt(chain.counts[static_cast<size_t>(row)][j]), chain.outcomes));
        bias += std::sqrt(p * (1 - p) / reps) / 2;
    }
    CHECK(gap <= 3 * se + bias);
}

TEST_CASE("degenerate and oversized requests") {
    auto one = base_config(DeckSpec::singletons(3), 2, 1, 7);
    const auto report = estimate_distances(one, budgets);
    CHECK(std::accumulate(report.counts.begin(), report.counts.end(), 0ULL) == 1);
    CHECK_FALSE(report.sep.has_value());

    auto zero = one;
    zero.repetitions = 0;
    CHECK_THROWS_AS(estimate_distances(zero, budgets), InputError);

    auto wide = base_config(DeckSpec::singletons(10), 2, 10, 7);
    CHECK_THROWS_AS(estimate_distances(wide, budgets), CapacityError);

    auto bad_track = one;
    bad_track.feature = Feature::kTracked;
    bad_track.tracked_start = 4;
    CHECK_THROWS_AS(estimate_distances(bad_track, budgets), InputError);
}

TEST_CASE("rising-sequence count of samples is consistent with the aggregate law") {
    // a = 2: all mass sits on one or two rising sequences and the mean is
    // within a hair of 2; every sample must land there.
    {
        double sum = 0;
        const int draws = 20000;
        for (int i = 0; i < draws; ++i) {
            DigitStream stream(97531, static_cast<std::uint64_t>(i));
            const Permutation map = sample_a_shuffle(52, 2, stream);
            Permutation word(52);
            for (size_t r = 0; r < word.size(); ++r)
                word[static_cast<size_t>(map[r])] = static_cast<int>(r);
            const int rs = rising_sequences(word);
            CHECK(rs <= 2);
            sum += rs;
        }
        CHECK(std::fabs(sum / draws - 2.0) < 1e-3);
    }
    // a = 64: the rising-sequence distribution is spread out; compare the
    // sample mean against the exact aggregate mean within four standard errors.
    {
        const auto eul = eulerian_numbers(52);
        BigRat mean = 0;
        for (int r = 1; r <= 52; ++r)
            mean += r * eul[static_cast<size_t>(r - 1)] *
                    exact::bd_probability(52, 64, r);
        const double exact_mean = to_double(mean);
        const int draws = 20000;
        double sum = 0;
        double sumsq = 0;
        for (int i = 0; i < draws; ++i) {
            DigitStream stream(24680, static_cast<std::uint64_t>(i));
            const Permutation map = sample_a_shuffle(52, 64, stream);
            Permutation word(52);
            for (size_t r = 0; r < word.size(); ++r)
                word[static_cast<size_t>(map[r])] = static_cast<int>(r);
            const double rs = rising_sequences(word);
            sum += rs;
            sumsq += rs * rs;
        }
        const double emp_mean = sum / draws;
        const double emp_var = (sumsq - sum * sum / draws) / (draws - 1);
        const double se = std::sqrt(emp_var / draws);
        CHECK(std::fabs(emp_mean - exact_mean) <= 4 * se);
    }
}
