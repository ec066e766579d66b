#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "riffle/combinatorics.hpp"
#include "riffle/exact.hpp"
#include "riffle/oracle.hpp"

using namespace riffle;
using namespace riffle::exact;

namespace {

Budgets budgets;

// Partitions of n in descending-part order, used as the deck sweep.
std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

DeckSpec deck_of(const std::vector<int>& piles) {
    DeckSpec d;
    d.piles = piles;
    return d;
}

// Sorted-start row of the quotient walk without building the full chain:
// push every map's image of the sorted word and tally.
std::map<Arrangement, BigInt> sorted_start_row(const DeckSpec& deck, std::uint64_t a) {
    const auto maps = oracle::exhaustive_shuffle_maps(deck.cards(), a, budgets);
    const Arrangement start = sorted_word(deck);
    std::map<Arrangement, BigInt> tally;
    for (const auto& mc : maps.maps)
        tally[oracle::apply_map(mc.map, start)] += mc.count;
    return tally;
}

} // namespace

TEST_CASE("single-ordering probability after one shuffle") {
    CHECK(bd_probability(5, 1, 1) == 1);
    CHECK(bd_probability(5, 1, 2) == 0);
    CHECK(bd_probability(3, 2, 2) == BigRat(1, 8));
    CHECK(bd_probability(4, 2, 1) == BigRat(5, 16));
    CHECK_THROWS_AS(bd_probability(3, 2, 0), InputError);
    CHECK_THROWS_AS(bd_probability(3, 2, 4), InputError);
}

TEST_CASE("ordering probabilities match the enumeration oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t a = 2; a <= 3; ++a) {
            const auto words = oracle::exhaustive_shuffle_distribution(n, a, budgets);
            BigRat total = 0;
            for (const auto& [word, mass] : words) {
                CHECK(mass == bd_probability(n, a, rising_sequences(word)));
                total += mass;
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("full-deck distances reproduce the reference decimals") {
    CHECK(format_decimal(full_deck_distances(52, 1 << 7).tv, 3) == "0.334");
    CHECK(format_decimal(full_deck_distances(52, 1 << 12).sep, 3) == "0.278");
    // The two reference tables disagree at this cell (.732 vs .729); the
    // exact formula is the arbiter and lands on .732.
    CHECK(format_decimal(full_deck_distances(52, 1 << 10).sep, 3) == "0.732");
    // Exact value 0.9315277...; the reference prints the truncation .931.
    CHECK(format_decimal(full_deck_distances(52, 1 << 9).sep, 3) == "0.932");
    CHECK(format_decimal(full_deck_distances(52, 1 << 8).sep, 3) == "0.996");

    // One hand leaves the deck at the identity, i.e. maximally non-uniform.
    const auto one = full_deck_distances(3, 1);
    CHECK(one.tv == BigRat(5, 6));
    CHECK(one.sep == 1);
}

TEST_CASE("full-deck distances equal brute distances on distinct decks") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t a = 2; a <= 3; ++a) {
            const auto chain = oracle::build_quotient_chain(DeckSpec::singletons(n), a, budgets);
            const auto brute = oracle::brute_distances(chain, sorted_word(DeckSpec::singletons(n)));
            const auto formula = full_deck_distances(n, a);
            CHECK(formula.tv == brute.tv);
            CHECK(formula.sep == brute.sep);
        }
    }
}

TEST_CASE("two-card and three-card transition matrices match the displays") {
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 8ULL}) {
        const auto m = single_card_matrix(2, a, budgets);
        const BigRat denom(1, 2 * a);
        CHECK(m.at(0, 0) == (a + 1) * denom);
        CHECK(m.at(0, 1) == (a - 1) * denom);
        CHECK(m.at(1, 0) == (a - 1) * denom);
        CHECK(m.at(1, 1) == (a + 1) * denom);
    }
    const auto m32 = single_card_matrix(3, 2, budgets);
    const std::vector<int> expected{15, 6, 3, 6, 12, 6, 3, 6, 15};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m32.at(i, j) == make_rat(expected[static_cast<size_t>(3 * i + j)], 24));
    for (std::uint64_t a : {2ULL, 3ULL, 7ULL}) {
        const auto m3 = single_card_matrix(3, a, budgets);
        const BigRat denom(1, 6 * a * a);
        CHECK(m3.at(0, 0) == (a + 1) * (2 * a + 1) * denom);
        CHECK(m3.at(0, 1) == 2 * (a * a - 1) * denom);
        CHECK(m3.at(0, 2) == (a - 1) * (2 * a - 1) * denom);
        CHECK(m3.at(1, 1) == 2 * (a * a + 2) * denom);
    }
    const auto identity = single_card_matrix(4, 1, budgets);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(identity.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("transition rows match the enumeration oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t a = 2; a <= 3; ++a) {
            const auto dist = oracle::exhaustive_shuffle_maps(n, a, budgets);
            const auto mat = single_card_matrix(n, a, budgets);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    BigInt hits = 0;
                    for (const auto& mc : dist.maps)
                        if (mc.map[static_cast<size_t>(i)] == j)
                            hits += mc.count;
                    CHECK(mat.at(i, j) == make_rat(hits, dist.outcomes));
                }
        }
    }
}

TEST_CASE("bottom-card law") {
    const auto point = bottom_card_distribution(5, 1);
    for (int j = 0; j < 5; ++j)
        CHECK(point[static_cast<size_t>(j)] == (j == 4 ? 1 : 0));
    const auto two = bottom_card_distribution(2, 2);
    CHECK(two[0] == BigRat(1, 4));
    CHECK(two[1] == BigRat(3, 4));
    for (int n = 2; n <= 10; ++n)
        for (std::uint64_t a = 2; a <= 3; ++a) {
            const auto direct = bottom_card_distribution(n, a);
            const auto row = single_card_row(n, a, n);
            CHECK(direct == row);
            BigRat total = 0;
            for (const auto& p : direct)
                total += p;
            CHECK(total == 1);
        }
}

TEST_CASE("tracked-card distances reproduce the reference decimals") {
    const auto bottom4 = tracked_card_distances(52, 1 << 4, 52);
    CHECK(format_decimal(bottom4.tv, 3) == "0.367");
    CHECK(format_decimal(bottom4.sep, 3) == "0.875");
    const auto middle2 = tracked_card_distances(52, 1 << 2, 26);
    CHECK(format_decimal(middle2.tv, 3) == "0.152");
    CHECK(format_decimal(middle2.sep, 3) == "0.487");
    CHECK(format_decimal(tracked_card_distances(52, 1 << 10, 52).sep, 3) == "0.025");
    const auto tiny = tracked_card_distances(2, 2, 2);
    CHECK(tiny.tv == BigRat(1, 4));
    CHECK(tiny.sep == BigRat(1, 2));
}

TEST_CASE("matrix property report validates every identity") {
    for (int n = 2; n <= 8; ++n) {
        const auto report = matrix_properties_check(n, 2, 3, budgets);
        CHECK(report.rows_stochastic);
        CHECK(report.cols_stochastic);
        CHECK(report.cross_symmetric);
        CHECK(report.multiplicative);
        CHECK(report.eigenbasis_complete);
        for (const auto& e : report.eigenvectors) {
            CHECK(e.alternating_form_holds);
            // The published closed form only verifies at order 1, where the
            // two candidates coincide; the alternating-sign variant is the
            // one that holds at every order.
            CHECK(e.published_form_holds == (e.order == 1));
        }
        CHECK(report.all_passed());
    }
    CHECK(matrix_properties_check(5, 3, 4, budgets).all_passed());
    CHECK(matrix_properties_check(6, 4, 4, budgets).all_passed());
    Budgets tiny;
    tiny.matrix_order = 4;
    CHECK_THROWS_AS(matrix_properties_check(10, 2, 2, tiny), CapacityError);
}

TEST_CASE("separation composition sum: closed cases") {
    // One pile: only the trivial composition, sum is a^n.
    const DeckSpec flat = deck_of({5});
    for (std::uint64_t a : {1ULL, 2ULL, 7ULL}) {
        CHECK(separation_core_sum(flat, a, budgets) == pow_ui(BigInt(a), 5));
        CHECK(general_sep(flat, a, budgets) == 0);
    }
    // All singletons: the product telescopes and the sum counts C(a, n).
    for (int n = 2; n <= 8; ++n)
        for (std::uint64_t a : {2ULL, 5ULL, 16ULL}) {
            CHECK(separation_core_sum(DeckSpec::singletons(n), a, budgets) ==
                  binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(n)));
            CHECK(general_sep(DeckSpec::singletons(n), a, budgets) ==
                  full_deck_distances(n, a).sep);
        }
    // Fewer hands than piles: some pile gets no positive part.
    CHECK(general_sep(deck_of({3, 3, 3}), 2, budgets) == 1);
    CHECK(least_likely_probability(deck_of({1, 1}), 2, budgets) == BigRat(1, 4));
    CHECK(general_sep(deck_of({1, 1}), 2, budgets) == BigRat(1, 2));
}

TEST_CASE("separation matches the reference decimals for card decks") {
    CHECK(format_decimal(general_sep(DeckSpec::parse("redblack"), 1 << 3, budgets), 3) ==
          "0.849");
    CHECK(format_decimal(general_sep(DeckSpec::parse("zener"), 1 << 4, budgets), 3) ==
          "0.943");
    CHECK(format_decimal(general_sep(DeckSpec::parse("redblack"), 2, budgets), 3) == "0.890");
    CHECK(format_decimal(general_sep(DeckSpec::parse("redblack"), 4, budgets), 3) == "0.890");
    CHECK(format_decimal(general_sep(DeckSpec::parse("suits"), 4, budgets), 3) == "0.997");
}

TEST_CASE("separation sum is invariant under pile reversal") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& piles : partitions(n)) {
            std::vector<int> rev(piles.rbegin(), piles.rend());
            for (std::uint64_t a : {2ULL, 3ULL, 5ULL})
                CHECK(separation_core_sum(deck_of(piles), a, budgets) ==
                      separation_core_sum(deck_of(rev), a, budgets));
        }
}

TEST_CASE("separation DP agrees with the sorted-start oracle row") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& piles : partitions(n))
            for (std::uint64_t a = 2; a <= 3; ++a) {
                const DeckSpec deck = deck_of(piles);
                const auto row = sorted_start_row(deck, a);
                const BigInt outcomes = pow_ui(BigInt(a), static_cast<unsigned long>(n));
                const BigInt states = arrangement_count(deck);
                // Reversed arrangement mass equals the DP value even when
                // other arrangements tie for the minimum.
                const auto rev = reversed_word(deck);
                const auto it = row.find(rev);
                const BigInt rev_mass = it == row.end() ? BigInt(0) : it->second;
                CHECK(make_rat(rev_mass, outcomes) ==
                      least_likely_probability(deck, a, budgets));
                BigInt min_mass = rev_mass;
                if (BigInt(static_cast<long>(row.size())) == states)
                    for (const auto& [word, mass] : row)
                        min_mass = std::min(min_mass, mass);
                else
                    min_mass = 0;
                CHECK(1 - states * make_rat(min_mass, outcomes) ==
                      general_sep(deck, a, budgets));
                CHECK(make_rat(min_mass, outcomes) ==
                      least_likely_probability(deck, a, budgets));
            }
}

TEST_CASE("separation DP matches wider-hand oracle rows") {
    for (const auto& piles : partitions(7))
        for (std::uint64_t a : {5ULL, 6ULL}) {
            const DeckSpec deck = deck_of(piles);
            const auto row = sorted_start_row(deck, a);
            const BigInt outcomes = pow_ui(BigInt(a), 7);
            const auto it = row.find(reversed_word(deck));
            const BigInt rev_mass = it == row.end() ? BigInt(0) : it->second;
            CHECK(make_rat(rev_mass, outcomes) == least_likely_probability(deck, a, budgets));
        }
}

TEST_CASE("red/black word probabilities") {
    CHECK(redblack_word_probability(2, {1, 1, 2, 2}) == BigRat(7, 16));
    CHECK(redblack_word_probability(2, {1, 2, 2, 1}) == BigRat(1, 8));
    CHECK(redblack_word_probability(2, {1, 2, 1, 2}) == BigRat(3, 16));
    CHECK(redblack_word_probability(2, {2, 2, 1, 1}) == BigRat(1, 16));
    CHECK_THROWS_AS(redblack_word_probability(2, {1, 1, 1, 2}), InputError);
    CHECK_THROWS_AS(redblack_word_probability(2, {1, 2}), InputError);

    for (int half = 1; half <= 6; ++half) {
        DeckSpec deck = deck_of({half, half});
        BigRat total = 0;
        for (const auto& word : enumerate_arrangements(deck, budgets))
            total += redblack_word_probability(half, word);
        CHECK(total == 1);
    }
}

TEST_CASE("red/black word formula matches the chain row exactly") {
    for (int half = 2; half <= 5; ++half) {
        const DeckSpec deck = deck_of({half, half});
        const auto row = sorted_start_row(deck, 2);
        const BigInt outcomes = pow_ui(2, static_cast<unsigned long>(2 * half));
        for (const auto& word : enumerate_arrangements(deck, budgets)) {
            const auto it = row.find(word);
            const BigInt mass = it == row.end() ? BigInt(0) : it->second;
            CHECK(redblack_word_probability(half, word) == make_rat(mass, outcomes));
        }
    }
}

TEST_CASE("red/black single-shuffle variation distance") {
    CHECK(redblack_tv(2) == BigRat(7, 24));
    CHECK(format_decimal(redblack_tv(26), 3) == "0.579");
    BigRat prev = redblack_tv(10);
    for (int half : {20, 50, 100, 200}) {
        const BigRat cur = redblack_tv(half);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(prev > BigRat(3, 4));
    CHECK(prev < 1);
    for (int half = 1; half <= 5; ++half) {
        const auto chain = oracle::build_quotient_chain(deck_of({half, half}), 2, budgets);
        CHECK(oracle::brute_distances(chain, sorted_word(deck_of({half, half}))).tv ==
              redblack_tv(half));
    }
}

TEST_CASE("alternating-start closed form") {
    CHECK(alternating_tv(2) == BigRat(1, 12));
    CHECK(format_decimal(alternating_tv(26), 3) == "0.500");
    CHECK(alternating_tv(40) < BigRat(1, 2));
    CHECK(BigRat(1, 2) - alternating_tv(40) < BigRat(1, 1000000));
    for (int half = 1; half <= 6; ++half) {
        const auto report = oracle::gilbreath_classify(half, budgets);
        CHECK(report.printed_tv == alternating_tv(half));
    }
}
