#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace riffle {

// A deck with repeated cards: piles[t] copies of label t+1, reading from the
// top of the sorted deck down.  Distinct cards are the all-ones special case.
struct DeckSpec {
    std::vector<int> piles;

    int cards() const;      // n, total number of cards
    int pile_count() const; // m, number of distinct labels
    int min_pile() const;   // d, smallest pile size

    // Canonical display form: preset name when one matches, otherwise the
    // comma form with runs compressed ("13,13,13,13" -> "4x13").
    std::string label() const;

    // Accepts preset names (bd52, blackjack, suits, redblack, zener) and
    // comma-separated pile lists where each item is either a pile size or
    // COUNTxSIZE.  Throws InputError on anything else.
    static DeckSpec parse(std::string_view text);

    static DeckSpec singletons(int n);

    void validate() const; // throws InputError unless every pile is positive

    auto operator<=>(const DeckSpec&) const = default;
};

// A deck order as the sequence of labels from top to bottom, values 1..m.
using Arrangement = std::vector<std::uint8_t>;

Arrangement sorted_word(const DeckSpec& deck);
Arrangement reversed_word(const DeckSpec& deck);

// "121..." for up to nine labels, comma-separated numbers beyond that.
std::string word_string(const Arrangement& word);

// Red/black deck of `half` cards per colour, interleaved 1212...
Arrangement alternating_word(int half);

// Permutations use 0-based values; entry j is where the card at position j
// lands (maps are position-forward throughout).
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
int descents(const Permutation& p);

// Maximal ascending runs of the inverse: 1 + descents(inverse(p)).
int rising_sequences(const Permutation& p);

} // namespace riffle
