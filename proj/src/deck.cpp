#include "riffle/deck.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "riffle/errors.hpp"

namespace riffle {
namespace {

constexpr int kMaxCards = 100000;

const std::pair<std::string_view, std::string_view> kPresets[] = {
    {"bd52", "52x1"},
    {"blackjack", "9x4,16"},
    {"suits", "4x13"},
    {"redblack", "26,26"},
    {"zener", "5x5"},
};

int parse_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.begin(), text.end(), value);
    if (ec != std::errc() || ptr != text.end())
        throw InputError("deck expression: bad number '" + std::string(text) + "'");
    return value;
}

} // namespace

int DeckSpec::cards() const {
    return std::accumulate(piles.begin(), piles.end(), 0);
}

int DeckSpec::pile_count() const {
    return static_cast<int>(piles.size());
}

int DeckSpec::min_pile() const {
    return piles.empty() ? 0 : *std::min_element(piles.begin(), piles.end());
}

void DeckSpec::validate() const {
    if (piles.empty())
        throw InputError("deck expression: no piles");
    for (int p : piles)
        if (p < 1)
            throw InputError("deck expression: pile sizes must be positive");
    long long n = 0;
    for (int p : piles)
        n += p;
    if (n > kMaxCards)
        throw InputError("deck expression: more than 100000 cards");
}

std::string DeckSpec::label() const {
    std::string compressed;
    for (size_t i = 0; i < piles.size();) {
        size_t j = i;
        while (j < piles.size() && piles[j] == piles[i])
            ++j;
        if (!compressed.empty())
            compressed.push_back(',');
        if (j - i > 1)
            compressed += std::to_string(j - i) + "x";
        compressed += std::to_string(piles[i]);
        i = j;
    }
    for (const auto& [name, expr] : kPresets)
        if (*this == parse(expr))
            return std::string(name);
    return compressed;
}

DeckSpec DeckSpec::parse(std::string_view text) {
    for (const auto& [name, expr] : kPresets)
        if (text == name)
            return parse(expr);
    if (text.empty())
        throw InputError("deck expression: empty");
    DeckSpec deck;
    while (!text.empty()) {
        const size_t comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty())
            throw InputError("deck expression: empty item");
        const size_t x = item.find('x');
        int count = 1;
        std::string_view size_part = item;
        if (x != std::string_view::npos) {
            count = parse_int(item.substr(0, x));
            size_part = item.substr(x + 1);
            if (count < 1)
                throw InputError("deck expression: repeat count must be positive");
        }
        const int size = parse_int(size_part);
        if (size < 1)
            throw InputError("deck expression: pile sizes must be positive");
        if (count > kMaxCards || static_cast<long long>(deck.piles.size()) + count > kMaxCards)
            throw InputError("deck expression: more than 100000 piles");
        deck.piles.insert(deck.piles.end(), static_cast<size_t>(count), size);
    }
    deck.validate();
    return deck;
}

DeckSpec DeckSpec::singletons(int n) {
    if (n < 1)
        throw InputError("deck size must be positive");
    DeckSpec deck;
    deck.piles.assign(static_cast<size_t>(n), 1);
    return deck;
}

Arrangement sorted_word(const DeckSpec& deck) {
    deck.validate();
    Arrangement word;
    word.reserve(static_cast<size_t>(deck.cards()));
    for (size_t t = 0; t < deck.piles.size(); ++t)
        word.insert(word.end(), static_cast<size_t>(deck.piles[t]), static_cast<std::uint8_t>(t + 1));
    return word;
}

Arrangement reversed_word(const DeckSpec& deck) {
    Arrangement word = sorted_word(deck);
    std::reverse(word.begin(), word.end());
    return word;
}

std::string word_string(const Arrangement& word) {
    const bool wide = std::any_of(word.begin(), word.end(), [](std::uint8_t v) { return v > 9; });
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (wide && i)
            out.push_back(',');
        out += std::to_string(static_cast<int>(word[i]));
    }
    return out;
}

Arrangement alternating_word(int half) {
    if (half < 1)
        throw InputError("half-deck size must be positive");
    Arrangement word;
    word.reserve(static_cast<size_t>(2 * half));
    for (int i = 0; i < half; ++i) {
        word.push_back(1);
        word.push_back(2);
    }
    return word;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

Permutation inverse(const Permutation& p) {
    Permutation inv(p.size());
    for (size_t j = 0; j < p.size(); ++j)
        inv[static_cast<size_t>(p[j])] = static_cast<int>(j);
    return inv;
}

int descents(const Permutation& p) {
    int count = 0;
    for (size_t j = 0; j + 1 < p.size(); ++j)
        if (p[j] > p[j + 1])
            ++count;
    return count;
}

int rising_sequences(const Permutation& p) {
    if (p.empty())
        return 0;
    return 1 + descents(inverse(p));
}

} // namespace riffle
