#include "riffle/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace riffle {

BigInt multinomial(int n, std::span<const int> parts) {
    if (n < 0)
        throw InputError("multinomial: negative total");
    long long sum = 0;
    for (int p : parts) {
        if (p < 0)
            throw InputError("multinomial: negative part");
        sum += p;
    }
    if (sum != n)
        throw InputError("multinomial: parts do not sum to the total");
    BigInt result = 1;
    unsigned long used = 0;
    for (int p : parts) {
        used += static_cast<unsigned long>(p);
        result *= binomial(used, static_cast<unsigned long>(p));
    }
    return result;
}

std::vector<BigInt> eulerian_numbers(int n) {
    if (n < 1)
        throw InputError("eulerian_numbers: n must be positive");
    std::vector<BigInt> row{1};
    for (int k = 2; k <= n; ++k) {
        std::vector<BigInt> next(static_cast<size_t>(k));
        for (int r = 1; r <= k; ++r) {
            BigInt v = 0;
            if (r <= k - 1)
                v += r * row[static_cast<size_t>(r - 1)];
            if (r >= 2)
                v += (k - r + 1) * row[static_cast<size_t>(r - 2)];
            next[static_cast<size_t>(r - 1)] = v;
        }
        row = std::move(next);
    }
    return row;
}

BigInt arrangement_count(const DeckSpec& deck) {
    return multinomial(deck.cards(), deck.piles);
}

std::vector<Arrangement> enumerate_arrangements(const DeckSpec& deck, const Budgets& budgets) {
    deck.validate();
    const BigInt count = arrangement_count(deck);
    if (cmp(count, budgets.states) > 0) {
        const std::uint64_t needed = count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
        throw CapacityError("states", "--budget-states", needed, budgets.states,
                            "arrangement enumeration needs " + count.get_str() +
                                " cells, limit " + std::to_string(budgets.states) +
                                "; raise --budget-states");
    }
    std::vector<Arrangement> all;
    all.reserve(count.get_ui());
    Arrangement word = sorted_word(deck);
    do {
        all.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return all;
}

void for_each_composition(int total, int cells, int min_part,
                          const std::function<void(std::span<const int>)>& fn) {
    if (cells < 1)
        throw InputError("for_each_composition: need at least one cell");
    const int spare = total - cells * min_part;
    if (spare < 0)
        return;
    // Nijenhuis-Wilf NEXCOM over the spare amount; min_part is added back on
    // the way out.
    std::vector<int> r(static_cast<size_t>(cells), 0);
    r[0] = spare;
    std::vector<int> parts(static_cast<size_t>(cells));
    int t = spare;
    int h = 0;
    for (;;) {
        for (int i = 0; i < cells; ++i)
            parts[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + min_part;
        fn(parts);
        if (cells == 1 || r[static_cast<size_t>(cells - 1)] == spare)
            return;
        if (t != 1)
            h = 0;
        t = r[static_cast<size_t>(h)];
        r[static_cast<size_t>(h)] = 0;
        r[0] = t - 1;
        r[static_cast<size_t>(h + 1)] += 1;
        ++h;
    }
}

} // namespace riffle
