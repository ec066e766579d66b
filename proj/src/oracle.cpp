#include "riffle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "riffle/combinatorics.hpp"

namespace riffle::oracle {
namespace {

constexpr int kMaxMapCards = 16; // maps are packed four bits per entry

std::uint64_t pack_map(const Permutation& m) {
    std::uint64_t key = 0;
    for (size_t r = 0; r < m.size(); ++r)
        key |= static_cast<std::uint64_t>(m[r]) << (4 * r);
    return key;
}

Permutation unpack_map(std::uint64_t key, int n) {
    Permutation m(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        m[static_cast<size_t>(r)] = static_cast<int>((key >> (4 * r)) & 0xF);
    return m;
}

void check_outcome_budget(const BigInt& total, const Budgets& budgets) {
    if (cmp(total, budgets.outcomes) > 0) {
        const std::uint64_t needed = total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;
        throw CapacityError("terms", "--budget-terms", needed, budgets.outcomes,
                            "exhaustive enumeration needs " + total.get_str() +
                                " digit sequences, limit " + std::to_string(budgets.outcomes) +
                                "; raise --budget-terms");
    }
}

std::vector<MapCount> sorted_map_counts(const std::unordered_map<std::uint64_t, std::uint64_t>& tally,
                                        int n) {
    std::vector<MapCount> maps;
    maps.reserve(tally.size());
    for (const auto& [key, count] : tally)
        maps.push_back({unpack_map(key, n), count});
    std::sort(maps.begin(), maps.end(),
              [](const MapCount& x, const MapCount& y) { return x.map < y.map; });
    return maps;
}

} // namespace

ShuffleMapDistribution exhaustive_shuffle_maps(int n, std::uint64_t a, const Budgets& budgets) {
    if (n < 1 || n > kMaxMapCards)
        throw InputError("map enumeration supports 1 to 16 cards");
    if (a < 1)
        throw InputError("shuffle hands must be positive");
    const BigInt total = pow_ui(BigInt(a), static_cast<unsigned long>(n));
    check_outcome_budget(total, budgets);

    std::vector<std::uint64_t> digits(static_cast<size_t>(n), 0);
    std::vector<std::uint64_t> bucket_count;
    if (a <= 4096)
        bucket_count.assign(a, 0);
    std::vector<std::uint64_t> offset(a <= 4096 ? a : 0, 0);
    Permutation map(static_cast<size_t>(n));
    std::vector<int> order(static_cast<size_t>(n));
    std::unordered_map<std::uint64_t, std::uint64_t> tally;

    for (;;) {
        if (!bucket_count.empty()) {
            std::fill(bucket_count.begin(), bucket_count.end(), 0);
            for (std::uint64_t d : digits)
                ++bucket_count[d];
            std::uint64_t running = 0;
            for (std::uint64_t v = 0; v < a; ++v) {
                offset[v] = running;
                running += bucket_count[v];
            }
            for (int p = 0; p < n; ++p)
                map[static_cast<size_t>(offset[digits[static_cast<size_t>(p)]]++)] = p;
        } else {
            for (int p = 0; p < n; ++p)
                order[static_cast<size_t>(p)] = p;
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                return digits[static_cast<size_t>(x)] < digits[static_cast<size_t>(y)];
            });
            map = order;
        }
        // map[r] is where the card at position r lands: digits are drawn per
        // result position, zero-digit positions take the top of the deck in
        // position order, and so on digit by digit.
        ++tally[pack_map(map)];

        int pos = 0;
        while (pos < n && digits[static_cast<size_t>(pos)] == a - 1) {
            digits[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n)
            break;
        ++digits[static_cast<size_t>(pos)];
    }

    ShuffleMapDistribution dist;
    dist.n = n;
    dist.outcomes = total;
    dist.maps = sorted_map_counts(tally, n);
    return dist;
}

ShuffleMapDistribution convolve(const ShuffleMapDistribution& first,
                                const ShuffleMapDistribution& second) {
    if (first.n != second.n)
        throw InputError("convolve: card counts differ");
    const BigInt total = first.outcomes * second.outcomes;
    if (!total.fits_ulong_p())
        throw InputError("convolve: outcome product exceeds 64 bits");
    std::unordered_map<std::uint64_t, std::uint64_t> tally;
    Permutation composed(static_cast<size_t>(first.n));
    for (const auto& f : first.maps) {
        for (const auto& s : second.maps) {
            for (int r = 0; r < first.n; ++r)
                composed[static_cast<size_t>(r)] =
                    s.map[static_cast<size_t>(f.map[static_cast<size_t>(r)])];
            tally[pack_map(composed)] += f.count * s.count;
        }
    }
    ShuffleMapDistribution dist;
    dist.n = first.n;
    dist.outcomes = total;
    dist.maps = sorted_map_counts(tally, first.n);
    return dist;
}

std::vector<std::pair<Permutation, BigRat>> exhaustive_shuffle_distribution(
    int n, std::uint64_t a, const Budgets& budgets) {
    const ShuffleMapDistribution dist = exhaustive_shuffle_maps(n, a, budgets);
    std::vector<std::pair<Permutation, BigRat>> words;
    words.reserve(dist.maps.size());
    for (const auto& mc : dist.maps) {
        Permutation word(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            word[static_cast<size_t>(mc.map[static_cast<size_t>(r)])] = r;
        words.emplace_back(std::move(word), make_rat(BigInt(mc.count), dist.outcomes));
    }
    std::sort(words.begin(), words.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return words;
}

Arrangement apply_map(const Permutation& map, const Arrangement& word) {
    if (map.size() != word.size())
        throw InputError("apply_map: size mismatch");
    Arrangement out(word.size());
    for (size_t r = 0; r < word.size(); ++r)
        out[static_cast<size_t>(map[r])] = word[r];
    return out;
}

int QuotientChain::index_of(const Arrangement& word) const {
    const auto it = std::lower_bound(states.begin(), states.end(), word);
    if (it == states.end() || *it != word)
        return -1;
    return static_cast<int>(it - states.begin());
}

QuotientChain build_quotient_chain(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets) {
    deck.validate();
    const BigInt count = arrangement_count(deck);
    if (cmp(count, budgets.chain_dim) > 0) {
        const std::uint64_t needed = count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
        throw CapacityError("states", "--budget-states", needed, budgets.chain_dim,
                            "quotient chain needs " + count.get_str() + " states, limit " +
                                std::to_string(budgets.chain_dim) + "; raise --budget-states");
    }
    Budgets local = budgets;
    local.states = budgets.chain_dim;
    QuotientChain chain;
    chain.deck = deck;
    chain.a = a;
    chain.states = enumerate_arrangements(deck, local);
    const ShuffleMapDistribution dist =
        exhaustive_shuffle_maps(deck.cards(), a, budgets);
    chain.outcomes = dist.outcomes;
    const size_t dim = chain.states.size();
    chain.counts.assign(dim, std::vector<std::uint64_t>(dim, 0));
    for (size_t s = 0; s < dim; ++s) {
        for (const auto& mc : dist.maps) {
            const int t = chain.index_of(apply_map(mc.map, chain.states[s]));
            if (t < 0)
                throw std::logic_error("quotient chain: image state missing");
            chain.counts[s][static_cast<size_t>(t)] += mc.count;
        }
    }
    return chain;
}

bool verify_convolution_power(const DeckSpec& deck, std::uint64_t a, int steps,
                              const Budgets& budgets) {
    if (steps < 1)
        throw InputError("verify_convolution_power: need at least one step");
    BigInt a_pow_big = pow_ui(BigInt(a), static_cast<unsigned long>(steps));
    if (!a_pow_big.fits_ulong_p())
        throw InputError("verify_convolution_power: a^steps exceeds 64 bits");
    const std::uint64_t a_pow = a_pow_big.get_ui();

    const QuotientChain single = build_quotient_chain(deck, a, budgets);
    const QuotientChain reference = build_quotient_chain(deck, a_pow, budgets);
    const size_t dim = single.states.size();
    std::vector<std::vector<std::uint64_t>> power = single.counts;
    for (int step = 2; step <= steps; ++step) {
        std::vector<std::vector<std::uint64_t>> next(dim, std::vector<std::uint64_t>(dim, 0));
        for (size_t i = 0; i < dim; ++i)
            for (size_t k = 0; k < dim; ++k) {
                const std::uint64_t v = power[i][k];
                if (v == 0)
                    continue;
                for (size_t j = 0; j < dim; ++j)
                    next[i][j] += v * single.counts[k][j];
            }
        power = std::move(next);
    }
    if (power != reference.counts)
        return false;

    ShuffleMapDistribution acc = exhaustive_shuffle_maps(deck.cards(), a, budgets);
    const ShuffleMapDistribution one = acc;
    for (int step = 2; step <= steps; ++step)
        acc = convolve(acc, one);
    const ShuffleMapDistribution target = exhaustive_shuffle_maps(deck.cards(), a_pow, budgets);
    if (acc.outcomes != target.outcomes || acc.maps.size() != target.maps.size())
        return false;
    for (size_t i = 0; i < acc.maps.size(); ++i)
        if (acc.maps[i].map != target.maps[i].map || acc.maps[i].count != target.maps[i].count)
            return false;
    return true;
}

BruteDistances brute_distances(const QuotientChain& chain, const Arrangement& start) {
    const int idx = chain.index_of(start);
    if (idx < 0)
        throw InputError("start arrangement is not an ordering of this deck");
    const auto& row = chain.counts[static_cast<size_t>(idx)];
    const size_t dim = chain.states.size();
    const BigRat uniform(1, static_cast<unsigned long>(dim));
    BruteDistances out;
    out.tv = 0;
    std::uint64_t min_count = UINT64_MAX;
    size_t min_at = 0;
    size_t min_hits = 0;
    for (size_t y = 0; y < dim; ++y) {
        const BigRat mass = make_rat(BigInt(row[y]), chain.outcomes);
        out.tv += abs_rat(mass - uniform);
        if (row[y] < min_count) {
            min_count = row[y];
            min_at = y;
            min_hits = 1;
        } else if (row[y] == min_count) {
            ++min_hits;
        }
    }
    out.tv /= 2;
    out.min_mass = make_rat(BigInt(min_count), chain.outcomes);
    out.sep = 1 - static_cast<long>(dim) * out.min_mass;
    out.argmin = chain.states[min_at];
    out.argmin_unique = min_hits == 1;
    return out;
}

GilbreathReport gilbreath_classify(int half, const Budgets& budgets) {
    if (half < 1 || half > 28)
        throw InputError("gilbreath_classify supports half-deck sizes 1 to 28");
    const int n2 = 2 * half;
    const BigInt total = pow_ui(2, static_cast<unsigned long>(n2));
    check_outcome_budget(total, budgets);

    const Arrangement alternating = alternating_word(half);
    struct Tally {
        std::uint64_t all = 0;
        std::uint64_t odd = 0;
        std::uint64_t even = 0;
    };
    std::unordered_map<std::uint64_t, Tally> words;
    const std::uint64_t sequences = total.get_ui();
    for (std::uint64_t bits = 0; bits < sequences; ++bits) {
        // Zero-digit positions receive the top of the deck in order, then
        // one-digit positions receive the rest.
        Arrangement w(static_cast<size_t>(n2));
        int slot = 0;
        for (int p = 0; p < n2; ++p)
            if (!(bits >> p & 1))
                w[static_cast<size_t>(p)] = alternating[static_cast<size_t>(slot++)];
        for (int p = 0; p < n2; ++p)
            if (bits >> p & 1)
                w[static_cast<size_t>(p)] = alternating[static_cast<size_t>(slot++)];
        std::uint64_t key = 0;
        for (int p = 0; p < n2; ++p)
            if (w[static_cast<size_t>(p)] == 2)
                key |= std::uint64_t{1} << p;
        const int cut = n2 - std::popcount(bits);
        Tally& t = words[key];
        ++t.all;
        if (cut & 1)
            ++t.odd;
        else
            ++t.even;
    }

    GilbreathReport report;
    report.half = half;
    report.orderings = binomial(static_cast<unsigned long>(n2), static_cast<unsigned long>(half));
    report.reachable = words.size();
    std::uint64_t w0_key = 0;
    for (int p = 0; p < n2; ++p)
        if (alternating[static_cast<size_t>(p)] == 2)
            w0_key |= std::uint64_t{1} << p;

    const std::uint64_t odd_expected = std::uint64_t{1} << (half - 1);
    const std::uint64_t even_expected = std::uint64_t{1} << half;
    bool masses_ok = true;
    bool overlap_ok = true;
    for (const auto& [key, t] : words) {
        const bool has_odd = t.odd > 0;
        const bool has_even = t.even > 0;
        if (has_odd)
            ++report.odd_reachable;
        if (has_even)
            ++report.even_reachable;
        if (has_odd && has_even) {
            ++report.both_parities;
            if (key != w0_key)
                overlap_ok = false;
            if (t.odd != odd_expected || t.even != even_expected)
                masses_ok = false;
        } else if (has_odd) {
            if (t.all != odd_expected)
                masses_ok = false;
        } else {
            if (t.all != even_expected)
                masses_ok = false;
        }
    }
    report.alternating_mass = words.count(w0_key) ? words.at(w0_key).all : 0;
    report.masses_match_closed_form =
        masses_ok && report.odd_reachable == (std::uint64_t{1} << half) &&
        report.even_reachable == odd_expected &&
        report.both_parities == 1;
    report.overlap_is_alternating_only = overlap_ok && report.both_parities == 1;

    const BigRat uniform = make_rat(1, report.orderings);
    BigRat sum = 0;
    for (const auto& [key, t] : words)
        sum += abs_rat(make_rat(BigInt(t.all), total) - uniform);
    const BigInt unreachable = report.orderings - BigInt(report.reachable);
    sum += unreachable * uniform;
    report.enumerated_tv = sum / 2;

    const BigInt gilbreath_count =
        pow_ui(2, static_cast<unsigned long>(half)) +
        pow_ui(2, static_cast<unsigned long>(half - 1)) - 1;
    report.printed_tv = (1 - make_rat(gilbreath_count, report.orderings)) / 2;
    report.enumerated_is_twice_printed = report.enumerated_tv == 2 * report.printed_tv;
    return report;
}

} // namespace riffle::oracle
