#include "riffle/montecarlo.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "riffle/combinatorics.hpp"

namespace riffle::mc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStride = 1ULL << 20; // draws reserved per sample

} // namespace

DigitStream::DigitStream(std::uint64_t seed, std::uint64_t sample_index)
    : state(seed + (sample_index * kStride + 1) * kGolden) {}

std::uint64_t DigitStream::next_word() {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t DigitStream::next_digit(std::uint64_t a) {
    if (a < 2)
        return 0;
    // Rejection keeps every residue equally likely.
    const std::uint64_t limit = a * (UINT64_MAX / a);
    for (;;) {
        const std::uint64_t v = next_word();
        if (v < limit)
            return v % a;
    }
}

Permutation sample_a_shuffle(int n, std::uint64_t a, DigitStream& stream) {
    if (a < 1)
        throw InputError("sampling needs at least one hand");
    std::vector<std::uint64_t> digits(static_cast<size_t>(n));
    for (auto& d : digits)
        d = stream.next_digit(a);
    // Stable order by digit; the sorted sequence of source positions read off
    // in rank order is the position map, matching the exhaustive enumeration.
    Permutation map(static_cast<size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::stable_sort(map.begin(), map.end(), [&](int x, int y) {
        return digits[static_cast<size_t>(x)] < digits[static_cast<size_t>(y)];
    });
    return map;
}

EmpiricalReport estimate_distances(const SamplerConfig& config, const Budgets& budgets) {
    const int n = config.deck.cards();
    if (config.repetitions < 1)
        throw InputError("need at least one repetition");
    if (config.a < 1)
        throw InputError("need at least one hand");
    const unsigned workers = std::max(1u, config.workers);

    const bool tracked = config.feature == Feature::kTracked;
    std::vector<Arrangement> arrangements;
    std::uint64_t cells;
    if (tracked) {
        if (config.tracked_start < 1 || config.tracked_start > n)
            throw InputError("tracked start position out of range");
        cells = static_cast<std::uint64_t>(n);
    } else {
        const BigInt count = arrangement_count(config.deck);
        if (count > budgets.states)
            throw CapacityError("states", "--budget-states",
                                count.fits_ulong_p() ? count.get_ui() : UINT64_MAX,
                                budgets.states,
                                "feature space too large to tabulate; track a single "
                                "card instead");
        arrangements = enumerate_arrangements(config.deck, budgets);
        cells = arrangements.size();
    }

    const Arrangement start_word = sorted_word(config.deck);
    const int start0 = config.tracked_start - 1;

    // Each worker owns a contiguous block of sample indices; per-sample
    // streams make the partition irrelevant to the merged counts.
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(static_cast<size_t>(cells), 0));
    const auto run = [&](unsigned w) {
        auto& local = partial[w];
        const std::uint64_t lo = config.repetitions * w / workers;
        const std::uint64_t hi = config.repetitions * (w + 1) / workers;
        Arrangement word(static_cast<size_t>(n));
        for (std::uint64_t i = lo; i < hi; ++i) {
            DigitStream stream(config.seed, i);
            const Permutation map = sample_a_shuffle(n, config.a, stream);
            if (tracked) {
                ++local[static_cast<size_t>(map[static_cast<size_t>(start0)])];
            } else {
                for (size_t r = 0; r < word.size(); ++r)
                    word[static_cast<size_t>(map[r])] = start_word[r];
                const auto it =
                    std::lower_bound(arrangements.begin(), arrangements.end(), word);
                ++local[static_cast<size_t>(it - arrangements.begin())];
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }

    EmpiricalReport report;
    report.config = config;
    report.counts.assign(static_cast<size_t>(cells), 0);
    for (const auto& local : partial)
        for (size_t c = 0; c < report.counts.size(); ++c)
            report.counts[c] += local[c];

    const BigRat uniform = make_rat(1, BigInt(cells));
    const BigInt reps(config.repetitions);
    BigRat tv = 0;
    asym::Real variance(0);
    std::uint64_t min_count = UINT64_MAX;
    for (const std::uint64_t c : report.counts) {
        const BigRat p = make_rat(BigInt(c), reps);
        tv += abs_rat(p - uniform);
        const asym::Real pr = asym::to_real(p);
        variance += pr * (1 - pr);
        min_count = std::min(min_count, c);
    }
    report.tv = tv / 2;
    if (min_count > 0)
        report.sep = 1 - BigInt(cells) * make_rat(BigInt(min_count), reps);
    report.tv_std_error =
        sqrt(variance / asym::Real(config.repetitions)) / 2;
    return report;
}

} // namespace riffle::mc
