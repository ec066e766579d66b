#include "riffle/exact.hpp"

#include <algorithm>

#include "riffle/combinatorics.hpp"

namespace riffle::exact {
namespace {

void check_n_a(int n, std::uint64_t a) {
    if (n < 1)
        throw InputError("deck size must be positive");
    if (a < 1)
        throw InputError("shuffle parameter must be positive");
}

// Pascal triangle rows 0..n as plain machine integers would overflow well
// below n = 52, so keep exact integers.
std::vector<std::vector<BigInt>> pascal_rows(int n) {
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1);
        rows[static_cast<size_t>(i)][0] = 1;
        for (int j = 1; j < i; ++j)
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    }
    return rows;
}

// powers[e] = base^e for e = 0..top, with 0^0 = 1.
void fill_powers(std::vector<BigInt>& powers, std::uint64_t base, int top) {
    powers.assign(static_cast<size_t>(top) + 1, 1);
    for (int e = 1; e <= top; ++e)
        powers[static_cast<size_t>(e)] = powers[static_cast<size_t>(e - 1)] * base;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const size_t dim = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < dim; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < dim && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == dim)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < dim; ++i)
            for (size_t j = k + 1; j < dim; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        prev = m[k][k];
    }
    return sign * m[dim - 1][dim - 1];
}

} // namespace

BigRat bd_probability(int n, std::uint64_t a, int r) {
    check_n_a(n, a);
    if (r < 1 || r > n)
        throw InputError("run count must be between 1 and the deck size");
    const BigInt top = BigInt(a) + (n - r);
    return make_rat(binomial(top, static_cast<unsigned long>(n)),
                    pow_ui(BigInt(a), static_cast<unsigned long>(n)));
}

SepTv full_deck_distances(int n, std::uint64_t a) {
    check_n_a(n, a);
    const auto counts = eulerian_numbers(n);
    const BigRat uniform(1, factorial(static_cast<unsigned long>(n)));
    SepTv out;
    out.tv = 0;
    for (int r = 1; r <= n; ++r)
        out.tv += counts[static_cast<size_t>(r - 1)] * abs_rat(bd_probability(n, a, r) - uniform);
    out.tv /= 2;
    out.sep = 1 - factorial(static_cast<unsigned long>(n)) * bd_probability(n, a, n);
    return out;
}

std::vector<BigRat> single_card_row(int n, std::uint64_t a, int start) {
    check_n_a(n, a);
    if (start < 1 || start > n)
        throw InputError("start position must be between 1 and the deck size");
    const int i = start;
    const auto pascal = pascal_rows(n);
    std::vector<BigInt> acc(static_cast<size_t>(n), 0);
    std::vector<BigInt> pk, pak, pk1, pak1;
    for (std::uint64_t k = 1; k <= a; ++k) {
        fill_powers(pk, k, n);
        fill_powers(pak, a - k, n);
        fill_powers(pk1, k - 1, n);
        fill_powers(pak1, a - k + 1, n);
        for (int j = 1; j <= n; ++j) {
            const int lo = std::max(0, i + j - (n + 1));
            const int hi = std::min(i - 1, j - 1);
            BigInt cell = 0;
            for (int r = lo; r <= hi; ++r) {
                BigInt term = pascal[static_cast<size_t>(j - 1)][static_cast<size_t>(r)] *
                              pascal[static_cast<size_t>(n - j)][static_cast<size_t>(i - 1 - r)];
                term *= pk[static_cast<size_t>(r)];
                term *= pak[static_cast<size_t>(j - 1 - r)];
                term *= pk1[static_cast<size_t>(i - 1 - r)];
                term *= pak1[static_cast<size_t>((n - j) - (i - 1 - r))];
                cell += term;
            }
            acc[static_cast<size_t>(j - 1)] += cell;
        }
    }
    const BigInt denom = pow_ui(BigInt(a), static_cast<unsigned long>(n));
    std::vector<BigRat> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        row[static_cast<size_t>(j)] = make_rat(acc[static_cast<size_t>(j)], denom);
    return row;
}

std::vector<BigRat> bottom_card_distribution(int n, std::uint64_t a) {
    check_n_a(n, a);
    std::vector<BigInt> acc(static_cast<size_t>(n), 0);
    std::vector<BigInt> pk, pk1;
    for (std::uint64_t k = 1; k <= a; ++k) {
        fill_powers(pk, k, n);
        fill_powers(pk1, k - 1, n);
        for (int j = 1; j <= n; ++j)
            acc[static_cast<size_t>(j - 1)] +=
                pk1[static_cast<size_t>(n - j)] * pk[static_cast<size_t>(j - 1)];
    }
    const BigInt denom = pow_ui(BigInt(a), static_cast<unsigned long>(n));
    std::vector<BigRat> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        row[static_cast<size_t>(j)] = make_rat(acc[static_cast<size_t>(j)], denom);
    return row;
}

namespace {

SepTv distances_of_row(const std::vector<BigRat>& row) {
    const int n = static_cast<int>(row.size());
    const BigRat uniform(1, static_cast<unsigned long>(n));
    SepTv out;
    out.tv = 0;
    BigRat min_mass = row[0];
    for (const BigRat& p : row) {
        out.tv += abs_rat(p - uniform);
        min_mass = std::min(min_mass, p);
    }
    out.tv /= 2;
    out.sep = 1 - n * min_mass;
    return out;
}

} // namespace

SepTv tracked_card_distances(int n, std::uint64_t a, int start) {
    const auto row =
        start == n ? bottom_card_distribution(n, a) : single_card_row(n, a, start);
    return distances_of_row(row);
}

RatMatrix single_card_matrix(int n, std::uint64_t a, const Budgets& budgets) {
    check_n_a(n, a);
    if (n > budgets.matrix_order)
        throw CapacityError("states", "--budget-states", static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(budgets.matrix_order),
                            "exact matrix order " + std::to_string(n) + " exceeds limit " +
                                std::to_string(budgets.matrix_order) +
                                "; raise --budget-states");
    RatMatrix mat;
    mat.n = n;
    mat.cells.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto row = single_card_row(n, a, i);
        for (int j = 0; j < n; ++j)
            mat.at(i - 1, j) = row[static_cast<size_t>(j)];
    }
    return mat;
}

bool MatrixPropertyReport::all_passed() const {
    if (!(rows_stochastic && cols_stochastic && cross_symmetric && multiplicative &&
          eigenbasis_complete))
        return false;
    for (const auto& e : eigenvectors)
        if (!e.alternating_form_holds)
            return false;
    return true;
}

MatrixPropertyReport matrix_properties_check(int n, std::uint64_t a, std::uint64_t b,
                                             const Budgets& budgets) {
    check_n_a(n, a);
    check_n_a(n, b);
    const BigInt ab_big = BigInt(a) * BigInt(b);
    if (!ab_big.fits_ulong_p())
        throw InputError("product of shuffle parameters exceeds 64 bits");
    MatrixPropertyReport report;
    report.n = n;
    report.a = a;
    report.b = b;
    const RatMatrix pa = single_card_matrix(n, a, budgets);
    const RatMatrix pb = single_card_matrix(n, b, budgets);
    const RatMatrix pab = single_card_matrix(n, ab_big.get_ui(), budgets);

    report.rows_stochastic = true;
    report.cols_stochastic = true;
    for (int i = 0; i < n; ++i) {
        BigRat row_sum = 0, col_sum = 0;
        for (int j = 0; j < n; ++j) {
            row_sum += pa.at(i, j);
            col_sum += pa.at(j, i);
        }
        if (row_sum != 1)
            report.rows_stochastic = false;
        if (col_sum != 1)
            report.cols_stochastic = false;
    }

    report.cross_symmetric = true;
    for (int i = 0; i < n && report.cross_symmetric; ++i)
        for (int j = 0; j < n; ++j)
            if (pa.at(i, j) != pa.at(n - 1 - i, n - 1 - j)) {
                report.cross_symmetric = false;
                break;
            }

    report.multiplicative = true;
    for (int i = 0; i < n && report.multiplicative; ++i)
        for (int j = 0; j < n; ++j) {
            BigRat dot = 0;
            for (int k = 0; k < n; ++k)
                dot += pa.at(i, k) * pb.at(k, j);
            if (dot != pab.at(i, j)) {
                report.multiplicative = false;
                break;
            }
        }

    // Candidate eigenvector for eigenvalue a^-m; `published` selects the
    // (i-1)^(i-1) first factor, otherwise (-1)^(i-1).
    const auto candidate = [n](int m, bool published) {
        std::vector<BigInt> v(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            BigInt first;
            if (i - 1 <= m - 1) {
                const BigInt c = binomial(static_cast<unsigned long>(m - 1),
                                          static_cast<unsigned long>(i - 1));
                if (published)
                    first = pow_ui(BigInt(i - 1), static_cast<unsigned long>(i - 1)) * c;
                else
                    first = (i % 2 == 1) ? c : -c;
            }
            BigInt second = 0;
            if (n - i <= m - 1) {
                second = binomial(static_cast<unsigned long>(m - 1),
                                  static_cast<unsigned long>(n - i));
                if ((n - i + m) % 2 == 1)
                    second = -second;
            }
            v[static_cast<size_t>(i - 1)] = first + second;
        }
        return v;
    };
    const auto is_eigenvector = [&](const std::vector<BigInt>& v, int m) {
        const BigInt scale = pow_ui(BigInt(a), static_cast<unsigned long>(m));
        bool nonzero = false;
        for (const auto& x : v)
            if (x != 0)
                nonzero = true;
        if (!nonzero)
            return false;
        for (int i = 0; i < n; ++i) {
            BigRat dot = 0;
            for (int j = 0; j < n; ++j)
                dot += pa.at(i, j) * v[static_cast<size_t>(j)];
            if (dot * scale != BigRat(v[static_cast<size_t>(i)]))
                return false;
        }
        return true;
    };

    std::vector<std::vector<BigInt>> basis(static_cast<size_t>(n),
                                           std::vector<BigInt>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        basis[static_cast<size_t>(i)][0] = 1; // eigenvalue 1: all-ones
    for (int m = 1; m < n; ++m) {
        EigenvectorCheck check;
        check.order = m;
        check.published_form_holds = is_eigenvector(candidate(m, true), m);
        const auto alt = candidate(m, false);
        check.alternating_form_holds = is_eigenvector(alt, m);
        for (int i = 0; i < n; ++i)
            basis[static_cast<size_t>(i)][static_cast<size_t>(m)] = alt[static_cast<size_t>(i)];
        report.eigenvectors.push_back(check);
    }
    report.eigenbasis_complete = n == 1 || det_bareiss(std::move(basis)) != 0;
    return report;
}

BigInt separation_core_sum(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets) {
    deck.validate();
    if (a < 1)
        throw InputError("shuffle parameter must be positive");
    const int m = deck.pile_count();
    const BigInt work = BigInt(m > 1 ? m - 1 : 0) * BigInt(a) * (BigInt(a) + 1) / 2 + BigInt(a);
    if (cmp(work, budgets.dp_work) > 0) {
        const std::uint64_t needed = work.fits_ulong_p() ? work.get_ui() : UINT64_MAX;
        throw CapacityError("terms", "--budget-terms", needed, budgets.dp_work,
                            "separation DP needs about " + work.get_str() +
                                " big-integer multiplies, limit " +
                                std::to_string(budgets.dp_work) + "; raise --budget-terms");
    }
    const size_t cells = static_cast<size_t>(a) + 1;
    std::vector<BigInt> h(cells, 0), g(cells, 0), next(cells);
    h[0] = 1;
    for (int j = 0; j + 1 < m; ++j) {
        const unsigned long d_j = static_cast<unsigned long>(deck.piles[static_cast<size_t>(j)]);
        BigInt prev_pow = 0; // (d-1)^D_j, starting at d = 1
        for (std::uint64_t d = 1; d <= a; ++d) {
            BigInt cur = pow_ui(BigInt(d), d_j);
            g[static_cast<size_t>(d)] = cur - prev_pow;
            prev_pow = std::move(cur);
        }
        for (std::uint64_t s = 0; s <= a; ++s) {
            BigInt acc = 0;
            for (std::uint64_t d = 1; d <= s; ++d) {
                if (h[static_cast<size_t>(s - d)] == 0)
                    continue;
                acc += h[static_cast<size_t>(s - d)] * g[static_cast<size_t>(d)];
            }
            next[static_cast<size_t>(s)] = std::move(acc);
        }
        std::swap(h, next);
    }
    const unsigned long d_m =
        static_cast<unsigned long>(deck.piles[static_cast<size_t>(m - 1)]);
    BigInt total = 0;
    for (std::uint64_t d = 1; d <= a; ++d) {
        if (h[static_cast<size_t>(a - d)] == 0)
            continue;
        total += h[static_cast<size_t>(a - d)] * pow_ui(BigInt(d), d_m);
    }
    return total;
}

BigRat least_likely_probability(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets) {
    const BigInt s = separation_core_sum(deck, a, budgets);
    return make_rat(s, pow_ui(BigInt(a), static_cast<unsigned long>(deck.cards())));
}

BigRat general_sep(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets) {
    return 1 - arrangement_count(deck) * least_likely_probability(deck, a, budgets);
}

BigRat redblack_word_probability(int half, const Arrangement& word) {
    if (half < 1)
        throw InputError("half-deck size must be positive");
    const size_t n2 = static_cast<size_t>(2 * half);
    if (word.size() != n2)
        throw InputError("red/black word must have twice the half-deck size");
    int reds = 0;
    for (std::uint8_t v : word) {
        if (v != 1 && v != 2)
            throw InputError("red/black word labels must be 1 (red) or 2 (black)");
        if (v == 1)
            ++reds;
    }
    if (reds != half)
        throw InputError("red/black word must have equal colour counts");
    size_t first_black = 0;
    while (word[first_black] != 2)
        ++first_black;
    size_t last_red = n2 - 1;
    while (word[last_red] != 1)
        --last_red;
    const unsigned long h = static_cast<unsigned long>(first_black);
    const unsigned long t = static_cast<unsigned long>(n2 - 1 - last_red);
    const BigInt mass = pow_ui(2, h) + pow_ui(2, t) - 1;
    return make_rat(mass, pow_ui(2, static_cast<unsigned long>(n2)));
}

BigRat redblack_tv(int half) {
    if (half < 1)
        throw InputError("half-deck size must be positive");
    const unsigned long n = static_cast<unsigned long>(half);
    const BigInt denom = pow_ui(2, 2 * n);
    const BigRat uniform(1, binomial(2 * n, n));
    BigRat sum = abs_rat(make_rat(pow_ui(2, n + 1) - 1, denom) - uniform);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j) {
            const BigInt count = binomial(2 * n - i - j - 2, n - i - 1);
            const BigRat mass = make_rat(pow_ui(2, i) + pow_ui(2, j) - 1, denom);
            sum += count * abs_rat(mass - uniform);
        }
    return sum / 2;
}

BigRat alternating_tv(int half) {
    if (half < 1)
        throw InputError("half-deck size must be positive");
    const unsigned long n = static_cast<unsigned long>(half);
    const BigInt reachable = pow_ui(2, n) + pow_ui(2, n - 1) - 1;
    return (1 - make_rat(reachable, binomial(2 * n, n))) / 2;
}

} // namespace riffle::exact
