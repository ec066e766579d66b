#pragma once

#include <cstdint>
#include <vector>

#include "riffle/deck.hpp"
#include "riffle/errors.hpp"
#include "riffle/rational.hpp"

namespace riffle::exact {

struct SepTv {
    BigRat tv;
    BigRat sep;
};

// Probability of one specific ordering with r ascending runs after one
// a-handed shuffle of n distinct cards.
BigRat bd_probability(int n, std::uint64_t a, int r);

// Distances to uniform for the whole distinct deck, aggregated over run
// classes so only n probabilities are ever evaluated.
SepTv full_deck_distances(int n, std::uint64_t a);

// Law of the landing position for the card that starts at `start`
// (1-based from the top).  Entries are exact and sum to one.
std::vector<BigRat> single_card_row(int n, std::uint64_t a, int start);

// Landing law of the bottom card; equals single_card_row(n, a, n) but uses
// the collapsed one-term form, so the two are independent cross-checks.
std::vector<BigRat> bottom_card_distribution(int n, std::uint64_t a);

SepTv tracked_card_distances(int n, std::uint64_t a, int start);

struct RatMatrix {
    int n = 0;
    std::vector<BigRat> cells; // row-major, n*n

    BigRat& at(int i, int j) { return cells[static_cast<size_t>(i * n + j)]; }
    const BigRat& at(int i, int j) const { return cells[static_cast<size_t>(i * n + j)]; }
};

RatMatrix single_card_matrix(int n, std::uint64_t a, const Budgets& budgets);

// The single-card matrix family satisfies a list of exact identities; this
// verifies each one and reports pass/fail per property.  Two candidate
// closed forms for the eigenvectors are checked: the published one, whose
// first term carries an (i-1)^(i-1) factor, and the alternating-sign
// variant with (-1)^(i-1) instead.  Only the variant that verifies is used
// for the completeness (full spanning set) check.
struct EigenvectorCheck {
    int order = 0; // eigenvalue a^-order
    bool published_form_holds = false;
    bool alternating_form_holds = false;
};

struct MatrixPropertyReport {
    int n = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool rows_stochastic = false;
    bool cols_stochastic = false;
    bool cross_symmetric = false;
    bool multiplicative = false; // product of matrices at a and b equals matrix at a*b
    std::vector<EigenvectorCheck> eigenvectors; // orders 1..n-1
    bool eigenbasis_complete = false; // verified vectors plus ones span R^n

    bool all_passed() const;
};

MatrixPropertyReport matrix_properties_check(int n, std::uint64_t a, std::uint64_t b,
                                             const Budgets& budgets);

// Core composition sum S for the sorted-start separation of a repeated
// deck: sum over positive compositions a_1+...+a_m = a of
// prod_{j<m} (a_j^{D_j} - (a_j-1)^{D_j}) times a_m^{D_m}, computed by a
// sequential convolution DP in O(m a^2) big-integer multiplies.
BigInt separation_core_sum(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets);

// Sorted-start probability of the fully reversed arrangement, a^-n * S.
BigRat least_likely_probability(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets);

// Exact separation distance after one a-handed shuffle of the sorted deck:
// 1 - multinomial * a^-n * S.
BigRat general_sep(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets);

// Probability of a red/black word after one riffle of `half` reds atop
// `half` blacks, via the leading-reds/trailing-blacks closed form.
BigRat redblack_word_probability(int half, const Arrangement& word);

// Exact variation distance after that single riffle.
BigRat redblack_tv(int half);

// Closed-form variation distance printed for one riffle of the
// *alternating* red/black deck.  Enumeration shows the true distance is
// exactly twice this value once half >= 3 (see the oracle classifier);
// the closed form is kept as the reference-table quantity.
BigRat alternating_tv(int half);

} // namespace riffle::exact
