#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "riffle/deck.hpp"
#include "riffle/errors.hpp"
#include "riffle/rational.hpp"

namespace riffle::asym {

// Arbitrary-precision real; precision is a process-wide setting so that all
// intermediates in a bound evaluation carry the same width.
using Real = boost::multiprecision::mpfr_float;

void set_default_precision(unsigned digits10);
Real to_real(const BigInt& z);
Real to_real(const BigRat& q);

// Fixed-point rendering with `digits` places, round-to-nearest; never "-0.000".
std::string format_real(const Real& x, int digits);

// Exact rational bounds (the expressions are rational in a).
struct RatBounds {
    BigRat lower;
    BigRat upper;
};

// Real-valued bounds (the expressions involve logarithms).
struct RealBounds {
    Real lower;
    Real upper;
};

// Bounds on the chance that the bottom card sits at position i (1-based from
// the top) after one a-handed shuffle.  Requires n >= 2, a >= 2, 1 <= i <= n.
RatBounds bottom_card_prob_bounds(int n, std::uint64_t a, int i);

// Bounds on the separation distance of the tracked bottom card.  The printed
// source transposes the two sides; this returns them ordered lower <= upper.
RatBounds bottom_card_sep_bounds(int n, std::uint64_t a);

// Bounds on the total-variation distance of the tracked bottom card.
RealBounds bottom_card_tv_bounds(int n, std::uint64_t a);

// Separation of the bottom card when a = n * 2^c: 1 - x e^{-x}/(1 - e^{-x})
// with x = 2^{-c}.  Approaches 2^{-c-1} for large c.
Real sep_shifted_approx(const Real& c);

// The simple tail estimate n/(2a) for the bottom-card separation.
BigRat sep_tail_estimate(int n, std::uint64_t a);

// Common limit of the two TV bounds when a = n * 2^c and n grows:
// C log(C E) + 1/E - C with C = 2^c, E = e^{1/C} - 1.  The printed source
// garbles the second term into a divergent expression; this is the form both
// bounds actually converge to.
Real tv_limit_approx(const Real& c);

// Sum over nonnegative compositions a_1+...+a_m = a of prod (a_j + xi_j)^{r_j}.
// Enumerates all C(a+m-1, m-1) compositions; throws CapacityError beyond the
// compositions budget.  Requires m >= 2, each xi_j in [0,1], each r_j >= 2.
Real s_m_exact(std::uint64_t a, std::span<const double> xi, std::span<const int> r,
               const Budgets& budgets);

struct MainAndError {
    Real main_term;
    Real error_bound;
};

// Closed-form main term r_1!...r_m!/(R+m-1)! * (a+Xi)^{R+m-1} and the explicit
// error bound; |s_m_exact - main_term| <= error_bound always holds.
MainAndError s_m_approx(std::uint64_t a, std::span<const double> xi, std::span<const int> r);

struct RotEstimate {
    BigRat estimate;                // separation estimate, exact in a
    std::optional<BigRat> eta_bound; // absent when the smallest pile has < 3 cards
    std::string note;               // diagnostic when the bound is absent
    bool valid = false;             // bound applies: min pile >= 3 and a >= piles
};

// Rule-of-thumb separation estimate
//   1 - sum_j (-1)^j C(m-1,j) (a-j)^{n+m-1} / (a^n (n+1)...(n+m-1))
// with relative-accuracy bound (1 + n^2/(3(d-2)(a-m+1)^2))^{m-1} - 1 when
// every pile has at least d >= 3 cards.  Throws InputError when a < m.
RotEstimate rule_of_thumb_sep(const DeckSpec& deck, std::uint64_t a);

// Coefficient of z^a in (1-z)^{m-1} f_{D_1}(z)...f_{D_m}(z) where
// f_k(z) = sum_r r^k z^r, computed through the Eulerian-polynomial product.
// Equals the composition sum inside general_sep; computed independently of it.
BigInt eulerian_gf_coefficient(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets);

} // namespace riffle::asym
