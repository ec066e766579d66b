#include "riffle/asymptotics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>

#include "riffle/combinatorics.hpp"

namespace riffle::asym {

namespace {

BigRat rat_pow(const BigRat& base, unsigned long e) {
    BigRat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out; // canonical since base is
}

void require_chain_args(int n, std::uint64_t a) {
    if (n < 2)
        throw InputError("bounds require at least two cards");
    if (a < 2)
        throw InputError("bounds degenerate at a single hand; need a >= 2");
}

std::uint64_t saturate(const BigInt& v) {
    return v.fits_ulong_p() ? v.get_ui() : UINT64_MAX;
}

} // namespace

void set_default_precision(unsigned digits10) {
    Real::default_precision(digits10);
}

Real to_real(const BigInt& z) {
    Real out(0);
    mpfr_set_z(out.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return out;
}

Real to_real(const BigRat& q) {
    Real out(0);
    mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return out;
}

std::string format_real(const Real& x, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*f", digits, MPFR_RNDN, x.backend().data());
    std::string s(buf);
    mpfr_free_str(buf);
    if (!s.empty() && s.front() == '-' &&
        s.find_first_of("123456789") == std::string::npos)
        s.erase(0, 1);
    return s;
}

RatBounds bottom_card_prob_bounds(int n, std::uint64_t a, int i) {
    require_chain_args(n, a);
    if (i < 1 || i > n)
        throw InputError("position out of range");
    const BigRat alpha = make_rat(BigInt(a) - 1, BigInt(a));
    const unsigned un = static_cast<unsigned long>(n);
    const unsigned ui = static_cast<unsigned long>(i);
    RatBounds b;
    b.lower = rat_pow(alpha, un - ui + 1) / (BigInt(a) * (1 - rat_pow(alpha, un)));
    b.upper = rat_pow(alpha, un - ui) / (BigInt(a) * (1 - rat_pow(alpha, un - 1)));
    return b;
}

RatBounds bottom_card_sep_bounds(int n, std::uint64_t a) {
    require_chain_args(n, a);
    const BigRat alpha = make_rat(BigInt(a) - 1, BigInt(a));
    const unsigned un = static_cast<unsigned long>(n);
    const BigRat scale = make_rat(BigInt(n), BigInt(a));
    // The source display lists these with the sides exchanged, which violates
    // lower <= upper; the order below is the one implied by the position-1
    // probability bounds.
    RatBounds b;
    b.lower = 1 - scale * rat_pow(alpha, un - 1) / (1 - rat_pow(alpha, un - 1));
    b.upper = 1 - scale * rat_pow(alpha, un) / (1 - rat_pow(alpha, un));
    return b;
}

RealBounds bottom_card_tv_bounds(int n, std::uint64_t a) {
    require_chain_args(n, a);
    const Real ra = to_real(BigInt(a));
    const Real rn(n);
    const Real alpha = 1 - 1 / ra;
    const Real an1 = pow(alpha, n - 1); // alpha^{n-1}
    const Real an = an1 * alpha;
    const Real anp = an * alpha;        // alpha^{n+1}
    const Real inv_log = 1 / (rn * log(1 / alpha));
    RealBounds b;
    b.upper = anp / (1 - an) - ra * alpha * alpha * (1 - an1) / (rn * (1 - an)) +
              inv_log * log(ra / rn * (1 - an) / anp);
    b.lower = an / (1 - an1) - ra * (1 - an) / (rn * alpha * (1 - an1)) +
              inv_log * log(ra / rn * (1 - an1) / an1);
    return b;
}

Real sep_shifted_approx(const Real& c) {
    const Real x = pow(Real(2), -c);
    return 1 - x * exp(-x) / (1 - exp(-x));
}

BigRat sep_tail_estimate(int n, std::uint64_t a) {
    if (n < 1 || a < 1)
        throw InputError("tail estimate needs n >= 1 and a >= 1");
    return make_rat(BigInt(n), 2 * BigInt(a));
}

Real tv_limit_approx(const Real& c) {
    const Real C = pow(Real(2), c);
    const Real E = exp(1 / C) - 1;
    return C * log(C * E) + 1 / E - C;
}

Real s_m_exact(std::uint64_t a, std::span<const double> xi, std::span<const int> r,
               const Budgets& budgets) {
    const size_t m = xi.size();
    if (m < 2 || r.size() != m)
        throw InputError("need matching xi and exponent lists with at least two entries");
    for (double x : xi)
        if (x < 0 || x > 1)
            throw InputError("each xi must lie in [0,1]");
    for (int e : r)
        if (e < 2)
            throw InputError("each exponent must be at least 2");
    const BigInt comps =
        binomial(BigInt(a) + static_cast<long>(m) - 1, static_cast<unsigned long>(m - 1));
    if (comps > budgets.compositions)
        throw CapacityError("compositions", "--budget-terms", saturate(comps),
                            budgets.compositions,
                            "composition sweep exceeds the term budget");
    Real total(0);
    for_each_composition(static_cast<int>(a), static_cast<int>(m), 0,
                         [&](std::span<const int> parts) {
                             Real term(1);
                             for (size_t j = 0; j < m; ++j)
                                 term *= pow(Real(parts[j]) + xi[j], r[j]);
                             total += term;
                         });
    return total;
}

MainAndError s_m_approx(std::uint64_t a, std::span<const double> xi, std::span<const int> r) {
    const size_t m = xi.size();
    if (m < 2 || r.size() != m)
        throw InputError("need matching xi and exponent lists with at least two entries");
    int rmin = r[0];
    long big_r = 0;
    BigInt fact_prod = 1;
    for (int e : r) {
        if (e < 2)
            throw InputError("each exponent must be at least 2 for the error bound");
        rmin = std::min(rmin, e);
        big_r += e;
        fact_prod *= factorial(static_cast<unsigned long>(e));
    }
    Real A = to_real(BigInt(a));
    for (double x : xi) {
        if (x < 0 || x > 1)
            throw InputError("each xi must lie in [0,1]");
        A += x;
    }
    const long top = big_r + static_cast<long>(m) - 1;
    MainAndError out;
    out.main_term = to_real(fact_prod) / to_real(factorial(static_cast<unsigned long>(top))) *
                    pow(A, top);
    out.error_bound = 0;
    for (size_t j = 1; j < m; ++j) {
        const long e = top - 2 * static_cast<long>(j);
        out.error_bound +=
            to_real(binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(j))) *
            pow(Real(1) / (3 * (rmin - 1)), static_cast<int>(j)) * pow(A, e) /
            to_real(factorial(static_cast<unsigned long>(e)));
    }
    out.error_bound *= to_real(fact_prod);
    return out;
}

RotEstimate rule_of_thumb_sep(const DeckSpec& deck, std::uint64_t a) {
    const int n = deck.cards();
    const size_t m = deck.piles.size();
    if (a < m)
        throw InputError("estimate needs at least as many hands as pile kinds");
    const unsigned long exp_top = static_cast<unsigned long>(n) + m - 1;
    BigInt numer = 0;
    for (size_t j = 0; j < m; ++j) {
        const BigInt term = binomial(static_cast<unsigned long>(m - 1),
                                     static_cast<unsigned long>(j)) *
                            pow_ui(BigInt(a) - static_cast<long>(j), exp_top);
        numer += (j % 2 == 0) ? term : -term;
    }
    BigInt denom = pow_ui(BigInt(a), static_cast<unsigned long>(n));
    for (size_t t = 1; t < m; ++t)
        denom *= n + static_cast<long>(t);
    RotEstimate out;
    out.estimate = 1 - make_rat(numer, denom);
    const int d = *std::min_element(deck.piles.begin(), deck.piles.end());
    if (m == 1) {
        out.eta_bound = BigRat(0);
        out.valid = true;
    } else if (d >= 3) {
        const BigInt gap = BigInt(a) - static_cast<long>(m) + 1;
        const BigRat base = 1 + make_rat(BigInt(n) * n, 3 * (d - 2) * gap * gap);
        out.eta_bound = rat_pow(base, static_cast<unsigned long>(m - 1)) - 1;
        out.valid = true;
    } else {
        out.note = "smallest pile has fewer than 3 cards; accuracy bound unavailable";
    }
    return out;
}

BigInt eulerian_gf_coefficient(const DeckSpec& deck, std::uint64_t a, const Budgets& budgets) {
    const int n = deck.cards();
    if (n > budgets.gf_degree)
        throw CapacityError("gf_degree", "--budget-terms", static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(budgets.gf_degree),
                            "polynomial degree exceeds the term budget");
    // Product of the per-pile numerator polynomials sum_r A(D,r) z^r.
    std::vector<BigInt> poly{1};
    for (int pile : deck.piles) {
        const auto row = eulerian_numbers(pile);
        std::vector<BigInt> next(poly.size() + static_cast<size_t>(pile), 0);
        for (size_t i = 0; i < poly.size(); ++i)
            for (size_t r = 1; r <= static_cast<size_t>(pile); ++r)
                next[i + r] += poly[i] * row[r - 1];
        poly = std::move(next);
    }
    // Divide by (1-z)^{n+1}: coefficient of z^a picks up C(a-t+n, n) per term.
    BigInt total = 0;
    for (size_t t = 0; t < poly.size(); ++t) {
        if (BigInt(static_cast<unsigned long>(t)) > BigInt(a))
            break;
        total += poly[t] *
                 binomial(BigInt(a) - static_cast<unsigned long>(t) + n,
                          static_cast<unsigned long>(n));
    }
    return total;
}

} // namespace riffle::asym
