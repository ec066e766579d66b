#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace riffle {

// Exact arithmetic backing for every quantity that is a rational number.
// GMP does the heavy lifting; these helpers pin down the conventions the
// rest of the library relies on (0^0 = 1, canonical rationals, half-even
// decimal rounding).
using BigInt = mpz_class;
using BigRat = mpq_class;

// base^exp with 0^0 = 1.
BigInt pow_ui(const BigInt& base, unsigned long exp);

BigInt factorial(unsigned long n);

// C(n, k); zero when k > n.  The BigInt overload accepts negative n and
// returns zero there (the generalized form never appears with n < 0 here).
BigInt binomial(unsigned long n, unsigned long k);
BigInt binomial(const BigInt& n, unsigned long k);

// num/den in canonical form; den must be nonzero.
BigRat make_rat(BigInt num, BigInt den);

BigRat abs_rat(const BigRat& v);

double to_double(const BigRat& v);

// Fixed-point decimal with `digits` places, ties rounded to even.
// format_decimal(1/8, 2) == "0.12", format_decimal(3/8, 2) == "0.38".
std::string format_decimal(const BigRat& value, int digits);

} // namespace riffle
