#include "riffle/rational.hpp"

#include <stdexcept>

namespace riffle {

BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt binomial(const BigInt& n, unsigned long k) {
    if (sgn(n) < 0)
        return 0;
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

BigRat make_rat(BigInt num, BigInt den) {
    if (sgn(den) == 0)
        throw std::domain_error("make_rat: zero denominator");
    BigRat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

BigRat abs_rat(const BigRat& v) {
    return sgn(v) < 0 ? BigRat(-v) : v;
}

double to_double(const BigRat& v) {
    return v.get_d();
}

std::string format_decimal(const BigRat& value, int digits) {
    if (digits < 0)
        throw std::invalid_argument("format_decimal: negative digit count");
    const bool negative = sgn(value) < 0;
    BigRat mag = abs_rat(value);
    BigInt scaled = mag.get_num() * pow_ui(10, static_cast<unsigned long>(digits));
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), mag.get_den().get_mpz_t());
    const int c = cmp(BigInt(r * 2), mag.get_den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    std::string body = q.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    std::string out;
    if (negative && sgn(q) != 0)
        out.push_back('-');
    if (digits == 0) {
        out += body;
    } else {
        out.append(body, 0, body.size() - static_cast<size_t>(digits));
        out.push_back('.');
        out.append(body, body.size() - static_cast<size_t>(digits), std::string::npos);
    }
    return out;
}

} // namespace riffle
