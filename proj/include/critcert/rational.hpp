#ifndef CRITCERT_RATIONAL_HPP
#define CRITCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace critcert {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(); every constructor below returns a canonical value.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

// Parses "p", "-p", "p/q". Throws on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p/q" when q != 1, else "p".
std::string to_string(const Rational& q);

// Decimal approximation for display; never used in certification logic.
double to_double(const Rational& q);

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer isqrt_floor(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Integer pow2(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Largest dyadic rational m/2^bits with (m/2^bits)^2 < a. Requires a > 0.
// Escalates precision until the result is positive.
Rational dyadic_below_sqrt(const Rational& a, unsigned bits);

// Smallest-denominator rational strictly inside (lo, hi) via Stern-Brocot
// descent. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

// sqrt(a) when a is the square of a rational; nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& a);

}  // namespace critcert

#endif
