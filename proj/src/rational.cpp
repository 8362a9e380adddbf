#include "critcert/rational.hpp"

#include <cctype>

namespace critcert {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational dyadic_below_sqrt(const Rational& a, unsigned bits) {
    if (sign(a) <= 0) throw std::invalid_argument("dyadic_below_sqrt needs a > 0");
    for (;;) {
        Integer scaled = floor_div(a.get_num() * pow2(2 * bits), a.get_den());
        Integer v = isqrt_floor(scaled);
        Rational r(v, pow2(bits));
        r.canonicalize();
        while (r * r >= a && sign(r) > 0) {
            r -= Rational(1, pow2(bits));
            r.canonicalize();
        }
        if (sign(r) > 0) return r;
        bits *= 2;
    }
}

namespace {

// Simplest fraction in the open interval (lo, hi), both positive.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    Integer p0 = lo.get_num(), q0 = lo.get_den();
    Integer p1 = hi.get_num(), q1 = hi.get_den();
    // Walk the continued fraction of lo until the intervals diverge.
    Integer a0 = floor_div(p0, q0), a1 = floor_div(p1, q1);
    if (a0 < a1) {
        Rational r(a0 + 1);
        if (r > lo && r < hi) return r;
        // hi = a0+1 exactly; recurse into the fractional part.
    }
    if (a0 == a1 || (a0 < a1 && Rational(a0 + 1) >= hi)) {
        // 1/(frac hi) < x' < 1/(frac lo)
        Rational flo = lo - Rational(a0), fhi = hi - Rational(a0);
        if (sign(flo) == 0) {
            // lo integral: answer a0 + 1/k for large enough k.
            Integer k = floor_div(fhi.get_den(), fhi.get_num()) + 1;
            Rational r = Rational(a0) + Rational(1, k);
            r.canonicalize();
            return r;
        }
        Rational inner = simplest_positive(1 / fhi, 1 / flo);
        Rational r = Rational(a0) + 1 / inner;
        r.canonicalize();
        return r;
    }
    Rational r(a0 + 1);
    return r;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_between needs lo < hi");
    if (sign(lo) < 0 && sign(hi) > 0) return Rational(0);
    if (sign(hi) <= 0) return -simplest_between(-hi, -lo);
    if (sign(lo) < 0) {
        // 0 excluded only when hi == 0, handled above.
        return Rational(0);
    }
    if (sign(lo) == 0) {
        if (hi > 1) return Rational(1);
        Rational r(1, floor_div(hi.get_den(), hi.get_num()) + 1);
        r.canonicalize();
        return r;
    }
    return simplest_positive(lo, hi);
}

}  // namespace critcert

namespace critcert {

std::optional<Rational> exact_sqrt(const Rational& a) {
    if (sign(a) < 0) return std::nullopt;
    if (sign(a) == 0) return Rational(0);
    const Integer& num = a.get_num();
    const Integer& den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return Rational(isqrt_floor(num), isqrt_floor(den));
}

}  // namespace critcert
