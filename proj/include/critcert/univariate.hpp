#ifndef CRITCERT_UNIVARIATE_HPP
#define CRITCERT_UNIVARIATE_HPP

#include <vector>

#include "critcert/poly.hpp"
#include "critcert/rational.hpp"

namespace critcert {

// Dense univariate polynomial over Q, coefficients ascending, no trailing
// zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational leading() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly derivative() const;
    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(evaluate(x)); }

    // Remainder of a / b over Q; b nonzero.
    static UPoly remainder(const UPoly& a, const UPoly& b);
    // Fraction-free pseudo-remainder: equals remainder(a, b) scaled by a
    // rational whose sign is sign(lc(b))^lcb_power; avoids the rational
    // coefficient blowup of the exact remainder on large inputs.
    static UPoly pseudo_remainder(const UPoly& a, const UPoly& b, int& lcb_power);
    // Exact quotient; throws if division is not exact.
    static UPoly exact_quotient(const UPoly& a, const UPoly& b);
    static UPoly gcd(const UPoly& a, const UPoly& b);  // monic

    UPoly monic() const;
    // Scaled by a positive rational to coprime integer coefficients.
    UPoly primitive() const;
    UPoly squarefree_part() const;
    // Divides out x^k; returns k.
    uint32_t strip_root_at_zero();

    // Interval image under exact Horner-style interval arithmetic.
    void evaluate_interval(const Rational& lo, const Rational& hi,
                           Rational& out_lo, Rational& out_hi) const;

    // Cauchy root bound: 1 + max|c_i| / |lead|.
    Rational cauchy_bound() const;

    Poly to_poly(std::vector<std::string> vars, std::size_t var) const;

private:
    void trim() {
        while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// View of a multivariate polynomial that is univariate in vars()[var];
// throws if it depends on any other variable.
UPoly to_univariate(const Poly& f, std::size_t var);

}  // namespace critcert

#endif
