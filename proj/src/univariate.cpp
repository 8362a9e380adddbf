#include "critcert/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace critcert {

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly UPoly::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::remainder(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("remainder by zero");
    UPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational q = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        std::vector<Rational> c = r.c_;
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i + shift] -= q * b.c_[i];
        c.pop_back();  // leading term cancels exactly
        r = UPoly(std::move(c));
    }
    return r;
}

UPoly UPoly::pseudo_remainder(const UPoly& a, const UPoly& b, int& lcb_power) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
    UPoly r = a;
    lcb_power = 0;
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational lr = r.leading();
        int shift = r.degree() - b.degree();
        std::vector<Rational> c = r.c_;
        for (auto& v : c) v *= lb;
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + shift] -= lr * b.c_[i];
        c.pop_back();  // leading term cancels exactly
        r = UPoly(std::move(c));
        ++lcb_power;
        // Periodic content stripping (positive scale) bounds growth without
        // touching the sign bookkeeping.
        if (lcb_power % 8 == 0) r = r.primitive();
    }
    return r;
}

UPoly UPoly::exact_quotient(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("quotient by zero");
    UPoly r = a;
    std::vector<Rational> q(a.is_zero() ? 0 : std::max(0, a.degree() - b.degree() + 1),
                            Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational k = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        q[shift] = k;
        std::vector<Rational> c = r.c_;
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + shift] -= k * b.c_[i];
        c.pop_back();
        r = UPoly(std::move(c));
    }
    if (!r.is_zero()) throw std::invalid_argument("univariate division not exact");
    return UPoly(std::move(q));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        int k = 0;
        UPoly r = pseudo_remainder(x, y, k).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    std::vector<Rational> out;
    for (const auto& c : c_) out.push_back(Rational(c * scale));
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return UPoly(std::move(c));
}

UPoly UPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return monic();
    UPoly g = gcd(*this, derivative());
    return exact_quotient(*this, g).monic();
}

uint32_t UPoly::strip_root_at_zero() {
    uint32_t k = 0;
    while (k < c_.size() && sign(c_[k]) == 0) ++k;
    c_.erase(c_.begin(), c_.begin() + k);
    return k;
}

void UPoly::evaluate_interval(const Rational& lo, const Rational& hi,
                              Rational& out_lo, Rational& out_hi) const {
    Rational rlo(0), rhi(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // [rlo, rhi] * [lo, hi] + c
        Rational a = rlo * lo, b = rlo * hi, c = rhi * lo, d = rhi * hi;
        Rational nlo = std::min(std::min(a, b), std::min(c, d));
        Rational nhi = std::max(std::max(a, b), std::max(c, d));
        rlo = nlo + *it;
        rhi = nhi + *it;
    }
    out_lo = rlo;
    out_hi = rhi;
}

Rational UPoly::cauchy_bound() const {
    if (is_zero()) return Rational(1);
    Rational m(0);
    for (const auto& c : c_) m = std::max(m, Rational(abs(c)));
    return Rational(1) + m / Rational(abs(leading()));
}

Poly UPoly::to_poly(std::vector<std::string> vars, std::size_t var) const {
    Poly p(std::move(vars));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sign(c_[i]) == 0) continue;
        Monomial m(p.nvars());
        m[var] = static_cast<uint32_t>(i);
        p.add_term(m, c_[i]);
    }
    return p;
}

UPoly to_univariate(const Poly& f, std::size_t var) {
    std::vector<Rational> c(f.degree_in(var) + 1, Rational(0));
    for (const auto& [m, coeff] : f.terms()) {
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (i != var && m[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in the given variable");
        c[m[var]] = coeff;
    }
    return UPoly(std::move(c));
}

}  // namespace critcert
