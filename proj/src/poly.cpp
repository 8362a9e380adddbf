#include "critcert/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "critcert/matrix.hpp"

namespace critcert {

void Poly::check_same_ring(const Poly& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomial variable lists differ");
}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    if (sign(c) != 0) p.terms_.emplace(Monomial(p.nvars()), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index) {
    Poly p(std::move(vars));
    if (index >= p.nvars()) throw std::out_of_range("variable index");
    Monomial m(p.nvars());
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::norm_squared(std::vector<std::string> vars) {
    Poly p(std::move(vars));
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        Monomial m(p.nvars());
        m[i] = 2;
        p.terms_.emplace(std::move(m), Rational(1));
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial(nvars()));
    return it == terms_.end() ? Rational(0) : it->second;
}

uint64_t Poly::total_degree() const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

uint32_t Poly::degree_in(std::size_t var) const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars()) throw std::invalid_argument("monomial length mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sign(it->second) == 0) terms_.erase(it);
    } else if (sign(c) == 0) {
        terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Rational& c, const Poly& a) {
    Poly r(a.vars_);
    if (sign(c) == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
}

Poly Poly::pow(uint32_t e) const {
    Poly r = Poly::constant(vars_, Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars()) throw std::out_of_range("derivative: variable index");
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(m[var])));
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars())
        throw std::invalid_argument("evaluate: point length mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars(); ++i) {
            for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
        }
        total += t;
    }
    return total;
}

Poly Poly::substitute_linear(const MatrixQ& A) const {
    if (A.n != nvars()) throw std::invalid_argument("substitute_linear: size mismatch");
    if (sign(A.determinant()) == 0)
        throw std::invalid_argument("substitute_linear: singular matrix");
    // Row i of A gives the image of X_i as a linear form.
    std::vector<Poly> images;
    images.reserve(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        Poly li(vars_);
        for (std::size_t j = 0; j < nvars(); ++j) {
            if (sign(A.at(i, j)) == 0) continue;
            Monomial m(nvars());
            m[j] = 1;
            li.add_term(m, A.at(i, j));
        }
        images.push_back(std::move(li));
    }
    // Cache powers of each image as needed.
    std::vector<std::vector<Poly>> powers(nvars());
    auto power = [&](std::size_t i, uint32_t e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(vars_, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(vars_, c);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (m[i]) t *= power(i, m[i]);
        r += t;
    }
    return r;
}

Poly Poly::substitute(std::size_t var, const Poly& replacement) const {
    check_same_ring(replacement);
    if (var >= nvars()) throw std::out_of_range("substitute: variable index");
    std::vector<Poly> cache{Poly::constant(vars_, Rational(1))};
    auto power = [&](uint32_t e) -> const Poly& {
        while (cache.size() <= e) cache.push_back(cache.back() * replacement);
        return cache[e];
    };
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        uint32_t e = rest[var];
        rest[var] = 0;
        Poly t(vars_);
        t.add_term(rest, c);
        r += t * power(e);
    }
    return r;
}

Poly Poly::translate_to_origin(const std::vector<Rational>& c) const {
    if (c.size() != nvars())
        throw std::invalid_argument("translate: point length mismatch");
    std::vector<std::vector<Poly>> powers(nvars());
    auto shifted_power = [&](std::size_t i, uint32_t e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(vars_, Rational(1)));
        while (cache.size() <= e) {
            Poly xi = Poly::variable(vars_, i) + Poly::constant(vars_, c[i]);
            cache.push_back(cache.back() * xi);
        }
        return cache[e];
    };
    Poly r(vars_);
    for (const auto& [m, coeff] : terms_) {
        Poly t = Poly::constant(vars_, coeff);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (m[i]) t *= shifted_power(i, m[i]);
        r += t;
    }
    Rational value = r.constant_term();
    return r - Poly::constant(vars_, value);
}

const Monomial& Poly::leading_monomial(const OrderSpec& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (compare(it->first, best->first, order) > 0) best = it;
    return best->first;
}

const Rational& Poly::leading_coefficient(const OrderSpec& order) const {
    return terms_.at(leading_monomial(order));
}

Poly Poly::monic_grevlex() const {
    if (is_zero()) return *this;
    Rational lc = leading_coefficient(OrderSpec::grevlex());
    return (1 / lc) * *this;
}

Poly Poly::primitive_integer() const {
    if (is_zero()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    Poly r = scale * *this;
    if (sign(r.leading_coefficient(OrderSpec::grevlex())) < 0) r = -r;
    return r;
}

Poly Poly::extended(const std::vector<std::string>& extra_vars) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
    Poly r(std::move(vars));
    for (const auto& [m, c] : terms_) {
        Monomial e(r.nvars());
        for (std::size_t i = 0; i < nvars(); ++i) e[i] = m[i];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Poly Poly::prepended(const std::vector<std::string>& extra_vars) const {
    std::vector<std::string> vars = extra_vars;
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    Poly r(std::move(vars));
    std::size_t off = extra_vars.size();
    for (const auto& [m, c] : terms_) {
        Monomial e(r.nvars());
        for (std::size_t i = 0; i < nvars(); ++i) e[off + i] = m[i];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Poly Poly::restricted(const std::vector<std::size_t>& keep,
                      std::vector<std::string> new_vars) const {
    Poly r(std::move(new_vars));
    std::vector<bool> kept(nvars(), false);
    for (auto k : keep) kept[k] = true;
    for (std::size_t i = 0; i < nvars(); ++i)
        if (!kept[i] && depends_on(i))
            throw std::invalid_argument("restricted: polynomial uses dropped variable");
    for (const auto& [m, c] : terms_) {
        Monomial e(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) e[j] = m[keep[j]];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    // Grevlex-descending term list.
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    OrderSpec grevlex = OrderSpec::grevlex();
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        return compare(a->first, b->first, grevlex) > 0;
    });
    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        Rational a = c;
        if (first) {
            if (sign(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sign(a) < 0 ? " - " : " + ");
            if (sign(a) < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (m.is_constant() || a != Rational(1)) {
            out << to_string(a);
            printed_coeff = true;
        }
        bool first_var = !printed_coeff;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var || printed_coeff) out << "*";
            out << vars_[i];
            if (m[i] > 1) out << "^" << m[i];
            first_var = false;
        }
    }
    return out.str();
}

}  // namespace critcert
