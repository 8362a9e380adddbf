#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "critcert/poly.hpp"

namespace critcert {

namespace {

// Exact division f / g; throws if the division is not exact.
Poly exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide by zero");
    Poly r = f;
    Poly q(f.vars());
    OrderSpec ord = OrderSpec::grevlex();
    while (!r.is_zero()) {
        const Monomial& mr = r.leading_monomial(ord);
        const Monomial& mg = g.leading_monomial(ord);
        if (!mg.divides(mr)) throw std::invalid_argument("division not exact");
        Monomial mq = mr / mg;
        Rational cq = r.terms().at(mr) / g.terms().at(mg);
        Poly t(f.vars());
        t.add_term(mq, cq);
        q += t;
        r -= t * g;
    }
    return q;
}

std::size_t first_var(const Poly& f) {
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (f.depends_on(i)) return i;
    throw std::logic_error("first_var of constant");
}

// Coefficients of f viewed as a univariate in vars()[x], ascending; each
// coefficient is free of x.
std::vector<Poly> univar_coeffs(const Poly& f, std::size_t x) {
    std::vector<Poly> coeffs(f.degree_in(x) + 1, Poly(f.vars()));
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        uint32_t e = rest[x];
        rest[x] = 0;
        coeffs[e].add_term(rest, c);
    }
    return coeffs;
}

Poly gcd_rec(const Poly& f, const Poly& g);

Poly content_in(const Poly& f, std::size_t x) {
    Poly c(f.vars());
    for (const Poly& coeff : univar_coeffs(f, x)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff : gcd_rec(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_constant() ? Poly::constant(f.vars(), Rational(1)) : c;
}

uint32_t deg_in(const Poly& f, std::size_t x) { return f.degree_in(x); }

// Pseudo-remainder of a by b in variable x, up to a nonzero scalar-polynomial
// factor (callers take primitive parts, so the exact prem scaling is dropped).
Poly prem_like(Poly a, const Poly& b, std::size_t x) {
    uint32_t db = deg_in(b, x);
    auto bc = univar_coeffs(b, x);
    const Poly& lcb = bc[db];
    while (!a.is_zero() && deg_in(a, x) >= db) {
        uint32_t da = deg_in(a, x);
        auto ac = univar_coeffs(a, x);
        Poly shift(a.vars());
        Monomial m(a.nvars());
        m[x] = da - db;
        shift.add_term(m, Rational(1));
        a = lcb * a - ac[da] * shift * b;
        if (!a.is_zero() && deg_in(a, x) == da) {
            // Leading term must cancel; guard against coefficient aliasing bugs.
            throw std::logic_error("pseudo-division failed to reduce degree");
        }
    }
    return a;
}

Poly gcd_rec(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant())
        return Poly::constant(f.vars(), Rational(1));
    std::size_t x = first_var(f);
    if (!g.depends_on(x)) return gcd_rec(content_in(f, x), g);
    if (!f.depends_on(x)) return gcd_rec(f, content_in(g, x));

    Poly cf = content_in(f, x), cg = content_in(g, x);
    Poly c = gcd_rec(cf, cg);
    Poly a = exact_divide(f, cf).primitive_integer();
    Poly b = exact_divide(g, cg).primitive_integer();
    if (deg_in(a, x) < deg_in(b, x)) std::swap(a, b);
    while (true) {
        Poly r = prem_like(a, b, x);
        if (r.is_zero()) break;
        r = exact_divide(r, content_in(r, x)).primitive_integer();
        a = std::move(b);
        b = std::move(r);
        if (!b.depends_on(x)) return c;  // coprime in x
    }
    Poly result = c * exact_divide(b, content_in(b, x));
    return result;
}

// Yun's squarefree decomposition of a polynomial primitive in x, w.r.t. x.
std::vector<std::pair<Poly, uint32_t>> yun(const Poly& f, std::size_t x) {
    std::vector<std::pair<Poly, uint32_t>> out;
    Poly fp = f.derivative(x);
    Poly g = gcd_poly(f, fp);
    Poly c = exact_divide(f, g);
    Poly d = exact_divide(fp, g) - c.derivative(x);
    for (uint32_t i = 1; !c.is_constant(); ++i) {
        Poly a = gcd_poly(c, d);
        if (!a.is_constant()) out.emplace_back(a, i);
        c = exact_divide(c, a);
        d = exact_divide(d, a) - c.derivative(x);
    }
    return out;
}

std::vector<std::pair<Poly, uint32_t>> sqfree_rec(const Poly& f) {
    if (f.is_constant()) return {};
    std::size_t x = first_var(f);
    Poly cont = content_in(f, x);
    Poly pp = exact_divide(f, cont);
    auto list = yun(pp, x);
    auto rest = sqfree_rec(cont);
    list.insert(list.end(), rest.begin(), rest.end());
    return list;
}

// ---------------------------------------------------------------------------
// Heuristic gcd (GCDHEU): evaluate at a large integer, take the gcd one level
// down, reconstruct coefficients from balanced base-xi digits, and verify the
// candidate by exact division. Orders of magnitude faster than the primitive
// PRS on the large eliminants arising from elimination ideals; falls back to
// the PRS when the heuristic gives up.

Integer max_abs_num(const Poly& f) {
    Integer m(0);
    for (const auto& [mon, c] : f.terms()) {
        Integer a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

Poly eval_var_integer(const Poly& f, std::size_t x, const Integer& xi) {
    Poly out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        uint32_t e = rest[x];
        rest[x] = 0;
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), e);
        out.add_term(rest, c * Rational(p));
    }
    return out;
}

// Rebuilds a polynomial in x from the balanced base-xi digits of gamma's
// coefficients; returns nullopt when more than max_digits digits appear.
std::optional<Poly> digits_to_poly(const Poly& gamma, std::size_t x,
                                   const Integer& xi, uint32_t max_digits) {
    Poly G(gamma.vars());
    Poly cur = gamma;
    Integer half = xi / 2;
    for (uint32_t i = 0; !cur.is_zero(); ++i) {
        if (i > max_digits) return std::nullopt;
        Poly next(gamma.vars());
        for (const auto& [m, c] : cur.terms()) {
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_num().get_mpz_t(),
                        xi.get_mpz_t());
            if (r > half) {
                r -= xi;
                q += 1;
            }
            if (sign(Rational(r)) != 0) {
                Monomial md = m;
                md[x] = i;
                G.add_term(md, Rational(r));
            }
            if (sign(Rational(q)) != 0) next.add_term(m, Rational(q));
        }
        cur = std::move(next);
    }
    return G;
}

bool divides_exactly(const Poly& d, const Poly& f) {
    if (f.is_zero()) return true;
    try {
        exact_divide(f, d);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// f, g primitive with integer coefficients, both nonconstant-or-constant mix
// handled by caller. Returns a primitive gcd candidate or nullopt.
std::optional<Poly> gcdheu(const Poly& f, const Poly& g, int depth) {
    if (depth > 8) return std::nullopt;
    // Base case: no variables left in either polynomial.
    std::size_t x = f.nvars();
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (f.depends_on(i) || g.depends_on(i)) {
            x = i;
            break;
        }
    if (x == f.nvars()) {
        Integer a = f.is_zero() ? Integer(0) : Integer(f.constant_term().get_num());
        Integer b = g.is_zero() ? Integer(0) : Integer(g.constant_term().get_num());
        Integer d = gcd(a, b);
        return Poly::constant(f.vars(), Rational(d));
    }
    Integer bound = std::max(max_abs_num(f), max_abs_num(g));
    Integer xi = 2 * bound + 29;
    uint32_t dx = std::max(f.degree_in(x), g.degree_in(x));
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly fe = eval_var_integer(f, x, xi);
        Poly ge = eval_var_integer(g, x, xi);
        auto gamma = gcdheu(fe, ge, depth + 1);
        if (gamma) {
            auto G = digits_to_poly(*gamma, x, xi, dx);
            if (G && !G->is_zero()) {
                Poly cand = G->primitive_integer();
                if (divides_exactly(cand, f) && divides_exactly(cand, g))
                    return cand;
            }
        }
        xi = (xi * 73794) / 27011;  // next heuristic evaluation point
    }
    return std::nullopt;
}

}  // namespace

Poly gcd_poly(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.monic_grevlex();
    if (g.is_zero()) return f.monic_grevlex();
    if (f.is_constant() || g.is_constant())
        return Poly::constant(f.vars(), Rational(1));
    auto h = gcdheu(f.primitive_integer(), g.primitive_integer(), 0);
    if (h) return h->monic_grevlex();
    Poly r = gcd_rec(f, g);
    if (r.is_zero()) return r;
    return r.monic_grevlex();
}

SquarefreeDecomposition squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    auto raw = sqfree_rec(f);
    // Group equal multiplicities; factors are normalized monic.
    std::map<uint32_t, Poly> grouped;
    for (auto& [p, m] : raw) {
        Poly factor = p.monic_grevlex();
        auto it = grouped.find(m);
        if (it == grouped.end())
            grouped.emplace(m, std::move(factor));
        else
            it->second *= factor;
    }
    SquarefreeDecomposition result;
    Poly product = Poly::constant(f.vars(), Rational(1));
    for (auto& [m, p] : grouped) {
        product *= p.pow(m);
        result.factors.emplace_back(std::move(p), m);
    }
    // All factors are grevlex-monic, so the constant is the ratio of
    // leading coefficients; verify exactness.
    result.constant = f.leading_coefficient(OrderSpec::grevlex()) /
                      product.leading_coefficient(OrderSpec::grevlex());
    if (result.constant * product != f)
        throw std::logic_error("squarefree decomposition failed to reassemble");
    return result;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) return f;
    if (f.is_constant()) return Poly::constant(f.vars(), Rational(1));
    auto dec = squarefree_decomposition(f);
    Poly r = Poly::constant(f.vars(), Rational(1));
    for (const auto& [p, m] : dec.factors) r *= p;
    return r;
}

}  // namespace critcert
