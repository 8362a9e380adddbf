#include "critcert/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "critcert/univariate.hpp"

namespace critcert {

namespace {

struct Term {
    Monomial m;
    Rational c;
};

// Term list sorted strictly descending under the engine order.
struct GPoly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const Rational& lc() const { return t.front().c; }
};

struct Engine {
    OrderSpec ord;

    int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, ord); }

    GPoly from_poly(const Poly& p) const {
        GPoly g;
        g.t.reserve(p.terms().size());
        for (const auto& [m, c] : p.terms()) g.t.push_back({m, c});
        std::sort(g.t.begin(), g.t.end(),
                  [this](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
        return g;
    }

    Poly to_poly(const GPoly& g, const std::vector<std::string>& vars) const {
        Poly p(vars);
        for (const auto& term : g.t) p.add_term(term.m, term.c);
        return p;
    }

    // f - c * x^m * g
    GPoly axpy_sub(const GPoly& f, const Rational& c, const Monomial& m,
                   const GPoly& g) const {
        GPoly r;
        r.t.reserve(f.t.size() + g.t.size());
        std::size_t i = 0, j = 0;
        while (i < f.t.size() || j < g.t.size()) {
            if (j == g.t.size()) {
                r.t.push_back(f.t[i++]);
                continue;
            }
            Monomial gm = g.t[j].m * m;
            if (i == f.t.size()) {
                r.t.push_back({std::move(gm), -c * g.t[j].c});
                ++j;
                continue;
            }
            int k = cmp(f.t[i].m, gm);
            if (k > 0) {
                r.t.push_back(f.t[i++]);
            } else if (k < 0) {
                r.t.push_back({std::move(gm), -c * g.t[j].c});
                ++j;
            } else {
                Rational nc = f.t[i].c - c * g.t[j].c;
                if (sign(nc) != 0) r.t.push_back({f.t[i].m, std::move(nc)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Divides coefficients by their content; leading coefficient positive.
    // Returns the factor the polynomial was multiplied by.
    Rational strip_content(GPoly& f) const {
        if (f.is_zero()) return Rational(1);
        Integer num_gcd(0), den_lcm(1);
        for (const auto& term : f.t) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                    term.c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    term.c.get_den().get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (sign(f.lc()) < 0) scale = -scale;
        for (auto& term : f.t) term.c *= scale;
        return scale;
    }

    void make_monic(GPoly& f) const {
        if (f.is_zero()) return;
        Rational inv = 1 / f.lc();
        for (auto& term : f.t) term.c *= inv;
    }

    // Full normal form. When `scaled`, the result may be rescaled by a
    // nonzero rational along the way (fine inside Buchberger, not for the
    // division contract). Any rescaling of the working polynomial must be
    // applied to the already-emitted terms too, or the result would mix
    // incompatible scales.
    GPoly reduce(GPoly f, const std::vector<GPoly>& basis, bool scaled) const {
        GPoly out;
        std::size_t steps = 0;
        while (!f.is_zero()) {
            bool reduced = false;
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                if (g.lm().divides(f.lm())) {
                    if (scaled) {
                        // Fraction-free step: replace f by lc(g) f - lc(f) m g,
                        // which keeps integer coefficients when the inputs are
                        // integral; the emitted terms must be scaled alike.
                        Rational lcf = f.lc();
                        const Rational& lcg = g.lc();
                        for (auto& term : f.t) term.c *= lcg;
                        for (auto& term : out.t) term.c *= lcg;
                        f = axpy_sub(f, lcf, f.lm() / g.lm(), g);
                        if ((++steps & 3u) == 0) {
                            Rational scale = strip_content(f);
                            for (auto& term : out.t) term.c *= scale;
                        }
                    } else {
                        Rational c = f.lc() / g.lc();
                        f = axpy_sub(f, c, f.lm() / g.lm(), g);
                    }
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                out.t.push_back(std::move(f.t.front()));
                f.t.erase(f.t.begin());
            }
        }
        return out;
    }

    GPoly spoly(const GPoly& a, const GPoly& b) const {
        Monomial l = lcm(a.lm(), b.lm());
        GPoly left;  // (l / lm(a)) * a, made monic first for symmetry
        Rational ca = 1 / a.lc();
        Monomial ma = l / a.lm();
        for (const auto& term : a.t) left.t.push_back({term.m * ma, term.c * ca});
        return axpy_sub(left, 1 / b.lc(), l / b.lm(), b);
    }
};

struct Pair {
    std::size_t i, j;
    Monomial lcm_m;
    uint64_t deg;
};

std::vector<GPoly> buchberger_engine(const Engine& eng, std::vector<GPoly> basis) {
    // Drop zeros, normalize.
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const GPoly& g) { return g.is_zero(); }),
                basis.end());
    for (auto& g : basis) eng.strip_content(g);

    auto add_pairs = [&](std::vector<Pair>& pairs, std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial l = lcm(basis[i].lm(), basis[t].lm());
            pairs.push_back({i, t, l, l.degree()});
        }
    };

    std::vector<Pair> pairs;
    for (std::size_t t = 1; t < basis.size(); ++t) add_pairs(pairs, t);

    auto pending = [&](std::size_t a, std::size_t b) {
        for (const auto& p : pairs)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pairs.empty()) {
        // Normal selection: smallest lcm under the order.
        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (eng.cmp(pairs[i].lcm_m, pairs[best].lcm_m) < 0) best = i;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        // Product criterion.
        if (p.lcm_m == basis[p.i].lm() * basis[p.j].lm()) continue;
        // Chain criterion.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || basis[k].is_zero()) continue;
            if (basis[k].lm().divides(p.lcm_m) && !pending(p.i, k) && !pending(p.j, k))
                skip = true;
        }
        if (skip) continue;

        GPoly s = eng.spoly(basis[p.i], basis[p.j]);
        GPoly r = eng.reduce(std::move(s), basis, true);
        if (std::getenv("CRITCERT_GB_DEBUG")) {
            std::size_t bits = 0;
            for (const auto& t : r.t)
                bits = std::max(bits, mpz_sizeinbase(t.c.get_num().get_mpz_t(), 2));
            std::fprintf(stderr, "[gb] pair(%zu,%zu) deg %llu -> terms %zu maxbits %zu basis %zu pairs %zu\n",
                         p.i, p.j, (unsigned long long)p.deg, r.t.size(), bits,
                         basis.size(), pairs.size());
        }
        if (r.is_zero()) continue;
        eng.strip_content(r);
        basis.push_back(std::move(r));
        add_pairs(pairs, basis.size() - 1);
        if (basis.back().lm().is_constant()) break;  // unit ideal
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another kept one.
    std::vector<GPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm())) {
                if (basis[i].lm() == basis[j].lm())
                    redundant = j < i;  // keep one copy
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails and make monic.
    std::vector<GPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        GPoly r = eng.reduce(minimal[i], others, true);
        eng.make_monic(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const GPoly& a, const GPoly& b) {
        return eng.cmp(a.lm(), b.lm()) < 0;
    });
    return reduced;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Block order placing `front` variables first (eliminated block).
OrderSpec elimination_order(std::size_t n, const std::vector<std::size_t>& front) {
    std::vector<std::size_t> perm = front;
    std::vector<bool> used(n, false);
    for (auto v : front) used[v] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) perm.push_back(i);
    return OrderSpec::block(front.size(), std::move(perm));
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const OrderSpec& order) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    Engine eng{order};
    std::vector<GPoly> basis;
    for (const auto& g : gens) basis.push_back(eng.from_poly(g));
    auto reduced = buchberger_engine(eng, std::move(basis));
    GroebnerBasis out;
    out.order = order;
    for (const auto& g : reduced) out.elements.push_back(eng.to_poly(g, gens.front().vars()));
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    Engine eng{G.order};
    std::vector<GPoly> basis;
    for (const auto& g : G.elements) basis.push_back(eng.from_poly(g));
    GPoly r = eng.reduce(eng.from_poly(f), basis, false);
    return eng.to_poly(r, f.vars());
}

Ideal::Ideal(std::vector<std::string> vars, std::vector<Poly> gens)
    : vars_(std::move(vars)) {
    for (auto& g : gens) {
        if (g.vars() != vars_)
            throw std::invalid_argument("ideal generator in wrong ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(std::vector<std::string> vars) {
    Poly one = Poly::constant(vars, Rational(1));
    return Ideal(std::move(vars), {one});
}

Ideal Ideal::zero(std::vector<std::string> vars) { return Ideal(std::move(vars), {}); }

bool Ideal::is_unit() const {
    if (gens_.empty()) return false;
    const auto& gb = groebner(OrderSpec::grevlex());
    return gb.elements.size() == 1 && gb.elements[0].is_constant();
}

const GroebnerBasis& Ideal::groebner(const OrderSpec& order) const {
    auto it = cache_->find(order);
    if (it != cache_->end()) return it->second;
    GroebnerBasis gb;
    if (gens_.empty()) {
        gb.order = order;
    } else {
        gb = buchberger(gens_, order);
    }
    return cache_->emplace(order, std::move(gb)).first->second;
}

int hilbert_dimension(const Ideal& I) {
    if (I.is_zero_ideal()) return static_cast<int>(I.nvars());
    const auto& gb = I.groebner(OrderSpec::grevlex());
    if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return -1;
    return static_cast<int>(max_independent_set(I).size());
}

std::vector<std::size_t> max_independent_set(const Ideal& I) {
    std::size_t n = I.nvars();
    if (I.is_zero_ideal()) return identity_perm(n);
    const auto& gb = I.groebner(OrderSpec::grevlex());
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb.elements) {
        const Monomial& lm = g.leading_monomial(gb.order);
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i]) s.push_back(i);
        supports.push_back(std::move(s));
    }
    std::vector<std::size_t> best;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best.size() && mask != 0) continue;
        bool independent = true;
        for (const auto& s : supports) {
            bool contained = true;
            for (auto v : s)
                if (!(mask >> v & 1)) {
                    contained = false;
                    break;
                }
            if (contained) {
                independent = false;
                break;
            }
        }
        if (independent && size >= best.size()) {
            if (size > best.size()) {
                best.clear();
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1) best.push_back(i);
            }
        }
    }
    return best;
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep) {
    std::size_t n = I.nvars();
    std::vector<bool> kept(n, false);
    for (auto k : keep) kept[k] = true;
    std::vector<std::size_t> eliminated;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) eliminated.push_back(i);

    std::vector<std::string> new_vars;
    for (auto k : keep) new_vars.push_back(I.vars()[k]);

    if (I.is_zero_ideal()) return Ideal::zero(new_vars);

    OrderSpec ord = elimination_order(n, eliminated);
    const auto& gb = I.groebner(ord);
    std::vector<Poly> out;
    for (const auto& g : gb.elements) {
        bool pure = true;
        for (auto e : eliminated)
            if (g.depends_on(e)) {
                pure = false;
                break;
            }
        if (pure) out.push_back(g.restricted(keep, new_vars));
    }
    return Ideal(new_vars, std::move(out));
}

Ideal saturate_by_poly(const Ideal& I, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("saturation by zero polynomial");
    if (g.is_constant()) return I;
    if (I.is_zero_ideal()) return I;
    std::vector<std::string> tag{"_t_sat"};
    std::vector<Poly> ext;
    for (const auto& f : I.generators()) ext.push_back(f.prepended(tag));
    Poly gt = g.prepended(tag);
    Poly t = Poly::variable(gt.vars(), 0);
    ext.push_back(t * gt - Poly::constant(gt.vars(), Rational(1)));
    Ideal extended(gt.vars(), std::move(ext));
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i <= I.nvars(); ++i) keep.push_back(i);
    return elimination_ideal(extended, keep);
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    if (I.is_zero_ideal() || J.is_zero_ideal())
        return Ideal::zero(I.vars());
    std::vector<std::string> tag{"_t_mix"};
    std::vector<Poly> ext;
    Poly t = Poly::variable(Poly(I.vars()).prepended(tag).vars(), 0);
    Poly one = Poly::constant(t.vars(), Rational(1));
    for (const auto& f : I.generators()) ext.push_back(t * f.prepended(tag));
    for (const auto& f : J.generators()) ext.push_back((one - t) * f.prepended(tag));
    Ideal extended(t.vars(), std::move(ext));
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i <= I.nvars(); ++i) keep.push_back(i);
    return elimination_ideal(extended, keep);
}

Ideal saturate_by_ideal(const Ideal& I, const Ideal& J) {
    if (J.is_zero_ideal())
        throw std::invalid_argument("saturation by the zero ideal");
    bool first = true;
    Ideal acc = Ideal::zero(I.vars());
    for (const auto& g : J.generators()) {
        Ideal s = saturate_by_poly(I, g);
        acc = first ? s : ideal_intersection(acc, s);
        first = false;
    }
    return acc;
}

bool is_zero_dimensional(const Ideal& I) {
    if (I.is_zero_ideal()) return I.nvars() == 0;
    const auto& gb = I.groebner(OrderSpec::grevlex());
    if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return true;
    for (std::size_t v = 0; v < I.nvars(); ++v) {
        bool found = false;
        for (const auto& g : gb.elements) {
            const Monomial& lm = g.leading_monomial(gb.order);
            bool pure = lm[v] > 0;
            for (std::size_t i = 0; i < I.nvars() && pure; ++i)
                if (i != v && lm[i]) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Poly univariate_eliminant(const Ideal& I, std::size_t var) {
    if (!I.is_zero_ideal() && is_zero_dimensional(I))
        return minimal_polynomial(I, Poly::variable(I.vars(), var))
            .to_poly(I.vars(), var);
    Ideal e = elimination_ideal(I, {var});
    std::vector<std::string> ring = I.vars();
    if (e.is_zero_ideal()) return Poly::zero(ring);
    const auto& gb = e.groebner(OrderSpec::grevlex());
    if (gb.elements.size() != 1)
        throw std::logic_error("univariate elimination ideal not principal");
    // Map back into the original ring.
    Poly g = gb.elements[0];
    Poly out(ring);
    for (const auto& [m, c] : g.terms()) {
        Monomial full(ring.size());
        full[var] = m[0];
        out.add_term(full, c);
    }
    return out;
}

// radical_zero_dim is defined after the quotient-algebra machinery below.

namespace {

// Leading coefficient of g as a univariate polynomial in vars[k], where
// leading refers to the k-last block order (g viewed over Q(X_k)).
UPoly function_field_lc(const Poly& g, std::size_t k) {
    // Find the maximal monomial in the non-k variables (grevlex), then
    // collect the X_k-coefficients attached to it.
    std::size_t n = g.nvars();
    OrderSpec grevlex = OrderSpec::grevlex();
    bool have = false;
    Monomial best;
    for (const auto& [m, c] : g.terms()) {
        Monomial stripped = m;
        stripped[k] = 0;
        if (!have || compare(stripped, best, grevlex) > 0) {
            best = stripped;
            have = true;
        }
    }
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : g.terms()) {
        Monomial stripped = m;
        uint32_t e = stripped[k];
        stripped[k] = 0;
        if (stripped == best) {
            if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
            coeffs[e] = c;
        }
    }
    (void)n;
    return UPoly(std::move(coeffs));
}

// Squarefree lcm of the function-field leading coefficients of a basis.
UPoly denominator_poly(const Ideal& I, std::size_t k) {
    OrderSpec ord = elimination_order(I.nvars(), [&] {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < I.nvars(); ++i)
            if (i != k) front.push_back(i);
        return front;
    }());
    const auto& gb = I.groebner(ord);
    UPoly acc = UPoly::constant(Rational(1));
    for (const auto& g : gb.elements) acc = acc * function_field_lc(g, k);
    return acc.squarefree_part();
}

// Radical of an ideal all of whose components are curves dominant over
// vars[k]: Seidenberg over Q(X_k), contracted back by saturation.
Ideal radical_dim1_via_function_field(const Ideal& I, std::size_t k) {
    std::vector<Poly> gens = I.generators();
    for (std::size_t j = 0; j < I.nvars(); ++j) {
        if (j == k) continue;
        Ideal e = elimination_ideal(I, {std::min(j, k), std::max(j, k)});
        if (e.is_zero_ideal())
            throw RetryableFailure("curve not in general position: zero bivariate eliminant");
        // Pick a generator of minimal degree in X_j.
        std::size_t j_local = j < k ? 0 : 1;
        const Poly* best = nullptr;
        for (const auto& g : e.generators()) {
            if (!g.depends_on(j_local)) continue;
            if (!best || g.degree_in(j_local) < best->degree_in(j_local)) best = &g;
        }
        if (!best)
            throw RetryableFailure("curve not in general position: no eliminant in variable");
        Poly sf = squarefree_part(*best);
        // Re-embed into the full ring.
        std::vector<std::string> full = I.vars();
        Poly embedded(full);
        std::size_t a = std::min(j, k), b = std::max(j, k);
        for (const auto& [m, c] : sf.terms()) {
            Monomial fm(full.size());
            fm[a] = m[0];
            fm[b] = m[1];
            embedded.add_term(fm, c);
        }
        gens.push_back(embedded);
    }
    Ideal J(I.vars(), gens);
    UPoly h = denominator_poly(J, k);
    if (h.degree() <= 0) return Ideal(I.vars(), J.groebner(OrderSpec::grevlex()).elements);
    Ideal sat = saturate_by_poly(J, h.to_poly(I.vars(), k));
    return Ideal(I.vars(), sat.groebner(OrderSpec::grevlex()).elements);
}

}  // namespace

namespace {

// Radical of the union of all one-dimensional components of I: for each
// coordinate, the components dominant over it are extracted by saturating
// with the function-field denominator and radicalized over that function
// field; every curve is dominant over at least one coordinate, so the
// intersection over all coordinates covers them all.
Ideal radical_curve_part(const Ideal& I) {
    std::optional<Ideal> acc;
    for (std::size_t k = 0; k < I.nvars(); ++k) {
        UPoly h = denominator_poly(I, k);
        Ideal raw =
            h.degree() <= 0 ? I : saturate_by_poly(I, h.to_poly(I.vars(), k));
        if (raw.is_unit() || hilbert_dimension(raw) != 1) continue;
        Ideal Jk = radical_dim1_via_function_field(raw, k);
        if (hilbert_dimension(Jk) != 1)
            throw RetryableFailure("curve part has wrong dimension");
        acc = acc ? ideal_intersection(*acc, Jk) : Jk;
    }
    if (!acc)
        throw RetryableFailure("no curve component dominant over any variable");
    return *acc;
}

}  // namespace

Ideal radical_dim1_equidim(const Ideal& I) {
    if (hilbert_dimension(I) != 1)
        throw std::invalid_argument("radical_dim1_equidim: dimension is not 1");
    const auto& gb = I.groebner(OrderSpec::grevlex());
    if (gb.elements.size() == 1)
        return Ideal(I.vars(), {squarefree_part(gb.elements[0])});
    return radical_curve_part(I);
}

EquidimSplit equidim_split_dim1(const Ideal& I) {
    if (hilbert_dimension(I) != 1)
        throw std::invalid_argument("equidim_split_dim1: dimension is not 1");
    const auto& gb = I.groebner(OrderSpec::grevlex());

    // Principal one-dimensional ideals live in two variables and have no
    // zero-dimensional part.
    if (gb.elements.size() == 1) {
        EquidimSplit r;
        r.dim0 = Ideal::unit(I.vars());
        r.dim1 = Ideal(I.vars(), {squarefree_part(gb.elements[0])});
        return r;
    }

    Ideal I1 = radical_curve_part(I);
    Ideal I0_raw = saturate_by_ideal(I, I1);
    EquidimSplit r;
    r.dim1 = I1;
    if (I0_raw.is_unit()) {
        r.dim0 = Ideal::unit(I.vars());
    } else if (!is_zero_dimensional(I0_raw)) {
        throw RetryableFailure("residual part is not zero-dimensional");
    } else {
        r.dim0 = radical_zero_dim(I0_raw);
    }
    return r;
}

bool ideal_membership(const Poly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    return normal_form(f, I.groebner(OrderSpec::grevlex())).is_zero();
}

Ideal Ideal::with_basis(std::vector<std::string> vars, GroebnerBasis gb) {
    Ideal I(vars, gb.elements);
    I.cache_->emplace(gb.order, std::move(gb));
    return I;
}

namespace {

// Linear-algebra view of Q[X]/I for zero-dimensional I: the monomials under
// the grevlex staircase index coordinates of normal forms.
struct Quotient {
    Engine eng{OrderSpec::grevlex()};
    std::vector<GPoly> gb;
    std::vector<Monomial> basis;  // ascending grevlex
    std::map<Monomial, std::size_t> index;
    std::vector<std::string> vars;

    static Quotient build(const Ideal& I) {
        Quotient q;
        q.vars = I.vars();
        const auto& G = I.groebner(OrderSpec::grevlex());
        std::vector<Monomial> lts;
        for (const auto& g : G.elements) {
            q.gb.push_back(q.eng.from_poly(g));
            lts.push_back(g.leading_monomial(G.order));
        }
        // BFS below the staircase.
        std::size_t n = I.nvars();
        std::set<Monomial> seen;
        std::vector<Monomial> queue{Monomial(n)};
        seen.insert(queue.front());
        while (!queue.empty()) {
            Monomial m = queue.back();
            queue.pop_back();
            bool under = true;
            for (const auto& lt : lts)
                if (lt.divides(m)) {
                    under = false;
                    break;
                }
            if (!under) continue;
            q.basis.push_back(m);
            for (std::size_t i = 0; i < n; ++i) {
                Monomial next = m;
                ++next[i];
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        std::sort(q.basis.begin(), q.basis.end(),
                  [&](const Monomial& a, const Monomial& b) {
                      return q.eng.cmp(a, b) < 0;
                  });
        for (std::size_t i = 0; i < q.basis.size(); ++i) q.index[q.basis[i]] = i;
        return q;
    }

    std::vector<Rational> nf_vector(const Poly& p) const {
        GPoly r = eng.reduce(eng.from_poly(p), gb, false);
        std::vector<Rational> v(basis.size(), Rational(0));
        for (const auto& t : r.t) v[index.at(t.m)] = t.c;
        return v;
    }
};

bool is_zero_vec(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (sign(x) != 0) return false;
    return true;
}

// Row-echelon store over Q^D with optional combination tracking: expr holds
// coefficients over an arbitrary caller-defined index space.
struct Echelon {
    struct Row {
        std::vector<Rational> vec;
        std::size_t pivot;
        std::vector<Rational> expr;
    };
    std::vector<Row> rows;

    // Reduces v (and the tracked combination) in place; true when v hits 0.
    bool reduce(std::vector<Rational>& v, std::vector<Rational>* expr) const {
        for (const auto& row : rows) {
            if (sign(v[row.pivot]) == 0) continue;
            Rational c = v[row.pivot] / row.vec[row.pivot];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * row.vec[i];
            if (expr) {
                if (expr->size() < row.expr.size())
                    expr->resize(row.expr.size(), Rational(0));
                for (std::size_t i = 0; i < row.expr.size(); ++i)
                    (*expr)[i] -= c * row.expr[i];
            }
        }
        return is_zero_vec(v);
    }

    void add(std::vector<Rational> v, std::vector<Rational> expr) {
        std::size_t pivot = 0;
        while (sign(v[pivot]) == 0) ++pivot;
        // Joint rescaling keeps every (vec, expr) relation valid (they are
        // homogeneous) while stopping rational coefficient growth.
        scale_joint(v, expr);
        rows.push_back({std::move(v), pivot, std::move(expr)});
    }

    // Divides both vectors by the collective rational content.
    static void scale_joint(std::vector<Rational>& v, std::vector<Rational>& expr) {
        Integer num_gcd(0), den_lcm(1);
        auto absorb = [&](const std::vector<Rational>& u) {
            for (const auto& x : u) {
                if (sign(x) == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                        x.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        x.get_den().get_mpz_t());
            }
        };
        absorb(v);
        absorb(expr);
        if (sign(Rational(num_gcd)) == 0) return;
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        for (auto& x : v) x *= scale;
        for (auto& x : expr) x *= scale;
    }
};

// Columns of multiplication-by-X_v on the quotient, one matrix per variable.
using MultMats = std::vector<std::vector<std::vector<Rational>>>;

MultMats mult_matrices(const Quotient& Q, std::size_t n) {
    std::size_t D = Q.basis.size();
    MultMats mats(n);
    for (std::size_t v = 0; v < n; ++v) {
        mats[v].resize(D);
        for (std::size_t j = 0; j < D; ++j) {
            Poly bj(Q.vars);
            Monomial m = Q.basis[j];
            ++m[v];
            bj.add_term(m, Rational(1));
            mats[v][j] = Q.nf_vector(bj);
        }
    }
    return mats;
}

std::vector<Rational> apply_columns(const std::vector<std::vector<Rational>>& cols,
                                    const std::vector<Rational>& w) {
    std::vector<Rational> r(w.size(), Rational(0));
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (sign(w[j]) == 0) continue;
        for (std::size_t i = 0; i < w.size(); ++i) r[i] += w[j] * cols[j][i];
    }
    return r;
}

std::vector<Rational> unit_vector(std::size_t D, std::size_t at) {
    std::vector<Rational> e(D, Rational(0));
    e[at] = Rational(1);
    return e;
}

// Minimal polynomial of the vector w0 under the linear map given by cols:
// the tracked combination is the polynomial in the map applied to w0.
UPoly krylov_annihilator(const std::vector<std::vector<Rational>>& cols,
                         std::vector<Rational> w) {
    std::size_t D = w.size();
    Echelon ech;
    std::vector<Rational> q{Rational(1)};
    for (std::size_t step = 0; step <= D; ++step) {
        std::vector<Rational> r = w, qq = q;
        if (ech.reduce(r, &qq)) {
            UPoly a(std::move(qq));
            return a.monic();
        }
        ech.add(std::move(r), std::move(qq));
        w = apply_columns(cols, w);
        q.insert(q.begin(), Rational(0));
        // Rescale the iterate; q tracks the same factor so the final
        // dependency still expresses a polynomial in the map applied to w0.
        Echelon::scale_joint(w, q);
    }
    throw std::logic_error("krylov_annihilator failed to terminate");
}

// --------------------------------------------------------------------------
// Modular minimal polynomial. Exact Krylov over Q suffers severe coefficient
// blowup on quotients of dimension in the hundreds; instead, scale the map to
// an integer matrix, compute its minimal polynomial modulo word-sized primes,
// lift by CRT, and certify the candidate with one exact integer Horner
// evaluation. The exact Krylov remains as a fallback.

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    // Extended Euclid; p prime, a != 0 mod p.
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

// Monic minimal polynomial (ascending coefficients) of the matrix with the
// given GF(p) columns, acting on w, over GF(p). Empty result signals failure.
std::vector<uint64_t> krylov_minpoly_mod(
    const std::vector<std::vector<uint64_t>>& cols, std::vector<uint64_t> w,
    uint64_t p) {
    std::size_t D = w.size();

    struct Row {
        std::vector<uint64_t> vec;
        std::size_t pivot;
        std::vector<uint64_t> expr;
    };
    std::vector<Row> rows;
    std::vector<uint64_t> q{1};
    for (std::size_t step = 0; step <= D; ++step) {
        std::vector<uint64_t> r = w, qq = q;
        for (const auto& row : rows) {
            if (r[row.pivot] == 0) continue;
            uint64_t c = mulmod_u64(r[row.pivot],
                                    invmod_u64(row.vec[row.pivot], p), p);
            for (std::size_t i = 0; i < D; ++i) {
                uint64_t s = mulmod_u64(c, row.vec[i], p);
                r[i] = r[i] >= s ? r[i] - s : r[i] + p - s;
            }
            if (qq.size() < row.expr.size()) qq.resize(row.expr.size(), 0);
            for (std::size_t i = 0; i < row.expr.size(); ++i) {
                uint64_t s = mulmod_u64(c, row.expr[i], p);
                qq[i] = qq[i] >= s ? qq[i] - s : qq[i] + p - s;
            }
        }
        bool zero = true;
        for (auto xv : r)
            if (xv != 0) {
                zero = false;
                break;
            }
        if (zero) {
            while (!qq.empty() && qq.back() == 0) qq.pop_back();
            if (qq.empty()) return {};
            uint64_t inv = invmod_u64(qq.back(), p);
            for (auto& cv : qq) cv = mulmod_u64(cv, inv, p);
            return qq;
        }
        std::size_t pivot = 0;
        while (r[pivot] == 0) ++pivot;
        rows.push_back({std::move(r), pivot, std::move(qq)});
        // w <- N w
        std::vector<uint64_t> nw(D, 0);
        for (std::size_t j = 0; j < D; ++j) {
            if (w[j] == 0) continue;
            for (std::size_t i = 0; i < D; ++i) {
                nw[i] = (nw[i] + static_cast<unsigned __int128>(w[j]) * cols[j][i]) % p;
            }
        }
        w = std::move(nw);
        q.insert(q.begin(), 0);
    }
    return {};
}

// Rational reconstruction: n/d = a (mod m) with |n|, d <= sqrt(m/2).
bool rational_reconstruct(const Integer& a, const Integer& m, Integer& n,
                          Integer& d) {
    Integer bound = isqrt_floor(m / 2);
    Integer r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    if (sgn(r1) < 0) r1 += m;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return false;
    n = sgn(t1) < 0 ? Integer(-r1) : r1;
    d = abs(t1);
    Integer check = (a * d - n) % m;
    return sgn(check) == 0 && gcd(d, m) == 1;
}

// Minimal polynomial of the rational map `cols` applied to w0, via modular
// computation with exact certification; nullopt when the heuristic loop does
// not converge.
std::optional<UPoly> krylov_annihilator_modular(
    const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& w0) {
    std::size_t D = w0.size();
    Integer ell(1);
    for (const auto& col : cols)
        for (const auto& x : col)
            mpz_lcm(ell.get_mpz_t(), ell.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : w0)
        mpz_lcm(ell.get_mpz_t(), ell.get_mpz_t(), x.get_den().get_mpz_t());

    Integer prime_seed = pow2(62);
    Integer modulus(0);
    std::vector<Integer> residues;  // CRT residues of the rational coefficients
    std::vector<Rational> recon, prev_recon;
    bool have_recon = false, have_prev = false;
    std::size_t degree = 0;
    const int max_primes = 400;
    for (int k = 0; k < max_primes; ++k) {
        mpz_nextprime(prime_seed.get_mpz_t(), prime_seed.get_mpz_t());
        uint64_t p = static_cast<uint64_t>(mpz_get_ui(prime_seed.get_mpz_t()));
        if (mpz_fdiv_ui(ell.get_mpz_t(), p) == 0) continue;  // bad prime
        // M mod p, column major.
        std::vector<std::vector<uint64_t>> cp(D, std::vector<uint64_t>(D));
        for (std::size_t j = 0; j < D; ++j)
            for (std::size_t i = 0; i < D; ++i) {
                const Rational& x = cols[j][i];
                uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
                uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
                cp[j][i] = mulmod_u64(num, invmod_u64(den, p), p);
            }
        std::vector<uint64_t> wp(D);
        for (std::size_t i = 0; i < D; ++i) {
            uint64_t num = mpz_fdiv_ui(w0[i].get_num().get_mpz_t(), p);
            uint64_t den = mpz_fdiv_ui(w0[i].get_den().get_mpz_t(), p);
            wp[i] = mulmod_u64(num, invmod_u64(den, p), p);
        }
        auto mp = krylov_minpoly_mod(cp, std::move(wp), p);
        if (mp.empty()) continue;
        std::size_t d = mp.size() - 1;
        if (d < degree) continue;  // unlucky prime
        if (d > degree) {          // restart accumulation at the higher degree
            degree = d;
            modulus = 0;
            residues.assign(d + 1, Integer(0));
            have_recon = have_prev = false;
        }
        Integer pz(static_cast<unsigned long>(p));
        if (sgn(modulus) == 0) {
            modulus = pz;
            for (std::size_t i = 0; i <= degree; ++i)
                residues[i] = Integer(static_cast<unsigned long>(mp[i]));
        } else {
            Integer minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (std::size_t i = 0; i <= degree; ++i) {
                Integer diff = Integer(static_cast<unsigned long>(mp[i])) - residues[i];
                Integer t = (diff * minv) % pz;
                if (sgn(t) < 0) t += pz;
                residues[i] += modulus * t;
            }
            modulus *= pz;
        }
        // Rational reconstruction of every coefficient.
        prev_recon = std::move(recon);
        have_prev = have_recon;
        recon.assign(degree + 1, Rational(0));
        have_recon = true;
        for (std::size_t i = 0; i < degree && have_recon; ++i) {
            Integer n, dd;
            if (rational_reconstruct(residues[i], modulus, n, dd)) {
                Rational c(n, dd);
                c.canonicalize();
                recon[i] = c;
            } else {
                have_recon = false;
            }
        }
        recon[degree] = Rational(1);
        if (!have_recon || !have_prev || recon != prev_recon) continue;

        // Certify with one exact integer Horner evaluation: with L the lcm of
        // the coefficient denominators and N = ell*M, the claim
        // sum_i mu_i M^i w0 = 0 is equivalent to
        // sum_i (L mu_i ell^(d-i)) N^i v0 = 0 over the integers.
        Integer L(1);
        for (const auto& c : recon)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<std::vector<Integer>> colsN(D, std::vector<Integer>(D));
        for (std::size_t j = 0; j < D; ++j)
            for (std::size_t i = 0; i < D; ++i) {
                Rational s = cols[j][i] * Rational(ell);
                colsN[j][i] = s.get_num();
            }
        Integer dw(1);
        for (const auto& x : w0)
            mpz_lcm(dw.get_mpz_t(), dw.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Integer> v0(D);
        for (std::size_t i = 0; i < D; ++i) {
            Rational s = w0[i] * Rational(dw);
            v0[i] = s.get_num();
        }
        std::vector<Integer> b(degree + 1);
        Integer pw(1);
        for (std::size_t i = degree + 1; i-- > 0;) {
            Rational bi = recon[i] * Rational(L) * Rational(pw);
            b[i] = bi.get_num();  // denominator 1: L clears every denominator
            pw *= ell;
        }
        std::vector<Integer> v(D);
        for (std::size_t i = 0; i < D; ++i) v[i] = b[degree] * v0[i];
        for (std::size_t i = degree; i-- > 0;) {
            std::vector<Integer> nv(D, Integer(0));
            for (std::size_t j = 0; j < D; ++j) {
                if (sgn(v[j]) == 0) continue;
                for (std::size_t r = 0; r < D; ++r) nv[r] += v[j] * colsN[j][r];
            }
            for (std::size_t r = 0; r < D; ++r) nv[r] += b[i] * v0[r];
            v = std::move(nv);
        }
        bool ok = true;
        for (const auto& x : v)
            if (sgn(x) != 0) {
                ok = false;
                break;
            }
        if (ok) return UPoly(std::move(recon));
    }
    return std::nullopt;
}

// Modular fast path with exact fallback.
UPoly krylov_with_fallback(const std::vector<std::vector<Rational>>& cols,
                           const std::vector<Rational>& w) {
    if (auto m = krylov_annihilator_modular(cols, w)) return *m;
    return krylov_annihilator(cols, w);
}

// FGLM enumeration of the target-order staircase of the ideal whose normal
// forms are the quotient coordinates modulo the subspace seeded in `ech`
// (the seed rows carry empty combinations). Produces the reduced basis.
GroebnerBasis fglm_core(const std::vector<std::string>& vars, const Quotient& Q,
                        const MultMats& mats, Echelon ech, const OrderSpec& target) {
    std::size_t D = Q.basis.size();
    std::size_t n = vars.size();
    auto less = [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, target) < 0;
    };
    std::map<Monomial, std::vector<Rational>, decltype(less)> frontier(less);
    frontier.emplace(Monomial(n), unit_vector(D, Q.index.at(Monomial(n))));

    std::vector<Monomial> accepted;
    std::vector<Monomial> lts;
    GroebnerBasis out;
    out.order = target;

    while (!frontier.empty()) {
        auto it = frontier.begin();
        Monomial m = it->first;
        std::vector<Rational> v = std::move(it->second);
        frontier.erase(it);
        bool reducible = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                reducible = true;
                break;
            }
        if (reducible) continue;

        std::vector<Rational> r = v;
        std::vector<Rational> expr;
        if (ech.reduce(r, &expr)) {
            // New leading term: g = m + sum expr_i * accepted_i.
            Poly g(vars);
            g.add_term(m, Rational(1));
            for (std::size_t i = 0; i < expr.size() && i < accepted.size(); ++i)
                if (sign(expr[i]) != 0) g.add_term(accepted[i], expr[i]);
            out.elements.push_back(std::move(g));
            lts.push_back(m);
            continue;
        }
        std::size_t my_index = accepted.size();
        accepted.push_back(m);
        expr.resize(my_index + 1, Rational(0));
        expr[my_index] = Rational(1);
        ech.add(std::move(r), std::move(expr));
        for (std::size_t vidx = 0; vidx < n; ++vidx) {
            Monomial child = m;
            ++child[vidx];
            if (frontier.find(child) == frontier.end())
                frontier.emplace(child, apply_columns(mats[vidx], v));
        }
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Poly& a, const Poly& b) {
                  return compare(a.leading_monomial(target),
                                 b.leading_monomial(target), target) < 0;
              });
    return out;
}

// Subspace of the quotient spanned by the images of `extra`, closed under
// multiplication by every variable (the ideal they generate, as a space).
Echelon ideal_subspace(const Quotient& Q, const MultMats& mats,
                       const std::vector<Poly>& extra) {
    Echelon U;
    std::vector<std::vector<Rational>> queue;
    for (const auto& h : extra) {
        std::vector<Rational> v = Q.nf_vector(h);
        if (U.reduce(v, nullptr)) continue;
        queue.push_back(v);
        U.add(std::move(v), {});
    }
    while (!queue.empty()) {
        std::vector<Rational> w = std::move(queue.back());
        queue.pop_back();
        for (std::size_t vidx = 0; vidx < mats.size(); ++vidx) {
            std::vector<Rational> u = apply_columns(mats[vidx], w);
            if (U.reduce(u, nullptr)) continue;
            queue.push_back(u);
            U.add(std::move(u), {});
        }
    }
    return U;
}

}  // namespace

UPoly minimal_polynomial(const Ideal& I, const Poly& g) {
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("minimal_polynomial: ideal not zero-dimensional");
    if (I.is_unit()) return UPoly::constant(Rational(1));
    Quotient Q = Quotient::build(I);
    std::size_t D = Q.basis.size();
    std::vector<std::vector<Rational>> col(D);
    for (std::size_t j = 0; j < D; ++j) {
        Poly bj(Q.vars);
        bj.add_term(Q.basis[j], Rational(1));
        col[j] = Q.nf_vector(g * bj);
    }
    return krylov_with_fallback(col, unit_vector(D, Q.index.at(Monomial(Q.vars.size()))));
}

GroebnerBasis fglm(const Ideal& I, const OrderSpec& target) {
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("fglm: ideal not zero-dimensional");
    if (I.is_unit()) {
        GroebnerBasis out;
        out.order = target;
        out.elements.push_back(Poly::constant(I.vars(), Rational(1)));
        return out;
    }
    Quotient Q = Quotient::build(I);
    MultMats mats = mult_matrices(Q, I.nvars());
    return fglm_core(I.vars(), Q, mats, Echelon{}, target);
}

Ideal radical_zero_dim(const Ideal& I) {
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("radical_zero_dim: ideal is not zero-dimensional");
    if (I.is_unit()) return I;
    Quotient Q = Quotient::build(I);
    std::size_t n = I.nvars();
    MultMats mats = mult_matrices(Q, n);
    std::vector<Rational> one =
        unit_vector(Q.basis.size(), Q.index.at(Monomial(n)));
    // Seidenberg: the ideal is radical once it contains a squarefree
    // univariate polynomial in every variable; adjoin the missing ones.
    std::vector<Poly> extra;
    for (std::size_t v = 0; v < n; ++v) {
        UPoly mv = krylov_with_fallback(mats[v], one);
        UPoly sf = mv.squarefree_part();
        if (sf.degree() != mv.degree()) extra.push_back(sf.to_poly(I.vars(), v));
    }
    if (extra.empty()) return I;
    Echelon U = ideal_subspace(Q, mats, extra);
    GroebnerBasis gb = fglm_core(I.vars(), Q, mats, std::move(U), OrderSpec::grevlex());
    return Ideal::with_basis(I.vars(), std::move(gb));
}

}  // namespace critcert
