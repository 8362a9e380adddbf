#include "critcert/realroots.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace critcert {

int sign_at(const UPoly& p, const Rational& x) { return p.sign_at(x); }


SturmChain SturmChain::build(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    SturmChain chain;
    UPoly p0 = p.squarefree_part().primitive();
    chain.polynomials.push_back(p0);
    if (p0.degree() == 0) return chain;
    UPoly p1 = p0.derivative().primitive();
    chain.polynomials.push_back(p1);
    while (chain.polynomials.back().degree() > 0) {
        const auto& a = chain.polynomials[chain.polynomials.size() - 2];
        const auto& b = chain.polynomials.back();
        int k = 0;
        UPoly pr = UPoly::pseudo_remainder(a, b, k);
        if (pr.is_zero()) throw std::logic_error("Sturm chain hit zero remainder");
        // prem(a, b) = lc(b)^k * rem(a, b); flip the sign back if the scale
        // factor was negative so the chain keeps the Sturm sign convention.
        bool flipped = sign(b.leading()) < 0 && (k % 2 == 1);
        chain.polynomials.push_back((flipped ? pr : -pr).primitive());
    }
    return chain;
}

int SturmChain::variations_at(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& q : polynomials) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

namespace {

void isolate_rec(const SturmChain& chain, const Rational& a, const Rational& b,
                 std::vector<IsolatingInterval>& out) {
    int n = chain.count_roots(a, b);
    if (n == 0) return;
    const UPoly& p0 = chain.head();
    if (n == 1) {
        Rational lo = a, hi = b;
        // Shrink until the endpoints certify the root: either hi names it
        // exactly or both endpoint signs are nonzero (and then opposite).
        for (;;) {
            if (p0.sign_at(hi) == 0) {
                out.push_back({hi, hi, true});
                return;
            }
            if (p0.sign_at(lo) != 0) {
                out.push_back({lo, hi, false});
                return;
            }
            Rational m = (lo + hi) / 2;
            if (chain.count_roots(m, hi) == 1)
                lo = m;
            else
                hi = m;
        }
    }
    Rational m = (a + b) / 2;
    isolate_rec(chain, a, m, out);
    isolate_rec(chain, m, b, out);
}

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate of zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain chain = SturmChain::build(p);
    Rational B = chain.head().cauchy_bound();
    std::vector<IsolatingInterval> out;
    isolate_rec(chain, -B, B, out);
    // Make intervals pairwise disjoint: consecutive boxes may share a
    // bisection endpoint that is not a root; bisect the left one past it.
    const UPoly& p0 = chain.head();
    for (std::size_t i = 1; i < out.size(); ++i) {
        IsolatingInterval& left = out[i - 1];
        while (!left.exact && left.hi >= out[i].lo) {
            Rational m = (left.lo + left.hi) / 2;
            int sm = p0.sign_at(m);
            if (sm == 0) {
                left = {m, m, true};
            } else if (sm == p0.sign_at(left.lo)) {
                left.lo = m;
            } else {
                left.hi = m;
            }
        }
    }
    return out;
}

IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& width) {
    if (iv.exact) return iv;
    UPoly p0 = p.squarefree_part().primitive();
    int slo = p0.sign_at(iv.lo);
    if (p0.sign_at(iv.hi) == 0) return {iv.hi, iv.hi, true};
    while (iv.hi - iv.lo > width) {
        Rational m = (iv.lo + iv.hi) / 2;
        int sm = p0.sign_at(m);
        if (sm == 0) return {m, m, true};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

std::vector<Rational> positive_root_lower_bounds(const UPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("positive_root_lower_bounds of zero polynomial");
    UPoly u = p.squarefree_part().primitive();
    u.strip_root_at_zero();
    if (u.degree() <= 0) return {};
    std::vector<Rational> out;
    for (auto iv : sturm_isolate(u)) {
        if (sign(iv.hi) <= 0) continue;  // root is negative (0 is not a root)
        while (sign(iv.lo) <= 0) {
            if (iv.exact) break;
            Rational m = (iv.lo + iv.hi) / 2;
            int sm = u.sign_at(m);
            if (sm == 0) {
                iv = {m, m, true};
                break;
            }
            if (sm == u.sign_at(iv.lo))
                iv.lo = m;
            else
                iv.hi = m;
        }
        if (iv.exact && sign(iv.lo) <= 0) continue;  // exact negative root
        if (sign(iv.hi) <= 0) continue;              // refined away: negative root
        // Tighten so the reported bound is close to the root itself.
        if (!iv.exact) iv = refine(u, iv, Rational(iv.lo / pow2(30)));
        out.push_back(iv.lo);
    }
    return out;
}

namespace {

struct ShapePosition {
    UPoly q;                                    // squarefree parametrizing poly
    std::vector<UPoly> coord;                   // coord[i](t) = value of X_i
};

// Detects a shape-position lex basis {X_i - q_i(X_d), q(X_d)} and extracts
// the parametrization. Returns false when the basis has another shape.
bool extract_shape(const GroebnerBasis& gb, std::size_t d, std::size_t n,
                   ShapePosition& out) {
    if (gb.elements.size() != n) return false;
    out.coord.assign(n, UPoly());
    bool have_q = false;
    for (const auto& g : gb.elements) {
        bool only_d = true;
        for (std::size_t i = 0; i < n && only_d; ++i)
            if (i != d && g.depends_on(i)) only_d = false;
        if (only_d) {
            if (have_q) return false;
            out.q = to_univariate(g, d);
            have_q = true;
            continue;
        }
        // Expect X_i - q_i(X_d): exactly one variable besides d, degree 1.
        std::size_t which = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == d || !g.depends_on(i)) continue;
            if (which != n) return false;
            which = i;
        }
        if (which == n || g.degree_in(which) != 1) return false;
        UPoly qi;  // -(g - X_which) as a univariate in d
        Poly rest = g - Poly::variable(g.vars(), which);
        for (const auto& [m, c] : rest.terms())
            if (m[which] != 0) return false;  // coefficient of X_which not 1
        out.coord[which] = -to_univariate(rest, d);
    }
    if (!have_q) return false;
    if (UPoly::gcd(out.q, out.q.derivative()).degree() > 0) return false;
    out.coord[d] = UPoly::x();
    return true;
}

}  // namespace

std::vector<RealPoint> solve_zero_dim_real(const Ideal& I, std::size_t distinguished,
                                           uint64_t seed, unsigned refine_bits) {
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("solve_zero_dim_real: ideal not zero-dimensional");
    if (I.is_unit()) return {};
    std::size_t n = I.nvars();
    std::size_t d = distinguished;
    Ideal J = radical_zero_dim(I);

    // Lex order with the distinguished variable least significant.
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i)
        if (i != d) perm.push_back(i);
    perm.push_back(d);
    OrderSpec lexord = OrderSpec::lex(perm);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> dist(-7, 7);

    const int max_attempts = 16;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Separating form T = X_d + sum c_i X_i; attempt 0 tries X_d itself.
        std::vector<Rational> c(n, Rational(0));
        if (attempt > 0) {
            bool nontrivial = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == d) continue;
                int v = dist(rng);
                c[i] = Rational(v);
                if (v != 0) nontrivial = true;
            }
            if (!nontrivial) continue;
        }

        // Substitute X_d <- X_d - sum c_i X_i so the new X_d equals T.
        Poly repl = Poly::variable(I.vars(), d);
        for (std::size_t i = 0; i < n; ++i)
            if (i != d && sign(c[i]) != 0)
                repl -= c[i] * Poly::variable(I.vars(), i);
        std::vector<Poly> gens;
        for (const auto& g : J.generators()) gens.push_back(g.substitute(d, repl));
        Ideal Jt(I.vars(), gens);

        ShapePosition sp;
        if (!extract_shape(fglm(Jt, lexord), d, n, sp)) continue;

        // Original X_d = T - sum c_i X_i = T - sum c_i q_i(T).
        UPoly xd_param = UPoly::x();
        for (std::size_t i = 0; i < n; ++i)
            if (i != d && sign(c[i]) != 0)
                xd_param = xd_param - UPoly::constant(c[i]) * sp.coord[i];
        sp.coord[d] = xd_param;

        Rational width = Rational(1, pow2(refine_bits));
        std::vector<RealPoint> points;
        for (auto tiv : sturm_isolate(sp.q)) {
            tiv = refine(sp.q, tiv, width);
            RealPoint pt;
            pt.coords.assign(n, IsolatingInterval{});
            // Refine t until the distinguished coordinate's box is narrow.
            for (int rounds = 0;; ++rounds) {
                Rational lo, hi;
                sp.coord[d].evaluate_interval(tiv.lo, tiv.hi, lo, hi);
                if (hi - lo <= width || tiv.exact) break;
                if (rounds > static_cast<int>(refine_bits) + 512)
                    throw std::logic_error("coordinate refinement failed to converge");
                tiv = refine(sp.q, tiv, (tiv.hi - tiv.lo) / 2);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (tiv.exact) {
                    Rational v = sp.coord[i].evaluate(tiv.lo);
                    pt.coords[i] = {v, v, true};
                } else {
                    Rational lo, hi;
                    sp.coord[i].evaluate_interval(tiv.lo, tiv.hi, lo, hi);
                    pt.coords[i] = {lo, hi, lo == hi};
                }
            }
            points.push_back(std::move(pt));
        }
        return points;
    }
    throw RetryableFailure("solve_zero_dim_real: no separating form found");
}

}  // namespace critcert
