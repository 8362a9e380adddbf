#include "critcert/tangency.hpp"

#include <random>
#include <stdexcept>

#include "critcert/realroots.hpp"
#include "critcert/univariate.hpp"

namespace critcert {

std::vector<Poly> gamma_generators(const Poly& f) {
    std::size_t n = f.nvars();
    if (n < 2) throw std::invalid_argument("gamma_generators: need at least 2 variables");
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < n; ++i) partials.push_back(f.derivative(i));
    std::vector<Poly> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(partials[i] * Poly::variable(f.vars(), j) -
                          partials[j] * Poly::variable(f.vars(), i));
    return out;
}

Ideal critical_ideal(const Poly& f) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
    return Ideal(f.vars(), std::move(gens));
}

Ideal curve_ideal_G(const Poly& f) {
    Ideal gamma(f.vars(), gamma_generators(f));
    if (gamma.is_zero_ideal())
        throw RetryableFailure("tangency ideal is zero (radially symmetric input)");
    Ideal C = critical_ideal(f);
    Ideal S = saturate_by_ideal(gamma, C);
    int d = hilbert_dimension(S);
    if (d >= 2)
        throw RetryableFailure("curve ideal has dimension >= 2");
    if (d == -1) return S;  // tangency variety inside the critical locus
    if (d == 0) return radical_zero_dim(S);
    auto split = equidim_split_dim1(S);
    if (split.dim0.is_unit()) return split.dim1;
    return ideal_intersection(split.dim0, split.dim1);
}

DimOneResult ensure_dim_one(const Poly& f, uint64_t seed) {
    std::size_t n = f.nvars();
    Ideal gamma(f.vars(), gamma_generators(f));
    if (hilbert_dimension(gamma) == 1)
        return {MatrixQ::identity(n), f, gamma};

    std::mt19937_64 rng(seed ^ 0xa5a5a5a55a5a5a5aULL);
    const int max_attempts = 100;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        long bound = attempt < 10 ? 5 : 50;
        std::uniform_int_distribution<long> dist(-bound, bound);
        MatrixQ A(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A.at(i, j) = Rational(dist(rng));
        if (sign(A.determinant()) == 0) continue;
        Poly fA = f.substitute_linear(A);
        try {
            Ideal G = curve_ideal_G(fA);
            if (hilbert_dimension(G) == 1) return {A, fA, G};
        } catch (const RetryableFailure&) {
            continue;
        }
    }
    throw RetryableFailure("ensure_dim_one: retry budget exhausted");
}

std::vector<Poly> DeltaSet::all() const {
    std::vector<Poly> out = generators;
    out.insert(out.end(), determinants.begin(), determinants.end());
    return out;
}

namespace {

// All dets of the n x n Jacobians of (subset of size n-1 from gens, extra).
std::vector<Poly> jacobian_dets(const std::vector<Poly>& gens, const Poly& extra) {
    std::size_t n = extra.nvars();
    std::size_t pick = n - 1;
    std::vector<Poly> dets;
    std::vector<std::size_t> idx(pick);
    // iterate over all (n-1)-subsets of gens
    std::vector<std::size_t> c(pick);
    for (std::size_t i = 0; i < pick; ++i) c[i] = i;
    if (gens.size() < pick) return dets;
    for (;;) {
        // Symbolic determinant by cofactor expansion over Poly entries.
        std::vector<std::vector<Poly>> J;
        for (std::size_t r = 0; r < pick; ++r) {
            std::vector<Poly> row;
            for (std::size_t v = 0; v < n; ++v) row.push_back(gens[c[r]].derivative(v));
            J.push_back(std::move(row));
        }
        {
            std::vector<Poly> row;
            for (std::size_t v = 0; v < n; ++v) row.push_back(extra.derivative(v));
            J.push_back(std::move(row));
        }
        // Laplace expansion (n is small).
        struct Det {
            static Poly run(const std::vector<std::vector<Poly>>& M,
                            std::vector<std::size_t> cols, std::size_t row) {
                if (cols.size() == 1) return M[row][cols[0]];
                Poly acc(M[0][0].vars());
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    std::vector<std::size_t> rest;
                    for (std::size_t t = 0; t < cols.size(); ++t)
                        if (t != k) rest.push_back(cols[t]);
                    Poly sub = run(M, rest, row + 1);
                    Poly term = M[row][cols[k]] * sub;
                    if (k % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                return acc;
            }
        };
        std::vector<std::size_t> cols(n);
        for (std::size_t v = 0; v < n; ++v) cols[v] = v;
        dets.push_back(Det::run(J, cols, 0));

        // next combination
        std::size_t i = pick;
        while (i > 0 && c[i - 1] == gens.size() - pick + (i - 1)) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t t = i; t < pick; ++t) c[t] = c[t - 1] + 1;
    }
    return dets;
}

}  // namespace

DeltaSet delta_set(const Ideal& I1) {
    std::size_t n = I1.nvars();
    if (I1.generators().size() < n - 1)
        throw std::invalid_argument("delta_set: fewer than n-1 generators");
    DeltaSet d;
    d.generators = I1.generators();
    d.determinants = jacobian_dets(d.generators, Poly::norm_squared(I1.vars()));
    return d;
}

UPoly distance_squared_eliminant(const Ideal& J) {
    if (!J.is_zero_ideal() && is_zero_dimensional(J))
        return minimal_polynomial(J, Poly::norm_squared(J.vars()));
    std::vector<std::string> ext = {"_D"};
    std::vector<Poly> gens;
    for (const auto& g : J.generators()) gens.push_back(g.extended(ext));
    std::size_t n = J.nvars();
    Poly norm2 = Poly::norm_squared(J.vars()).extended(ext);
    std::vector<std::string> all_vars = norm2.vars();
    gens.push_back(norm2 - Poly::variable(all_vars, n));
    Ideal E(all_vars, std::move(gens));
    Poly e = univariate_eliminant(E, n);
    if (e.is_zero()) return UPoly();
    return to_univariate(e, n);
}

namespace {

// Smallest certified positive lower bound for the distance-squared roots of
// e; nullopt when e has no positive real root.
std::optional<Rational> least_positive_bound(const UPoly& e) {
    auto bounds = positive_root_lower_bounds(e);
    if (bounds.empty()) return std::nullopt;
    Rational m = bounds.front();
    for (const auto& b : bounds) m = std::min(m, b);
    return m;
}

std::optional<Rational> min_distance_sq_bound(const Ideal& J, int depth);

// Handles one radical equidimensional part of dimension one via the minors
// construction; falls back to recursion when the eliminant is zero.
std::optional<Rational> dim1_part_bound(const Ideal& part, int depth) {
    UPoly e = distance_squared_eliminant(part);
    if (!e.is_zero()) return least_positive_bound(e);
    DeltaSet M = delta_set(Ideal(part.vars(),
                                 part.groebner(OrderSpec::grevlex()).elements));
    Ideal minors(part.vars(), M.all());
    return min_distance_sq_bound(minors, depth + 1);
}

// Lower bound on the squared distance from the origin to V_R(J) \ {0};
// nullopt when no constraint arises (no positive candidate roots).
std::optional<Rational> min_distance_sq_bound(const Ideal& J, int depth) {
    if (depth > 8)
        throw std::runtime_error("isolation_radius: recursion bound exceeded");
    if (J.is_unit()) return std::nullopt;
    UPoly e = distance_squared_eliminant(J);
    if (!e.is_zero()) return least_positive_bound(e);
    int d = hilbert_dimension(J);
    if (d != 1)
        throw std::runtime_error(
            "isolation_radius: unsupported critical locus (dimension >= 2 with "
            "non-proper distance map)");
    auto split = equidim_split_dim1(J);
    std::optional<Rational> best;
    if (!split.dim0.is_unit()) {
        UPoly e0 = distance_squared_eliminant(split.dim0);
        auto b0 = least_positive_bound(e0);
        if (b0 && (!best || *b0 < *best)) best = b0;
    }
    auto b1 = dim1_part_bound(split.dim1, depth);
    if (b1 && (!best || *b1 < *best)) best = b1;
    return best;
}

}  // namespace

IsolationRadiusResult isolation_radius(const Poly& f) {
    Ideal C = critical_ideal(f);
    if (C.is_zero_ideal())
        throw std::invalid_argument("isolation_radius: constant input");
    bool zerodim = is_zero_dimensional(C);
    auto bound = min_distance_sq_bound(C, 0);
    IsolationRadiusResult r;
    r.method = zerodim ? IsolationRadiusResult::Method::ZeroDimCritical
                       : IsolationRadiusResult::Method::MinorsRecursion;
    if (bound) {
        // The bound a is on squared distance, so any radius < sqrt(a) works;
        // for a < 1 prefer a itself (a < sqrt(a)), which keeps the radius a
        // short exact rational instead of a 48-bit dyadic.
        Rational s = dyadic_below_sqrt(*bound, 48);
        r.radius = std::min(s, *bound);
    } else {
        r.radius = Rational(1);
    }
    return r;
}

}  // namespace critcert
