#include "critcert/certify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace critcert {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::LocalMinimizer: return "local_minimizer";
        case Verdict::LocalMaximizer: return "local_maximizer";
        case Verdict::SaddlePoint: return "saddle_point";
    }
    return "?";
}

Verdict flipped(Verdict v) {
    switch (v) {
        case Verdict::LocalMinimizer: return Verdict::LocalMaximizer;
        case Verdict::LocalMaximizer: return Verdict::LocalMinimizer;
        default: return Verdict::SaddlePoint;
    }
}

Poly normalize_input(const Poly& f, const std::vector<Rational>& c) {
    if (c.size() != f.nvars())
        throw std::invalid_argument("normalize_input: point length mismatch");
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (sign(f.derivative(i).evaluate(c)) != 0)
            throw std::invalid_argument(
                "normalize_input: the given point is not a critical point");
    return f.translate_to_origin(c);
}

HessianRecord hessian_record(const Poly& f) {
    std::size_t n = f.nvars();
    std::vector<Rational> zero(n, Rational(0));
    HessianRecord rec;
    rec.hessian = MatrixQ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational v = f.derivative(i).derivative(j).evaluate(zero);
            rec.hessian.at(i, j) = v;
            rec.hessian.at(j, i) = v;
        }
    rec.rank = rec.hessian.rank();
    rec.inertia = symmetric_inertia(rec.hessian);
    rec.degenerate = rec.inertia.zero > 0;
    return rec;
}

std::optional<Verdict> hessian_fast_path(const Poly& f) {
    HessianRecord rec = hessian_record(f);
    if (rec.degenerate) return std::nullopt;
    if (rec.inertia.negative == 0) return Verdict::LocalMinimizer;
    if (rec.inertia.positive == 0) return Verdict::LocalMaximizer;
    return Verdict::SaddlePoint;
}

FactorReduction factor_reduce(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_reduce: zero polynomial");
    std::size_t n = f.nvars();
    std::vector<Rational> zero(n, Rational(0));
    SquarefreeDecomposition dec = squarefree_decomposition(f);

    FactorReduction out;
    out.core = Poly::constant(f.vars(), Rational(1));
    // Sign of the unit g(0)-part: the constant times every odd factor that
    // does not vanish at the origin (f = g h^2 with g their product times
    // the vanishing odd factors).
    Rational unit_sign = dec.constant;
    bool core_trivial = true;
    for (const auto& [fac, mult] : dec.factors) {
        bool odd = (mult % 2) != 0;
        Rational v = fac.evaluate(zero);
        if (odd && sign(v) == 0) {
            out.core *= fac;
            core_trivial = false;
            if (mult > 1) out.peeled.emplace_back(fac, mult - 1);
        } else {
            if (odd) unit_sign *= v;
            out.peeled.emplace_back(fac, mult);
        }
    }
    out.orientation = sign(unit_sign);

    if (core_trivial) {
        // g(0) != 0: sign-constant times a square near the origin.
        out.verdict = out.orientation > 0 ? Verdict::LocalMinimizer
                                          : Verdict::LocalMaximizer;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (sign(out.core.derivative(i).evaluate(zero)) != 0) {
            // grad g(0) != 0: g changes sign arbitrarily close to 0.
            out.verdict = Verdict::SaddlePoint;
            return out;
        }
    if (out.peeled.empty() && out.orientation > 0) out.core = f;  // exact no-op
    return out;
}

namespace {

std::optional<Rational> least_positive(const std::vector<Rational>& v) {
    std::optional<Rational> best;
    for (const auto& x : v)
        if (!best || x < *best) best = x;
    return best;
}

}  // namespace

TangencyPipeline build_tangency_pipeline(const Poly& f, uint64_t seed) {
    std::size_t n = f.nvars();
    std::mt19937_64 rng(seed ^ 0xc3c3c3c33c3c3c3cULL);
    std::uniform_int_distribution<long> dist(-5, 5);
    const int max_attempts = 16;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        try {
            TangencyPipeline P;
            if (attempt == 0) {
                DimOneResult d = ensure_dim_one(f, seed);
                P.A = d.A;
                P.fA = d.fA;
                P.I = d.I;
            } else {
                // Previous coordinates were non-generic further down the
                // pipeline; force a fresh random change.
                MatrixQ A(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        A.at(i, j) = Rational(dist(rng));
                if (sign(A.determinant()) == 0) continue;
                Poly fA = f.substitute_linear(A);
                Ideal G = curve_ideal_G(fA);
                if (hilbert_dimension(G) != 1) continue;
                P.A = A;
                P.fA = fA;
                P.I = G;
            }
            P.split = equidim_split_dim1(P.I);
            P.delta = delta_set(P.split.dim1);
            return P;
        } catch (const RetryableFailure&) {
            continue;
        }
    }
    throw RetryableFailure("build_tangency_pipeline: retry budget exhausted");
}

FaithfulRadiusReport faithful_radius_from(const TangencyPipeline& P,
                                          const Rational& R_iso) {
    if (sign(R_iso) <= 0)
        throw std::invalid_argument("faithful_radius: R_iso must be positive");
    FaithfulRadiusReport rep;
    std::vector<Rational> bounds;
    auto inspect = [&](const UPoly& e) {
        if (e.is_zero())
            throw RetryableFailure("faithful_radius: zero eliminant");
        for (const auto& iv : sturm_isolate(e)) rep.roots_inspected.push_back(iv);
        for (const auto& b : positive_root_lower_bounds(e)) bounds.push_back(b);
    };
    if (!P.split.dim0.is_unit())
        inspect(distance_squared_eliminant(P.split.dim0));
    inspect(distance_squared_eliminant(Ideal(P.I.vars(), P.delta.all())));

    auto a = least_positive(bounds);
    if (!a) {
        // Empty obstruction set: the paper's infimum over the empty set.
        rep.script_r_finite = false;
        rep.script_r_bound = Rational(0);
        rep.R = R_iso;
        return rep;
    }
    rep.script_r_finite = true;
    rep.script_r_bound = *a;
    auto root = exact_sqrt(*a);
    Rational script_r = root ? *root : dyadic_below_sqrt(*a, 48);
    rep.R = std::min(script_r, R_iso);
    return rep;
}

FaithfulRadiusReport faithful_radius(const Poly& f, const Rational& R_iso,
                                     uint64_t seed) {
    return faithful_radius_from(build_tangency_pipeline(f, seed), R_iso);
}

Rational pick_test_radius(const Rational& R) {
    if (sign(R) <= 0)
        throw std::invalid_argument("pick_test_radius: R must be positive");
    return simplest_between(Rational(R / 2), R);
}

namespace {

// Isolation radius valid for f(Ax) given one valid for f: any critical
// point x' != 0 of f(Ax) maps to the critical point Ax' of f, and
// |Ax'| <= |A|_F |x'|, so |x'| >= R_iso / |A|_F.
Rational transfer_iso_radius(const Rational& R_iso, const MatrixQ& A) {
    if (A.is_identity()) return R_iso;
    Rational frob2(0);
    for (const auto& e : A.entries) frob2 += e * e;
    return dyadic_below_sqrt(Rational(R_iso * R_iso / frob2), 48);
}

// Fresh variable name not colliding with the ring.
std::string fresh_var(const std::vector<std::string>& vars) {
    std::string base = "_F";
    std::string name = base;
    int k = 0;
    while (std::find(vars.begin(), vars.end(), name) != vars.end())
        name = base + std::to_string(++k);
    return name;
}

}  // namespace

Certificate classify(const Poly& f, const std::vector<Rational>& point,
                     const ClassifyOptions& opts) {
    Certificate cert;
    cert.point = point;
    cert.seed = opts.seed;
    cert.input = normalize_input(f, point);
    for (const auto& c : point)
        if (sign(c) != 0) cert.translated = true;
    if (cert.input.is_zero())
        throw std::invalid_argument("classify: polynomial is constant");

    cert.hessian = hessian_record(cert.input);
    if (opts.use_fast_path && !cert.hessian.degenerate) {
        cert.method = "hessian";
        cert.reduction.core = cert.input;
        cert.verdict = cert.hessian.inertia.negative == 0 ? Verdict::LocalMinimizer
                       : cert.hessian.inertia.positive == 0
                           ? Verdict::LocalMaximizer
                           : Verdict::SaddlePoint;
        return cert;
    }

    cert.reduction = factor_reduce(cert.input);
    if (cert.reduction.verdict) {
        cert.method = "factor";
        cert.verdict = *cert.reduction.verdict;
        return cert;
    }

    cert.method = "tangency";
    Poly core = cert.reduction.orientation < 0 ? -cert.reduction.core
                                               : cert.reduction.core;

    TangencyPipeline P = build_tangency_pipeline(core, opts.seed);
    if (!P.A.is_identity()) cert.coordinate_change = P.A;

    Rational R_iso;
    if (opts.iso_radius) {
        if (sign(*opts.iso_radius) <= 0)
            throw std::invalid_argument("classify: isolation radius must be positive");
        R_iso = transfer_iso_radius(*opts.iso_radius, P.A);
    } else {
        IsolationRadiusResult ir = isolation_radius(P.fA);
        cert.iso_method = ir.method;
        R_iso = ir.radius;
    }
    cert.iso_radius = R_iso;

    FaithfulRadiusReport rep = faithful_radius_from(P, R_iso);
    cert.faithful = rep;

    Rational r_sq;
    if (opts.test_radius_sq) {
        r_sq = *opts.test_radius_sq;
        if (sign(r_sq) <= 0 || r_sq >= rep.R * rep.R)
            throw std::invalid_argument(
                "classify: squared test radius must lie in (0, R^2)");
    } else {
        Rational r = opts.test_radius ? *opts.test_radius : pick_test_radius(rep.R);
        if (sign(r) <= 0 || r >= rep.R)
            throw std::invalid_argument("classify: test radius must lie in (0, R)");
        cert.test_radius = r;
        r_sq = r * r;
    }
    cert.test_radius_sq = r_sq;

    // Algorithm 2: I-bar = I + <|X|^2 - r^2, f - X_{n+1}>.
    std::size_t n = core.nvars();
    std::vector<std::string> ext = {fresh_var(core.vars())};
    std::vector<Poly> gens;
    for (const auto& g : P.I.generators()) gens.push_back(g.extended(ext));
    Poly norm2 = Poly::norm_squared(core.vars()).extended(ext);
    std::vector<std::string> all_vars = norm2.vars();
    gens.push_back(norm2 - Poly::constant(all_vars, r_sq));
    gens.push_back(P.fA.extended(ext) - Poly::variable(all_vars, n));
    Ideal Ibar(all_vars, std::move(gens));
    if (!is_zero_dimensional(Ibar))
        throw CertificationFailure(
            "classify: sphere section of the tangency curve is not "
            "zero-dimensional");

    unsigned bits = opts.refine_bits;
    const int max_rounds = 4;
    for (int round = 0;; ++round) {
        std::vector<RealPoint> pts = solve_zero_dim_real(Ibar, n, opts.seed, bits);
        if (pts.empty())
            throw CertificationFailure(
                "classify: tangency curve misses the test sphere");
        bool straddles = false;
        std::optional<IsolatingInterval> m, M;
        for (const auto& pt : pts) {
            const IsolatingInterval& iv = pt.coords[n];
            if (iv.exact && sign(iv.lo) == 0)
                throw CertificationFailure(
                    "classify: f vanishes on the tangency curve inside the "
                    "faithful ball");
            if (sign(iv.lo) <= 0 && sign(iv.hi) >= 0) {
                straddles = true;
                break;
            }
            if (!m || iv.lo < m->lo) m = iv;
            if (!M || iv.hi > M->hi) M = iv;
        }
        if (straddles) {
            if (round + 1 >= max_rounds)
                throw CertificationFailure(
                    "classify: extremum interval straddles zero at maximal "
                    "refinement");
            bits *= 2;
            continue;
        }
        cert.m = m;
        cert.M = M;
        break;
    }

    Verdict v;
    if (sign(cert.m->lo) > 0)
        v = Verdict::LocalMinimizer;
    else if (sign(cert.M->hi) < 0)
        v = Verdict::LocalMaximizer;
    else
        v = Verdict::SaddlePoint;
    cert.verdict = v;  // core is already oriented, so no flip is needed
    return cert;
}

}  // namespace critcert
