#include "critcert/oracle.hpp"

#include <random>
#include <stdexcept>

namespace critcert {

namespace {

Rational norm_squared(const std::vector<Rational>& p) {
    Rational s(0);
    for (const auto& c : p) s += c * c;
    return s;
}

struct Accumulator {
    const Poly& f;
    Rational r2;
    SampleReport report;
    bool negative_inside = false;  // f < 0 witnessed strictly inside the ball
    bool positive_inside = false;  // f > 0 witnessed strictly inside the ball
    bool first = true;

    Accumulator(const Poly& poly, const Rational& radius)
        : f(poly), r2(radius * radius) {
        report.radius = radius;
    }

    // Evaluates f at p when p lies in the closed ball; ignores it otherwise.
    void visit(const std::vector<Rational>& p) {
        Rational n2 = norm_squared(p);
        if (n2 > r2) return;
        Rational v = f.evaluate(p);
        ++report.samples;
        if (first || v < report.min_seen) {
            report.min_seen = v;
            report.min_witness = p;
        }
        if (first || v > report.max_seen) {
            report.max_seen = v;
            report.max_witness = p;
        }
        first = false;
        if (n2 < r2) {
            if (sign(v) < 0) negative_inside = true;
            if (sign(v) > 0) positive_inside = true;
        }
    }
};

// Effective per-axis density keeping the full grid below ~100k points.
unsigned effective_density(unsigned density, std::size_t n) {
    unsigned d = density;
    while (d > 2) {
        double total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= d;
        if (total <= 100000.0) break;
        --d;
    }
    return d;
}

void sample_grid(Accumulator& acc, const Rational& r, unsigned density) {
    std::size_t n = acc.f.nvars();
    unsigned d = effective_density(density, n);
    // Ticks snap nominal uniform positions over [-r, r] to the simplest
    // rational within half a spacing, keeping denominators (and exact
    // evaluation cost) small while covering the ball evenly.
    std::vector<Rational> ticks;
    Rational half = r / Rational(d - 1);
    for (unsigned i = 0; i < d; ++i) {
        Rational c = -r + Rational(2) * r * Rational(i) / Rational(d - 1);
        Rational t = simplest_between(c - half, c + half);
        bool dup = false;
        for (const auto& s : ticks) dup = dup || s == t;
        if (!dup) ticks.push_back(t);
    }
    d = unsigned(ticks.size());
    std::vector<std::size_t> index(n, 0);
    std::vector<Rational> p(n);
    while (true) {
        for (std::size_t k = 0; k < n; ++k) p[k] = ticks[index[k]];
        acc.visit(p);
        std::size_t k = 0;
        while (k < n && ++index[k] == d) index[k++] = 0;
        if (k == n) break;
    }
}

void sample_random(Accumulator& acc, const Rational& r, unsigned density,
                   uint64_t seed) {
    std::size_t n = acc.f.nvars();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const long scale = 1 << 20;
    std::uniform_int_distribution<long> dist(-scale, scale);
    std::size_t want = std::size_t(density) * density;
    std::size_t attempts = 0, accepted = 0;
    std::vector<Rational> p(n);
    while (accepted < want && attempts < 32 * want) {
        ++attempts;
        for (std::size_t k = 0; k < n; ++k)
            p[k] = r * Rational(dist(rng)) / Rational(scale);
        if (norm_squared(p) > acc.r2) continue;
        acc.visit(p);
        ++accepted;
    }
}

// Sign-pattern families with coordinates drawn from {±eps, ±eps^2}, after
// the paper's curve-selection witnesses such as (eps^2, eps, eps) and
// (-eps, eps, eps).
void sample_families(Accumulator& acc, const Rational& r) {
    std::size_t n = acc.f.nvars();
    (void)r;
    for (long denom : {4L, 8L, 16L}) {
        Rational eps = Rational(1) / Rational(denom);
        std::vector<Rational> choices = {eps, -eps, eps * eps, -eps * eps};
        double total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 4;
        if (total <= 4096.0) {
            std::vector<std::size_t> index(n, 0);
            std::vector<Rational> p(n);
            while (true) {
                for (std::size_t k = 0; k < n; ++k) p[k] = choices[index[k]];
                acc.visit(p);
                std::size_t k = 0;
                while (k < n && ++index[k] == choices.size()) index[k++] = 0;
                if (k == n) break;
            }
        } else {
            // High dimension: axis-aligned witnesses only.
            std::vector<Rational> p(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                for (const Rational& c : choices) {
                    p[k] = c;
                    acc.visit(p);
                }
                p[k] = Rational(0);
            }
        }
    }
}

Accumulator run_sampler(const Poly& f, const Rational& r, unsigned density,
                        uint64_t seed) {
    if (sign(r) <= 0) throw std::invalid_argument("oracle: radius must be positive");
    if (density < 2) throw std::invalid_argument("oracle: density must be >= 2");
    Accumulator acc(f, r);
    acc.visit(std::vector<Rational>(f.nvars(), Rational(0)));  // the origin
    sample_grid(acc, r, density);
    sample_random(acc, r, density, seed);
    sample_families(acc, r);
    return acc;
}

}  // namespace

SampleReport sample_extrema(const Poly& f, const Rational& r, unsigned density,
                            uint64_t seed) {
    return run_sampler(f, r, density, seed).report;
}

OracleVerdict oracle_verdict(const Poly& f, const Rational& r, unsigned density,
                             uint64_t seed) {
    Accumulator acc = run_sampler(f, r, density, seed);
    if (acc.negative_inside && acc.positive_inside)
        return OracleVerdict::saddle_certified;
    if (sign(acc.report.min_seen) >= 0) return OracleVerdict::min_consistent;
    if (sign(acc.report.max_seen) <= 0) return OracleVerdict::max_consistent;
    return OracleVerdict::inconclusive;
}

std::string to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::saddle_certified: return "saddle_certified";
        case OracleVerdict::min_consistent: return "min_consistent";
        case OracleVerdict::max_consistent: return "max_consistent";
        case OracleVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace critcert
