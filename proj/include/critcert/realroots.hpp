#ifndef CRITCERT_REALROOTS_HPP
#define CRITCERT_REALROOTS_HPP

#include <cstdint>
#include <vector>

#include "critcert/groebner.hpp"
#include "critcert/univariate.hpp"

namespace critcert {

struct IsolatingInterval {
    Rational lo, hi;
    bool exact = false;  // lo == hi names a rational root
};

// Sturm remainder sequence of the squarefree part of p and its derivative.
struct SturmChain {
    std::vector<UPoly> polynomials;

    static SturmChain build(const UPoly& p);
    const UPoly& head() const { return polynomials.front(); }
    int variations_at(const Rational& x) const;
    // Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
};

// Pairwise-disjoint isolating intervals, one per distinct real root,
// ordered increasingly. Non-exact intervals have opposite nonzero signs of
// the squarefree part at the endpoints.
std::vector<IsolatingInterval> sturm_isolate(const UPoly& p);

// Sub-interval of width <= width still isolating the same root.
IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& width);

int sign_at(const UPoly& p, const Rational& x);

// Lower endpoints a_i > 0 of isolating intervals of the strictly positive
// real roots, refined so every interval excludes 0.
std::vector<Rational> positive_root_lower_bounds(const UPoly& p);

struct RealPoint {
    std::vector<IsolatingInterval> coords;  // one per variable
};

// All real solutions of a zero-dimensional ideal, boxed. The distinguished
// variable's interval is refined below 2^-refine_bits. Throws
// RetryableFailure when the separating-form retry budget is exhausted.
std::vector<RealPoint> solve_zero_dim_real(const Ideal& I, std::size_t distinguished,
                                           uint64_t seed = 0,
                                           unsigned refine_bits = 40);

}  // namespace critcert

#endif
