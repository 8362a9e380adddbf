#ifndef CRITCERT_ORACLE_HPP
#define CRITCERT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "critcert/poly.hpp"

namespace critcert {

// Brute-force numerical cross-check of the ball extrema
//   f_r^min = min { f(x) : |x| <= r },   f_r^max = max { f(x) : |x| <= r }
// by exact evaluation at rational sample points. Sampling can bound f_r^min
// from above and f_r^max from below; it can certify a saddle (both signs
// witnessed) but only corroborate a minimizer or maximizer.
struct SampleReport {
    Rational radius;
    Rational min_seen;                  // least value of f observed
    Rational max_seen;                  // greatest value of f observed
    std::vector<Rational> min_witness;  // a sample point attaining min_seen
    std::vector<Rational> max_witness;  // a sample point attaining max_seen
    std::size_t samples = 0;            // number of points evaluated
};

// Evaluates f exactly at a deterministic rational grid of the given density
// per axis intersected with the closed ball of radius r, at density^2 seeded
// random rational points inside the ball, and at sign-pattern families built
// from eps and eps^2 coordinates for eps in {1/4, 1/8, 1/16} (the paper's
// curve-selection style witnesses). All arithmetic is exact; identical
// (seed, density) yield identical reports.
SampleReport sample_extrema(const Poly& f, const Rational& r, unsigned density,
                            uint64_t seed);

enum class OracleVerdict {
    saddle_certified,  // both signs witnessed strictly inside the ball
    min_consistent,    // no negative value seen
    max_consistent,    // no positive value seen
    inconclusive,
};

std::string to_string(OracleVerdict v);

OracleVerdict oracle_verdict(const Poly& f, const Rational& r, unsigned density,
                             uint64_t seed);

}  // namespace critcert

#endif
