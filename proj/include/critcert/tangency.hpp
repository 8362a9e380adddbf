#ifndef CRITCERT_TANGENCY_HPP
#define CRITCERT_TANGENCY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "critcert/groebner.hpp"
#include "critcert/matrix.hpp"

namespace critcert {

struct TangencySystem {
    Poly f;
    std::vector<Poly> gamma;  // gamma_{i,j}, i < j, canonical order
    Ideal critical;
    std::optional<MatrixQ> coordinate_change;
    uint64_t seed = 0;
};

// gamma_{i,j} = df/dX_i * X_j - df/dX_j * X_i for i < j; n(n-1)/2 entries
// (zero entries kept). Throws on univariate input.
std::vector<Poly> gamma_generators(const Poly& f);

// <df/dX_1, ..., df/dX_n>.
Ideal critical_ideal(const Poly& f);

// Vanishing ideal of the closure of the tangency variety minus the critical
// locus: radical of (<gamma> : C^inf). Throws RetryableFailure when the
// saturation has dimension >= 2 (coordinate change needed).
Ideal curve_ideal_G(const Poly& f);

struct DimOneResult {
    MatrixQ A;
    Poly fA;
    Ideal I;
};

// Identity and <gamma> when that ideal already has dimension one; otherwise
// seeded random invertible integer coordinate changes until the curve ideal
// of f(Ax) has dimension one.
DimOneResult ensure_dim_one(const Poly& f, uint64_t seed);

struct DeltaSet {
    std::vector<Poly> generators;    // g_1 ... g_s of sqrt(I1)
    std::vector<Poly> determinants;  // dets of Jac(subset of n-1 gens, |X|^2)
    std::vector<Poly> all() const;
};

// Requires s >= n-1 generators; builds every Jacobian determinant of an
// (n-1)-subset augmented with the squared norm.
DeltaSet delta_set(const Ideal& I1);

// Generator of (J + <|X|^2 - T>) ∩ Q[T] as a univariate polynomial in the
// distance-squared variable T; zero polynomial when that ideal is zero.
UPoly distance_squared_eliminant(const Ideal& J);

struct IsolationRadiusResult {
    Rational radius;
    enum class Method { ZeroDimCritical, MinorsRecursion } method;
};

// Certified radius whose closed ball meets the real critical locus only at
// the origin (assuming the origin is isolated there).
IsolationRadiusResult isolation_radius(const Poly& f);

}  // namespace critcert

#endif
