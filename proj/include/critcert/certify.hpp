#ifndef CRITCERT_CERTIFY_HPP
#define CRITCERT_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "critcert/realroots.hpp"
#include "critcert/tangency.hpp"

namespace critcert {

enum class Verdict { LocalMinimizer, LocalMaximizer, SaddlePoint };

std::string to_string(Verdict v);
// Swaps minimizer and maximizer; saddle is self-dual.
Verdict flipped(Verdict v);

// Raised when a run contradicts the certification hypotheses (e.g. an
// extremum interval straddles zero at maximal refinement), which signals
// that the origin may not be an isolated critical point.
struct CertificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translates the critical point c to the origin and drops the constant
// term. Throws std::invalid_argument unless the gradient vanishes at c.
Poly normalize_input(const Poly& f, const std::vector<Rational>& c);

struct HessianRecord {
    MatrixQ hessian;        // second partials at the origin
    std::size_t rank = 0;
    Inertia inertia;
    bool degenerate = true;  // singular Hessian
};
HessianRecord hessian_record(const Poly& f);  // f normalized

// Classical second-order test: a verdict when the Hessian at the origin is
// nonsingular, nothing in the degenerate case.
std::optional<Verdict> hessian_fast_path(const Poly& f);

struct FactorReduction {
    Poly core;          // product of the odd-multiplicity factors vanishing at 0
    int orientation = 1;  // sign relating the type of f to the type of core
    std::vector<std::pair<Poly, uint32_t>> peeled;  // removed factors
    std::optional<Verdict> verdict;  // immediate classification when available
};

// Squarefree-decomposition reductions: writes f = g h^2, decides immediately
// when g(0) != 0 or grad g(0) != 0, and otherwise strips square factors and
// factors not vanishing at the origin. The type of f equals the type of
// orientation * core.
FactorReduction factor_reduce(const Poly& f);

struct FaithfulRadiusReport {
    Rational R;                   // min of the obstruction bound and R_iso
    Rational script_r_bound;      // lower bound on the squared obstruction
                                  // distance; meaningful when finite
    bool script_r_finite = false;
    std::vector<IsolatingInterval> roots_inspected;  // eliminant real roots
};

// The shared head of Algorithms 1 and 2: curve ideal of dimension one in
// (possibly changed) coordinates, its equidimensional split and delta set.
struct TangencyPipeline {
    MatrixQ A;   // coordinate change, identity when none was needed
    Poly fA;     // f in the changed coordinates
    Ideal I;     // one-dimensional curve ideal
    EquidimSplit split;
    DeltaSet delta;
};
TangencyPipeline build_tangency_pipeline(const Poly& f, uint64_t seed);

FaithfulRadiusReport faithful_radius_from(const TangencyPipeline& P,
                                          const Rational& R_iso);
// Every r with 0 < r < result.R is a faithful radius of the origin.
FaithfulRadiusReport faithful_radius(const Poly& f, const Rational& R_iso,
                                     uint64_t seed = 0);

// Smallest-denominator rational in the open interval (R/2, R).
Rational pick_test_radius(const Rational& R);

struct ClassifyOptions {
    std::optional<Rational> iso_radius;   // skip isolation_radius when given
    std::optional<Rational> test_radius;  // must satisfy 0 < r < R
    // Squared test radius: the sphere is |X|^2 = value (so irrational test
    // radii with rational squares are expressible); must satisfy value < R^2.
    // Takes precedence over test_radius.
    std::optional<Rational> test_radius_sq;
    uint64_t seed = 0;
    unsigned refine_bits = 40;
    bool use_fast_path = true;  // allow the nondegenerate Hessian shortcut
};

struct Certificate {
    Poly input;                    // normalized polynomial (origin critical)
    std::vector<Rational> point;   // the critical point as given
    bool translated = false;
    HessianRecord hessian;
    FactorReduction reduction;
    std::string method;  // "hessian" | "factor" | "tangency"
    std::optional<MatrixQ> coordinate_change;
    uint64_t seed = 0;
    std::optional<Rational> iso_radius;  // radius used by the pipeline
    std::optional<IsolationRadiusResult::Method> iso_method;  // when computed
    std::optional<FaithfulRadiusReport> faithful;
    std::optional<Rational> test_radius;     // geometric, when rational
    std::optional<Rational> test_radius_sq;  // always set on the tangency path
    // Extremum intervals of f on the tangency curve restricted to the test
    // sphere (for the oriented core); neither contains zero.
    std::optional<IsolatingInterval> m, M;
    Verdict verdict = Verdict::SaddlePoint;
};

Certificate classify(const Poly& f, const std::vector<Rational>& point,
                     const ClassifyOptions& opts = {});

}  // namespace critcert

#endif
