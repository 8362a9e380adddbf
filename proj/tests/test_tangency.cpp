#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcert/realroots.hpp"
#include "critcert/tangency.hpp"

using namespace critcert;

static std::vector<std::string> XY{"X1", "X2"};
static std::vector<std::string> XYZ{"X1", "X2", "X3"};

static Poly var(const std::vector<std::string>& vs, std::size_t i) {
    return Poly::variable(vs, i);
}

// f = X1^2 + (1 - X1) X2^4
static Poly example41() {
    Poly x = var(XY, 0), y = var(XY, 1);
    Poly one = Poly::constant(XY, rat(1, 1));
    return x * x + (one - x) * y.pow(4);
}

static bool same_ideal(const Ideal& A, const Ideal& B) {
    for (const auto& g : A.groebner(OrderSpec::grevlex()).elements)
        if (!ideal_membership(g, B)) return false;
    for (const auto& g : B.groebner(OrderSpec::grevlex()).elements)
        if (!ideal_membership(g, A)) return false;
    return true;
}

TEST_CASE("gamma generators") {
    Poly x = var(XY, 0), y = var(XY, 1);

    auto g = gamma_generators(example41());
    REQUIRE(g.size() == 1);
    // 4 X1^2 X2^3 - X2^5 - 4 X1 X2^3 + 2 X1 X2
    Poly expected = rat(4, 1) * x * x * y.pow(3) - y.pow(5) -
                    rat(4, 1) * x * y.pow(3) + rat(2, 1) * x * y;
    CHECK(g[0] == expected);

    auto g2 = gamma_generators(Poly::norm_squared(XY));
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].is_zero());

    auto g3 = gamma_generators(x * x + rat(2, 1) * y * y);
    REQUIRE(g3.size() == 1);
    CHECK(g3[0] == rat(-2, 1) * x * y);

    // n = 3: three generators in canonical (1,2), (1,3), (2,3) order.
    Poly f3 = var(XYZ, 0).pow(2) + var(XYZ, 1).pow(2) + var(XYZ, 2).pow(2);
    CHECK(gamma_generators(f3).size() == 3);

    std::vector<std::string> X{"X1"};
    CHECK_THROWS_AS(gamma_generators(var(X, 0) * var(X, 0)), std::invalid_argument);
}

TEST_CASE("gamma vanishes where the gradient is radial") {
    // At any point with grad f parallel to x, all gamma_{i,j} vanish.
    // For f = X1^2 + 2 X2^2 the axes are eigendirections.
    Poly x = var(XY, 0), y = var(XY, 1);
    Poly f = x * x + rat(2, 1) * y * y;
    for (const auto& g : gamma_generators(f)) {
        CHECK(g.evaluate({rat(3, 2), rat(0, 1)}) == rat(0, 1));
        CHECK(g.evaluate({rat(0, 1), rat(-7, 3)}) == rat(0, 1));
    }
}

TEST_CASE("critical ideal") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Ideal C = critical_ideal(Poly::norm_squared(XY));
    CHECK(same_ideal(C, Ideal(XY, {x, y})));

    Ideal C2 = critical_ideal(example41());
    Poly one = Poly::constant(XY, rat(1, 1));
    CHECK(same_ideal(C2, Ideal(XY, {rat(2, 1) * x - y.pow(4),
                                    rat(4, 1) * (one - x) * y.pow(3)})));

    Ideal C3 = critical_ideal(x * y);
    CHECK(same_ideal(C3, Ideal(XY, {x, y})));
}

TEST_CASE("curve ideal G") {
    Poly x = var(XY, 0), y = var(XY, 1);

    // Example: saturation leaves the squarefree tangency curve itself.
    Ideal G = curve_ideal_G(example41());
    Ideal gam(XY, gamma_generators(example41()));
    CHECK(same_ideal(G, gam));

    Ideal G2 = curve_ideal_G(x * x + rat(2, 1) * y * y);
    CHECK(same_ideal(G2, Ideal(XY, {x * y})));

    CHECK_THROWS_AS(curve_ideal_G(Poly::norm_squared(XY)), RetryableFailure);
}

TEST_CASE("ensure_dim_one") {
    auto r = ensure_dim_one(example41(), 0);
    CHECK(r.A.is_identity());
    CHECK(hilbert_dimension(r.I) == 1);
    CHECK(same_ideal(r.I, Ideal(XY, gamma_generators(example41()))));

    Poly x = var(XY, 0), y = var(XY, 1);
    auto r2 = ensure_dim_one(x * x + rat(2, 1) * y * y, 0);
    CHECK(r2.A.is_identity());
    CHECK(hilbert_dimension(r2.I) == 1);

    // Radially symmetric: needs a coordinate change.
    auto r3 = ensure_dim_one(Poly::norm_squared(XY), 1);
    CHECK(!r3.A.is_identity());
    CHECK(sign(r3.A.determinant()) != 0);
    CHECK(hilbert_dimension(r3.I) == 1);
    CHECK(r3.fA == Poly::norm_squared(XY).substitute_linear(r3.A));
}

TEST_CASE("delta set") {
    Poly x = var(XY, 0), y = var(XY, 1);

    auto d = delta_set(Ideal(XY, {x * y}));
    REQUIRE(d.generators.size() == 1);
    REQUIRE(d.determinants.size() == 1);
    CHECK(d.determinants[0] == rat(2, 1) * y * y - rat(2, 1) * x * x);
    CHECK(d.all().size() == 2);

    auto d2 = delta_set(Ideal(XY, {x}));
    REQUIRE(d2.determinants.size() == 1);
    CHECK(d2.determinants[0] == rat(2, 1) * y);

    // Example 4.1 curve: determinant matches the hand-computed Jacobian det.
    Poly g = gamma_generators(example41())[0];
    auto d3 = delta_set(Ideal(XY, {g}));
    REQUIRE(d3.determinants.size() == 1);
    Poly expect = g.derivative(0) * (rat(2, 1) * y) - g.derivative(1) * (rat(2, 1) * x);
    CHECK(d3.determinants[0] == expect);

    std::vector<std::string> W{"X1", "X2", "X3"};
    CHECK_THROWS_AS(delta_set(Ideal(W, {var(W, 0)})), std::invalid_argument);
}

TEST_CASE("isolation radius, zero-dimensional critical locus") {
    Poly x = var(XY, 0), y = var(XY, 1);

    auto r = isolation_radius(Poly::norm_squared(XY));
    CHECK(r.radius == rat(1, 1));
    CHECK(r.method == IsolationRadiusResult::Method::ZeroDimCritical);

    // Example 4.1: other critical points (1, ±2^(1/4)) at distance
    // sqrt(1 + sqrt(2)) ~ 1.5538.
    auto r2 = isolation_radius(example41());
    CHECK(r2.method == IsolationRadiusResult::Method::ZeroDimCritical);
    CHECK(r2.radius > rat(0, 1));
    CHECK(r2.radius * r2.radius < rat(1, 1) + dyadic_below_sqrt(rat(2, 1), 40) +
                                      rat(1, 1000));

    // Certified: no critical point at sampled distances <= R.
    Ideal C = critical_ideal(example41());
    std::vector<std::string> ext = XY;
    std::vector<Rational> rhos{r2.radius, Rational(r2.radius / 2),
                               Rational(r2.radius / 3)};
    for (const Rational& rho : rhos) {
        std::vector<Poly> gens = C.generators();
        gens.push_back(Poly::norm_squared(XY) -
                       Poly::constant(XY, rho * rho));
        auto pts = solve_zero_dim_real(Ideal(XY, gens), 0);
        CHECK(pts.empty());
    }
}

TEST_CASE("isolation radius, quartic example has only the origin") {
    // f = X1^2 + X2^4 + X3^4 - 4 X1 X2 X3: complex critical locus is {0}.
    Poly x = var(XYZ, 0), y = var(XYZ, 1), z = var(XYZ, 2);
    Poly f = x * x + y.pow(4) + z.pow(4) - rat(4, 1) * x * y * z;
    auto r = isolation_radius(f);
    CHECK(r.radius == rat(1, 1));
}

TEST_CASE("isolation radius, positive-dimensional critical locus") {
    // f = (|X|^2 - 1)^2 in 2 vars: critical locus is the unit circle plus
    // the origin; isolation radius must be < 1.
    Poly n2 = Poly::norm_squared(XY);
    Poly one = Poly::constant(XY, rat(1, 1));
    Poly f = (n2 - one) * (n2 - one);
    auto r = isolation_radius(f);
    CHECK(r.method == IsolationRadiusResult::Method::MinorsRecursion);
    CHECK(r.radius > rat(0, 1));
    CHECK(r.radius < rat(1, 1));
}
