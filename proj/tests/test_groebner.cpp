#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcert/groebner.hpp"
#include "critcert/univariate.hpp"

using namespace critcert;

static std::vector<std::string> XY{"X1", "X2"};
static std::vector<std::string> XYZ{"X1", "X2", "X3"};

static Poly var(const std::vector<std::string>& vs, std::size_t i) {
    return Poly::variable(vs, i);
}
static Poly cst(const std::vector<std::string>& vs, const Rational& c) {
    return Poly::constant(vs, c);
}

TEST_CASE("reduced groebner basis, grevlex") {
    Poly x = var(XY, 0), y = var(XY, 1);
    // <x^2, xy + y^2>: reduced basis {x^2, xy + y^2, y^3}.
    auto gb = buchberger({x * x, x * y + y * y}, OrderSpec::grevlex());
    REQUIRE(gb.elements.size() == 3);
    CHECK(gb.elements[0] == x * y + y * y);
    CHECK(gb.elements[1] == x * x);
    CHECK(gb.elements[2] == y.pow(3));

    // Linear system: <x + y, x - y> = <x, y>.
    auto gb2 = buchberger({x + y, x - y}, OrderSpec::grevlex());
    REQUIRE(gb2.elements.size() == 2);
    CHECK(gb2.elements[0] == y);
    CHECK(gb2.elements[1] == x);

    // Unit ideal.
    auto gb3 = buchberger({x * y - cst(XY, rat(1, 1)), y}, OrderSpec::grevlex());
    REQUIRE(gb3.elements.size() == 1);
    CHECK(gb3.elements[0].is_constant());
}

TEST_CASE("normal form") {
    Poly x = var(XY, 0), y = var(XY, 1);
    auto gb = buchberger({x * x - y}, OrderSpec::grevlex());
    CHECK(normal_form(x * x * y, gb) == y * y);
    CHECK(normal_form(x * x - y, gb).is_zero());
    // Remainder is unique for a Groebner basis and unchanged monomials keep
    // their coefficients (no rescaling).
    CHECK(normal_form(rat(3, 7) * x * x * x + x, gb) == rat(3, 7) * x * y + x);
}

TEST_CASE("hilbert dimension and independent sets") {
    Poly x = var(XY, 0), y = var(XY, 1);
    CHECK(hilbert_dimension(Ideal(XY, {x * y})) == 1);
    CHECK(hilbert_dimension(Ideal(XY, {x, y})) == 0);
    CHECK(hilbert_dimension(Ideal(XY, {cst(XY, rat(1, 1))})) == -1);
    CHECK(hilbert_dimension(Ideal::zero(XY)) == 2);
    CHECK(hilbert_dimension(Ideal(XY, {x * x + y * y - cst(XY, rat(1, 1))})) == 1);

    Poly z = var(XYZ, 2);
    CHECK(hilbert_dimension(Ideal(XYZ, {var(XYZ, 0) * var(XYZ, 1)})) == 2);
    auto s = max_independent_set(Ideal(XYZ, {var(XYZ, 0)}));
    CHECK(s == std::vector<std::size_t>{1, 2});
    (void)z;
}

TEST_CASE("elimination") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Ideal I(XY, {x * x + y * y - cst(XY, rat(1, 1)), x - y});
    Ideal E = elimination_ideal(I, {1});
    REQUIRE(E.vars() == std::vector<std::string>{"X2"});
    // x = y on the unit circle: 2 y^2 = 1.
    const auto& gb = E.groebner(OrderSpec::grevlex());
    REQUIRE(gb.elements.size() == 1);
    std::vector<std::string> Y{"X2"};
    CHECK(gb.elements[0] ==
          var(Y, 0) * var(Y, 0) - cst(Y, rat(1, 2)));

    Poly e = univariate_eliminant(I, 1);
    CHECK(e == y * y - cst(XY, rat(1, 2)));
    CHECK(univariate_eliminant(Ideal::zero(XY), 0).is_zero());
}

TEST_CASE("saturation and intersection") {
    Poly x = var(XY, 0), y = var(XY, 1);
    // <x^2 y> : x^inf = <y>
    Ideal S = saturate_by_poly(Ideal(XY, {x * x * y}), x);
    CHECK(ideal_membership(y, S));
    CHECK(!ideal_membership(x, S));
    CHECK(!ideal_membership(cst(XY, rat(1, 1)), S));

    // <xy, y^2> : y^inf = <1>
    Ideal S2 = saturate_by_poly(Ideal(XY, {x * y, y * y}), y);
    CHECK(S2.is_unit());

    // <x> ∩ <y> = <xy>
    Ideal M = ideal_intersection(Ideal(XY, {x}), Ideal(XY, {y}));
    CHECK(ideal_membership(x * y, M));
    CHECK(!ideal_membership(x, M));
    CHECK(!ideal_membership(y, M));

    // I : J^inf with J = <x, y> strips the origin-supported component:
    // <x^2, xy> : <x,y>^inf = <x>.
    Ideal S3 = saturate_by_ideal(Ideal(XY, {x * x, x * y}), Ideal(XY, {x, y}));
    CHECK(ideal_membership(x, S3));
    CHECK(!ideal_membership(y, S3));
}

TEST_CASE("zero-dimensional predicates and radical") {
    Poly x = var(XY, 0), y = var(XY, 1);
    CHECK(is_zero_dimensional(Ideal(XY, {x * x, y})));
    CHECK(!is_zero_dimensional(Ideal(XY, {x * y})));
    CHECK(is_zero_dimensional(Ideal(XY, {cst(XY, rat(1, 1))})));

    Ideal R = radical_zero_dim(Ideal(XY, {x * x, y * y}));
    CHECK(ideal_membership(x, R));
    CHECK(ideal_membership(y, R));

    // V = {(1,0), (-1,0)}; radical is <x^2 - 1, y>.
    Poly one = cst(XY, rat(1, 1));
    Ideal R2 = radical_zero_dim(
        Ideal(XY, {(x - one).pow(2) * (x + one), y.pow(3)}));
    CHECK(ideal_membership(y, R2));
    CHECK(ideal_membership(x * x - one, R2));
    CHECK(!ideal_membership(x - one, R2));

    CHECK_THROWS_AS(radical_zero_dim(Ideal(XY, {x * y})), std::invalid_argument);
}

TEST_CASE("equidimensional split, dimension one") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Poly one = cst(XY, rat(1, 1));

    // Line {x=0} plus the point (1,0).
    Ideal I(XY, {x * y, x * (x - one)});
    auto split = equidim_split_dim1(I);
    CHECK(ideal_membership(x, split.dim1));
    CHECK(!ideal_membership(y, split.dim1));
    CHECK(ideal_membership(x - one, split.dim0));
    CHECK(ideal_membership(y, split.dim0));
    CHECK(!split.dim0.is_unit());

    // Principal: no zero-dimensional part, square factors stripped.
    auto split2 = equidim_split_dim1(Ideal(XY, {x * x * y}));
    CHECK(split2.dim0.is_unit());
    const auto& g1 = split2.dim1.groebner(OrderSpec::grevlex());
    REQUIRE(g1.elements.size() == 1);
    CHECK(g1.elements[0] == x * y);

    CHECK_THROWS_AS(equidim_split_dim1(Ideal(XY, {x, y})), std::invalid_argument);
}

TEST_CASE("radical of an equidimensional curve ideal") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Ideal R = radical_dim1_equidim(Ideal(XY, {(x - y).pow(2) * (x + y)}));
    const auto& gb = R.groebner(OrderSpec::grevlex());
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == (x - y) * (x + y));

    Ideal R2 = radical_dim1_equidim(Ideal(XY, {x * x}));
    CHECK(ideal_membership(x, R2));
}

TEST_CASE("groebner under elimination orders matches lex elimination") {
    // Twisted-cubic style check in 3 variables: I = <y - x^2, z - x^3>;
    // eliminating x gives <y^3 - z^2>.
    Poly x = var(XYZ, 0), y = var(XYZ, 1), z = var(XYZ, 2);
    Ideal I(XYZ, {y - x * x, z - x * x * x});
    Ideal E = elimination_ideal(I, {1, 2});
    std::vector<std::string> YZ{"X2", "X3"};
    Poly yy = var(YZ, 0), zz = var(YZ, 1);
    const auto& gb = E.groebner(OrderSpec::grevlex());
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == yy.pow(3) - zz * zz);
}
