#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcert/matrix.hpp"
#include "critcert/poly.hpp"
#include "critcert/rational.hpp"
#include "critcert/univariate.hpp"

using namespace critcert;

static std::vector<std::string> XY{"X1", "X2"};
static std::vector<std::string> XYZ{"X1", "X2", "X3"};

static Poly var(const std::vector<std::string>& vs, std::size_t i) {
    return Poly::variable(vs, i);
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-7") == rat(-7, 1));
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a"));

    CHECK(isqrt_floor(Integer(0)) == 0);
    CHECK(isqrt_floor(Integer(15)) == 3);
    CHECK(isqrt_floor(Integer(16)) == 4);

    // dyadic_below_sqrt(a) is strictly below sqrt(a) and close to it.
    Rational a = rat(7, 18);
    Rational d = dyadic_below_sqrt(a, 40);
    CHECK(d > 0);
    CHECK(d * d < a);
    CHECK((d + rat(1, 1 << 20)) * (d + rat(1, 1 << 20)) > a);

    // simplest rational in an interval
    CHECK(simplest_between(rat(1, 4), rat(1, 2)) == rat(1, 3));
    CHECK(simplest_between(rat(1, 1), rat(2, 1)) == rat(3, 2));
    CHECK(simplest_between(rat(-1, 2), rat(1, 2)) == rat(0, 1));
    CHECK(simplest_between(rat(5, 2), rat(7, 2)) == rat(3, 1));
    Rational s = simplest_between(rat(51, 1000), rat(102, 1000));
    CHECK(s > rat(51, 1000));
    CHECK(s < rat(102, 1000));
    CHECK(s == rat(1, 10));
}

TEST_CASE("monomial orders") {
    // grevlex on 3 vars: x^2 > xy > y^2 > xz > yz > z^2 with x>y>z.
    auto m = [](uint32_t a, uint32_t b, uint32_t c) {
        return Monomial(std::vector<uint32_t>{a, b, c});
    };
    OrderSpec g = OrderSpec::grevlex();
    CHECK(compare(m(2, 0, 0), m(1, 1, 0), g) > 0);
    CHECK(compare(m(1, 1, 0), m(0, 2, 0), g) > 0);
    CHECK(compare(m(0, 2, 0), m(1, 0, 1), g) > 0);
    CHECK(compare(m(1, 0, 1), m(0, 1, 1), g) > 0);
    CHECK(compare(m(0, 1, 1), m(0, 0, 2), g) > 0);
    CHECK(compare(m(0, 0, 3), m(1, 1, 0), g) > 0);  // degree first

    OrderSpec l = OrderSpec::lex();
    CHECK(compare(m(1, 0, 0), m(0, 5, 5), l) > 0);
    CHECK(compare(m(1, 2, 0), m(1, 1, 9), l) > 0);

    // Block order eliminating the first variable: any monomial containing
    // x dominates any x-free one.
    OrderSpec b = OrderSpec::block(1);
    CHECK(compare(m(1, 0, 0), m(0, 9, 9), b) > 0);
    CHECK(compare(m(0, 2, 0), m(0, 1, 1), b) > 0);

    // Permutation: make z the most significant lex variable.
    OrderSpec lp = OrderSpec::lex({2, 0, 1});
    CHECK(compare(m(0, 0, 1), m(5, 5, 0), lp) > 0);
}

TEST_CASE("poly arithmetic and evaluation") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Poly f = x * x + rat(2, 1) * x * y - y.pow(3);
    CHECK(f.evaluate({rat(2, 1), rat(1, 1)}) == rat(7, 1));
    CHECK(f.total_degree() == 3);
    CHECK(f.degree_in(1) == 3);

    Poly dfx = f.derivative(0);
    CHECK(dfx == rat(2, 1) * x + rat(2, 1) * y);
    Poly dfy = f.derivative(1);
    CHECK(dfy == rat(2, 1) * x - rat(3, 1) * y * y);

    // translate_to_origin: g(X) = f(X+c) - f(c), so g(0) = 0 and
    // g(p - c) = f(p) - f(c).
    std::vector<Rational> c{rat(1, 2), rat(-1, 3)};
    Poly g = f.translate_to_origin(c);
    CHECK(g.evaluate({rat(0, 1), rat(0, 1)}) == rat(0, 1));
    std::vector<Rational> p{rat(2, 1), rat(3, 1)};
    CHECK(g.evaluate({p[0] - c[0], p[1] - c[1]}) == f.evaluate(p) - f.evaluate(c));

    // substitute y <- x^2
    Poly h = f.substitute(1, x * x);
    CHECK(h == x * x + rat(2, 1) * x.pow(3) - x.pow(6));

    // linear change of coordinates x <- x + y, y <- y
    MatrixQ A = MatrixQ::identity(2);
    A.at(0, 1) = rat(1, 1);
    Poly fa = (x * x).substitute_linear(A);
    CHECK(fa == x * x + rat(2, 1) * x * y + y * y);

    CHECK(f.str() == "-X2^3 + X1^2 + 2*X1*X2");
}

TEST_CASE("matrix determinant rank inertia") {
    MatrixQ A(3);
    // [[2,1,0],[1,2,0],[0,0,-3]]: eigenvalues 1, 3, -3.
    A.at(0, 0) = rat(2, 1);
    A.at(0, 1) = rat(1, 1);
    A.at(1, 0) = rat(1, 1);
    A.at(1, 1) = rat(2, 1);
    A.at(2, 2) = rat(-3, 1);
    CHECK(A.determinant() == rat(-9, 1));
    CHECK(A.rank() == 3);
    Inertia in = symmetric_inertia(A);
    CHECK(in.positive == 2);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);

    MatrixQ B(2);
    B.at(0, 0) = rat(1, 1);
    CHECK(B.determinant() == rat(0, 1));
    CHECK(B.rank() == 1);
    Inertia ib = symmetric_inertia(B);
    CHECK(ib.positive == 1);
    CHECK(ib.zero == 1);

    // char_poly of diag(1,2): t^2 - 3t + 2
    MatrixQ D(2);
    D.at(0, 0) = rat(1, 1);
    D.at(1, 1) = rat(2, 1);
    auto cp = D.char_poly();
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == rat(2, 1));
    CHECK(cp[1] == rat(-3, 1));
    CHECK(cp[2] == rat(1, 1));
}

TEST_CASE("multivariate gcd and squarefree") {
    Poly x = var(XY, 0), y = var(XY, 1);
    Poly a = (x + y) * (x - y);
    Poly b = (x + y) * (x + rat(2, 1) * y);
    Poly g = gcd_poly(a, b);
    CHECK(g == x + y);

    Poly f = rat(3, 1) * (x + y).pow(2) * (x - y);
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.factors.size() == 2);
    CHECK(dec.factors[0].second == 1);
    CHECK(dec.factors[0].first == x - y);
    CHECK(dec.factors[1].second == 2);
    CHECK(dec.factors[1].first == x + y);
    CHECK(dec.constant == rat(3, 1));
    CHECK(squarefree_part(f) == (x - y) * (x + y));

    // gcd with disjoint variables is 1
    Poly u = var(XYZ, 0) + var(XYZ, 2);
    Poly v = var(XYZ, 1) * var(XYZ, 1);
    CHECK(gcd_poly(u, v).is_constant());
}

TEST_CASE("univariate basics") {
    // p = (x-1)^2 (x+2) = x^3 - 3x + 2
    UPoly p({rat(2, 1), rat(-3, 1), rat(0, 1), rat(1, 1)});
    CHECK(p.evaluate(rat(1, 1)) == rat(0, 1));
    CHECK(p.evaluate(rat(-2, 1)) == rat(0, 1));
    UPoly sf = p.squarefree_part();
    // squarefree part = (x-1)(x+2) = x^2 + x - 2
    CHECK(sf == UPoly({rat(-2, 1), rat(1, 1), rat(1, 1)}));

    UPoly q({rat(0, 1), rat(0, 1), rat(5, 1)});
    CHECK(q.strip_root_at_zero() == 2);
    CHECK(q.degree() == 0);

    UPoly h({rat(-2, 1), rat(0, 1), rat(1, 1)});  // x^2 - 2
    Rational lo, hi;
    h.evaluate_interval(rat(1, 1), rat(2, 1), lo, hi);
    CHECK(lo <= rat(-1, 1));
    CHECK(hi >= rat(2, 1));
    CHECK(h.cauchy_bound() == rat(3, 1));
}
