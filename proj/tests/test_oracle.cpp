#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcert/oracle.hpp"

using namespace critcert;

namespace {

Poly ex41() {
    std::vector<std::string> V{"X1", "X2"};
    Poly x = Poly::variable(V, 0), y = Poly::variable(V, 1);
    return x.pow(2) + (Poly::constant(V, rat(1)) - x) * y.pow(4);
}

Poly quartic3() {
    std::vector<std::string> V{"X1", "X2", "X3"};
    Poly x = Poly::variable(V, 0), y = Poly::variable(V, 1), z = Poly::variable(V, 2);
    return x.pow(2) + y.pow(4) + z.pow(4) - rat(4) * x * y * z;
}

Rational norm2(const std::vector<Rational>& p) {
    Rational s(0);
    for (const auto& c : p) s += c * c;
    return s;
}

}  // namespace

TEST_CASE("ball of radius 2.83 around Example 4.1 sees both signs") {
    // f(2,2) = -12 and f(-2,2) = 52; both points lie in the closed ball of
    // radius 283/100 and the snapped grid contains them.
    SampleReport rep = sample_extrema(ex41(), rat(283, 100), 8, 0);
    CHECK(rep.min_seen <= rat(-12));
    CHECK(rep.max_seen >= rat(52));
}

TEST_CASE("Example 4.1 is nonnegative on the ball of radius 9/10") {
    SampleReport rep = sample_extrema(ex41(), rat(9, 10), 8, 0);
    CHECK(rep.min_seen == rat(0));
    CHECK(rep.min_witness == std::vector<Rational>{rat(0), rat(0)});
}

TEST_CASE("negative squared norm peaks at the origin") {
    std::vector<std::string> V{"X1", "X2"};
    Poly x = Poly::variable(V, 0), y = Poly::variable(V, 1);
    Poly f = -x.pow(2) - y.pow(2);
    SampleReport rep = sample_extrema(f, rat(3, 2), 6, 7);
    CHECK(rep.max_seen == rat(0));
    CHECK(rep.max_witness == std::vector<Rational>{rat(0), rat(0)});
}

TEST_CASE("oracle verdicts") {
    std::vector<std::string> V{"X1", "X2"};
    Poly x = Poly::variable(V, 0), y = Poly::variable(V, 1);

    SUBCASE("indefinite quadratic is saddle_certified") {
        Poly f = x.pow(2) - y.pow(2);
        CHECK(oracle_verdict(f, rat(1), 8, 0) == OracleVerdict::saddle_certified);
    }
    SUBCASE("Example 4.1 inside its faithful radius is min_consistent") {
        CHECK(oracle_verdict(ex41(), rat(1, 2), 8, 0) == OracleVerdict::min_consistent);
    }
    SUBCASE("the 3-variable quartic is saddle_certified at r=1/4") {
        // f(eps^2, eps, eps) < 0 < f(-eps, eps, eps): the sign-pattern
        // families supply these witnesses.
        CHECK(oracle_verdict(quartic3(), rat(1, 4), 4, 0) ==
              OracleVerdict::saddle_certified);
    }
    SUBCASE("negative definite is max_consistent") {
        Poly f = -x.pow(2) - y.pow(4);
        CHECK(oracle_verdict(f, rat(1), 8, 0) == OracleVerdict::max_consistent);
    }
}

TEST_CASE("sampling is deterministic and stays inside the closed ball") {
    Poly f = quartic3();
    SampleReport a = sample_extrema(f, rat(1, 3), 6, 42);
    SampleReport b = sample_extrema(f, rat(1, 3), 6, 42);
    CHECK(a.min_seen == b.min_seen);
    CHECK(a.max_seen == b.max_seen);
    CHECK(a.min_witness == b.min_witness);
    CHECK(a.max_witness == b.max_witness);
    CHECK(a.samples == b.samples);
    CHECK(norm2(a.min_witness) <= rat(1, 9));
    CHECK(norm2(a.max_witness) <= rat(1, 9));
}

TEST_CASE("different seeds never produce contradictory signs") {
    Poly f = ex41();
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        SampleReport rep = sample_extrema(f, rat(1, 2), 6, seed);
        CHECK(rep.min_seen >= rat(0));  // true minimum on this ball is 0
    }
}
