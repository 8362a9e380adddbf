#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critcert/realroots.hpp"

using namespace critcert;

static UPoly upoly(std::initializer_list<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return UPoly(std::move(c));
}

// (x - r1)(x - r2)... for rational roots.
static UPoly from_roots(const std::vector<Rational>& roots) {
    UPoly p = UPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * UPoly({-r, Rational(1)});
    return p;
}

TEST_CASE("sturm isolation basics") {
    // x^2 - 2: two irrational roots.
    auto iv = sturm_isolate(upoly({-2, 0, 1}));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].hi < iv[1].lo);
    CHECK(!iv[0].exact);
    UPoly p = upoly({-2, 0, 1});
    CHECK(sign_at(p, iv[0].lo) * sign_at(p, iv[0].hi) < 0);
    CHECK(iv[1].lo < rat(1415, 1000));
    CHECK(iv[1].hi > rat(1414, 1000));

    // x^2 + 1: no real roots.
    CHECK(sturm_isolate(upoly({1, 0, 1})).empty());

    // x(x-1): rational roots are found exactly.
    auto iv2 = sturm_isolate(upoly({0, -1, 1}) * UPoly({Rational(0), Rational(1)}));
    // p = x^2(x-1); squarefree part x(x-1)
    REQUIRE(iv2.size() == 2);
    CHECK(iv2[0].exact);
    CHECK(iv2[0].lo == rat(0, 1));
    CHECK(iv2[1].exact);
    CHECK(iv2[1].lo == rat(1, 1));
}

TEST_CASE("random constructed rational roots are all recovered") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> roots;
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            bool dup = false;
            for (const auto& x : roots)
                if (x == r) dup = true;
            if (!dup) roots.push_back(r);
        }
        UPoly p = from_roots(roots);
        auto iv = sturm_isolate(p);
        REQUIRE(iv.size() == roots.size());
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(iv[i].lo <= roots[i]);
            CHECK(roots[i] <= iv[i].hi);
        }
    }
}

TEST_CASE("sturm count matches grid sign changes") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> c(1 + rng() % 8, Rational(0));
        for (auto& x : c) x = Rational(coeff(rng));
        c.push_back(Rational(1 + rng() % 4));  // nonzero leading
        UPoly p(std::move(c));
        UPoly sf = p.squarefree_part();
        // Count sign changes of the squarefree part on a fine grid over
        // [-10, 10]; fine enough for these small-coefficient polynomials
        // to serve as an independent root count.
        Rational a(-10), b(10);
        int grid_changes = 0;
        int prev = 0;
        const int N = 4000;
        for (int i = 0; i <= N; ++i) {
            Rational x = a + (b - a) * Rational(i, N);
            int s = sf.sign_at(x);
            if (s == 0) {
                // landed exactly on a root: count it and skip
                ++grid_changes;
                prev = 0;
                continue;
            }
            if (prev != 0 && s != prev) ++grid_changes;
            prev = s;
        }
        SturmChain chain = SturmChain::build(p);
        int sturm = chain.count_roots(a, b);
        CHECK(sturm == grid_changes);
    }
}

TEST_CASE("refine preserves the root and honors width") {
    UPoly p = upoly({-2, 0, 1});
    IsolatingInterval iv{rat(1, 1), rat(2, 1), false};
    for (int b = 2; b <= 40; b += 6) {
        Rational w(1, pow2(static_cast<unsigned>(b)));
        auto r = refine(p, iv, w);
        CHECK(r.hi - r.lo <= w);
        CHECK(iv.lo <= r.lo);
        CHECK(r.hi <= iv.hi);
        CHECK(sign_at(p, r.lo) * sign_at(p, r.hi) <= 0);
        CHECK(r.lo * r.lo < rat(2, 1));
        CHECK(r.hi * r.hi > rat(2, 1));
    }
    // exact interval is a fixed point
    IsolatingInterval ex{rat(1, 1), rat(1, 1), true};
    auto r = refine(upoly({-1, 1}), ex, rat(1, 1024));
    CHECK(r.exact);
    CHECK(r.lo == rat(1, 1));
    // already narrow enough: unchanged
    auto r2 = refine(p, iv, rat(2, 1));
    CHECK(r2.lo == iv.lo);
    CHECK(r2.hi == iv.hi);
}

TEST_CASE("positive root lower bounds") {
    // x^2 - 4: single positive root 2.
    auto b = positive_root_lower_bounds(upoly({-4, 0, 1}));
    REQUIRE(b.size() == 1);
    CHECK(b[0] > rat(0, 1));
    CHECK(b[0] <= rat(2, 1));

    CHECK(positive_root_lower_bounds(upoly({1, 0, 1})).empty());

    auto b2 = positive_root_lower_bounds(UPoly({rat(-1, 4), rat(1, 1)}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == rat(1, 4));

    // Root at zero only: stripped, no positive roots.
    CHECK(positive_root_lower_bounds(upoly({0, 0, 1})).empty());

    // Roots -1, 1/3, 5: two positive lower bounds, all > 0.
    auto b3 = positive_root_lower_bounds(
        from_roots({rat(-1, 1), rat(1, 3), rat(5, 1)}));
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == rat(1, 3));
    CHECK(b3[1] > rat(0, 1));
    CHECK(b3[1] <= rat(5, 1));
}

static std::vector<std::string> XY{"X1", "X2"};
static std::vector<std::string> XYZ{"X1", "X2", "X3"};

TEST_CASE("solve_zero_dim_real on simple systems") {
    Poly x = Poly::variable(XY, 0), y = Poly::variable(XY, 1);
    Poly one = Poly::constant(XY, rat(1, 1));

    auto pts = solve_zero_dim_real(Ideal(XY, {x * x - one, y - x}), 1);
    REQUIRE(pts.size() == 2);
    // Points (-1,-1) and (1,1): verify by interval containment.
    int found_pos = 0, found_neg = 0;
    for (const auto& p : pts) {
        if (p.coords[0].lo <= rat(1, 1) && rat(1, 1) <= p.coords[0].hi &&
            p.coords[1].lo <= rat(1, 1) && rat(1, 1) <= p.coords[1].hi)
            ++found_pos;
        if (p.coords[0].lo <= rat(-1, 1) && rat(-1, 1) <= p.coords[0].hi &&
            p.coords[1].lo <= rat(-1, 1) && rat(-1, 1) <= p.coords[1].hi)
            ++found_neg;
    }
    CHECK(found_pos == 1);
    CHECK(found_neg == 1);

    CHECK(solve_zero_dim_real(Ideal(XY, {x * x + one, y}), 1).empty());
    CHECK(solve_zero_dim_real(Ideal::unit(XY), 0).empty());
}

TEST_CASE("solve_zero_dim_real counts match a triangular oracle") {
    // System: q(x) with known real-root count, y^2 = x (couples the count).
    Poly x = Poly::variable(XY, 0), y = Poly::variable(XY, 1);
    Poly one = Poly::constant(XY, rat(1, 1));
    // x ranges over {-2, 1/4, 3}; y^2 = x has real solutions only for x >= 0:
    // x=1/4 -> y=±1/2, x=3 -> y=±√3. Total 4 real points.
    Poly q = (x + rat(2, 1) * one) * (x - rat(1, 4) * one) * (x - rat(3, 1) * one);
    auto pts = solve_zero_dim_real(Ideal(XY, {q, y * y - x}), 1, 42);
    CHECK(pts.size() == 4);

    // Residuals at box centers shrink as refinement deepens.
    Ideal I(XY, {q, y * y - x});
    auto coarse = solve_zero_dim_real(I, 1, 0, 10);
    auto fine = solve_zero_dim_real(I, 1, 0, 60);
    REQUIRE(coarse.size() == fine.size());
    auto residual = [&](const RealPoint& p) {
        Rational cx = (p.coords[0].lo + p.coords[0].hi) / 2;
        Rational cy = (p.coords[1].lo + p.coords[1].hi) / 2;
        Rational r(0);
        for (const auto& g : I.generators())
            r += abs(g.evaluate({cx, cy}));
        return r;
    };
    // Sort by center of distinguished coordinate to match points up.
    auto key = [](const RealPoint& p) { return p.coords[1].lo + p.coords[1].hi; };
    std::sort(coarse.begin(), coarse.end(),
              [&](const RealPoint& a, const RealPoint& b) { return key(a) < key(b); });
    std::sort(fine.begin(), fine.end(),
              [&](const RealPoint& a, const RealPoint& b) { return key(a) < key(b); });
    for (std::size_t i = 0; i < coarse.size(); ++i)
        CHECK(residual(fine[i]) <= residual(coarse[i]));
}

TEST_CASE("solve_zero_dim_real needs a separating substitution") {
    // Symmetric system where the distinguished variable takes equal values
    // on distinct points: x^2 = 1, y^2 = 1 distinguished by... pick z = x*y
    // style coupling. Here: x^2-1, y^2-1, distinguished x; x = ±1 shared by
    // two points each, so X1 alone is non-separating.
    Poly x = Poly::variable(XY, 0), y = Poly::variable(XY, 1);
    Poly one = Poly::constant(XY, rat(1, 1));
    auto pts = solve_zero_dim_real(Ideal(XY, {x * x - one, y * y - one}), 0, 3);
    CHECK(pts.size() == 4);
    int hits = 0;
    for (const auto& p : pts)
        for (long sx : {-1, 1})
            for (long sy : {-1, 1})
                if (p.coords[0].lo <= Rational(sx) && Rational(sx) <= p.coords[0].hi &&
                    p.coords[1].lo <= Rational(sy) && Rational(sy) <= p.coords[1].hi)
                    ++hits;
    CHECK(hits == 4);

    // Distinguished-variable width honored.
    for (const auto& p : pts)
        CHECK(p.coords[0].hi - p.coords[0].lo <= Rational(1, pow2(40)));
}
