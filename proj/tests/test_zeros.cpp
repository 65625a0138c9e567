#include <cmath>
#include <random>

#include "doctest.h"
#include "lambdaforge/zeros.hpp"

using namespace lforge;

TEST_CASE("winding counts zeros inside rectangles and discs") {
    auto f = [](cplx z) { return z * z + 1.0; };
    CHECK(winding_count(f, RectRegion{-2.0, 2.0, 0.5, 1.5}) == 1);
    CHECK(winding_count(f, RectRegion{-2.0, 2.0, -2.0, 2.0}) == 2);
    CHECK(winding_count(f, DiscRegion{cplx(0.0, 1.0), 0.3}) == 1);
    CHECK(winding_count(f, DiscRegion{cplx(3.0, 0.0), 0.1}) == 0);
}

TEST_CASE("winding counts poles negatively") {
    auto f = [](cplx z) { return 1.0 / (z - 0.5); };
    CHECK(winding_count(f, DiscRegion{cplx(0.5, 0.0), 0.2}) == -1);
    auto g = [](cplx z) { return (z - 2.0) / (z - 0.5); };
    CHECK(winding_count(g, RectRegion{0.0, 1.0, -0.5, 0.5}) == -1);
    CHECK(winding_count(g, RectRegion{0.0, 3.0, -0.5, 0.5}) == 0);
}

TEST_CASE("winding is additive over a split region") {
    Polynomial p = Polynomial::from_roots(
        {cplx(0.3, 0.0), cplx(1.2, 0.5), cplx(-1.0, 0.8)});
    auto f = [&](cplx z) { return p.eval(z); };
    int left = winding_count(f, RectRegion{-2.0, 0.0, -1.0, 1.0});
    int right = winding_count(f, RectRegion{0.0, 2.0, -1.0, 1.0});
    int whole = winding_count(f, RectRegion{-2.0, 2.0, -1.0, 1.0});
    CHECK(left == 1);
    CHECK(right == 2);
    CHECK(whole == left + right);
}

TEST_CASE("winding sees multiplicity") {
    auto f = [](cplx z) { return (z - cplx(0.0, 0.5)) * (z - cplx(0.0, 0.5)); };
    CHECK(winding_count(f, DiscRegion{cplx(0.0, 0.5), 0.2}) == 2);
}

TEST_CASE("boundary zeros are reported, not averaged away") {
    auto f = [](cplx z) { return z - 1.0; };
    try {
        winding_count(f, DiscRegion{cplx(0.0, 0.0), 1.0});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::zero_on_boundary);
    }
}

TEST_CASE("winding detail reports sampling effort") {
    auto f = [](cplx z) { return z * z + 1.0; };
    WindingResult r = winding_count_detail(f, RectRegion{-2.0, 2.0, -2.0, 2.0}, 256);
    CHECK(r.winding == 2);
    CHECK(r.samples_used >= 256);
}

TEST_CASE("refine_zero converges to sqrt 2") {
    auto f = [](cplx z) { return z * z - 2.0; };
    auto [z0, res] = refine_zero(f, cplx(1.5, 0.0), 1e-12);
    CHECK(std::abs(z0 - cplx(1.4142135623730951, 0.0)) < 1e-9);
    CHECK(res < 1e-12);
}

TEST_CASE("critical scan finds the three lowest heights") {
    LFunctionHandle f = handle_zeta();
    FunctionalEquation fe = riemann_fe();
    std::vector<double> heights = critical_scan(f, fe, 10.0, 30.0, 0.05);
    REQUIRE(heights.size() == 3);
    CHECK(std::abs(heights[0] - 14.134725141734694) < 1e-6);
    CHECK(std::abs(heights[1] - 21.022039638771555) < 1e-6);
    CHECK(std::abs(heights[2] - 25.010857580145688) < 1e-6);

    CHECK(critical_scan(f, fe, 2.0, 9.0, 0.05).empty());

    // independent confirmation through the argument principle
    auto lam = [&](cplx z) { return lambda_eval(f, fe, z); };
    CHECK(winding_count(lam, RectRegion{0.05, 0.95, 14.0, 14.3}) == 1);
    CHECK(winding_count(lam, RectRegion{0.05, 0.95, 20.8, 21.2}) == 1);
    CHECK(winding_count(lam, RectRegion{0.05, 0.95, 15.0, 20.0}) == 0);
}

TEST_CASE("weil check accepts the balanced quadratic") {
    WeilPolynomial p;
    p.coeffs = {1, -1, 2};
    p.q = 2;
    p.genus = 1;
    WeilCheckResult r = weil_check(p);
    CHECK(r.functional_ok);
    CHECK(r.rh_ok);
    REQUIRE(r.roots.size() == 2);
    for (cplx root : r.roots)
        CHECK(std::abs(std::abs(root) - 0.7071067811865476) < 1e-12);
}

TEST_CASE("weil check rejects split real roots") {
    WeilPolynomial p;
    p.coeffs = {1, -3, 2};  // (1 - t)(1 - 2t)
    p.q = 2;
    p.genus = 1;
    WeilCheckResult r = weil_check(p);
    CHECK(r.functional_ok);
    CHECK_FALSE(r.rh_ok);
}

TEST_CASE("weil check flags a broken reciprocal relation") {
    WeilCheckResult r = weil_check_real({1.0, 1.0, 1.0}, 2, 1);
    CHECK_FALSE(r.functional_ok);
    CHECK_FALSE(r.rh_ok);
}

TEST_CASE("weil validation") {
    WeilPolynomial c;
    c.coeffs = {2, 1, 1};
    c.q = 2;
    c.genus = 1;
    CHECK_THROWS_AS(c.validate(), error);
    try {
        weil_check_real({1.0, -1.0, 2.0}, 2, 2);  // degree 2 but genus 2
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::degree_mismatch);
    }
}

TEST_CASE("planted-root weil instances pass and detuned ones fail") {
    std::mt19937_64 rng(99u);
    const double pi = 3.14159265358979323846;
    std::uniform_real_distribution<double> unif(0.05, pi - 0.05);
    const long long q = 3;
    for (int trial = 0; trial < 10; ++trial) {
        double th1 = unif(rng), th2 = unif(rng);
        if (std::abs(th1 - th2) < 1e-3) continue;
        auto quad = [&](double th, double detune) {
            double a = -2.0 * std::sqrt(static_cast<double>(q)) * std::cos(th) / detune;
            return std::vector<double>{1.0, a, static_cast<double>(q) / (detune * detune)};
        };
        auto mul = [](const std::vector<double>& x, const std::vector<double>& y) {
            std::vector<double> out(x.size() + y.size() - 1, 0.0);
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
            return out;
        };
        WeilCheckResult clean = weil_check_real(mul(quad(th1, 1.0), quad(th2, 1.0)), q, 2);
        CHECK(clean.functional_ok);
        CHECK(clean.rh_ok);
        WeilCheckResult detuned = weil_check_real(mul(quad(th1, 1.01), quad(th2, 1.0)), q, 2);
        CHECK_FALSE(detuned.rh_ok);
    }
}
