#include <cmath>
#include <random>

#include "doctest.h"
#include "lambdaforge/handle.hpp"

using namespace lforge;

namespace {

double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("gamma matches closed forms") {
    CHECK(std::abs(gamma(cplx(5.0, 0.0)) - 24.0) < 1e-12 * 24.0);
    CHECK(std::abs(gamma(cplx(0.5, 0.0)) - 1.7724538509055160) < 1e-13);
    // reference value of Gamma(1+i)
    cplx g1i(0.49801566811835604, -0.15494982830181069);
    CHECK(rel_err(gamma(cplx(1.0, 1.0)), g1i) < 1e-12);
    CHECK(std::abs(gamma(cplx(1.0, 0.0)) - 1.0) < 1e-14);
}

TEST_CASE("gamma recurrence") {
    cplx s(2.3, 1.7);
    CHECK(rel_err(gamma(s + 1.0), s * gamma(s)) < 1e-13);
    cplx t(-3.4, 0.2);
    CHECK(rel_err(gamma(t + 1.0), t * gamma(t)) < 1e-12);
}

TEST_CASE("gamma reflection identity on random points") {
    std::mt19937_64 rng(20260822u);
    std::uniform_real_distribution<double> unif(-20.0, 20.0);
    const double pi = 3.14159265358979323846;
    int tested = 0;
    while (tested < 1000) {
        cplx s(unif(rng), unif(rng));
        if (std::abs(s) > 20.0) continue;
        // both sides diverge at the real integers; stay clear of them
        if (std::abs(s.imag()) < 0.05 && std::abs(s.real() - std::round(s.real())) < 0.05)
            continue;
        cplx lhs = gamma(s) * gamma(1.0 - s);
        cplx rhs = pi / sin_pi(s);
        CHECK(rel_err(lhs, rhs) < 1e-10);
        ++tested;
    }
}

TEST_CASE("gamma pole reporting") {
    CHECK_THROWS_AS(gamma(cplx(0.0, 0.0)), error);
    try {
        gamma(cplx(-3.0, 0.0));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::pole_at_nonpositive_integer);
    }
}

TEST_CASE("sin_pi reduction") {
    CHECK(std::abs(sin_pi(cplx(0.5, 0.0)) - 1.0) < 1e-15);
    CHECK(std::abs(sin_pi(cplx(1.0, 0.0))) < 1e-15);
    CHECK(std::abs(sin_pi(cplx(12345678.0, 0.0))) < 1e-12);
    CHECK(std::abs(sin_pi(cplx(0.25, 0.0)) - 0.7071067811865476) < 1e-14);
}

TEST_CASE("zeta special values") {
    CHECK(std::abs(zeta(cplx(2.0, 0.0)) - 1.6449340668482264) < 1e-12);
    CHECK(std::abs(zeta(cplx(-1.0, 0.0)) - (-0.08333333333333333)) < 1e-11);
    CHECK(std::abs(zeta(cplx(0.0, 0.0)) - (-0.5)) < 1e-12);
    CHECK(std::abs(zeta(cplx(3.0, 0.0)) - 1.2020569031595943) < 1e-12);
    CHECK(std::abs(zeta(cplx(4.0, 0.0)) - 1.0823232337111382) < 1e-12);
}

TEST_CASE("zeta against a direct partial sum at high real part") {
    cplx s(10.0, 0.0);
    cplx direct(0.0, 0.0);
    for (int n = 1; n <= 40; ++n) direct += std::pow(static_cast<double>(n), -10.0);
    // tail below 1e-17
    CHECK(std::abs(zeta(s) - direct) < 1e-13);
}

TEST_CASE("zeta first zero on the critical axis") {
    CHECK(std::abs(zeta(cplx(0.5, 14.134725141734694))) < 1e-6);
}

TEST_CASE("zeta conjugate symmetry") {
    cplx s(0.3, 7.2);
    CHECK(rel_err(zeta(std::conj(s)), std::conj(zeta(s))) < 1e-13);
}

TEST_CASE("zeta pole and accuracy reporting") {
    try {
        zeta(cplx(1.0, 0.0));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::pole_at_one);
    }
    try {
        zeta(cplx(1.0 + 1e-7, 0.0));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::accuracy_not_reached);
    }
    // just outside the throwing neighborhood the value is large but finite
    CHECK(std::abs(zeta(cplx(1.001, 0.0))) > 900.0);
}

TEST_CASE("eval params are validated") {
    EvalParams p;
    p.em_terms = 4;
    CHECK_THROWS_AS(p.validate(), error);
    EvalParams q;
    q.em_bernoulli = 60;
    CHECK_THROWS_AS(q.validate(), error);
    EvalParams r;
    r.target_abs_tol = 0.0;
    CHECK_THROWS_AS(r.validate(), error);
}

TEST_CASE("hurwitz zeta closed forms and identities") {
    CHECK(std::abs(hurwitz_zeta(cplx(2.0, 0.0), 0.5) - 4.9348022005446793) < 1e-12);
    CHECK(rel_err(hurwitz_zeta(cplx(3.2, 0.0), 1.0), zeta(cplx(3.2, 0.0))) < 1e-12);
    cplx s(2.7, 1.3);
    cplx lhs = hurwitz_zeta(s, 0.5);
    cplx rhs = (std::pow(cplx(2.0, 0.0), s) - 1.0) * zeta(s);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("hurwitz zeta domain") {
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0, 0.0), 0.0), error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0, 0.0), 1.5), error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0, 0.0), -2.0), error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(1.0, 0.0), 0.5), error);
}

TEST_CASE("kronecker symbol values") {
    CHECK(kronecker(-4, 1) == 1);
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(5, 4) == 1);
    CHECK(kronecker(12, 5) == -1);
    CHECK(kronecker(-3, 2) == -1);
}

TEST_CASE("quadratic characters") {
    DirichletCharacter chi4 = DirichletCharacter::quadratic(-4);
    CHECK(chi4.modulus == 4);
    CHECK(chi4.parity_delta == 1);
    CHECK(chi4(1) == 1);
    CHECK(chi4(3) == -1);
    CHECK(chi4(2) == 0);
    CHECK(chi4(6) == 0);
    CHECK(chi4(5) == 1);
    CHECK(chi4(-1) == -1);

    DirichletCharacter chi5 = DirichletCharacter::quadratic(5);
    CHECK(chi5.modulus == 5);
    CHECK(chi5.parity_delta == 0);
    CHECK(chi5(1) == 1);
    CHECK(chi5(2) == -1);
    CHECK(chi5(3) == -1);
    CHECK(chi5(4) == 1);
    CHECK(chi5(5) == 0);

    CHECK_THROWS_AS(DirichletCharacter::quadratic(3), error);
}

TEST_CASE("principal characters and validation") {
    DirichletCharacter p4 = DirichletCharacter::principal(4);
    CHECK(p4.is_principal());
    CHECK(p4(3) == 1);
    CHECK(p4(2) == 0);
    CHECK_FALSE(DirichletCharacter::quadratic(-4).is_principal());

    DirichletCharacter bad;
    bad.modulus = 3;
    bad.values = {0, 1};  // wrong table length
    CHECK_THROWS_AS(bad.validate(), error);
}

TEST_CASE("dirichlet L special values") {
    DirichletCharacter chi4 = DirichletCharacter::quadratic(-4);
    // Catalan's constant
    CHECK(std::abs(dirichlet_l(chi4, cplx(2.0, 0.0)) - 0.9159655941772190) < 1e-10);
    CHECK(std::abs(dirichlet_l(chi4, cplx(1.0, 0.0)) - 0.7853981633974483) < 1e-10);

    DirichletCharacter chi5 = DirichletCharacter::quadratic(5);
    // 2 log((1+sqrt 5)/2) / sqrt 5
    CHECK(std::abs(dirichlet_l(chi5, cplx(1.0, 0.0)) - 0.4304089409640040) < 1e-10);

    DirichletCharacter p4 = DirichletCharacter::principal(4);
    CHECK(std::abs(dirichlet_l(p4, cplx(2.0, 0.0)) - 1.2337005501361698) < 1e-12);
    try {
        dirichlet_l(p4, cplx(1.0, 0.0));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::pole_at_one);
    }

    DirichletCharacter one;
    one.modulus = 1;
    one.values = {1};
    CHECK(rel_err(dirichlet_l(one, cplx(3.0, 0.0)), zeta(cplx(3.0, 0.0))) < 1e-14);
}

TEST_CASE("archimedean factors") {
    // pi^{-1} Gamma(1)
    CHECK(rel_err(q_eval(riemann_q(), cplx(2.0, 0.0)), cplx(0.3183098861837907, 0.0)) < 1e-13);
    DirichletCharacter chi4 = DirichletCharacter::quadratic(-4);
    double pi = 3.14159265358979323846;
    double want = std::pow(4.0 / pi, 0.75) * std::tgamma(0.75);
    CHECK(rel_err(q_eval(dirichlet_q(chi4), cplx(0.5, 0.0)), cplx(want, 0.0)) < 1e-12);

    QFactor bad;
    bad.k = -1.0;
    CHECK_THROWS_AS(bad.validate(), error);
    FunctionalEquation fe = riemann_fe();
    fe.sign = 2;
    CHECK_THROWS_AS(fe.validate(), error);
}

namespace {

// coarse version of the verification grid: [-2,3] x [-30,30], keeping clear of
// the real axis where the base and the gamma factors have their poles
std::vector<cplx> coarse_grid(int n_re, int n_im) {
    std::vector<cplx> pts;
    for (int i = 0; i < n_re; ++i)
        for (int j = 0; j < n_im; ++j) {
            cplx z(-2.0 + 5.0 * i / (n_re - 1), -30.0 + 60.0 * j / (n_im - 1));
            if (std::abs(z.imag()) < 0.5) continue;
            pts.push_back(z);
        }
    return pts;
}

}  // namespace

TEST_CASE("completed zeta satisfies its reflection to 1e-8") {
    LFunctionHandle f = handle_zeta();
    FunctionalEquation fe = riemann_fe();
    for (cplx z : coarse_grid(7, 7)) CHECK(fe_residual(f, fe, z) < 1e-8);
}

TEST_CASE("completed quadratic L functions satisfy their reflections") {
    for (long long d : {-4LL, 5LL}) {
        DirichletCharacter chi = DirichletCharacter::quadratic(d);
        LFunctionHandle f = handle_dirichlet(chi);
        FunctionalEquation fe = dirichlet_fe(chi);
        for (cplx z : coarse_grid(5, 5)) CHECK(fe_residual(f, fe, z) < 1e-8);
    }
}
