#pragma once

#include <complex>
#include <vector>

#include "lambdaforge/errors.hpp"

namespace lforge {

using cplx = std::complex<double>;

// Euler-Maclaurin controls for zeta / hurwitz_zeta.  em_terms is the direct-sum
// length (scaled up automatically with |Im s|), em_bernoulli the number of
// B_{2k} correction terms.  Evaluation throws accuracy_not_reached when the
// truncation-plus-rounding estimate exceeds target_abs_tol.
struct EvalParams {
    int em_terms = 64;
    int em_bernoulli = 12;
    double target_abs_tol = 1e-9;

    void validate() const {
        if (em_terms < 8) fail(errc::domain, "em_terms must be >= 8");
        if (em_bernoulli < 1 || em_bernoulli > 30)
            fail(errc::domain, "em_bernoulli must be in [1, 30]");
        if (!(target_abs_tol > 0)) fail(errc::domain, "target_abs_tol must be positive");
    }
};

struct GammaFactor {
    double lambda = 0.5;  // > 0
    cplx mu{0.0, 0.0};    // Re >= 0
};

// Archimedean factor Q(s) = prefactor * k^s * prod_j Gamma(lambda_j*s + mu_j).
// The prefactor carries constants like (d/pi)^{delta/2} that fall outside the
// k^s form; it cancels in the functional equation.
struct QFactor {
    double k = 1.0;
    double prefactor = 1.0;
    std::vector<GammaFactor> factors;

    void validate() const;
};

struct FunctionalEquation {
    QFactor q;
    int sign = 1;             // +1 or -1
    bool conjugated = false;  // true: Lambda(s) = sign * conj(Lambda(1 - conj s))

    void validate() const;
};

// Real Dirichlet character given by its value table on residues mod d.
struct DirichletCharacter {
    int modulus = 1;
    std::vector<int> values;  // values[r] in {-1, 0, +1}, r = 0..d-1
    int parity_delta = 0;     // (1 - chi(-1)) / 2

    static DirichletCharacter principal(int modulus);
    // chi_D(n) = Kronecker symbol (D|n); D a fundamental discriminant
    // (D = -4 gives the odd character mod 4).
    static DirichletCharacter quadratic(long long discriminant);

    int operator()(long long n) const;
    bool is_principal() const;
    void validate() const;
};

// Kronecker symbol (a|n), the standard extension of Jacobi.
int kronecker(long long a, long long n);

// sin(pi z) with exact argument reduction of the real part.
cplx sin_pi(cplx z);

// Lanczos (g=7, 9 coefficients) with reflection for Re(s) < 1/2.
// Relative error <= 1e-12 for |s| <= 50.
cplx gamma(cplx s);

cplx zeta(cplx s, const EvalParams& params = {});
cplx hurwitz_zeta(cplx s, double a, const EvalParams& params = {});
cplx dirichlet_l(const DirichletCharacter& chi, cplx s, const EvalParams& params = {});

cplx q_eval(const QFactor& q, cplx s);

// Completed-zeta data: Q(s) = pi^{-s/2} Gamma(s/2), sign +1.
QFactor riemann_q();
FunctionalEquation riemann_fe();

// Q(s) = (d/pi)^{(s+delta)/2} Gamma((s+delta)/2), W(chi) = 1 for the shipped
// real primitive characters, stated in conjugate-reflection form.
QFactor dirichlet_q(const DirichletCharacter& chi);
FunctionalEquation dirichlet_fe(const DirichletCharacter& chi);

}  // namespace lforge
