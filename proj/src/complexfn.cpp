#include "lambdaforge/complexfn.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>

namespace lforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;

// Lanczos g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// B_{2k} / (2k)! for k = 1..32; the Euler-Maclaurin loop uses at most 30 and
// the next entry feeds the truncation estimate.
constexpr double kB2kOverFact[32] = {
    0.083333333333333333333, -0.0013888888888888888889,
    0.000033068783068783068783, -8.2671957671957671958e-7,
    2.0876756987868098979e-8, -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13,
    8.5860620562778445641e-15, -2.174868698558061873e-16,
    5.5090028283602295152e-18, -1.3954464685812523341e-19,
    3.5347070396294674717e-21, -8.9535174270375468504e-23,
    2.2679524523376830603e-24, -5.7447906688722024453e-26,
    1.4551724756148649019e-27, -3.6859949406653101782e-29,
    9.336734257095044672e-31, -2.3650224157006299346e-32,
    5.9906717624821343047e-34, -1.5174548844682902617e-35,
    3.8437581254541882322e-37, -9.7363530726466910353e-39,
    2.4662470442006809571e-40, -6.2470767418207436931e-42,
    1.5824030244644914298e-43, -4.0082736859489359685e-45,
    1.0153075855569556312e-46, -2.5718041582418717499e-48,
    6.5144560352338149316e-50, -1.6501309906896524555e-51,
};

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

cplx lanczos_positive(cplx s) {
    // valid for Re(s) >= 0.5
    cplx z = s - 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx sin_pi(cplx z) {
    double n = std::round(z.real());
    cplx r(z.real() - n, z.imag());
    cplx v = std::sin(kPi * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

cplx gamma(cplx s) {
    if (is_nonpositive_integer(s))
        fail(errc::pole_at_nonpositive_integer, "gamma pole at s = " + std::to_string(s.real()));
    cplx result;
    if (s.real() < 0.5) {
        result = kPi / (sin_pi(s) * lanczos_positive(1.0 - s));
    } else {
        result = lanczos_positive(s);
    }
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        fail(errc::overflow, "gamma magnitude exceeds double range");
    return result;
}

namespace {

// Euler-Maclaurin core shared by zeta and hurwitz_zeta:
//   zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//              + sum_{k<=K} B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}.
// subtract_pole replaces the (s-1)^{-1} term by its finite part -log(N+a),
// used for non-principal L-values at s = 1.
cplx em_hurwitz(cplx s, double a, const EvalParams& params, bool subtract_pole) {
    params.validate();
    const int N = std::max(params.em_terms, static_cast<int>(1.3 * std::abs(s.imag())) + 8);
    const int K = params.em_bernoulli;

    cplx acc = 0.0;
    double abs_acc = 0.0;
    for (int n = 0; n < N; ++n) {
        cplx term = std::exp(-s * std::log(n + a));
        acc += term;
        abs_acc += std::abs(term);
    }
    const double na = N + a;
    const double log_na = std::log(na);
    cplx tail;
    if (subtract_pole) {
        tail = -log_na;
    } else {
        tail = std::exp((1.0 - s) * log_na) / (s - 1.0);
    }
    cplx half = 0.5 * std::exp(-s * log_na);
    acc += tail + half;
    abs_acc += std::abs(tail) + std::abs(half);

    cplx poch = s;  // (s)_{2k-1} at k = 1
    cplx npw = std::exp((-s - 1.0) * log_na);
    for (int k = 1; k <= K; ++k) {
        cplx term = kB2kOverFact[k - 1] * poch * npw;
        acc += term;
        abs_acc += std::abs(term);
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npw /= na * na;
    }
    double truncation = std::abs(kB2kOverFact[K]) * std::abs(poch) * std::abs(npw);
    double rounding = 12.0 * kEps * abs_acc;
    if (truncation + rounding > params.target_abs_tol) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "estimated error %.3e exceeds target %.3e",
                      truncation + rounding, params.target_abs_tol);
        fail(errc::accuracy_not_reached, msg);
    }
    return acc;
}

}  // namespace

cplx zeta(cplx s, const EvalParams& params) {
    if (s == cplx(1.0, 0.0)) fail(errc::pole_at_one, "zeta pole at s = 1");
    if (s.real() < 0.0) {
        // left of the strip the direct sum loses absolute accuracy faster than
        // the Bernoulli tail repays it; reflect into the convergent half
        cplx chi = std::exp(std::numbers::ln2 * s + std::log(std::numbers::pi) * (s - 1.0)) *
                   sin_pi(0.5 * s) * gamma(1.0 - s);
        return chi * em_hurwitz(1.0 - s, 1.0, params, false);
    }
    return em_hurwitz(s, 1.0, params, false);
}

cplx hurwitz_zeta(cplx s, double a, const EvalParams& params) {
    if (!(a > 0.0) || a > 1.0) fail(errc::domain, "hurwitz parameter a must lie in (0, 1]");
    if (s == cplx(1.0, 0.0)) fail(errc::pole_at_one, "hurwitz zeta pole at s = 1");
    return em_hurwitz(s, a, params, false);
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 0 || am8 == 2 || am8 == 4 || am8 == 6) return 0;
        if (am8 == 3 || am8 == 5) result = -result;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

DirichletCharacter DirichletCharacter::principal(int modulus) {
    if (modulus < 1) fail(errc::domain, "modulus must be positive");
    DirichletCharacter chi;
    chi.modulus = modulus;
    chi.values.resize(modulus);
    for (int r = 0; r < modulus; ++r)
        chi.values[r] = std::gcd(r, modulus) == 1 ? 1 : 0;
    if (modulus == 1) chi.values[0] = 1;
    chi.parity_delta = 0;
    chi.validate();
    return chi;
}

DirichletCharacter DirichletCharacter::quadratic(long long discriminant) {
    if (discriminant == 0) fail(errc::domain, "discriminant must be nonzero");
    long long m4 = ((discriminant % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1)
        fail(errc::domain, "discriminant must be 0 or 1 mod 4");
    long long d = std::llabs(discriminant);
    DirichletCharacter chi;
    chi.modulus = static_cast<int>(d);
    chi.values.resize(chi.modulus);
    for (int r = 0; r < chi.modulus; ++r)
        chi.values[r] = kronecker(discriminant, r);
    if (chi.modulus == 1) chi.values[0] = 1;
    chi.parity_delta = chi.modulus > 1 ? (1 - chi.values[chi.modulus - 1]) / 2 : 0;
    chi.validate();
    return chi;
}

int DirichletCharacter::operator()(long long n) const {
    long long r = ((n % modulus) + modulus) % modulus;
    return values[static_cast<size_t>(r)];
}

bool DirichletCharacter::is_principal() const {
    for (int r = 0; r < modulus; ++r)
        if (values[r] != (std::gcd(r, modulus) == 1 ? 1 : 0)) return false;
    return true;
}

void DirichletCharacter::validate() const {
    if (modulus < 1) fail(errc::domain, "modulus must be positive");
    if (static_cast<int>(values.size()) != modulus)
        fail(errc::domain, "character table length must equal modulus");
    for (int r = 0; r < modulus; ++r) {
        if (values[r] < -1 || values[r] > 1)
            fail(errc::domain, "character values must lie in {-1, 0, 1}");
        bool coprime = modulus == 1 || std::gcd(r, modulus) == 1;
        if ((values[r] == 0) == coprime)
            fail(errc::domain, "character must vanish exactly on non-units");
    }
    for (int r = 0; r < modulus; ++r)
        for (int t = 0; t < modulus; ++t)
            if (values[(r * t) % modulus] != values[r] * values[t])
                fail(errc::domain, "character table not multiplicative");
    if (modulus > 1 && parity_delta != (1 - values[modulus - 1]) / 2)
        fail(errc::domain, "parity_delta inconsistent with chi(-1)");
}

cplx dirichlet_l(const DirichletCharacter& chi, cplx s, const EvalParams& params) {
    chi.validate();
    bool principal = chi.is_principal();
    if (principal && s == cplx(1.0, 0.0)) fail(errc::pole_at_one, "principal L pole at s = 1");
    const int d = chi.modulus;
    if (d == 1) return zeta(s, params);
    // L(s, chi) = d^{-s} sum_r chi(r) zeta(s, r/d); at s = 1 for non-principal
    // characters the 1/(s-1) parts cancel (sum chi(r) = 0), so the finite
    // parts are summed instead.
    bool at_one = (!principal && s == cplx(1.0, 0.0));
    cplx acc = 0.0;
    for (int r = 1; r <= d; ++r) {
        int v = chi.values[r % d];
        if (v == 0) continue;
        cplx term = em_hurwitz(s, static_cast<double>(r) / d, params, at_one);
        acc += static_cast<double>(v) * term;
    }
    return std::exp(-s * std::log(static_cast<double>(d))) * acc;
}

void QFactor::validate() const {
    if (!(k > 0.0)) fail(errc::domain, "QFactor.k must be positive");
    if (!(prefactor > 0.0)) fail(errc::domain, "QFactor.prefactor must be positive");
    for (const auto& f : factors) {
        if (!(f.lambda > 0.0)) fail(errc::domain, "gamma factor lambda must be positive");
        if (f.mu.real() < 0.0) fail(errc::domain, "gamma factor needs Re(mu) >= 0");
    }
}

void FunctionalEquation::validate() const {
    q.validate();
    if (sign != 1 && sign != -1) fail(errc::domain, "functional equation sign must be +1 or -1");
}

cplx q_eval(const QFactor& q, cplx s) {
    q.validate();
    cplx result = q.prefactor * std::exp(s * std::log(q.k));
    for (const auto& f : q.factors) result *= gamma(f.lambda * s + f.mu);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        fail(errc::overflow, "q_eval magnitude exceeds double range");
    return result;
}

QFactor riemann_q() {
    QFactor q;
    q.k = 0.5641895835477563;  // pi^{-1/2}
    q.factors = {{0.5, cplx(0.0, 0.0)}};
    return q;
}

FunctionalEquation riemann_fe() {
    FunctionalEquation eq;
    eq.q = riemann_q();
    eq.sign = 1;
    eq.conjugated = false;
    return eq;
}

QFactor dirichlet_q(const DirichletCharacter& chi) {
    chi.validate();
    QFactor q;
    double d_over_pi = chi.modulus / kPi;
    q.k = std::sqrt(d_over_pi);
    q.prefactor = std::pow(d_over_pi, chi.parity_delta / 2.0);
    q.factors = {{0.5, cplx(chi.parity_delta / 2.0, 0.0)}};
    return q;
}

FunctionalEquation dirichlet_fe(const DirichletCharacter& chi) {
    FunctionalEquation eq;
    eq.q = dirichlet_q(chi);
    eq.sign = 1;  // W(chi) = 1 for the shipped real primitive characters
    eq.conjugated = true;
    return eq;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::pole_at_nonpositive_integer: return "PoleAtNonPositiveInteger";
        case errc::pole_at_one: return "PoleAtOne";
        case errc::overflow: return "Overflow";
        case errc::accuracy_not_reached: return "AccuracyNotReached";
        case errc::domain: return "DomainError";
        case errc::point_inside_disc: return "PointInsideDisc";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::infeasible_geometry: return "InfeasibleGeometry";
        case errc::budget_unattainable: return "BudgetUnattainable";
        case errc::pole_on_boundary: return "PoleOnBoundary";
        case errc::uncancelled_pole: return "UncancelledPole";
        case errc::branch_tracking_failure: return "BranchTrackingFailure";
        case errc::fit_residual_too_large: return "FitResidualTooLarge";
        case errc::zero_on_boundary: return "ZeroOnBoundary";
        case errc::sampling_budget_exceeded: return "SamplingBudgetExceeded";
        case errc::no_convergence: return "NoConvergence";
        case errc::symmetry_violation: return "SymmetryViolation";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::ill_conditioned: return "IllConditioned";
        case errc::config: return "ConfigError";
        case errc::io: return "IoError";
    }
    return "UnknownError";
}

}  // namespace lforge
