#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lambdaforge/handle.hpp"

namespace lforge {

struct Certificate {
    double m_on_boundary = 0.0;
    double eps_budget = 0.0;  // eps0 = eps / m_on_boundary
    double sup_nu_minus_1 = 0.0;
    std::vector<double> planted_zero_residuals;
    double symmetry_residual = 0.0;
    double fe_residual_max = 0.0;
    double closeness_max = 0.0;
    int boundary_samples = 0;
    int interior_samples = 0;
    std::vector<std::pair<std::string, bool>> clauses;
    bool pass() const {
        for (const auto& c : clauses)
            if (!c.second) return false;
        return true;
    }
};

struct EpsilonBudget {
    double m_boundary = 0.0;
    double eps0 = 0.0;
};

// sampled max of |f| on the disc boundary with a 1.05 safety factor;
// eps0 = eps / m_boundary
EpsilonBudget epsilon_budget(const LFunctionHandle& f, const DiscRegion& k, double eps,
                             int samples = 8192);

struct NuBuild {
    // both polynomials are stored in powers of (z - 1/2), ready to attach to
    // a handle; evaluate at z - 0.5 when probing them directly
    Polynomial nu;
    Polynomial p;  // the one-approximant before the four-fold product
    double eps1_used = 0.0;
    double sup_estimate = 0.0;
    double sup_certified = 0.0;
    std::vector<double> planted_zero_residuals;
    double coeff_symmetry_residual = 0.0;
    std::vector<double> interpolation_residuals;
};

// nu is the four-fold symmetrization of p, built from one representative per
// planted orbit, so each orbit point ends up a simple zero of nu; eps1 starts
// at eps0/8 and halves until the certified sup of |nu-1| on k is below eps0
NuBuild build_nu(const PlantedZeroSet& a, const InterpolationSet& b, const DiscRegion& k,
                 double eps0, const BumpBudget& budget = {});

// attaches nu as a multiplier after checking that nu-1 vanishes at every
// declared pole of f
LFunctionHandle perturb(const LFunctionHandle& f, const Polynomial& nu, double pole_tol = 1e-8);

struct RestoreOptions {
    int fit_degree = 40;
    int boundary_samples = 1024;
    double fit_tol = 1e-6;
    int interior_rings = 24;
    int interior_angles = 48;
};

struct RestoreRecord {
    LFunctionHandle g_minus;
    LFunctionHandle g_plus;
    Polynomial f_o;         // centered like any attachment
    Polynomial h_centered;  // h in powers of (z - 1/2), real even coefficients
    DiscRegion k;
    std::vector<DiscRegion> excluded;
    double fit_residual = 0.0;
    double symmetrization_drop = 0.0;
    double closeness_max = 0.0;
    int fit_samples = 0;
    int interior_samples = 0;
};

// h approximates a continuous branch of log f_o on the disc boundary;
// excluded-disc circles join the sample set only when f_o has winding zero
// there (a closed-loop branch exists); g_plus divides f_o back out, exactly
// when f_o is the attached multiplier
RestoreRecord restore(const LFunctionHandle& g_minus, const Polynomial& f_o, const DiscRegion& k,
                      const std::vector<DiscRegion>& excluded, double eps,
                      const RestoreOptions& options = {});

// b = f_o * e^{-h}, zeta_plus = g_plus; b * zeta_plus reproduces g_minus
std::pair<LFunctionHandle, LFunctionHandle> product_decomposition(const RestoreRecord& record);

struct PathPoint {
    double t = 0.0;
    LFunctionHandle handle;
};

// affine combination (1-t) f + t g, realized on the multipliers of two
// handles sharing base and pole structure; endpoints are returned verbatim
PathPoint path(const LFunctionHandle& f, const LFunctionHandle& g, double t);

}  // namespace lforge
