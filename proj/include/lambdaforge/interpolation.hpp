#pragma once

#include <utility>
#include <vector>

#include "lambdaforge/symmetry.hpp"

namespace lforge {

struct DiscRegion {
    cplx center{0.5, 0.0};
    double radius = 1.0;
    void validate() const {
        if (!(radius > 0.0)) fail(errc::domain, "disc radius must be positive");
    }
    bool contains(cplx z) const { return std::abs(z - center) <= radius; }
};

struct InterpolationPoint {
    cplx b{0.0, 0.0};
    int multiplicity = 1;
};

struct InterpolationSet {
    std::vector<InterpolationPoint> points;
    // distinct points; multiset symmetric under both reflections with
    // matching multiplicities
    void validate() const;
    static InterpolationSet from_orbit(cplx seed, int multiplicity);
    bool empty() const { return points.empty(); }
};

struct PlantedZeroSet {
    std::vector<cplx> seeds;
    std::vector<cplx> closure;  // union of orbits, deduplicated
    static PlantedZeroSet from_seeds(const std::vector<cplx>& seeds);
    // closure must avoid B and the closed disc k
    void validate(const InterpolationSet& b, const DiscRegion& k) const;
    // the off-axis requirement of the counterexample pipeline; not imposed on
    // plain approximation runs
    void validate_off_axis() const;
};

// w(z) = prod (z-b)^{m_b}; the constant 1 for an empty set
Polynomial vanishing_poly(const InterpolationSet& b);

// phi_a(z) = (w(z)/w(a)) * ((z-c)/(a-c))^n
Polynomial bump_poly(cplx a, const Polynomial& w, const DiscRegion& k, int n);

// boundary-sampled sup with a Lipschitz certificate; first = estimate,
// second = certified upper bound for the sup over the closed disc
std::pair<double, double> sup_norm_disc(const Polynomial& p, const DiscRegion& k, int m = 4096);

struct BumpBudget {
    int n_start = 8;
    int n_step = 8;
    int n_cap = 4096;
    int degree_cap = 300;
    int boundary_samples = 4096;
};

// p = prod_{a in closure} (1 - phi_a) with a uniform exponent n chosen so the
// certified sup of |p-1| on k is below eps1
Polynomial bump_product(const std::vector<cplx>& points, const InterpolationSet& b,
                        const DiscRegion& k, double eps1, const BumpBudget& budget = {});

Polynomial constrained_one_approximant(const PlantedZeroSet& a, const InterpolationSet& b,
                                       const DiscRegion& k, double eps1,
                                       const BumpBudget& budget = {});

}  // namespace lforge
