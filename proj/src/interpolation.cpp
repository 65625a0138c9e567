#include "lambdaforge/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lforge {

namespace {

bool multiset_member(const std::vector<InterpolationPoint>& pts, cplx b, int m) {
    for (const auto& p : pts)
        if (p.b == b && p.multiplicity == m) return true;
    return false;
}

}  // namespace

void InterpolationSet::validate() const {
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].multiplicity < 1)
            fail(errc::domain, "interpolation multiplicity must be positive");
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].b == points[j].b)
                fail(errc::domain, "interpolation points must be distinct");
    }
    for (const auto& p : points) {
        // symmetry closure with matching multiplicities, exact on components
        if (!multiset_member(points, 1.0 - p.b, p.multiplicity) ||
            !multiset_member(points, std::conj(p.b), p.multiplicity))
            fail(errc::domain, "interpolation set must be closed under both reflections");
    }
}

InterpolationSet InterpolationSet::from_orbit(cplx seed, int multiplicity) {
    InterpolationSet s;
    for (cplx p : orbit(seed).points) s.points.push_back({p, multiplicity});
    s.validate();
    return s;
}

PlantedZeroSet PlantedZeroSet::from_seeds(const std::vector<cplx>& seeds) {
    PlantedZeroSet a;
    a.seeds = seeds;
    for (cplx s : seeds)
        for (cplx p : orbit(s).points)
            if (std::find(a.closure.begin(), a.closure.end(), p) == a.closure.end())
                a.closure.push_back(p);
    return a;
}

void PlantedZeroSet::validate(const InterpolationSet& b, const DiscRegion& k) const {
    for (cplx p : closure) {
        for (const auto& q : b.points)
            if (q.b == p) fail(errc::domain, "planted zero collides with interpolation point");
        if (std::abs(p - k.center) <= k.radius)
            fail(errc::infeasible_geometry, "planted zero inside or on the working disc");
    }
}

void PlantedZeroSet::validate_off_axis() const {
    for (cplx p : closure) {
        if (p.real() == 0.5) fail(errc::domain, "planted zero on the critical axis");
        if (p.imag() == 0.0) fail(errc::domain, "planted zero on the real axis");
    }
}

Polynomial vanishing_poly(const InterpolationSet& b) {
    b.validate();
    std::vector<cplx> roots;
    for (const auto& p : b.points)
        for (int j = 0; j < p.multiplicity; ++j) roots.push_back(p.b);
    return Polynomial::from_roots(roots);
}

Polynomial bump_poly(cplx a, const Polynomial& w, const DiscRegion& k, int n) {
    k.validate();
    if (n < 1) fail(errc::domain, "bump exponent must be positive");
    double dist = std::abs(a - k.center);
    if (dist <= k.radius) fail(errc::point_inside_disc, "bump point not outside the disc");
    cplx wa = w.eval(a);
    if (wa == cplx(0.0, 0.0)) fail(errc::zero_denominator, "bump point is a root of w");
    // ((z - c)/(a - c))^n
    Polynomial core = Polynomial({-k.center, cplx(1.0, 0.0)});
    Polynomial pw = Polynomial::constant(cplx(1.0, 0.0));
    for (int j = 0; j < n; ++j) pw = pw * core;
    cplx scale = 1.0 / (wa * std::pow(a - k.center, static_cast<double>(n)));
    return (w * pw) * scale;
}

std::pair<double, double> sup_norm_disc(const Polynomial& p, const DiscRegion& k, int m) {
    k.validate();
    if (m < 64) fail(errc::domain, "sup_norm_disc needs at least 64 boundary samples");
    double estimate = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < m; ++j) {
        double th = two_pi * j / m;
        cplx z = k.center + k.radius * cplx(std::cos(th), std::sin(th));
        estimate = std::max(estimate, std::abs(p.eval(z)));
    }
    // Lipschitz correction: between adjacent samples the boundary arc has
    // length 2*pi*r/m, so the sup can exceed the sampled max by at most half
    // that arc times a bound for |p'| on the circle. The derivative bound
    // comes from coefficient sums in the disc-centered basis; the plain
    // z-basis sum can overestimate by orders of magnitude when the center is
    // away from the origin.
    Polynomial centered = p.taylor_shift(k.center);
    double deriv_bound = 0.0;
    double rpow = 1.0;
    const auto& c = centered.coeffs();
    for (size_t j = 1; j < c.size(); ++j) {
        deriv_bound += static_cast<double>(j) * std::abs(c[j]) * rpow;
        rpow *= k.radius;
    }
    double certified = estimate + (std::numbers::pi * k.radius / m) * deriv_bound;
    return {estimate, certified};
}

Polynomial bump_product(const std::vector<cplx>& points, const InterpolationSet& b,
                        const DiscRegion& k, double eps1, const BumpBudget& budget) {
    if (!(eps1 > 0.0) || eps1 >= 1.0) fail(errc::domain, "eps1 must lie in (0,1)");
    if (points.empty()) return Polynomial::constant(cplx(1.0, 0.0));
    for (cplx a : points)
        if (std::abs(a - k.center) <= k.radius)
            fail(errc::infeasible_geometry, "bump point inside or on the disc boundary");
    Polynomial w = vanishing_poly(b);
    const Polynomial one = Polynomial::constant(cplx(1.0, 0.0));
    for (int n_try = budget.n_start; n_try <= budget.n_cap; n_try += budget.n_step) {
        // an even exponent would make phi_a(1-a) = 1 exactly whenever w is
        // reflection symmetric, planting an unwanted second zero at 1-a
        int n = n_try | 1;
        int degree = static_cast<int>(points.size()) * (n + w.degree());
        if (degree > budget.degree_cap)
            fail(errc::budget_unattainable,
                 "bump product degree " + std::to_string(degree) + " exceeds cap " +
                     std::to_string(budget.degree_cap));
        Polynomial p = one;
        for (cplx a : points) p = p * (one - bump_poly(a, w, k, n));
        auto [est, cert] = sup_norm_disc(p - one, k, budget.boundary_samples);
        (void)est;
        if (cert < eps1) return p;
    }
    fail(errc::budget_unattainable, "bump exponent cap reached without meeting eps1");
}

Polynomial constrained_one_approximant(const PlantedZeroSet& a, const InterpolationSet& b,
                                       const DiscRegion& k, double eps1,
                                       const BumpBudget& budget) {
    b.validate();
    a.validate(b, k);
    return bump_product(a.closure, b, k, eps1, budget);
}

}  // namespace lforge
