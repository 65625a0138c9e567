#include "lambdaforge/perturb.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lambdaforge/zeros.hpp"

namespace lforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool handles_share_structure(const LFunctionHandle& f, const LFunctionHandle& g) {
    if (f.kind != g.kind) return false;
    if (f.kind == BaseKind::dirichlet &&
        (f.chi.modulus != g.chi.modulus || f.chi.values != g.chi.values))
        return false;
    if (f.kind == BaseKind::synthetic_poly && !(f.synthetic == g.synthetic)) return false;
    if (f.exp_shift_centered.has_value() != g.exp_shift_centered.has_value()) return false;
    if (f.exp_shift_centered && !(*f.exp_shift_centered == *g.exp_shift_centered)) return false;
    if (f.divisor.has_value() != g.divisor.has_value()) return false;
    if (f.divisor && !(*f.divisor == *g.divisor)) return false;
    return true;
}

// attached polynomials live in powers of u = z - 1/2; both reflections act
// coefficient-locally there (z -> 1-z is u -> -u, conjugation conjugates)
Polynomial centered_conj(const Polynomial& p) {
    std::vector<cplx> c = p.coeffs();
    for (cplx& v : c) v = std::conj(v);
    return Polynomial(std::move(c));
}

Polynomial centered_flip(const Polynomial& p) {
    std::vector<cplx> c = p.coeffs();
    for (size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
    return Polynomial(std::move(c));
}

// sampled boundary max plus a Lipschitz margin, for a polynomial stored in
// the centered basis; same bound as sup_norm_disc with the argument shifted
std::pair<double, double> centered_sup_disc(const Polynomial& q, const DiscRegion& k, int m) {
    double estimate = 0.0;
    for (int j = 0; j < m; ++j) {
        double th = kTwoPi * j / m;
        cplx z = k.center + k.radius * cplx(std::cos(th), std::sin(th));
        estimate = std::max(estimate, std::abs(q.eval(z - 0.5)));
    }
    Polynomial at_center = q.taylor_shift(k.center - 0.5);
    double deriv_bound = 0.0;
    double rpow = 1.0;
    const auto& c = at_center.coeffs();
    for (size_t j = 1; j < c.size(); ++j) {
        deriv_bound += static_cast<double>(j) * std::abs(c[j]) * rpow;
        rpow *= k.radius;
    }
    return {estimate, estimate + (std::numbers::pi * k.radius / m) * deriv_bound};
}

}  // namespace

EpsilonBudget epsilon_budget(const LFunctionHandle& f, const DiscRegion& k, double eps,
                             int samples) {
    k.validate();
    if (!(eps > 0.0)) fail(errc::domain, "eps must be positive");
    if (samples < 64) fail(errc::domain, "boundary sampling needs at least 64 points");
    for (cplx p : f.poles())
        if (std::abs(std::abs(p - k.center) - k.radius) < 1e-12)
            fail(errc::pole_on_boundary, "declared pole lies on the disc boundary");
    double peak = 0.0;
    for (int j = 0; j < samples; ++j) {
        double th = kTwoPi * j / samples;
        cplx z = k.center + k.radius * cplx(std::cos(th), std::sin(th));
        double v;
        try {
            v = std::abs(f.eval(z));
        } catch (const error& e) {
            if (e.code() == errc::pole_at_one || e.code() == errc::pole_at_nonpositive_integer)
                fail(errc::pole_on_boundary, "boundary sample hit a pole");
            throw;
        }
        if (v > 1e12) fail(errc::pole_on_boundary, "divergent boundary sample");
        peak = std::max(peak, v);
    }
    EpsilonBudget budget;
    budget.m_boundary = 1.05 * peak;
    budget.eps0 = eps / budget.m_boundary;
    return budget;
}

NuBuild build_nu(const PlantedZeroSet& a, const InterpolationSet& b, const DiscRegion& k,
                 double eps0, const BumpBudget& budget) {
    if (!(eps0 > 0.0) || eps0 >= 0.5) fail(errc::domain, "eps0 must lie in (0, 1/2)");
    b.validate();
    a.validate(b, k);

    // one canonical representative per orbit; the four-fold product then
    // revisits the remaining orbit points exactly once each, keeping planted
    // zeros simple
    std::vector<cplx> reps;
    for (cplx seed : a.closure) {
        cplx rep(std::max(seed.real(), 1.0 - seed.real()), std::abs(seed.imag()));
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }

    // the product is assembled and stored in powers of u = z - 1/2, the basis
    // the handle evaluates attachments in. Expanded in plain powers of z the
    // same polynomial carries coefficient sums near 1e8 for a desk-scale
    // configuration, and coefficient storage rounding alone would swamp the
    // planted-zero residuals; centered, the coefficients stay O(1)
    Polynomial w_c = vanishing_poly(b).taylor_shift(cplx(0.5, 0.0));
    const Polynomial shift_root({cplx(0.5, 0.0) - k.center, cplx(1.0, 0.0)});
    const Polynomial one = Polynomial::constant(cplx(1.0, 0.0));

    NuBuild result;
    double eps1 = eps0 / 8.0;
    bool done = false;
    for (int attempt = 0; attempt < 24 && !done; ++attempt, eps1 /= 2.0) {
        Polynomial p;
        bool p_found = false;
        for (int n_try = budget.n_start; n_try <= budget.n_cap && !p_found;
             n_try += budget.n_step) {
            // odd exponent; an even one would plant an unwanted second zero
            // at 1 - a whenever w is reflection symmetric
            int n = n_try | 1;
            int degree = static_cast<int>(reps.size()) * (n + w_c.degree());
            if (degree > budget.degree_cap) break;
            Polynomial trial = one;
            for (cplx rep : reps) {
                Polynomial num = w_c;
                for (int j = 0; j < n; ++j) num = num * shift_root;
                cplx d = num.eval(rep - 0.5);
                if (d == cplx(0.0, 0.0))
                    fail(errc::zero_denominator, "bump point is a root of w");
                std::vector<cplx> scaled = num.coeffs();
                for (cplx& v : scaled) v /= d;
                trial = trial * (one - Polynomial(std::move(scaled)));
            }
            auto [est, cert] = centered_sup_disc(trial - one, k, budget.boundary_samples);
            (void)est;
            if (cert < eps1) {
                p = trial;
                p_found = true;
            }
        }
        if (!p_found)
            fail(errc::budget_unattainable, "bump exponent cap reached without meeting eps1");
        Polynomial pc = centered_conj(p);
        Polynomial nu = p * pc * centered_flip(p) * centered_flip(pc);
        auto [est, cert] = centered_sup_disc(nu - one, k, budget.boundary_samples);
        if (cert < eps0) {
            result.p = p;
            result.nu = nu;
            result.eps1_used = eps1;
            result.sup_estimate = est;
            result.sup_certified = cert;
            done = true;
        }
    }
    if (!done) fail(errc::budget_unattainable, "four-fold sup bound did not reach eps0");

    for (cplx point : a.closure)
        result.planted_zero_residuals.push_back(std::abs(result.nu.eval(point - 0.5)));

    Polynomial cdev = centered_conj(result.nu) - result.nu;
    Polynomial pdev = centered_flip(result.nu) - result.nu;
    double worst = 0.0;
    for (cplx c : cdev.coeffs()) worst = std::max(worst, std::abs(c));
    for (cplx c : pdev.coeffs()) worst = std::max(worst, std::abs(c));
    result.coeff_symmetry_residual = worst;

    Polynomial nu_minus_1 = result.nu - one;
    for (const auto& pt : b.points) {
        auto ders = nu_minus_1.derivatives_at(pt.b - 0.5, pt.multiplicity - 1);
        for (cplx d : ders) result.interpolation_residuals.push_back(std::abs(d));
    }
    return result;
}

LFunctionHandle perturb(const LFunctionHandle& f, const Polynomial& nu, double pole_tol) {
    if (nu.is_zero()) fail(errc::domain, "multiplier must be nonzero");
    for (cplx pole : f.poles()) {
        double residual = std::abs(nu.eval(pole - 0.5) - 1.0);
        if (residual > pole_tol)
            fail(errc::uncancelled_pole,
                 "nu - 1 does not vanish at a declared pole; residual " +
                     std::to_string(residual));
    }
    LFunctionHandle g = f;
    g.multiplier = f.multiplier ? (*f.multiplier * nu) : nu;
    g.simplify();
    return g;
}

namespace {

// continuous-branch boundary log: returns log|f_o| + i*(unwrapped arg) at m
// equispaced points of the circle, refining between samples until every phase
// step is below pi/2. f_o is stored in the centered basis like any attachment
std::vector<cplx> tracked_log_on_circle(const Polynomial& f_o, const DiscRegion& circle, int m,
                                        int* extra_used) {
    std::vector<cplx> vals(m);
    for (int j = 0; j < m; ++j) {
        double th = kTwoPi * j / m;
        cplx z = circle.center + circle.radius * cplx(std::cos(th), std::sin(th));
        vals[j] = f_o.eval(z - 0.5);
        if (vals[j] == cplx(0.0, 0.0))
            fail(errc::branch_tracking_failure, "f_o vanishes at a boundary sample");
    }
    auto probe = [&](double tau) {
        double th = kTwoPi * tau;
        cplx z = circle.center + circle.radius * cplx(std::cos(th), std::sin(th));
        return f_o.eval(z - 0.5);
    };
    std::vector<cplx> out(m);
    double phase = std::arg(vals[0]);
    double total = 0.0;
    out[0] = cplx(std::log(std::abs(vals[0])), phase);
    for (int j = 0; j < m; ++j) {
        // walk the segment j -> j+1, subdividing while a step reaches pi/2
        double ta = static_cast<double>(j) / m;
        double tb = static_cast<double>(j + 1) / m;
        cplx va = vals[j];
        cplx vb = vals[(j + 1) % m];
        double advanced = 0.0;
        struct Seg {
            double ta, tb;
            cplx va, vb;
        };
        std::vector<Seg> stack{{ta, tb, va, vb}};
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            double step = std::arg(s.vb / s.va);
            if (std::abs(step) < std::numbers::pi / 2.0) {
                advanced += step;
                continue;
            }
            if (s.tb - s.ta < 1e-12)
                fail(errc::branch_tracking_failure,
                     "phase step cannot be pinned below pi/2; zero too close to the path");
            double tm = 0.5 * (s.ta + s.tb);
            cplx vm = probe(tm);
            if (extra_used) ++*extra_used;
            if (vm == cplx(0.0, 0.0))
                fail(errc::branch_tracking_failure, "f_o vanishes on the sampling path");
            // rightmost segment first so the stack pops in path order
            stack.push_back({tm, s.tb, vm, s.vb});
            stack.push_back({s.ta, tm, s.va, vm});
        }
        phase += advanced;
        total += advanced;
        if (j + 1 < m) out[j + 1] = cplx(std::log(std::abs(vals[j + 1])), phase);
    }
    if (std::abs(total) > std::numbers::pi)
        fail(errc::branch_tracking_failure,
             "f_o has nonzero winding around the sampling circle; no closed branch");
    return out;
}

}  // namespace

RestoreRecord restore(const LFunctionHandle& g_minus, const Polynomial& f_o, const DiscRegion& k,
                      const std::vector<DiscRegion>& excluded, double eps,
                      const RestoreOptions& options) {
    k.validate();
    if (!(eps > 0.0)) fail(errc::domain, "eps must be positive");
    if (f_o.is_zero()) fail(errc::domain, "f_o must be nonzero");
    if (options.fit_degree < 0 || options.boundary_samples < 64)
        fail(errc::domain, "restore needs fit_degree >= 0 and >= 64 boundary samples");

    RestoreRecord record;
    record.g_minus = g_minus;
    record.f_o = f_o;
    record.k = k;
    record.excluded = excluded;

    // sample set: disc boundary always; an excluded-disc circle only when
    // f_o winds zero times around it, otherwise log f_o has no closed branch
    // there
    struct SampleRing {
        DiscRegion circle;
        int count;
    };
    std::vector<SampleRing> rings{{k, options.boundary_samples}};
    for (const DiscRegion& ex : excluded) {
        ex.validate();
        int w = winding_count([&](cplx z) { return f_o.eval(z - 0.5); }, ex, 64);
        if (w == 0) rings.push_back({ex, std::max(64, options.boundary_samples / 4)});
    }

    std::vector<cplx> us;
    std::vector<cplx> ys;
    int extra = 0;
    for (const auto& ring : rings) {
        auto logs = tracked_log_on_circle(f_o, ring.circle, ring.count, &extra);
        for (int j = 0; j < ring.count; ++j) {
            double th = kTwoPi * j / ring.count;
            cplx z = ring.circle.center + ring.circle.radius * cplx(std::cos(th), std::sin(th));
            us.push_back(z - 0.5);
            ys.push_back(logs[j]);
        }
    }
    record.fit_samples = static_cast<int>(us.size()) + extra;

    const int cols = options.fit_degree + 1;
    Eigen::MatrixXcd design(us.size(), cols);
    Eigen::VectorXcd rhs(us.size());
    for (size_t j = 0; j < us.size(); ++j) {
        cplx pw = 1.0;
        for (int c = 0; c < cols; ++c) {
            design(j, c) = pw;
            pw *= us[j];
        }
        rhs(j) = ys[j];
    }
    Eigen::VectorXcd coeff = design.colPivHouseholderQr().solve(rhs);

    // point symmetry drops odd powers of (z - 1/2); real symmetry makes the
    // surviving coefficients real
    std::vector<cplx> sym(cols, cplx(0.0, 0.0));
    double drop = 0.0;
    for (int c = 0; c < cols; ++c) {
        cplx v = coeff(c);
        if (c % 2 == 1) {
            drop = std::max(drop, std::abs(v));
        } else {
            drop = std::max(drop, std::abs(v.imag()));
            sym[c] = cplx(v.real(), 0.0);
        }
    }
    record.symmetrization_drop = drop;
    record.h_centered = Polynomial(std::move(sym));

    double residual = 0.0;
    for (size_t j = 0; j < us.size(); ++j)
        residual = std::max(residual, std::abs(record.h_centered.eval(us[j]) - ys[j]));
    record.fit_residual = residual;
    if (residual > options.fit_tol)
        fail(errc::fit_residual_too_large,
             "symmetrized log fit residual " + std::to_string(residual) + " exceeds " +
                 std::to_string(options.fit_tol));

    LFunctionHandle g_plus = g_minus;
    if (g_plus.multiplier && *g_plus.multiplier == f_o) {
        g_plus.multiplier.reset();  // exact cancellation of f_o
    } else {
        g_plus.divisor = g_plus.divisor ? (*g_plus.divisor * f_o) : f_o;
    }
    if (g_plus.exp_shift_centered)
        g_plus.exp_shift_centered = *g_plus.exp_shift_centered + record.h_centered;
    else
        g_plus.exp_shift_centered = record.h_centered;
    g_plus.simplify();
    record.g_plus = g_plus;

    // sampled closeness on the disc minus exclusions, skipping declared poles
    double closeness = 0.0;
    int used = 0;
    for (int i = 1; i <= options.interior_rings; ++i) {
        double r = k.radius * i / options.interior_rings;
        for (int j = 0; j < options.interior_angles; ++j) {
            double th = kTwoPi * j / options.interior_angles;
            cplx z = k.center + r * cplx(std::cos(th), std::sin(th));
            bool skip = false;
            for (const DiscRegion& ex : excluded)
                if (ex.contains(z)) skip = true;
            for (cplx pole : g_minus.poles())
                if (std::abs(z - pole) < 1e-3) skip = true;
            if (skip) continue;
            closeness = std::max(closeness, std::abs(g_plus.eval(z) - g_minus.eval(z)));
            ++used;
        }
    }
    record.interior_samples = used;
    record.closeness_max = closeness;
    if (closeness >= eps)
        fail(errc::fit_residual_too_large,
             "restored function drifted beyond eps on the working disc");
    return record;
}

std::pair<LFunctionHandle, LFunctionHandle> product_decomposition(const RestoreRecord& record) {
    LFunctionHandle b;
    b.kind = BaseKind::constant_one;
    b.multiplier = record.f_o;
    b.exp_shift_centered = record.h_centered * cplx(-1.0, 0.0);
    return {b, record.g_plus};
}

PathPoint path(const LFunctionHandle& f, const LFunctionHandle& g, double t) {
    if (!(t >= 0.0 && t <= 1.0)) fail(errc::domain, "path parameter must lie in [0,1]");
    if (t == 0.0) return {0.0, f};
    if (t == 1.0) return {1.0, g};
    if (!handles_share_structure(f, g))
        fail(errc::domain, "path endpoints must share base and pole structure");
    const Polynomial one = Polynomial::constant(cplx(1.0, 0.0));
    Polynomial mf = f.multiplier ? *f.multiplier : one;
    Polynomial mg = g.multiplier ? *g.multiplier : one;
    PathPoint point;
    point.t = t;
    point.handle = f;
    point.handle.multiplier = mf * cplx(1.0 - t, 0.0) + mg * cplx(t, 0.0);
    return point;
}

}  // namespace lforge
