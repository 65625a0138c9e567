#include "lambdaforge/zeros.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace lforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSampleBudget = 1 << 20;

struct BoundaryTracker {
    const std::function<cplx(cplx)>& f;
    std::function<cplx(double)> path;  // tau in [0,1) -> boundary point
    int used = 0;
    double total_phase = 0.0;

    cplx probe(double tau) {
        if (++used > kSampleBudget)
            fail(errc::sampling_budget_exceeded, "winding sample budget exhausted");
        return f(path(tau));
    }

    void segment(double ta, cplx va, double tb, cplx vb) {
        cplx ratio = vb / va;
        double step = std::arg(ratio);
        if (std::abs(step) < std::numbers::pi / 2.0) {
            total_phase += step;
            return;
        }
        if (tb - ta < 1e-12)
            fail(errc::zero_on_boundary, "phase cannot be pinned; zero or pole on the boundary");
        double tm = 0.5 * (ta + tb);
        cplx vm = probe(tm);
        if (vm == cplx(0.0, 0.0) ||
            std::abs(vm) < 1e-12 * std::max(std::abs(va), std::abs(vb)))
            fail(errc::zero_on_boundary, "boundary sample vanishes to local scale");
        segment(ta, va, tm, vm);
        segment(tm, vm, tb, vb);
    }
};

WindingResult winding_over_path(const std::function<cplx(cplx)>& f,
                                std::function<cplx(double)> path, int init_samples) {
    if (init_samples < 16) fail(errc::domain, "winding needs at least 16 initial samples");
    BoundaryTracker tracker{f, std::move(path)};
    std::vector<double> taus(init_samples);
    std::vector<cplx> vals(init_samples);
    for (int j = 0; j < init_samples; ++j) {
        taus[j] = static_cast<double>(j) / init_samples;
        vals[j] = tracker.probe(taus[j]);
    }
    for (int j = 0; j < init_samples; ++j) {
        cplx prev = vals[(j + init_samples - 1) % init_samples];
        cplx next = vals[(j + 1) % init_samples];
        if (vals[j] == cplx(0.0, 0.0) ||
            std::abs(vals[j]) < 1e-12 * std::max(std::abs(prev), std::abs(next)))
            fail(errc::zero_on_boundary, "boundary sample vanishes to local scale");
    }
    for (int j = 0; j < init_samples; ++j) {
        double ta = taus[j];
        double tb = j + 1 < init_samples ? taus[j + 1] : 1.0;
        tracker.segment(ta, vals[j], tb, vals[(j + 1) % init_samples]);
    }
    double w = tracker.total_phase / kTwoPi;
    long long rounded = std::llround(w);
    if (std::abs(w - static_cast<double>(rounded)) > 0.25)
        fail(errc::no_convergence, "winding sum not close to an integer");
    return {static_cast<int>(rounded), tracker.used};
}

}  // namespace

WindingResult winding_count_detail(const std::function<cplx(cplx)>& f, const RectRegion& region,
                                   int init_samples) {
    region.validate();
    auto path = [region](double tau) -> cplx {
        double t = tau * 4.0;
        int edge = static_cast<int>(t);
        double frac = t - edge;
        switch (edge) {
            case 0: return {region.re_min + frac * (region.re_max - region.re_min), region.im_min};
            case 1: return {region.re_max, region.im_min + frac * (region.im_max - region.im_min)};
            case 2: return {region.re_max - frac * (region.re_max - region.re_min), region.im_max};
            default: return {region.re_min, region.im_max - frac * (region.im_max - region.im_min)};
        }
    };
    return winding_over_path(f, path, init_samples);
}

WindingResult winding_count_detail(const std::function<cplx(cplx)>& f, const DiscRegion& region,
                                   int init_samples) {
    region.validate();
    auto path = [region](double tau) -> cplx {
        double th = kTwoPi * tau;
        return region.center + region.radius * cplx(std::cos(th), std::sin(th));
    };
    return winding_over_path(f, path, init_samples);
}

int winding_count(const std::function<cplx(cplx)>& f, const RectRegion& region, int init_samples) {
    return winding_count_detail(f, region, init_samples).winding;
}

int winding_count(const std::function<cplx(cplx)>& f, const DiscRegion& region, int init_samples) {
    return winding_count_detail(f, region, init_samples).winding;
}

std::pair<cplx, double> refine_zero(const std::function<cplx(cplx)>& f, cplx s0, double tol) {
    if (!(tol > 0.0)) fail(errc::domain, "refine tolerance must be positive");
    cplx s = s0;
    cplx best_s = s0;
    double best = std::abs(f(s0));
    double prev = best;
    for (int it = 0; it < 64; ++it) {
        double step = 1e-6 * (1.0 + std::abs(s));
        cplx deriv = (f(s + step) - f(s - step)) / (2.0 * step);
        if (deriv == cplx(0.0, 0.0))
            fail(errc::no_convergence, "vanishing numerical derivative");
        cplx value = f(s);
        cplx delta = value / deriv;
        s -= delta;
        double here = std::abs(f(s));
        if (here < best) {
            best = here;
            best_s = s;
        }
        if (std::abs(delta) < tol) return {best_s, best};
        if (here >= prev) return {best_s, best};
        prev = here;
    }
    fail(errc::no_convergence, "refinement did not settle within 64 iterations");
}

std::vector<double> critical_scan(const LFunctionHandle& f, const FunctionalEquation& eq,
                                  double t_min, double t_max, double step) {
    eq.validate();
    if (!(step > 0.0) || !(t_min < t_max)) fail(errc::domain, "scan grid must be increasing");
    LFunctionHandle probe = f;
    if (probe.exp_shift_centered) {
        // a real even-power centered shift is strictly positive real on the
        // axis; dropping it changes no signs and avoids exp overflow at
        // height, so only such shifts may be stripped
        bool real_even = true;
        const auto& c = probe.exp_shift_centered->coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].imag() != 0.0) real_even = false;
            if (k % 2 == 1 && c[k] != cplx(0.0, 0.0)) real_even = false;
        }
        if (real_even) probe.exp_shift_centered.reset();
    }

    std::vector<double> grid;
    const long long steps = static_cast<long long>((t_max - t_min) / step + 1e-12);
    for (long long j = 0; j <= steps; ++j) grid.push_back(t_min + step * static_cast<double>(j));
    std::vector<cplx> values(grid.size());
    double scale = 0.0;
    size_t peak = 0;
    for (size_t j = 0; j < grid.size(); ++j) {
        values[j] = lambda_eval(probe, eq, cplx(0.5, grid[j]));
        if (std::abs(values[j]) > scale) {
            scale = std::abs(values[j]);
            peak = j;
        }
    }
    if (scale == 0.0) fail(errc::domain, "completed function vanishes on the whole grid");
    cplx rotation = std::abs(values[peak]) / values[peak];
    for (size_t j = 0; j < grid.size(); ++j) {
        cplx r = rotation * values[j];
        if (std::abs(r.imag()) > 1e-6 * scale)
            fail(errc::symmetry_violation,
                 "rotated axis function is not real on the grid; functional equation "
                 "does not make the axis restriction real");
    }

    auto axis_fn = [&](double t) {
        return (rotation * lambda_eval(probe, eq, cplx(0.5, t))).real();
    };
    std::vector<double> heights;
    for (size_t j = 0; j + 1 < grid.size(); ++j) {
        double fa = rotation.real() * values[j].real() - rotation.imag() * values[j].imag();
        double fb = rotation.real() * values[j + 1].real() - rotation.imag() * values[j + 1].imag();
        if (fa == 0.0) {
            heights.push_back(grid[j]);
            continue;
        }
        if (fa * fb >= 0.0) continue;
        double lo = grid[j], hi = grid[j + 1];
        double flo = fa;
        while (hi - lo > 1e-9) {
            double mid = 0.5 * (lo + hi);
            double fm = axis_fn(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        heights.push_back(0.5 * (lo + hi));
    }
    return heights;
}

void WeilPolynomial::validate() const {
    if (coeffs.empty() || coeffs[0] != 1)
        fail(errc::domain, "constant term must be 1");
    if (q < 2) fail(errc::domain, "q must be at least 2");
    if (genus < 0) fail(errc::domain, "genus must be non-negative");
    int degree = static_cast<int>(coeffs.size()) - 1;
    if (degree != 2 * genus)
        fail(errc::degree_mismatch,
             "degree " + std::to_string(degree) + " does not equal 2*genus");
}

namespace {

std::vector<cplx> poly_roots_real(const std::vector<double>& coeffs) {
    size_t deg = coeffs.size() - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg == 0) return {};
    if (deg == 1) return {cplx(-coeffs[0] / coeffs[1], 0.0)};
    if (deg == 2) {
        double a = coeffs[2], b = coeffs[1], c = coeffs[0];
        cplx disc = std::sqrt(cplx(b * b - 4.0 * a * c, 0.0));
        // the sign choice keeps the larger-magnitude numerator, then the
        // product relation supplies the companion root without cancellation
        cplx qn = b >= 0.0 ? (-b - disc) / 2.0 : (-b + disc) / 2.0;
        if (qn == cplx(0.0, 0.0)) return {cplx(0.0, 0.0), cplx(-b / a, 0.0)};
        return {qn / a, c / qn};
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (size_t j = 0; j < deg; ++j) companion(j, deg - 1) = -coeffs[j] / coeffs[deg];
    for (size_t j = 1; j < deg; ++j) companion(j, j - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<cplx> roots(deg);
    for (size_t j = 0; j < deg; ++j)
        roots[j] = cplx(solver.eigenvalues()[j].real(), solver.eigenvalues()[j].imag());
    return roots;
}

}  // namespace

WeilCheckResult weil_check_real(const std::vector<double>& coeffs, long long q, int genus) {
    if (coeffs.empty() || coeffs[0] != 1.0) fail(errc::domain, "constant term must be 1");
    if (q < 2) fail(errc::domain, "q must be at least 2");
    int degree = static_cast<int>(coeffs.size()) - 1;
    while (degree > 0 && coeffs[degree] == 0.0) --degree;
    if (degree != 2 * genus)
        fail(errc::degree_mismatch,
             "degree " + std::to_string(degree) + " does not equal 2*genus");
    WeilCheckResult result;
    result.roots = poly_roots_real(coeffs);
    const double qd = static_cast<double>(q);

    // functional identity in root-pairing form: the multiset of roots is
    // invariant under t -> 1/(q t)
    std::vector<bool> taken(result.roots.size(), false);
    result.functional_ok = true;
    for (cplx r : result.roots) {
        cplx target = 1.0 / (qd * r);
        double tol = 1e-9 * (1.0 + std::abs(target));
        bool found = false;
        for (size_t j = 0; j < result.roots.size(); ++j) {
            if (taken[j]) continue;
            if (std::abs(result.roots[j] - target) <= tol) {
                taken[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            result.functional_ok = false;
            break;
        }
    }

    result.rh_ok = true;
    const double expected = 1.0 / std::sqrt(qd);
    for (cplx r : result.roots)
        if (std::abs(std::abs(r) - expected) > 1e-9) {
            result.rh_ok = false;
            break;
        }
    return result;
}

WeilCheckResult weil_check(const WeilPolynomial& p) {
    p.validate();
    std::vector<double> coeffs(p.coeffs.begin(), p.coeffs.end());
    return weil_check_real(coeffs, p.q, p.genus);
}

}  // namespace lforge
