#include "lambdaforge/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>
#include <tuple>

#include "lambdaforge/dirichletfit.hpp"
#include "lambdaforge/perturb.hpp"
#include "lambdaforge/zeros.hpp"

namespace lforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ClauseList {
    std::vector<std::tuple<std::string, bool, std::string>> rows;
    void add(const std::string& name, bool ok, const std::string& detail) {
        rows.emplace_back(name, ok, detail);
    }
    // pass iff measured stays below the tolerance
    void add_bound(const std::string& name, double measured, double tolerance) {
        add(name, measured < tolerance,
            "measured " + format_double(measured) + ", tolerance " + format_double(tolerance));
    }
    bool pass() const {
        for (const auto& r : rows)
            if (!std::get<1>(r)) return false;
        return true;
    }
};

Report start_report(const std::string& command, const JobOptions& options) {
    Report rep;
    auto& job = rep.add_section("job");
    rep.add(job, "command", command);
    rep.add(job, "version", std::string(kToolVersion));
    rep.add(job, "strict", options.strict);
    return rep;
}

void finalize_clauses(Report& rep, const ClauseList& clauses, bool pass) {
    auto& s = rep.add_section("checks");
    for (const auto& [name, ok, detail] : clauses.rows) {
        (void)detail;
        rep.add(s, name, std::string(ok ? "pass" : "fail"));
    }
    for (const auto& [name, ok, detail] : clauses.rows)
        rep.summary.push_back(name + ": " + (ok ? "PASS" : "FAIL") + " (" + detail + ")");
    rep.summary.push_back(pass ? "verdict: PASS" : "verdict: FAIL");
}

struct BaseSetup {
    LFunctionHandle handle;
    FunctionalEquation fe;
    std::string label;
};

FunctionalEquation trivial_fe() {
    FunctionalEquation eq;
    eq.q = QFactor{};  // empty product, Q(s) = 1
    eq.sign = 1;
    eq.conjugated = false;
    return eq;
}

BaseSetup base_from_config(const Config& cfg) {
    BaseSetup out;
    out.label = cfg.get_string("base", "kind", "zeta");
    EvalParams params;
    params.em_terms = static_cast<int>(cfg.get_int("base", "em_terms", params.em_terms));
    params.em_bernoulli =
        static_cast<int>(cfg.get_int("base", "em_bernoulli", params.em_bernoulli));
    params.target_abs_tol = cfg.get_double("base", "target_abs_tol", params.target_abs_tol);
    params.validate();
    if (out.label == "zeta") {
        out.handle = handle_zeta(params);
        out.fe = riemann_fe();
    } else if (out.label == "dirichlet") {
        long long disc = cfg.get_int("base", "discriminant", -4);
        DirichletCharacter chi = DirichletCharacter::quadratic(disc);
        out.handle = handle_dirichlet(chi, params);
        out.fe = dirichlet_fe(chi);
    } else if (out.label == "one") {
        out.handle = handle_one();
        out.fe = trivial_fe();
    } else if (out.label == "poly") {
        std::vector<cplx> coeffs = cfg.get_complex_list("base", "coeffs");
        if (coeffs.empty()) fail(errc::config, "[base] coeffs is required for kind=poly");
        out.handle = handle_poly(Polynomial(coeffs));
        out.fe = trivial_fe();
    } else {
        fail(errc::config, "[base] kind must be zeta, dirichlet, one, or poly");
    }
    return out;
}

void describe_base(Report& rep, const BaseSetup& base, const Config& cfg) {
    auto& s = rep.add_section("base");
    rep.add(s, "kind", base.label);
    if (base.label == "dirichlet")
        rep.add(s, "discriminant", cfg.get_int("base", "discriminant", -4));
}

// non-positive points of each Gamma factor, where the completed function
// cannot be sampled
std::vector<cplx> q_pole_points(const QFactor& q, double re_floor) {
    std::vector<cplx> pts;
    for (const GammaFactor& f : q.factors) {
        for (int n = 0;; ++n) {
            cplx s = (cplx(-n, 0.0) - f.mu) / f.lambda;
            if (s.real() < re_floor - 1.0) break;
            pts.push_back(s);
            if (n > 4096) break;
        }
    }
    return pts;
}

std::vector<cplx> fe_grid_points(const Config& cfg, const BaseSetup& base) {
    double re_min = cfg.get_double("fe_grid", "re_min", -2.0);
    double re_max = cfg.get_double("fe_grid", "re_max", 3.0);
    double im_min = cfg.get_double("fe_grid", "im_min", -30.0);
    double im_max = cfg.get_double("fe_grid", "im_max", 30.0);
    int n_re = static_cast<int>(cfg.get_int("fe_grid", "n_re", 20));
    int n_im = static_cast<int>(cfg.get_int("fe_grid", "n_im", 20));
    double clearance = cfg.get_double("fe_grid", "pole_clearance", 0.1);
    if (n_re < 2 || n_im < 2) fail(errc::config, "[fe_grid] needs at least 2 points per axis");
    if (!(re_min < re_max) || !(im_min < im_max))
        fail(errc::config, "[fe_grid] bounds must be ordered");

    std::vector<cplx> avoid = base.handle.poles();
    for (cplx p : q_pole_points(base.fe.q, re_min)) avoid.push_back(p);
    // the residual also samples 1-s, so clear the reflected singularities too
    size_t direct = avoid.size();
    for (size_t i = 0; i < direct; ++i) avoid.push_back(1.0 - avoid[i]);

    std::vector<cplx> pts;
    for (int i = 0; i < n_re; ++i)
        for (int j = 0; j < n_im; ++j) {
            cplx z(re_min + (re_max - re_min) * i / (n_re - 1),
                   im_min + (im_max - im_min) * j / (n_im - 1));
            bool near = false;
            for (cplx p : avoid)
                if (std::abs(z - p) < clearance) near = true;
            if (!near) pts.push_back(z);
        }
    if (pts.empty()) fail(errc::config, "[fe_grid] excludes every grid point");
    return pts;
}

double fe_residual_max(const LFunctionHandle& f, const FunctionalEquation& eq,
                       const std::vector<cplx>& pts, int threads) {
    std::vector<double> vals(pts.size(), 0.0);
    parallel_for(static_cast<int>(pts.size()), threads,
                 [&](int i) { vals[i] = fe_residual(f, eq, pts[i]); });
    double mx = 0.0;
    for (double v : vals) mx = std::max(mx, v);
    return mx;
}

void append_orbit(InterpolationSet& set, cplx seed, int multiplicity) {
    for (cplx q : orbit(seed).points) {
        bool present = false;
        for (const InterpolationPoint& p : set.points)
            if (p.b == q) {
                if (p.multiplicity != multiplicity)
                    fail(errc::config,
                         "interpolation point listed twice with different multiplicities");
                present = true;
            }
        if (!present) set.points.push_back({q, multiplicity});
    }
}

InterpolationSet interpolation_from_config(const Config& cfg, const BaseSetup& base) {
    InterpolationSet set;
    std::vector<cplx> pts = cfg.get_complex_list("interpolation", "points");
    std::vector<double> mults = cfg.get_double_list("interpolation", "multiplicities");
    if (pts.empty()) {
        // default: interpolate to 1 at the base's poles so the perturbation
        // cannot create new singular behavior
        for (cplx p : base.handle.poles()) append_orbit(set, p, 1);
    } else {
        if (!mults.empty() && mults.size() != pts.size())
            fail(errc::config, "[interpolation] multiplicities must match points");
        for (size_t i = 0; i < pts.size(); ++i) {
            int m = mults.empty() ? 1 : static_cast<int>(mults[i]);
            if (m < 1) fail(errc::config, "[interpolation] multiplicities must be positive");
            append_orbit(set, pts[i], m);
        }
    }
    if (!set.points.empty()) set.validate();
    return set;
}

struct PerturbPipeline {
    BaseSetup base;
    DiscRegion k;
    PlantedZeroSet planted;
    InterpolationSet bset;
    double eps = 1e-3;
    double pole_tol = 1e-8;
    EpsilonBudget budget;
    NuBuild nu;
    LFunctionHandle g;
};

PerturbPipeline run_perturb_core(const Config& cfg, const JobOptions& options) {
    PerturbPipeline pp;
    pp.base = base_from_config(cfg);
    pp.k = DiscRegion{cplx(0.5, 0.0), cfg.get_double("disc", "radius", 2.0)};
    pp.k.validate();
    std::vector<cplx> seeds = cfg.get_complex_list("planted", "seeds");
    if (seeds.empty() && options.strict)
        fail(errc::config, "strict mode requires a nonempty planted set: g must differ from f");
    pp.planted = PlantedZeroSet::from_seeds(seeds);
    if (options.strict) pp.planted.validate_off_axis();
    pp.bset = interpolation_from_config(cfg, pp.base);
    pp.planted.validate(pp.bset, pp.k);
    pp.eps = cfg.get_double("budget", "eps", 1e-3);
    if (!(pp.eps > 0.0)) fail(errc::config, "[budget] eps must be positive");
    pp.pole_tol = cfg.get_double("tolerances", "pole", 1e-8);
    int samples = static_cast<int>(cfg.get_int("budget", "boundary_samples", 8192));
    pp.budget = epsilon_budget(pp.base.handle, pp.k, pp.eps, samples);
    BumpBudget bb;
    bb.n_start = static_cast<int>(cfg.get_int("budget", "n_start", bb.n_start));
    bb.n_step = static_cast<int>(cfg.get_int("budget", "n_step", bb.n_step));
    bb.n_cap = static_cast<int>(cfg.get_int("budget", "n_cap", bb.n_cap));
    bb.degree_cap = static_cast<int>(cfg.get_int("budget", "degree_cap", bb.degree_cap));
    bb.boundary_samples =
        static_cast<int>(cfg.get_int("budget", "sup_samples", bb.boundary_samples));
    double eps0 = cfg.get_double("budget", "eps0", 0.0);
    if (eps0 <= 0.0) eps0 = pp.budget.eps0;
    pp.nu = build_nu(pp.planted, pp.bset, pp.k, eps0, bb);
    pp.g = perturb(pp.base.handle, pp.nu.nu, pp.pole_tol);
    return pp;
}

void describe_certificate(Report& rep, const PerturbPipeline& pp) {
    auto& s = rep.add_section("certificate");
    rep.add(s, "eps", pp.eps);
    rep.add(s, "m_on_boundary", pp.budget.m_boundary);
    rep.add(s, "eps0", pp.budget.eps0);
    rep.add(s, "eps1_used", pp.nu.eps1_used);
    rep.add(s, "sup_nu_minus_1_estimate", pp.nu.sup_estimate);
    rep.add(s, "sup_nu_minus_1_certified", pp.nu.sup_certified);
    rep.add(s, "nu_degree", static_cast<long long>(pp.nu.nu.degree()));
    rep.add(s, "coeff_symmetry_residual", pp.nu.coeff_symmetry_residual);
    auto& pl = rep.add_section("planted");
    for (size_t i = 0; i < pp.planted.closure.size(); ++i) {
        std::string key = "zero_" + std::to_string(i);
        std::string line = format_complex(pp.planted.closure[i]) +
                           ", residual " + format_double(pp.nu.planted_zero_residuals[i]);
        rep.add(pl, key, line);
    }
    for (size_t i = 0; i < pp.bset.points.size(); ++i) {
        std::string key = "interpolation_" + std::to_string(i);
        std::string line = format_complex(pp.bset.points[i].b) + ", multiplicity " +
                           std::to_string(pp.bset.points[i].multiplicity) + ", residual " +
                           format_double(pp.nu.interpolation_residuals[i]);
        rep.add(pl, key, line);
    }
}

struct ClosenessScan {
    double max_abs = 0.0;
    int used = 0;
};

// polar interior grid over k; points within skip_radius of a declared pole are
// left out, the bounded quantity there is controlled by the boundary samples
ClosenessScan closeness_scan(const LFunctionHandle& f, const LFunctionHandle& g,
                             const DiscRegion& k, int rings, int angles,
                             const std::vector<cplx>& poles, double skip_radius, int threads) {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(rings) * angles);
    for (int i = 0; i < rings; ++i)
        for (int j = 0; j < angles; ++j) {
            double r = k.radius * (i + 0.5) / rings;
            double th = 2.0 * kPi * j / angles;
            cplx z = k.center + cplx(r * std::cos(th), r * std::sin(th));
            bool skip = false;
            for (cplx p : poles)
                if (std::abs(z - p) < skip_radius) skip = true;
            if (!skip) pts.push_back(z);
        }
    std::vector<double> vals(pts.size(), 0.0);
    parallel_for(static_cast<int>(pts.size()), threads,
                 [&](int i) { vals[i] = std::abs(g.eval(pts[i]) - f.eval(pts[i])); });
    ClosenessScan out;
    out.used = static_cast<int>(pts.size());
    for (double v : vals) out.max_abs = std::max(out.max_abs, v);
    return out;
}

std::vector<RectRegion> parse_rect_list(const std::string& text) {
    std::vector<RectRegion> rects;
    for (const std::string& group : split_list(text, ';')) {
        std::vector<std::string> parts = split_list(group, ',');
        if (parts.size() != 4)
            fail(errc::config, "rectangle needs four comma-separated bounds: " + group);
        RectRegion r{parse_double_strict(parts[0], "rect re_min"),
                     parse_double_strict(parts[1], "rect re_max"),
                     parse_double_strict(parts[2], "rect im_min"),
                     parse_double_strict(parts[3], "rect im_max")};
        r.validate();
        rects.push_back(r);
    }
    return rects;
}

// conjugate pair of bands bracketing the planted closure away from the real
// axis
std::vector<RectRegion> default_offaxis_rects(const PlantedZeroSet& planted) {
    if (planted.closure.empty()) return {};
    double re_lo = planted.closure[0].real(), re_hi = re_lo;
    double im_hi = 0.0;
    for (cplx a : planted.closure) {
        re_lo = std::min(re_lo, a.real());
        re_hi = std::max(re_hi, a.real());
        im_hi = std::max(im_hi, std::abs(a.imag()));
    }
    RectRegion upper{re_lo - 0.6, re_hi + 0.6, 0.05, im_hi + 0.45};
    RectRegion lower{upper.re_min, upper.re_max, -upper.im_max, -upper.im_min};
    return {upper, lower};
}

// conjugate pair of off-axis windows inside the working disc; the restored
// exponential shift is certified on the disc only, so g_plus zero-freeness is
// checked where that certificate holds instead of out at the planted closure
std::vector<RectRegion> default_disc_windows(const DiscRegion& k) {
    double half = 0.8 * k.radius, top = 0.55 * k.radius;  // corners stay inside
    double gap = std::min(0.05, 0.5 * top);
    RectRegion upper{k.center.real() - half, k.center.real() + half, gap, top};
    RectRegion lower{upper.re_min, upper.re_max, -upper.im_max, -upper.im_min};
    return {upper, lower};
}

struct RestoreBundle {
    RestoreRecord rec;
    std::vector<RectRegion> rects;    // bracket the planted closure
    std::vector<RectRegion> windows;  // inside the disc, for g_plus
    std::vector<int> w_plus, w_minus, w_nu, w_base;
};

RestoreBundle run_restore_core(const Config& cfg, const PerturbPipeline& pp) {
    RestoreOptions ro;
    ro.fit_degree = static_cast<int>(cfg.get_int("restore", "fit_degree", ro.fit_degree));
    ro.boundary_samples =
        static_cast<int>(cfg.get_int("restore", "boundary_samples", ro.boundary_samples));
    ro.fit_tol = cfg.get_double("restore", "fit_tol", ro.fit_tol);
    ro.interior_rings = static_cast<int>(cfg.get_int("restore", "rings", ro.interior_rings));
    ro.interior_angles = static_cast<int>(cfg.get_int("restore", "angles", ro.interior_angles));
    double excl = cfg.get_double("restore", "exclusion_radius", 0.25);
    std::vector<DiscRegion> excluded;
    for (cplx a : pp.planted.closure) excluded.push_back(DiscRegion{a, excl});

    RestoreBundle out;
    out.rec = restore(pp.g, pp.nu.nu, pp.k, excluded, pp.eps, ro);
    auto rect_text = cfg.find("offaxis", "rects");
    out.rects = rect_text ? parse_rect_list(*rect_text) : default_offaxis_rects(pp.planted);
    for (const RectRegion& r : out.rects) {
        out.w_minus.push_back(
            winding_count([&](cplx z) { return out.rec.g_minus.eval(z); }, r));
        out.w_nu.push_back(winding_count([&](cplx z) { return pp.nu.nu.eval(z - 0.5); }, r));
        out.w_base.push_back(
            winding_count([&](cplx z) { return pp.base.handle.eval(z); }, r));
    }
    auto window_text = cfg.find("offaxis", "zero_free_rects");
    out.windows = window_text ? parse_rect_list(*window_text) : default_disc_windows(pp.k);
    for (const RectRegion& r : out.windows)
        out.w_plus.push_back(
            winding_count([&](cplx z) { return out.rec.g_plus.eval(z); }, r));
    return out;
}

void describe_restore(Report& rep, const RestoreBundle& rb) {
    auto& s = rep.add_section("restore");
    rep.add(s, "fit_degree", static_cast<long long>(rb.rec.h_centered.degree()));
    rep.add(s, "fit_residual", rb.rec.fit_residual);
    rep.add(s, "symmetrization_drop", rb.rec.symmetrization_drop);
    rep.add(s, "closeness_max", rb.rec.closeness_max);
    rep.add(s, "fit_samples", static_cast<long long>(rb.rec.fit_samples));
    rep.add(s, "interior_samples", static_cast<long long>(rb.rec.interior_samples));
    auto& w = rep.add_section("offaxis");
    for (size_t i = 0; i < rb.rects.size(); ++i) {
        const RectRegion& r = rb.rects[i];
        std::string key = "rect_" + std::to_string(i);
        std::string line = "[" + format_double(r.re_min) + "," + format_double(r.re_max) +
                           "]x[" + format_double(r.im_min) + "," + format_double(r.im_max) +
                           "] g_minus " + std::to_string(rb.w_minus[i]) + ", nu " +
                           std::to_string(rb.w_nu[i]) + ", base " + std::to_string(rb.w_base[i]);
        rep.add(w, key, line);
    }
    auto& zf = rep.add_section("zero_free");
    for (size_t i = 0; i < rb.windows.size(); ++i) {
        const RectRegion& r = rb.windows[i];
        std::string key = "window_" + std::to_string(i);
        std::string line = "[" + format_double(r.re_min) + "," + format_double(r.re_max) +
                           "]x[" + format_double(r.im_min) + "," + format_double(r.im_max) +
                           "] g_plus " + std::to_string(rb.w_plus[i]);
        rep.add(zf, key, line);
    }
}

std::vector<double> scan_heights(const Config& cfg, const LFunctionHandle& f,
                                 const FunctionalEquation& eq) {
    double t_min = cfg.get_double("scan", "t_min", 10.0);
    double t_max = cfg.get_double("scan", "t_max", 30.0);
    double step = cfg.get_double("scan", "step", 0.05);
    if (!(t_min < t_max) || !(step > 0.0)) fail(errc::config, "[scan] needs t_min < t_max, step > 0");
    return critical_scan(f, eq, t_min, t_max, step);
}

JobResult run_verify(const Config& cfg, const JobOptions& options, int threads) {
    JobResult res;
    res.report = start_report("verify", options);
    BaseSetup base = base_from_config(cfg);
    describe_base(res.report, base, cfg);

    std::vector<cplx> grid = fe_grid_points(cfg, base);
    double fe_max = fe_residual_max(base.handle, base.fe, grid, threads);
    double sym = symmetry_residual([&](cplx z) { return lambda_eval(base.handle, base.fe, z); },
                                   grid);
    auto& s = res.report.add_section("fe");
    res.report.add(s, "grid_points", static_cast<long long>(grid.size()));
    res.report.add(s, "residual_max", fe_max);
    res.report.add(s, "symmetry_residual", sym);

    ClauseList clauses;
    clauses.add_bound("fe_residual", fe_max, cfg.get_double("tolerances", "fe", 1e-8));
    clauses.add_bound("symmetry", sym, cfg.get_double("tolerances", "symmetry", 1e-10));
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_perturb(const Config& cfg, const JobOptions& options, int threads) {
    JobResult res;
    res.report = start_report("perturb", options);
    PerturbPipeline pp = run_perturb_core(cfg, options);
    describe_base(res.report, pp.base, cfg);
    describe_certificate(res.report, pp);

    int rings = static_cast<int>(cfg.get_int("closeness", "rings", 64));
    int angles = static_cast<int>(cfg.get_int("closeness", "angles", 64));
    ClosenessScan close = closeness_scan(pp.base.handle, pp.g, pp.k, rings, angles,
                                         pp.base.handle.poles(), 1e-4, threads);

    std::vector<cplx> grid = fe_grid_points(cfg, pp.base);
    double fe_max = fe_residual_max(pp.g, pp.base.fe, grid, threads);

    double wind_radius = cfg.get_double("winding", "radius", 0.05);
    bool windings_ok = true;
    auto& wsec = res.report.add_section("windings");
    for (size_t i = 0; i < pp.planted.closure.size(); ++i) {
        cplx a = pp.planted.closure[i];
        DiscRegion d{a, wind_radius};
        int wg = winding_count([&](cplx z) { return pp.g.eval(z); }, d);
        int wf = winding_count([&](cplx z) { return pp.base.handle.eval(z); }, d);
        if (wg != 1 || wf != 0) windings_ok = false;
        res.report.add(wsec, "zero_" + std::to_string(i),
                       format_complex(a) + " g " + std::to_string(wg) + ", base " +
                           std::to_string(wf));
    }

    auto& csec = res.report.add_section("closeness");
    res.report.add(csec, "max_abs", close.max_abs);
    res.report.add(csec, "interior_samples", static_cast<long long>(close.used));
    res.report.add(csec, "fe_residual_max", fe_max);

    double planted_res = 0.0;
    for (double v : pp.nu.planted_zero_residuals) planted_res = std::max(planted_res, v);
    double interp_res = 0.0;
    for (double v : pp.nu.interpolation_residuals) interp_res = std::max(interp_res, v);

    ClauseList clauses;
    clauses.add_bound("closeness", close.max_abs, pp.eps);
    clauses.add_bound("fe_residual", fe_max, cfg.get_double("tolerances", "fe", 1e-8));
    clauses.add_bound("planted_zeros", planted_res,
                      cfg.get_double("tolerances", "planted", 1e-8));
    clauses.add_bound("symmetry", pp.nu.coeff_symmetry_residual,
                      cfg.get_double("tolerances", "symmetry", 1e-10));
    clauses.add_bound("pole_interpolation", interp_res, pp.pole_tol);
    clauses.add("winding_counts", windings_ok,
                windings_ok ? "1 around each planted zero for g, 0 for the base"
                            : "unexpected count at a planted zero");
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_restore(const Config& cfg, const JobOptions& options, int threads) {
    (void)threads;
    JobResult res;
    res.report = start_report("restore", options);
    PerturbPipeline pp = run_perturb_core(cfg, options);
    describe_base(res.report, pp.base, cfg);
    describe_certificate(res.report, pp);
    RestoreBundle rb = run_restore_core(cfg, pp);
    describe_restore(res.report, rb);

    std::vector<double> base_heights = scan_heights(cfg, pp.base.handle, pp.base.fe);
    std::vector<double> plus_heights = scan_heights(cfg, rb.rec.g_plus, pp.base.fe);
    auto& ssec = res.report.add_section("scan");
    res.report.add(ssec, "base_zeros", static_cast<long long>(base_heights.size()));
    res.report.add(ssec, "g_plus_zeros", static_cast<long long>(plus_heights.size()));
    for (size_t i = 0; i < plus_heights.size(); ++i)
        res.report.add(ssec, "height_" + std::to_string(i), plus_heights[i]);

    bool plus_clear = true, consistent = true;
    for (int w : rb.w_plus)
        if (w != 0) plus_clear = false;
    for (size_t i = 0; i < rb.rects.size(); ++i)
        if (rb.w_minus[i] != rb.w_nu[i] + rb.w_base[i]) consistent = false;
    double scan_dev = 0.0;
    bool scan_count = base_heights.size() == plus_heights.size();
    if (scan_count)
        for (size_t i = 0; i < base_heights.size(); ++i)
            scan_dev = std::max(scan_dev, std::abs(base_heights[i] - plus_heights[i]));
    double match_tol = cfg.get_double("scan", "match_tol", 1e-6);

    ClauseList clauses;
    clauses.add_bound("fit_residual", rb.rec.fit_residual,
                      cfg.get_double("restore", "fit_tol", 1e-6));
    clauses.add_bound("closeness", rb.rec.closeness_max, pp.eps);
    clauses.add("gplus_offaxis_winding", plus_clear,
                plus_clear ? "winding 0 over " + std::to_string(rb.windows.size()) +
                                 " off-axis windows inside the disc"
                           : "off-axis zeros remain inside the disc");
    clauses.add("gminus_winding_consistency", consistent,
                consistent ? "g_minus matches multiplier plus base on every rectangle"
                           : "winding mismatch");
    clauses.add("scan_match", scan_count && scan_dev < match_tol,
                "height count " + std::to_string(plus_heights.size()) + " vs " +
                    std::to_string(base_heights.size()) + ", max deviation " +
                    format_double(scan_dev) + ", tolerance " + format_double(match_tol));
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_decompose(const Config& cfg, const JobOptions& options, int threads) {
    JobResult res;
    res.report = start_report("decompose", options);
    PerturbPipeline pp = run_perturb_core(cfg, options);
    describe_base(res.report, pp.base, cfg);
    describe_certificate(res.report, pp);
    RestoreBundle rb = run_restore_core(cfg, pp);
    describe_restore(res.report, rb);
    auto [b, zplus] = product_decomposition(rb.rec);

    int rings = static_cast<int>(cfg.get_int("identity", "rings", 24));
    int angles = static_cast<int>(cfg.get_int("identity", "angles", 48));
    std::vector<cplx> pts;
    std::vector<cplx> poles = pp.base.handle.poles();
    for (int i = 0; i < rings; ++i)
        for (int j = 0; j < angles; ++j) {
            double r = pp.k.radius * (i + 0.5) / rings;
            double th = 2.0 * kPi * j / angles;
            cplx z = pp.k.center + cplx(r * std::cos(th), r * std::sin(th));
            bool skip = false;
            for (cplx p : poles)
                if (std::abs(z - p) < 1e-4) skip = true;
            if (!skip) pts.push_back(z);
        }
    std::vector<double> devs(pts.size(), 0.0);
    parallel_for(static_cast<int>(pts.size()), threads, [&](int i) {
        cplx lhs = b.eval(pts[i]) * zplus.eval(pts[i]);
        cplx rhs = pp.g.eval(pts[i]);
        devs[i] = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
    });
    double identity_max = 0.0;
    for (double v : devs) identity_max = std::max(identity_max, v);

    double wind_radius = cfg.get_double("winding", "radius", 0.05);
    bool b_zeros_ok = true;
    auto& wsec = res.report.add_section("windings");
    for (size_t i = 0; i < pp.planted.closure.size(); ++i) {
        cplx a = pp.planted.closure[i];
        int wb = winding_count([&](cplx z) { return b.eval(z); }, DiscRegion{a, wind_radius});
        if (wb != 1) b_zeros_ok = false;
        res.report.add(wsec, "zero_" + std::to_string(i),
                       format_complex(a) + " b " + std::to_string(wb));
    }
    std::vector<cplx> sym_samples;
    for (int j = 0; j < 32; ++j) {
        double th = 2.0 * kPi * j / 32;
        sym_samples.push_back(pp.k.center +
                              cplx(0.8 * pp.k.radius * std::cos(th),
                                   0.8 * pp.k.radius * std::sin(th)));
    }
    double b_sym = symmetry_residual([&](cplx z) { return b.eval(z); }, sym_samples);

    auto& isec = res.report.add_section("identity");
    res.report.add(isec, "relative_max", identity_max);
    res.report.add(isec, "samples", static_cast<long long>(pts.size()));
    res.report.add(isec, "b_symmetry_residual", b_sym);

    ClauseList clauses;
    clauses.add_bound("product_identity", identity_max,
                      cfg.get_double("identity", "tol", 1e-9));
    clauses.add("b_planted_zeros", b_zeros_ok,
                b_zeros_ok ? "b winds once around each planted zero" : "missing zero in b");
    clauses.add_bound("b_symmetry", b_sym, cfg.get_double("tolerances", "symmetry", 1e-10));
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_path(const Config& cfg, const JobOptions& options, int threads) {
    (void)threads;
    JobResult res;
    res.report = start_report("path", options);
    PerturbPipeline pp = run_perturb_core(cfg, options);
    describe_base(res.report, pp.base, cfg);
    describe_certificate(res.report, pp);

    int steps = static_cast<int>(cfg.get_int("path", "steps", 10));
    double radius = cfg.get_double("path", "radius", 0.1);
    if (steps < 1) fail(errc::config, "[path] steps must be positive");

    const size_t npts = pp.planted.closure.size();
    std::vector<std::vector<int>> counts(static_cast<size_t>(steps) + 1,
                                         std::vector<int>(npts, 0));
    auto& psec = res.report.add_section("path");
    for (int j = 0; j <= steps; ++j) {
        double t = static_cast<double>(j) / steps;
        PathPoint pt = path(pp.base.handle, pp.g, t);
        std::string line;
        for (size_t i = 0; i < npts; ++i) {
            int w = winding_count([&](cplx z) { return pt.handle.eval(z); },
                                  DiscRegion{pp.planted.closure[i], radius});
            counts[j][i] = w;
            line += (i ? "," : "") + std::to_string(w);
        }
        res.report.add(psec, "t_" + format_double(t), line.empty() ? "-" : line);
    }

    bool persistent = true;
    for (size_t i = 0; i < npts; ++i) {
        int first = -1;
        for (int j = 0; j <= steps; ++j)
            if (counts[j][i] == 1) {
                first = j;
                break;
            }
        if (first < 0) persistent = false;
        for (int j = std::max(first, 0); first >= 0 && j <= steps; ++j)
            if (counts[j][i] != 1) persistent = false;
    }

    const cplx probes[5] = {cplx(0.7, 0.21), cplx(1.6, -0.37), cplx(0.5, 2.1),
                            cplx(-0.4, 0.9), cplx(2.2, 0.05)};
    double end_dev = 0.0;
    PathPoint p0 = path(pp.base.handle, pp.g, 0.0);
    PathPoint p1 = path(pp.base.handle, pp.g, 1.0);
    for (cplx z : probes) {
        end_dev = std::max(end_dev, std::abs(p0.handle.eval(z) - pp.base.handle.eval(z)));
        end_dev = std::max(end_dev, std::abs(p1.handle.eval(z) - pp.g.eval(z)));
    }

    ClauseList clauses;
    clauses.add("endpoint_identity", end_dev == 0.0,
                "max endpoint deviation " + format_double(end_dev) + ", expected exactly 0");
    clauses.add("winding_persistence", persistent,
                persistent ? "each planted disc keeps count 1 once reached"
                           : "count dropped after first reaching 1");
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_scan(const Config& cfg, const JobOptions& options, int threads) {
    (void)threads;
    JobResult res;
    res.report = start_report("scan", options);
    BaseSetup base = base_from_config(cfg);
    describe_base(res.report, base, cfg);

    std::vector<double> heights = scan_heights(cfg, base.handle, base.fe);
    auto& ssec = res.report.add_section("scan");
    res.report.add(ssec, "zeros", static_cast<long long>(heights.size()));
    for (size_t i = 0; i < heights.size(); ++i)
        res.report.add(ssec, "height_" + std::to_string(i), heights[i]);

    // independent cross-check: one sub-rectangle per height must wind exactly
    // once for the completed function
    bool windings_ok = true;
    double half = cfg.get_double("scan", "winding_halfwidth", 0.2);
    for (size_t i = 0; i < heights.size(); ++i) {
        double lo = heights[i] - half, hi = heights[i] + half;
        if (i > 0) lo = std::max(lo, 0.5 * (heights[i - 1] + heights[i]));
        if (i + 1 < heights.size()) hi = std::min(hi, 0.5 * (heights[i] + heights[i + 1]));
        RectRegion r{0.05, 0.95, lo, hi};
        int w = winding_count([&](cplx z) { return lambda_eval(base.handle, base.fe, z); }, r);
        if (w != 1) windings_ok = false;
        res.report.add(ssec, "winding_" + std::to_string(i), static_cast<long long>(w));
    }

    ClauseList clauses;
    clauses.add("scan_windings", windings_ok,
                windings_ok ? "each height verified by a unit winding count"
                            : "winding cross-check failed");
    std::vector<double> expected = cfg.get_double_list("scan", "expected");
    if (!expected.empty()) {
        double match_tol = cfg.get_double("scan", "match_tol", 1e-5);
        bool count_ok = expected.size() == heights.size();
        double dev = 0.0;
        if (count_ok)
            for (size_t i = 0; i < expected.size(); ++i)
                dev = std::max(dev, std::abs(expected[i] - heights[i]));
        clauses.add("expected_heights", count_ok && dev < match_tol,
                    "count " + std::to_string(heights.size()) + " vs " +
                        std::to_string(expected.size()) + ", max deviation " +
                        format_double(dev) + ", tolerance " + format_double(match_tol));
    }
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_weil(const Config& cfg, const JobOptions& options, int threads) {
    (void)threads;
    JobResult res;
    res.report = start_report("weil", options);
    ClauseList clauses;

    if (cfg.has("weil", "coeffs")) {
        std::vector<double> raw = cfg.get_double_list("weil", "coeffs");
        WeilPolynomial wp;
        for (double v : raw) {
            long long n = std::llround(v);
            if (std::abs(v - static_cast<double>(n)) > 1e-9)
                fail(errc::config, "[weil] coeffs must be integers");
            wp.coeffs.push_back(n);
        }
        wp.q = cfg.get_int("weil", "q", 2);
        wp.genus = static_cast<int>(cfg.get_int("weil", "genus",
                                                (static_cast<int>(wp.coeffs.size()) - 1) / 2));
        WeilCheckResult r = weil_check(wp);
        auto& wsec = res.report.add_section("weil");
        res.report.add(wsec, "q", wp.q);
        res.report.add(wsec, "genus", static_cast<long long>(wp.genus));
        res.report.add(wsec, "functional_ok", r.functional_ok);
        res.report.add(wsec, "rh_ok", r.rh_ok);
        for (size_t i = 0; i < r.roots.size(); ++i)
            res.report.add(wsec, "root_" + std::to_string(i), r.roots[i]);
        bool exp_f = cfg.get_bool("weil", "expected_functional", true);
        bool exp_r = cfg.get_bool("weil", "expected_rh", true);
        clauses.add("explicit_functional", r.functional_ok == exp_f,
                    std::string("got ") + (r.functional_ok ? "true" : "false") + ", expected " +
                        (exp_f ? "true" : "false"));
        clauses.add("explicit_rh", r.rh_ok == exp_r,
                    std::string("got ") + (r.rh_ok ? "true" : "false") + ", expected " +
                        (exp_r ? "true" : "false"));
    }

    int count = static_cast<int>(cfg.get_int("randomized", "count", 100));
    if (count > 0) {
        long long q = cfg.get_int("randomized", "q", 2);
        int genus = static_cast<int>(cfg.get_int("randomized", "genus", 2));
        double factor = cfg.get_double("randomized", "perturb_factor", 1.01);
        std::uint64_t seed = options.seed
                                 ? *options.seed
                                 : static_cast<std::uint64_t>(
                                       cfg.get_int("randomized", "seed", 12345));
        if (q < 2 || genus < 1) fail(errc::config, "[randomized] needs q >= 2, genus >= 1");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.05, kPi - 0.05);
        int clean_fail = 0, perturbed_pass = 0;
        for (int trial = 0; trial < count; ++trial) {
            std::vector<double> angles(genus);
            for (int redraw = 0; redraw < 100; ++redraw) {
                for (double& a : angles) a = unif(rng);
                bool distinct = true;
                for (int i = 0; i < genus; ++i)
                    for (int j = i + 1; j < genus; ++j)
                        if (std::abs(angles[i] - angles[j]) < 1e-6) distinct = false;
                if (distinct) break;
            }
            // planted conjugate pairs of modulus q^{-1/2}
            std::vector<double> poly{1.0};
            for (int i = 0; i < genus; ++i) {
                double a = -2.0 * std::sqrt(static_cast<double>(q)) * std::cos(angles[i]);
                std::vector<double> quad{1.0, a, static_cast<double>(q)};
                std::vector<double> next(poly.size() + 2, 0.0);
                for (size_t m = 0; m < poly.size(); ++m)
                    for (size_t n = 0; n < 3; ++n) next[m + n] += poly[m] * quad[n];
                poly = next;
            }
            WeilCheckResult clean = weil_check_real(poly, q, genus);
            if (!clean.functional_ok || !clean.rh_ok) ++clean_fail;

            // same angles, first root pair pushed off the critical modulus
            std::vector<double> poly2{1.0};
            for (int i = 0; i < genus; ++i) {
                double a = -2.0 * std::sqrt(static_cast<double>(q)) * std::cos(angles[i]);
                std::vector<double> quad{1.0, a, static_cast<double>(q)};
                if (i == 0) {
                    quad[1] = a / factor;
                    quad[2] = static_cast<double>(q) / (factor * factor);
                }
                std::vector<double> next(poly2.size() + 2, 0.0);
                for (size_t m = 0; m < poly2.size(); ++m)
                    for (size_t n = 0; n < 3; ++n) next[m + n] += poly2[m] * quad[n];
                poly2 = next;
            }
            WeilCheckResult bad = weil_check_real(poly2, q, genus);
            if (bad.rh_ok) ++perturbed_pass;
        }
        auto& rsec = res.report.add_section("randomized");
        res.report.add(rsec, "count", static_cast<long long>(count));
        res.report.add(rsec, "seed", static_cast<long long>(seed));
        res.report.add(rsec, "q", q);
        res.report.add(rsec, "genus", static_cast<long long>(genus));
        res.report.add(rsec, "clean_failures", static_cast<long long>(clean_fail));
        res.report.add(rsec, "perturbed_passes", static_cast<long long>(perturbed_pass));
        clauses.add("randomized_pass", clean_fail == 0,
                    std::to_string(clean_fail) + " of " + std::to_string(count) +
                        " planted-root polynomials failed");
        clauses.add("perturbed_fail", perturbed_pass == 0,
                    std::to_string(perturbed_pass) + " of " + std::to_string(count) +
                        " off-modulus polynomials slipped through");
    }
    if (clauses.rows.empty())
        fail(errc::config, "weil job needs [weil] coeffs or [randomized] count > 0");
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_fit(const Config& cfg, const JobOptions& options, int threads) {
    (void)threads;
    JobResult res;
    res.report = start_report("fit", options);

    AdmissibleCompact k;
    auto rect_text = cfg.find("rects", "list");
    k.rects = rect_text ? parse_rect_list(*rect_text)
                        : std::vector<RectRegion>{RectRegion{0.1, 0.4, 2.0, 3.0}};
    AdmissibilityReport adm = validate_admissible(k);
    if (!adm.admissible) {
        std::string joined;
        for (const auto& v : adm.violations) joined += (joined.empty() ? "" : "; ") + v;
        fail(errc::config, "compact not admissible: " + joined);
    }

    std::string target_kind = cfg.get_string("fit", "target", "zeta");
    EvalParams params;
    DirichletPolynomial truth;
    std::function<cplx(cplx)> target;
    if (target_kind == "zeta") {
        target = [params](cplx z) { return zeta(z, params); };
    } else if (target_kind == "representable") {
        truth.coeffs = cfg.get_complex_list("fit", "coeffs");
        if (truth.coeffs.empty())
            fail(errc::config, "[fit] coeffs is required for target=representable");
        target = [truth](cplx z) { return truth.eval(z); };
    } else {
        fail(errc::config, "[fit] target must be zeta or representable");
    }

    int n_terms = static_cast<int>(cfg.get_int("fit", "n_terms", 300));
    int spr = static_cast<int>(cfg.get_int("fit", "samples_per_rect", 24));
    double ridge = cfg.get_double("fit", "ridge", 1e-8);
    std::optional<DirichletPolynomial> anchor;
    std::vector<cplx> anchor_coeffs = cfg.get_complex_list("fit", "anchor_coeffs");
    if (!anchor_coeffs.empty()) anchor = DirichletPolynomial{anchor_coeffs};
    std::vector<PointConstraint> constraints;
    std::vector<cplx> cpts = cfg.get_complex_list("constraints", "points");
    std::vector<cplx> cvals = cfg.get_complex_list("constraints", "values");
    if (cpts.size() != cvals.size())
        fail(errc::config, "[constraints] points and values must pair up");
    for (size_t i = 0; i < cpts.size(); ++i) constraints.push_back({cpts[i], cvals[i]});

    FitResult fr = fit(target, k, n_terms, spr, ridge, anchor, constraints);
    double delta = cfg.get_double("halfplane", "delta", 0.5);
    int hp_samples = static_cast<int>(cfg.get_int("halfplane", "samples", 256));
    HalfplaneDeviation hp = halfplane_deviation(fr.d, delta, hp_samples);

    auto& fsec = res.report.add_section("fit");
    res.report.add(fsec, "target", target_kind);
    res.report.add(fsec, "n_terms", static_cast<long long>(n_terms));
    res.report.add(fsec, "ridge", ridge);
    res.report.add(fsec, "sample_rows", static_cast<long long>(fr.sample_rows));
    res.report.add(fsec, "condition", fr.condition);
    res.report.add(fsec, "sup_error", fr.sup_error);
    auto& hsec = res.report.add_section("halfplane");
    res.report.add(hsec, "delta", delta);
    res.report.add(hsec, "sampled_max", hp.sampled_max);
    res.report.add(hsec, "certified", hp.certified);
    auto& csec = res.report.add_section("coefficients");
    for (int n = 0; n < fr.d.terms(); ++n)
        res.report.add(csec, "a_" + std::to_string(n + 1), fr.d.coeffs[n]);

    ClauseList clauses;
    clauses.add_bound("sup_error", fr.sup_error, cfg.get_double("fit", "sup_tol", 1e-2));
    if (target_kind == "representable") {
        double dev = 0.0;
        size_t upto = std::min(truth.coeffs.size(), fr.d.coeffs.size());
        for (size_t i = 0; i < fr.d.coeffs.size(); ++i) {
            cplx want = i < upto ? truth.coeffs[i] : cplx(0.0, 0.0);
            dev = std::max(dev, std::abs(fr.d.coeffs[i] - want));
        }
        clauses.add_bound("recovery", dev, cfg.get_double("fit", "recovery_tol", 1e-9));
    }
    clauses.add("halfplane_bound_ordering", hp.certified + 1e-15 >= hp.sampled_max,
                "certified " + format_double(hp.certified) + " vs sampled " +
                    format_double(hp.sampled_max));
    if (cfg.has("halfplane", "tol"))
        clauses.add_bound("halfplane_certified", hp.certified,
                          cfg.get_double("halfplane", "tol", 0.0));
    res.pass = clauses.pass();
    finalize_clauses(res.report, clauses, res.pass);
    return res;
}

JobResult run_grid(const Config& cfg, const JobOptions& options, int threads) {
    JobResult res;
    res.report = start_report("grid", options);
    BaseSetup base = base_from_config(cfg);
    describe_base(res.report, base, cfg);
    if (options.out_dir.empty()) fail(errc::config, "grid emission needs --out");

    double re_min = cfg.get_double("grid", "re_min", 0.0);
    double re_max = cfg.get_double("grid", "re_max", 1.0);
    double im_min = cfg.get_double("grid", "im_min", 10.0);
    double im_max = cfg.get_double("grid", "im_max", 30.0);
    int n_re = static_cast<int>(cfg.get_int("grid", "n_re", 256));
    int n_im = static_cast<int>(cfg.get_int("grid", "n_im", 256));
    if (n_re < 1 || n_im < 1 || n_re > 4096 || n_im > 4096)
        fail(errc::config, "[grid] resolution must be within 1..4096 per axis");
    if (!(re_min <= re_max) || !(im_min <= im_max))
        fail(errc::config, "[grid] bounds must be ordered");
    std::string which = cfg.get_string("grid", "function", "base");
    std::function<cplx(cplx)> f;
    if (which == "base")
        f = [&base](cplx z) { return base.handle.eval(z); };
    else if (which == "completed")
        f = [&base](cplx z) { return lambda_eval(base.handle, base.fe, z); };
    else
        fail(errc::config, "[grid] function must be base or completed");

    const long long total = static_cast<long long>(n_re) * n_im;
    std::vector<cplx> values(static_cast<size_t>(total));
    auto point = [&](long long idx) {
        int j = static_cast<int>(idx / n_re);  // im index, row-major
        int i = static_cast<int>(idx % n_re);
        double re = n_re == 1 ? re_min : re_min + (re_max - re_min) * i / (n_re - 1);
        double im = n_im == 1 ? im_min : im_min + (im_max - im_min) * j / (n_im - 1);
        return cplx(re, im);
    };
    parallel_for(static_cast<int>(total), threads, [&](int idx) {
        try {
            values[idx] = f(point(idx));
        } catch (const error&) {
            values[idx] = cplx(std::nan(""), std::nan(""));
        }
    });

    namespace fs = std::filesystem;
    std::string path;
    try {
        fs::create_directories(options.out_dir);
        path = (fs::path(options.out_dir) / "grid.csv").string();
    } catch (const std::exception& e) {
        fail(errc::io, std::string("cannot prepare output directory: ") + e.what());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot open " + path);
    out << "re,im,modulus,argument\n";
    for (long long idx = 0; idx < total; ++idx) {
        cplx z = point(idx);
        cplx v = values[static_cast<size_t>(idx)];
        out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
            << format_double(std::abs(v)) << ',' << format_double(std::arg(v)) << '\n';
    }
    if (!out.good()) fail(errc::io, "write failed for " + path);
    out.close();

    auto& gsec = res.report.add_section("grid");
    res.report.add(gsec, "file", path);
    res.report.add(gsec, "rows", total);
    res.report.add(gsec, "function", which);
    res.pass = true;
    finalize_clauses(res.report, ClauseList{}, res.pass);
    return res;
}

void write_report(const Report& rep, const JobOptions& options) {
    std::string text = rep.to_text();
    std::cout << text;
    if (options.out_dir.empty()) return;
    namespace fs = std::filesystem;
    try {
        fs::create_directories(options.out_dir);
    } catch (const std::exception& e) {
        fail(errc::io, std::string("cannot prepare output directory: ") + e.what());
    }
    std::string path = (fs::path(options.out_dir) / "report.txt").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot open " + path);
    out << text;
    if (!out.good()) fail(errc::io, "write failed for " + path);
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LAMBDA_FORGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 1;
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (n <= 0) return;
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    body(i);
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                }
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);  // lowest index wins, thread count irrelevant
}

JobResult run_job(const std::string& command, const Config& cfg, const JobOptions& options) {
    auto t0 = std::chrono::steady_clock::now();
    int threads = resolve_threads(options.threads);
    JobResult res;
    if (command == "verify")
        res = run_verify(cfg, options, threads);
    else if (command == "perturb")
        res = run_perturb(cfg, options, threads);
    else if (command == "restore")
        res = run_restore(cfg, options, threads);
    else if (command == "decompose")
        res = run_decompose(cfg, options, threads);
    else if (command == "path")
        res = run_path(cfg, options, threads);
    else if (command == "scan")
        res = run_scan(cfg, options, threads);
    else if (command == "weil")
        res = run_weil(cfg, options, threads);
    else if (command == "fit")
        res = run_fit(cfg, options, threads);
    else if (command == "grid")
        res = run_grid(cfg, options, threads);
    else
        fail(errc::config, "unknown command: " + command);

    res.report.config_echo = cfg.raw_text;
    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    auto& timing = res.report.add_section("timing");
    res.report.add(timing, "wall_ms", static_cast<long long>(wall));
    res.report.add(timing, "threads", static_cast<long long>(threads));
    write_report(res.report, options);
    return res;
}

}  // namespace lforge
