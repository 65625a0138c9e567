#include "lambdaforge/dirichletfit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace lforge {

AdmissibilityReport validate_admissible(const AdmissibleCompact& k) {
    AdmissibilityReport report;
    auto flag = [&report](const std::string& msg) {
        report.admissible = false;
        report.violations.push_back(msg);
    };
    for (size_t i = 0; i < k.rects.size(); ++i) {
        const RectRegion& r = k.rects[i];
        if (!(r.re_min < r.re_max) || !(r.im_min < r.im_max)) {
            flag("rect " + std::to_string(i) + ": bounds not ordered");
            continue;
        }
        if (!(r.re_max - r.re_min < 0.5))
            flag("rect " + std::to_string(i) + ": width must be below 1/2");
        if (r.re_max > 1.0)
            flag("rect " + std::to_string(i) + ": must stay in Re(z) <= 1");
    }
    for (size_t i = 0; i < k.rects.size(); ++i)
        for (size_t j = i + 1; j < k.rects.size(); ++j) {
            const RectRegion& a = k.rects[i];
            const RectRegion& b = k.rects[j];
            if (a.re_min <= b.re_max && b.re_min <= a.re_max)
                flag("rects " + std::to_string(i) + " and " + std::to_string(j) +
                     ": vertical strips overlap");
        }
    return report;
}

cplx DirichletPolynomial::eval(cplx z) const {
    cplx acc = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n)
        acc += coeffs[n] * std::exp(-z * std::log(static_cast<double>(n + 1)));
    return acc;
}

namespace {

std::vector<cplx> rect_grid(const RectRegion& r, int per_axis) {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(per_axis) * per_axis);
    for (int i = 0; i < per_axis; ++i)
        for (int j = 0; j < per_axis; ++j) {
            double re = per_axis == 1 ? r.re_min
                                      : r.re_min + (r.re_max - r.re_min) * i / (per_axis - 1);
            double im = per_axis == 1 ? r.im_min
                                      : r.im_min + (r.im_max - r.im_min) * j / (per_axis - 1);
            pts.emplace_back(re, im);
        }
    return pts;
}

}  // namespace

FitResult fit(const std::function<cplx(cplx)>& target, const AdmissibleCompact& k, int n_terms,
              int samples_per_rect, double ridge, const std::optional<DirichletPolynomial>& anchor,
              const std::vector<PointConstraint>& constraints) {
    AdmissibilityReport rep = validate_admissible(k);
    if (!rep.admissible) {
        std::string joined;
        for (const auto& v : rep.violations) joined += (joined.empty() ? "" : "; ") + v;
        fail(errc::domain, "compact not admissible: " + joined);
    }
    if (k.rects.empty()) fail(errc::domain, "fit needs at least one rect");
    if (n_terms < 1) fail(errc::domain, "n_terms must be positive");
    if (samples_per_rect < 2) fail(errc::domain, "samples_per_rect must be at least 2");
    if (ridge < 0.0) fail(errc::domain, "ridge must be non-negative");

    DirichletPolynomial base;
    if (anchor) {
        base = *anchor;
        if (base.terms() != n_terms)
            fail(errc::domain, "anchor length must equal n_terms");
    } else {
        base.coeffs.assign(n_terms, cplx(1.0, 0.0));
    }

    std::vector<cplx> pts;
    for (const RectRegion& r : k.rects)
        for (cplx z : rect_grid(r, samples_per_rect)) pts.push_back(z);

    const double constraint_weight = 100.0;
    const long rows_data = static_cast<long>(pts.size()) + static_cast<long>(constraints.size());
    const long rows = rows_data + (ridge > 0.0 ? n_terms : 0);
    Eigen::MatrixXcd design(rows, n_terms);
    Eigen::VectorXcd rhs(rows);
    std::vector<double> logs(n_terms);
    for (int n = 0; n < n_terms; ++n) logs[n] = std::log(static_cast<double>(n + 1));
    long row = 0;
    for (cplx z : pts) {
        for (int n = 0; n < n_terms; ++n) design(row, n) = std::exp(-z * logs[n]);
        rhs(row) = target(z);
        ++row;
    }
    for (const PointConstraint& c : constraints) {
        for (int n = 0; n < n_terms; ++n)
            design(row, n) = constraint_weight * std::exp(-c.z * logs[n]);
        rhs(row) = constraint_weight * c.value;
        ++row;
    }
    if (ridge > 0.0) {
        const double sq = std::sqrt(ridge);
        for (int n = 0; n < n_terms; ++n) {
            for (int m = 0; m < n_terms; ++m) design(row, m) = (m == n) ? sq : 0.0;
            rhs(row) = sq * base.coeffs[n];
            ++row;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(design);
    const auto& r_diag = qr.matrixR();
    const int rank_dim = static_cast<int>(std::min<long>(rows, n_terms));
    double dmax = 0.0, dmin = 0.0;
    for (int i = 0; i < rank_dim; ++i) {
        double v = std::abs(r_diag(i, i));
        if (i == 0) dmax = dmin = v;
        dmax = std::max(dmax, v);
        dmin = std::min(dmin, v);
    }
    double cond = dmin == 0.0 ? 1e300 : (dmax / dmin) * (dmax / dmin);
    if (cond > 1e14)
        fail(errc::ill_conditioned,
             "normal-system condition estimate above 1e14; increase ridge");
    Eigen::VectorXcd solution = qr.solve(rhs);

    FitResult result;
    result.condition = cond;
    result.sample_rows = static_cast<int>(rows_data);
    result.d.coeffs.resize(n_terms);
    for (int n = 0; n < n_terms; ++n) result.d.coeffs[n] = solution(n);

    // validation at a quarter of the sample step keeps the sample points a
    // subset of the validation grid
    double sup = 0.0;
    for (const RectRegion& r : k.rects)
        for (cplx z : rect_grid(r, 4 * (samples_per_rect - 1) + 1))
            sup = std::max(sup, std::abs(result.d.eval(z) - target(z)));
    result.sup_error = sup;
    return result;
}

HalfplaneDeviation halfplane_deviation(const DirichletPolynomial& d, double delta, int samples) {
    if (!(delta > 0.0)) fail(errc::domain, "delta must be positive");
    if (samples < 8) fail(errc::domain, "halfplane sampling needs at least 8 points");
    HalfplaneDeviation dev;
    for (size_t n = 0; n < d.coeffs.size(); ++n)
        dev.certified += std::abs(d.coeffs[n] - 1.0) *
                         std::pow(static_cast<double>(n + 1), -(1.0 + delta));
    auto deviation = [&](cplx z) {
        cplx acc = 0.0;
        for (size_t n = 0; n < d.coeffs.size(); ++n)
            acc += (d.coeffs[n] - 1.0) * std::exp(-z * std::log(static_cast<double>(n + 1)));
        return std::abs(acc);
    };
    // the vertical line Re z = 1 + delta, then a sparse deeper grid
    for (int j = 0; j < samples; ++j) {
        double im = -20.0 + 40.0 * j / (samples - 1);
        dev.sampled_max = std::max(dev.sampled_max, deviation(cplx(1.0 + delta, im)));
    }
    const double depths[4] = {0.5, 1.0, 2.0, 4.0};
    for (double depth : depths)
        for (int j = 0; j < samples / 4; ++j) {
            double im = -20.0 + 40.0 * j / (samples / 4 - 1);
            dev.sampled_max = std::max(dev.sampled_max, deviation(cplx(1.0 + delta + depth, im)));
        }
    return dev;
}

}  // namespace lforge
