#include "lambdaforge/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace lforge {

SymmetryOrbit orbit(cplx a) {
    SymmetryOrbit o;
    o.seed = a;
    // deduplication is exact on components; callers must canonicalize points
    // meant to sit on an axis (re = 0.5 or im = 0 exactly)
    cplx candidates[4] = {a, 1.0 - a, std::conj(a), 1.0 - std::conj(a)};
    for (cplx c : candidates) {
        bool seen = false;
        for (cplx p : o.points)
            if (p == c) { seen = true; break; }
        if (!seen) o.points.push_back(c);
    }
    return o;
}

Polynomial conj_flip(const Polynomial& p) {
    std::vector<cplx> c = p.coeffs();
    for (cplx& v : c) v = std::conj(v);
    return Polynomial(std::move(c));
}

Polynomial point_flip(const Polynomial& p) {
    // p(1-z): binomial expansion of each (1-z)^k, accumulated row by row of
    // the Pascal recurrence to avoid factorial overflow; extended precision
    // keeps the heavy cross-cancellation off the stored coefficients
    const auto& a = p.coeffs();
    const size_t n = a.size();
    if (n > 1021)
        fail(errc::domain, "point_flip binomial table limited to degree 1020");
    using lcplx = std::complex<long double>;
    std::vector<lcplx> out(n, lcplx(0.0L, 0.0L));
    std::vector<long double> binom{1.0L};  // row k of Pascal's triangle
    for (size_t k = 0; k < n; ++k) {
        if (k > 0) {
            binom.push_back(1.0L);
            for (size_t j = binom.size() - 2; j > 0; --j) binom[j] += binom[j - 1];
        }
        // (1-z)^k = sum_j C(k,j) (-z)^j
        long double sign = 1.0L;
        lcplx ak(a[k]);
        for (size_t j = 0; j <= k; ++j) {
            out[j] += ak * (sign * binom[j]);
            sign = -sign;
        }
    }
    std::vector<cplx> res(n);
    for (size_t j = 0; j < n; ++j)
        res[j] = cplx(static_cast<double>(out[j].real()), static_cast<double>(out[j].imag()));
    return Polynomial(std::move(res));
}

Polynomial four_fold(const Polynomial& p) {
    if (p.is_zero()) fail(errc::domain, "four_fold requires a nonzero polynomial");
    Polynomial pf = point_flip(p);
    return p * conj_flip(p) * pf * conj_flip(pf);
}

double symmetry_residual(const std::function<cplx(cplx)>& f, const std::vector<cplx>& samples) {
    double worst = 0.0;
    for (cplx z : samples) {
        cplx v = f(z);
        double scale = 1.0 + std::abs(v);
        double point_dev = std::abs(v - f(1.0 - z)) / scale;
        double real_dev = std::abs(v - std::conj(f(std::conj(z)))) / scale;
        worst = std::max({worst, point_dev, real_dev});
    }
    return worst;
}

}  // namespace lforge
