#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "lambdaforge/handle.hpp"

namespace lforge {

struct RectRegion {
    double re_min = 0.0, re_max = 1.0, im_min = 0.0, im_max = 1.0;
    void validate() const {
        if (!(re_min < re_max) || !(im_min < im_max))
            fail(errc::domain, "rectangle bounds must be ordered");
    }
};

struct WindingResult {
    int winding = 0;
    int samples_used = 0;
};

// total boundary argument change / 2pi by adaptive phase tracking; the
// returned winding equals enclosed zeros minus poles
WindingResult winding_count_detail(const std::function<cplx(cplx)>& f, const RectRegion& region,
                                   int init_samples = 256);
WindingResult winding_count_detail(const std::function<cplx(cplx)>& f, const DiscRegion& region,
                                   int init_samples = 256);
int winding_count(const std::function<cplx(cplx)>& f, const RectRegion& region,
                  int init_samples = 256);
int winding_count(const std::function<cplx(cplx)>& f, const DiscRegion& region,
                  int init_samples = 256);

// Newton refinement with central-difference derivative; returns the best
// point seen and |f| there
std::pair<cplx, double> refine_zero(const std::function<cplx(cplx)>& f, cplx s0, double tol);

// sign-change scan of the rotated completed function on the critical axis;
// each change is refined by bisection to 1e-9 in t
std::vector<double> critical_scan(const LFunctionHandle& f, const FunctionalEquation& eq,
                                  double t_min, double t_max, double step);

struct ZeroReport {
    std::variant<RectRegion, DiscRegion> region;
    int winding = 0;
    std::vector<std::pair<cplx, double>> refined_zeros;
    int boundary_samples_used = 0;
    int refine_iterations = 0;
};

struct WeilPolynomial {
    std::vector<long long> coeffs;  // ascending degree, constant term 1
    long long q = 2;
    int genus = 0;
    void validate() const;
};

struct WeilCheckResult {
    bool functional_ok = false;
    bool rh_ok = false;
    std::vector<cplx> roots;
};

WeilCheckResult weil_check(const WeilPolynomial& p);
// double-coefficient core used by randomized and perturbed instances whose
// coefficients are not integers
WeilCheckResult weil_check_real(const std::vector<double>& coeffs, long long q, int genus);

}  // namespace lforge
