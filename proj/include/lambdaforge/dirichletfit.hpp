#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lambdaforge/zeros.hpp"

namespace lforge {

struct AdmissibleCompact {
    std::vector<RectRegion> rects;
};

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<std::string> violations;
};

// each rect strictly narrower than 1/2, strips pairwise disjoint, everything
// within Re(z) <= 1
AdmissibilityReport validate_admissible(const AdmissibleCompact& k);

struct DirichletPolynomial {
    std::vector<cplx> coeffs;  // a_1 .. a_N
    cplx eval(cplx z) const;
    int terms() const { return static_cast<int>(coeffs.size()); }
};

struct PointConstraint {
    cplx z{0.0, 0.0};
    cplx value{0.0, 0.0};
};

struct FitResult {
    DirichletPolynomial d;
    double sup_error = 0.0;     // over the 4x denser validation grid
    double condition = 0.0;     // normal-system estimate from the QR diagonal
    int sample_rows = 0;
};

FitResult fit(const std::function<cplx(cplx)>& target, const AdmissibleCompact& k, int n_terms,
              int samples_per_rect = 24, double ridge = 0.0,
              const std::optional<DirichletPolynomial>& anchor = {},
              const std::vector<PointConstraint>& constraints = {});

struct HalfplaneDeviation {
    double sampled_max = 0.0;
    double certified = 0.0;  // sum |a_n - 1| n^{-(1+delta)}
};

HalfplaneDeviation halfplane_deviation(const DirichletPolynomial& d, double delta,
                                       int samples = 256);

}  // namespace lforge
