#pragma once

#include <functional>
#include <vector>

#include "lambdaforge/polynomial.hpp"

namespace lforge {

struct SymmetryOrbit {
    cplx seed{0.0, 0.0};
    // closed under z -> 1-z and z -> conj(z); size 1, 2, or 4
    std::vector<cplx> points;
};

inline cplx reflect_point(cplx s) { return 1.0 - s; }

SymmetryOrbit orbit(cplx a);

// conjugated coefficients: result(z) = conj(p(conj z))
Polynomial conj_flip(const Polynomial& p);

// composition with z -> 1-z: result(z) = p(1-z)
Polynomial point_flip(const Polynomial& p);

// p * conj_flip(p) * point_flip(p) * conj_flip(point_flip(p))
Polynomial four_fold(const Polynomial& p);

// max over samples of the relative deviation under both reflections
double symmetry_residual(const std::function<cplx(cplx)>& f, const std::vector<cplx>& samples);

}  // namespace lforge
