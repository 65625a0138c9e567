#pragma once

#include <vector>

#include "lambdaforge/complexfn.hpp"
#include "lambdaforge/errors.hpp"

namespace lforge {

// Coefficients ascend by degree; the highest stored coefficient is nonzero
// except for the zero polynomial, which is stored as the single coefficient 0.
class Polynomial {
public:
    Polynomial() : coeffs_{cplx(0.0, 0.0)} {}
    explicit Polynomial(std::vector<cplx> coeffs);
    static Polynomial constant(cplx c) { return Polynomial({c}); }
    static Polynomial from_roots(const std::vector<cplx>& roots);

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0, 0.0); }

    cplx eval(cplx z) const;
    // value, first derivative, ... up to order `orders` at z, by repeated
    // synthetic division (exact up to rounding, no finite differences)
    std::vector<cplx> derivatives_at(cplx z, int orders) const;
    Polynomial derivative() const;
    // coefficients in powers of (z - c)
    Polynomial taylor_shift(cplx c) const;
    double l1_norm() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(cplx scale) const;
    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    void trim();
    std::vector<cplx> coeffs_;
};

}  // namespace lforge
