#include "lambdaforge/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace lforge {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0, 0.0));
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0, 0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{cplx(1.0, 0.0)};
    for (cplx r : roots) {
        c.push_back(cplx(0.0, 0.0));
        for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

cplx Polynomial::eval(cplx z) const {
    cplx acc = 0.0;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

std::vector<cplx> Polynomial::derivatives_at(cplx z, int orders) const {
    // repeated synthetic division: quotient coefficients of (p(z+h)) expansion
    std::vector<cplx> work = coeffs_;
    std::vector<cplx> out;
    out.reserve(orders + 1);
    double factorial = 1.0;
    for (int j = 0; j <= orders; ++j) {
        if (work.empty()) {
            out.push_back(cplx(0.0, 0.0));
            continue;
        }
        cplx rem = 0.0;
        for (size_t k = work.size(); k-- > 0;) {
            cplx next = work[k] + rem * z;
            rem = next;
            work[k] = next;
        }
        // work now holds [remainder, quotient...]; remainder is p^{(j)}(z)/j!
        out.push_back(rem * factorial);
        work.erase(work.begin());
        factorial *= (j + 1);
    }
    return out;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial();
    std::vector<cplx> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        c[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::taylor_shift(cplx c) const {
    // coefficients of p(w + c) in w, by full synthetic-division cascade
    std::vector<cplx> work = coeffs_;
    std::vector<cplx> out(coeffs_.size());
    for (size_t j = 0; j < out.size(); ++j) {
        cplx rem = 0.0;
        for (size_t k = work.size(); k-- > j;) {
            work[k] += rem * c;
            rem = work[k];
        }
        out[j] = work[j];
        // next pass divides the quotient, which sits above index j
    }
    return Polynomial(std::move(out));
}

double Polynomial::l1_norm() const {
    double acc = 0.0;
    for (cplx c : coeffs_) acc += std::abs(c);
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<cplx> c(std::max(coeffs_.size(), other.coeffs_.size()), cplx(0.0, 0.0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<cplx> c(std::max(coeffs_.size(), other.coeffs_.size()), cplx(0.0, 0.0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) c[k] -= other.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    // extended-precision accumulation: the planted-zero residuals of high
    // degree products are limited by convolution rounding, not by storage
    using lcplx = std::complex<long double>;
    std::vector<lcplx> acc(coeffs_.size() + other.coeffs_.size() - 1, lcplx(0.0L, 0.0L));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            acc[i + j] += lcplx(coeffs_[i]) * lcplx(other.coeffs_[j]);
    std::vector<cplx> c(acc.size());
    for (size_t k = 0; k < acc.size(); ++k)
        c[k] = cplx(static_cast<double>(acc[k].real()), static_cast<double>(acc[k].imag()));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(cplx scale) const {
    std::vector<cplx> c = coeffs_;
    for (cplx& v : c) v *= scale;
    return Polynomial(std::move(c));
}

}  // namespace lforge
