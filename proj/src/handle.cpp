#include "lambdaforge/handle.hpp"

#include <cmath>

namespace lforge {

cplx LFunctionHandle::eval(cplx z) const {
    cplx v;
    switch (kind) {
        case BaseKind::constant_one: v = 1.0; break;
        case BaseKind::riemann_zeta: v = zeta(z, params); break;
        case BaseKind::dirichlet: v = dirichlet_l(chi, z, params); break;
        case BaseKind::synthetic_poly: v = synthetic.eval(z); break;
    }
    // attachments are stored in powers of u = z - 1/2
    cplx u = z - 0.5;
    if (multiplier) v *= multiplier->eval(u);
    if (divisor) {
        cplx d = divisor->eval(u);
        if (d == cplx(0.0, 0.0)) fail(errc::zero_denominator, "divisor vanishes at sample point");
        v /= d;
    }
    if (exp_shift_centered) {
        cplx h = exp_shift_centered->eval(u);
        if (h.real() > 700.0)
            fail(errc::overflow, "exp shift exceeds double range at sample point");
        v *= std::exp(h);
    }
    return v;
}

std::vector<cplx> LFunctionHandle::poles() const {
    // divisor-induced poles are the caller's bookkeeping; the shipped
    // pipelines only attach a divisor with declared cancellation
    if (kind == BaseKind::riemann_zeta) return {cplx(1.0, 0.0)};
    if (kind == BaseKind::dirichlet && chi.is_principal()) return {cplx(1.0, 0.0)};
    return {};
}

void LFunctionHandle::simplify() {
    if (multiplier && divisor && *multiplier == *divisor) {
        multiplier.reset();
        divisor.reset();
    }
}

LFunctionHandle handle_one() { return {}; }

LFunctionHandle handle_zeta(const EvalParams& params) {
    LFunctionHandle h;
    h.kind = BaseKind::riemann_zeta;
    h.params = params;
    return h;
}

LFunctionHandle handle_dirichlet(const DirichletCharacter& chi, const EvalParams& params) {
    chi.validate();
    LFunctionHandle h;
    h.kind = BaseKind::dirichlet;
    h.chi = chi;
    h.params = params;
    return h;
}

LFunctionHandle handle_poly(const Polynomial& p) {
    LFunctionHandle h;
    h.kind = BaseKind::synthetic_poly;
    h.synthetic = p;
    return h;
}

cplx lambda_eval(const LFunctionHandle& f, const FunctionalEquation& eq, cplx s) {
    return q_eval(eq.q, s) * f.eval(s);
}

double fe_residual(const LFunctionHandle& f, const FunctionalEquation& eq, cplx s) {
    eq.validate();
    cplx here = lambda_eval(f, eq, s);
    cplx there;
    if (eq.conjugated) {
        // conjugate-reflection: conj(Lambda(1 - conj s))
        there = std::conj(lambda_eval(f, eq, 1.0 - std::conj(s)));
    } else {
        there = lambda_eval(f, eq, 1.0 - s);
    }
    return std::abs(here - static_cast<double>(eq.sign) * there) / (1.0 + std::abs(here));
}

}  // namespace lforge
