#pragma once

#include <optional>
#include <vector>

#include "lambdaforge/interpolation.hpp"

namespace lforge {

enum class BaseKind { constant_one, riemann_zeta, dirichlet, synthetic_poly };

// evaluation = base(z) * multiplier(u) * e^{h(u)} / divisor(u) with
// u = z - 1/2; every attachment is stored in powers of u. The centered basis
// makes both symmetrizations coefficient-local and keeps the coefficients
// O(1), where the plain z expansion of the same attachments grows like
// |z|^degree and loses digits to coefficient storage alone
struct LFunctionHandle {
    BaseKind kind = BaseKind::constant_one;
    DirichletCharacter chi;   // kind == dirichlet
    Polynomial synthetic;     // kind == synthetic_poly, evaluated at z itself
    std::optional<Polynomial> multiplier;
    std::optional<Polynomial> exp_shift_centered;
    std::optional<Polynomial> divisor;
    EvalParams params;

    cplx eval(cplx z) const;
    std::vector<cplx> poles() const;
    // drops multiplier/divisor when they are coefficient-identical
    void simplify();
};

LFunctionHandle handle_one();
LFunctionHandle handle_zeta(const EvalParams& params = {});
LFunctionHandle handle_dirichlet(const DirichletCharacter& chi, const EvalParams& params = {});
LFunctionHandle handle_poly(const Polynomial& p);

cplx lambda_eval(const LFunctionHandle& f, const FunctionalEquation& eq, cplx s);

// |Lambda(s) - sign*R(Lambda(1-s))| / (1 + |Lambda(s)|), R = conj when
// eq.conjugated
double fe_residual(const LFunctionHandle& f, const FunctionalEquation& eq, cplx s);

}  // namespace lforge
