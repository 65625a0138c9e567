#pragma once

#include <stdexcept>
#include <string>

namespace lforge {

enum class errc {
    pole_at_nonpositive_integer,
    pole_at_one,
    overflow,
    accuracy_not_reached,
    domain,
    point_inside_disc,
    zero_denominator,
    infeasible_geometry,
    budget_unattainable,
    pole_on_boundary,
    uncancelled_pole,
    branch_tracking_failure,
    fit_residual_too_large,
    zero_on_boundary,
    sampling_budget_exceeded,
    no_convergence,
    symmetry_violation,
    degree_mismatch,
    ill_conditioned,
    config,
    io,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace lforge
