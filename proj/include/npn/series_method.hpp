#pragma once

#include "npn/function_spec.hpp"
#include "npn/types.hpp"

namespace npn {

struct SeriesResult {
    double value;
    double error;
};

/// F_k(x) = sum_{u>=0} f^{(2u+k)}(0) / u! * x^u, truncated per ctl.
/// The shifted Taylor coefficients of f feed both the mean formula (k = 0)
/// and the covariance series coefficients.
SeriesResult fk_eval(const TaylorSpec& f, int k, double x, const SeriesControl& ctl = {});

/// nu = F_0(sigma_ii / 2) with truncation bound.
SeriesResult nu_series(const TaylorSpec& f, double sigma_ii, const SeriesControl& ctl = {});

/// tau_ij = sum_{k>=1} F_ki(sigma_ii/2) F_kj(sigma_jj/2) sigma_ij^k / k!
SeriesResult tau_series(const TaylorSpec& fi, const TaylorSpec& fj, double sigma_ii,
                        double sigma_jj, double sigma_ij, const SeriesControl& ctl = {});

/// Diagonal specialization: the tau series with sigma_ij := sigma_ii.
SeriesResult tau_diag_series(const TaylorSpec& f, double sigma_ii, const SeriesControl& ctl = {});

} // namespace npn
