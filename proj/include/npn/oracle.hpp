#pragma once

#include <functional>
#include <vector>

#include "npn/transform_methods.hpp"
#include "npn/types.hpp"

namespace npn {

using RealFunction = std::function<double(double)>;

/// nu_i = (1/sqrt(2 pi sigma_ii)) * integral f(x) exp(-x^2 / 2 sigma_ii) dx
/// by Gauss-Hermite with node doubling.
QuadResult nu_quadrature(const RealFunction& f, double sigma_ii,
                         const QuadratureControl& quad = {});

/// Tensor quadrature of E[f_i(X) f_j(W)] - nu_i nu_j with the joint
/// density factored conditionally: X ~ N(0, sigma_ii) on the outer rule,
/// W | X ~ N(sigma_ij x / sigma_ii, d / sigma_ii) on the inner one, where
/// d = sigma_ii sigma_jj - sigma_ij^2. Both integrals map onto unweighted
/// Gauss-Hermite variables, so accuracy is uniform as sigma_ij approaches
/// the degenerate boundary.
QuadResult tau_quadrature(const RealFunction& fi, const RealFunction& fj, double sigma_ii,
                          double sigma_jj, double sigma_ij, const QuadratureControl& quad = {});

/// tau_ii = (1/sqrt(2 pi sigma_ii)) * integral f(x)^2 exp(-x^2/2 sigma_ii) dx - nu_i^2
QuadResult tau_diag_quadrature(const RealFunction& f, double sigma_ii,
                               const QuadratureControl& quad = {});

/// Seeded Monte Carlo estimate of nu and tau: X = L Z with Z from a
/// counter-based generator, Y_k = f_k(X_k); unbiased covariance (N-1) and
/// plug-in standard errors from fourth sample moments. Bitwise
/// reproducible for a fixed seed.
MomentReport sample_transformed(const GaussianSpec& spec, const std::vector<RealFunction>& funcs,
                                const McControl& mc);

} // namespace npn
