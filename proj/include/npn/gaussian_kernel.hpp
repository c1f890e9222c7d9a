#pragma once

#include "npn/errors.hpp"

namespace npn {

/// E[X^k] for X ~ N(0, sigma_ii): 0 for odd k, sigma_ii^{k/2} (k-1)!! for
/// even k. Computed in log space for k > 40. Throws Overflow if the result
/// exceeds the double range.
double gaussian_moment(int k, double sigma_ii);

/// E[X_i^p X_j^q] for jointly Gaussian zero-mean (X_i, X_j) with
/// covariances (sigma_ii, sigma_jj, sigma_ij). Exact finite sum over
/// pairings; zero when p + q is odd.
double wick_mixed_moment(int p, int q, double sigma_ii, double sigma_jj, double sigma_ij);

/// Physicists' Hermite polynomial H_n(x), leading coefficient 2^n.
/// Throws DegreeTooLarge for n > 400.
double hermite(int n, double x);

/// The error function (2/sqrt(pi)) * integral_0^z exp(-t^2) dt.
double erf_phi(double z);

/// (k-1)!! with (-1)!! = 0!! = 1; log space above k = 40.
double double_factorial(int k);

/// Binomial coefficient; exact below n = 40, log-gamma above.
double binomial(int n, int k);

} // namespace npn
