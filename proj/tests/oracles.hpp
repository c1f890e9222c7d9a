#pragma once

namespace npn::testing {

/// Brute-force E[X_i^p X_j^q] by enumerating all perfect matchings of the
/// p + q factors (Isserlis' theorem applied literally). Exponential in
/// p + q; intended for p + q <= 8.
double pairing_moment(int p, int q, double sigma_ii, double sigma_jj, double sigma_ij);

/// Central-difference derivative with step h.
template <typename F>
double central_difference(F f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace npn::testing
