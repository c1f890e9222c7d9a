#pragma once

#include <optional>

#include "npn/series_method.hpp"
#include "npn/transform_methods.hpp"
#include "npn/types.hpp"

namespace npn {

enum class BoundRegime { series, fourier };

/// Second-order expansion of tau_ij in sigma_ij with an explicit remainder:
///   tau_ij = linear_coeff * sigma_ij + quad_coeff * sigma_ij^2 + R,
///   |R| <= remainder_bound.
struct SecondOrderEstimate {
    double linear_coeff;
    double quad_coeff;
    double remainder_bound;
    BoundRegime regime;

    [[nodiscard]] double estimate(double sigma_ij) const {
        return linear_coeff * sigma_ij + quad_coeff * sigma_ij * sigma_ij;
    }
};

/// Series-side theorem for f_i = f_j = f with growth constants C, M:
/// linear = F_1(sigma_ii/2) F_1(sigma_jj/2), quad = (1/2) F_2 F_2, and
/// remainder (1/6)|sigma_ij|^3 C^2 M^6 exp(M^2(sigma_ii+sigma_jj)/2)
/// exp(N M^2) with N = max(sigma_ii, sigma_jj), or the tighter eps when
/// one is supplied.
SecondOrderEstimate second_order_series(const TaylorSpec& f, double sigma_ii, double sigma_jj,
                                        double sigma_ij, std::optional<double> eps = std::nullopt,
                                        const SeriesControl& ctl = {});

/// Transform-side theorem for f_i = f_j = hat{g} with |g| <= N_g, valid
/// when |sigma_ij|/sqrt(sigma_ii sigma_jj) < a < 1: coefficients from
/// F*_1, F*_2 quadrature, remainder |sigma_ij|^3 N_g^2 /
/// (pi^2 sqrt(sigma_ii sigma_jj) (1 - a)).
SecondOrderEstimate second_order_fourier(const FourierTransformSpec& g, double sigma_ii,
                                         double sigma_jj, double sigma_ij, double a,
                                         const QuadratureControl& quad = {});

/// Closed form of F*_2(z/2) for g(y) = pi exp(-|y|) (f = 1/(1+x^2)):
/// A(z) = (1/z^2)(1 - (1+z) sqrt(pi/(2z)) e^{1/(2z)} erfc(1/sqrt(2z))).
double lorentzian_a(double z);

} // namespace npn
