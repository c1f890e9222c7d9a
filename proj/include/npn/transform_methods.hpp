#pragma once

#include "npn/function_spec.hpp"
#include "npn/types.hpp"

namespace npn {

struct QuadResult {
    double value;
    double error;
};

/// tau_ij from the Fourier-integral representation:
/// (1/4pi^2) * iint g_i(y) g_j(z) (exp(-yz sigma_ij) - 1)
///                 * exp(-(y^2 sigma_ii + z^2 sigma_jj)/2) dy dz
/// Tensor Gauss-Hermite with node doubling; err is the last refinement delta.
QuadResult tau_fourier_integral(const FourierTransformSpec& gi, const FourierTransformSpec& gj,
                                double sigma_ii, double sigma_jj, double sigma_ij,
                                const QuadratureControl& quad = {});

/// F*_k(x) = (1/2pi)(-i)^k * integral g(y) y^k exp(-y^2 x) dy.
/// The value is mantissa * exp(log_scale): for large k the moment integral
/// exceeds the double range while the tau series terms it feeds stay small.
/// The (-i)^k factor is applied as a quarter-turn phase (k mod 4).
struct FkStarResult {
    Complex mantissa;
    double log_scale;
    double mantissa_error; // refinement delta, at mantissa scale
};

FkStarResult fk_star(const FourierTransformSpec& g, int k, double x,
                     const QuadratureControl& quad = {});

/// Convenience for small k where the value fits in a double.
Complex fk_star_value(const FourierTransformSpec& g, int k, double x,
                      const QuadratureControl& quad = {});

/// The transform-side series tau_ij = sum_{k>=1} F*_ki(sigma_ii/2)
/// F*_kj(sigma_jj/2) sigma_ij^k / k!, convergent for
/// sigma_ij^2 < sigma_ii sigma_jj.
QuadResult tau_fourier_series_expansion(const FourierTransformSpec& gi,
                                        const FourierTransformSpec& gj, double sigma_ii,
                                        double sigma_jj, double sigma_ij,
                                        const SeriesControl& ctl = {},
                                        const QuadratureControl& quad = {});

/// Exponent form for the Fourier-series closed sum. The published form uses
/// squared variances in the exponent; the first-power form is the one that
/// matches the quadrature oracle (see the arbitration tests).
enum class FourierSeriesForm { first_power, as_published };

/// Exact finite double sum over the coefficient vectors. Throws
/// ImaginaryResidue if the result has imaginary part >= 1e-10.
double tau_fourier_coefficients(const FourierSeriesSpec& ai, const FourierSeriesSpec& aj,
                                double sigma_ii, double sigma_jj, double sigma_ij,
                                FourierSeriesForm form = FourierSeriesForm::first_power);

/// nu for a Fourier-series function: sum_n a_n exp(-n^2 sigma_ii / 2).
double nu_fourier_coefficients(const FourierSeriesSpec& a, double sigma_ii);

/// nu for a Fourier-transform function: F*_0(sigma_ii / 2).
QuadResult nu_fourier_transform(const FourierTransformSpec& g, double sigma_ii,
                                const QuadratureControl& quad = {});

/// Sign/exponent form for the Laplace-route integrand. The moment
/// generating function derivation gives (exp(+t1 t2 sigma_ij) - 1) *
/// exp(+(t1^2 sigma_ii + t2^2 sigma_jj)/2); the published form differs in
/// sign and power and is kept only for the arbitration tests.
enum class LaplaceForm { mgf, as_published };

QuadResult tau_laplace(const LaplaceSpec& gi, const LaplaceSpec& gj, double sigma_ii,
                       double sigma_jj, double sigma_ij, const QuadratureControl& quad = {},
                       LaplaceForm form = LaplaceForm::mgf);

/// nu for a Laplace-represented function: integral g(t) exp(t^2 sigma_ii/2) dt.
QuadResult nu_laplace(const LaplaceSpec& g, double sigma_ii, const QuadratureControl& quad = {});

/// Normal-CDF transform (marginals mapped to U[0,1], unit variances):
/// tau_ij = (1/2pi) arcsin(sigma_ij / 2).
double tau_normal_to_uniform(double sigma_ij);

/// Kruskal's transformed correlation (6/pi) arcsin(rho / 2).
double kruskal_correlation(double rho);

} // namespace npn
