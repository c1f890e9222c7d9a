#include "npn/bounds.hpp"

#include <cmath>

namespace npn {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

SecondOrderEstimate second_order_series(const TaylorSpec& f, double sigma_ii, double sigma_jj,
                                        double sigma_ij, std::optional<double> eps,
                                        const SeriesControl& ctl) {
    const double f1i = fk_eval(f, 1, sigma_ii / 2.0, ctl).value;
    const double f1j = fk_eval(f, 1, sigma_jj / 2.0, ctl).value;
    const double f2i = fk_eval(f, 2, sigma_ii / 2.0, ctl).value;
    const double f2j = fk_eval(f, 2, sigma_jj / 2.0, ctl).value;

    const double C = f.growth_c(), M = f.growth_k();
    const double M2 = M * M;
    const double N = eps.value_or(std::max(sigma_ii, sigma_jj));
    const double s3 = std::fabs(sigma_ij) * std::fabs(sigma_ij) * std::fabs(sigma_ij);
    const double bound = (1.0 / 6.0) * s3 * C * C * M2 * M2 * M2 *
                         std::exp(M2 * (sigma_ii + sigma_jj) / 2.0) * std::exp(N * M2);

    return {f1i * f1j, 0.5 * f2i * f2j, bound, BoundRegime::series};
}

SecondOrderEstimate second_order_fourier(const FourierTransformSpec& g, double sigma_ii,
                                         double sigma_jj, double sigma_ij, double a,
                                         const QuadratureControl& quad) {
    if (!(a > 0.0) || !(a < 1.0))
        throw RatioViolation("second_order_fourier: a must lie in (0, 1)");
    const double ratio = std::fabs(sigma_ij) / std::sqrt(sigma_ii * sigma_jj);
    if (!(ratio < a))
        throw RatioViolation("second_order_fourier: |sigma_ij|/sqrt(sigma_ii sigma_jj) = " +
                             std::to_string(ratio) + " is not below a = " + std::to_string(a));

    const Complex g1 = fk_star_value(g, 1, sigma_ii / 2.0, quad) *
                       fk_star_value(g, 1, sigma_jj / 2.0, quad);
    const Complex g2 = fk_star_value(g, 2, sigma_ii / 2.0, quad) *
                       fk_star_value(g, 2, sigma_jj / 2.0, quad);
    for (const Complex& v : {g1, g2}) {
        if (std::fabs(v.imag()) > 1e-10 * std::max(1.0, std::fabs(v.real())))
            throw ImaginaryResidue("second_order_fourier: G* coefficient has imaginary residue " +
                                   std::to_string(v.imag()));
    }

    const double s3 = std::fabs(sigma_ij) * std::fabs(sigma_ij) * std::fabs(sigma_ij);
    const double bound = s3 * g.bound * g.bound /
                         (kPi * kPi * std::sqrt(sigma_ii * sigma_jj) * (1.0 - a));

    return {g1.real(), 0.5 * g2.real(), bound, BoundRegime::fourier};
}

double lorentzian_a(double z) {
    if (!(z > 0)) throw DomainError("lorentzian_a: z must be positive");
    const double k = std::sqrt(kPi / (2.0 * z)) * std::exp(1.0 / (2.0 * z)) *
                     std::erfc(1.0 / std::sqrt(2.0 * z));
    return (1.0 - (1.0 + z) * k) / (z * z);
}

} // namespace npn
